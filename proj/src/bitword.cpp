// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0

#include "qap/bitword.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qap {

int parity(word x) { return std::popcount(x) & 1; }
int dot(word a, word b) { return parity(a & b); }
int overlap(word a, word b) { return std::popcount(a & b); }

int digit(word x, int k, int n) {
  if (k < 1 || k > n) throw std::out_of_range("digit index");
  return static_cast<int>((x >> (n - k)) & 1u);
}

std::string to_digits(word x, int n) {
  std::string s(static_cast<size_t>(n), '0');
  for (int k = 1; k <= n; ++k)
    if (digit(x, k, n)) s[static_cast<size_t>(k - 1)] = '1';
  return s;
}

word from_digits(const std::string& s) {
  if (s.empty() || s.size() > 31) throw std::invalid_argument("bad binary string: " + s);
  word x = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bad binary string: " + s);
    x = (x << 1) | static_cast<word>(c - '0');
  }
  return x;
}

Gf2Span::Gf2Span(int width) : width_(width) {}

Gf2Span::Gf2Span(int width, const std::vector<word>& vectors) : width_(width) {
  for (word v : vectors) insert(v);
}

word Gf2Span::reduce(word v) const {
  for (word r : rows_) {
    word pivot = static_cast<word>(1u) << (31 - std::countl_zero(r));
    if (v & pivot) v ^= r;
  }
  return v;
}

bool Gf2Span::insert(word v) {
  v = reduce(v);
  if (v == 0) return false;
  word pivot = static_cast<word>(1u) << (31 - std::countl_zero(v));
  // clear the new pivot from existing rows, keep rows sorted by pivot
  for (word& r : rows_)
    if (r & pivot) r ^= v;
  rows_.push_back(v);
  std::sort(rows_.begin(), rows_.end(), std::greater<word>());
  return true;
}

std::vector<word> Gf2Span::members() const {
  std::vector<word> out{0};
  for (word r : rows_) {
    size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(out[i] ^ r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Enumerate echelon bases: pick pivot columns, fill free cells right of each
// pivot avoiding later pivot columns.
void fill_free(const std::vector<int>& pivots, int n, size_t row, std::vector<word>& basis,
               std::vector<std::vector<word>>& out) {
  if (row == pivots.size()) {
    out.push_back(basis);
    return;
  }
  std::vector<int> free_cols;
  for (int c = pivots[row] + 1; c < n; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
  for (word mask = 0; mask < (1u << free_cols.size()); ++mask) {
    word v = static_cast<word>(1u) << (n - 1 - pivots[row]);
    for (size_t j = 0; j < free_cols.size(); ++j)
      if (mask & (1u << j)) v |= static_cast<word>(1u) << (n - 1 - free_cols[j]);
    basis[row] = v;
    fill_free(pivots, n, row + 1, basis, out);
  }
}

}  // namespace

std::vector<std::vector<word>> subspaces(int n, int k) {
  std::vector<std::vector<word>> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {{}};
  std::vector<int> pivots(static_cast<size_t>(k));
  std::vector<bool> pick(static_cast<size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    int j = 0;
    for (int c = 0; c < n; ++c)
      if (pick[static_cast<size_t>(c)]) pivots[static_cast<size_t>(j++)] = c;
    std::vector<word> basis(static_cast<size_t>(k));
    fill_free(pivots, n, 0, basis, out);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

unsigned long long gaussian_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (1ull << (n - i)) - 1;
    den *= (1ull << (i + 1)) - 1;
  }
  return num / den;
}

std::optional<word> gf2_solve(std::vector<word> rows, std::vector<int> rhs, int nvars) {
  std::vector<int> pivot_of_row;
  size_t rank = 0;
  for (int col = nvars - 1; col >= 0; --col) {
    word mask = static_cast<word>(1u) << col;
    size_t sel = rank;
    while (sel < rows.size() && !(rows[sel] & mask)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    std::swap(rhs[rank], rhs[sel]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != rank && (rows[i] & mask)) {
        rows[i] ^= rows[rank];
        rhs[i] ^= rhs[rank];
      }
    pivot_of_row.push_back(col);
    ++rank;
  }
  for (size_t i = rank; i < rows.size(); ++i)
    if (rhs[i]) return std::nullopt;
  word x = 0;
  for (size_t i = 0; i < rank; ++i)
    if (rhs[i]) x |= static_cast<word>(1u) << pivot_of_row[i];
  return x;
}

}  // namespace qap
