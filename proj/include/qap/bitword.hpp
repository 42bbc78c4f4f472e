// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0
//
// Binary strings and GF(2) linear algebra on machine words.
//
// A width-n string is stored in the low n bits of a word with digit 1
// (the leftmost printed character) in the most significant position, so the
// stored integer equals the value of the printed binary numeral.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qap {

using word = std::uint32_t;

int parity(word x);               // popcount mod 2
int dot(word a, word b);          // mod-2 inner product
int overlap(word a, word b);      // integer overlap |a AND b|
int digit(word x, int k, int n);  // k-th printed digit (1-based, leftmost first)

std::string to_digits(word x, int n);
word from_digits(const std::string& s);  // throws std::invalid_argument

// Incremental reduced row-echelon span over GF(2).
class Gf2Span {
 public:
  explicit Gf2Span(int width);
  Gf2Span(int width, const std::vector<word>& vectors);

  bool insert(word v);  // true iff v enlarged the span
  bool contains(word v) const { return reduce(v) == 0; }
  word reduce(word v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  const std::vector<word>& rows() const { return rows_; }  // descending pivots
  std::vector<word> members() const;                       // all 2^rank, ascending
  bool operator==(const Gf2Span&) const = default;

 private:
  int width_;
  std::vector<word> rows_;
};

// All k-dimensional subspaces of F_2^n, one reduced echelon basis each.
std::vector<std::vector<word>> subspaces(int n, int k);

// Gaussian binomial [n choose k]_2.
unsigned long long gaussian_binomial(int n, int k);

// Solve rows * x = rhs over GF(2); unknown j sits in bit j of each row and of
// the returned word.  Free variables are fixed to zero.  Empty on inconsistency.
std::optional<word> gf2_solve(std::vector<word> rows, std::vector<int> rhs, int nvars);

}  // namespace qap
