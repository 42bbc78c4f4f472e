// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0

#include "qap/subalgebra.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qap/bitword.hpp"

namespace qap {
namespace {

std::vector<Spinor> decode_all(const std::vector<word>& words, int p) {
  std::vector<Spinor> out;
  out.reserve(words.size());
  for (word w : words) out.push_back(decode(w, p));
  return out;
}

std::vector<word> encode_all(const std::vector<Spinor>& set, int p) {
  std::vector<word> out;
  out.reserve(set.size());
  for (const Spinor& s : set) out.push_back(encode(s, p));
  return out;
}

}  // namespace

std::vector<Spinor> span(const std::vector<Spinor>& generators, int p) {
  Gf2Span sp(2 * p, encode_all(generators, p));
  return decode_all(sp.members(), p);
}

std::vector<Spinor> closed_basis(const std::vector<Spinor>& members, int p) {
  Gf2Span sp(2 * p, encode_all(members, p));
  return decode_all(sp.rows(), p);
}

bool is_closed(const std::vector<Spinor>& set, int p) {
  return span(set, p).size() == set.size();
}

bool all_commute(const std::vector<Spinor>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!commutes(set[i], set[j])) return false;
  return true;
}

CartanSubalgebra CartanSubalgebra::intrinsic(int p) {
  std::vector<Spinor> members;
  for (word nu = 0; nu < (word{1} << p); ++nu) members.push_back({nu, 0});
  return from_members(std::move(members), p);
}

CartanSubalgebra CartanSubalgebra::from_members(std::vector<Spinor> members, int p) {
  if (members.size() != (std::size_t{1} << p))
    throw std::invalid_argument("Cartan subalgebra of su(2^p) needs 2^p members");
  std::sort(members.begin(), members.end(),
            [p](const Spinor& a, const Spinor& b) { return encode(a, p) < encode(b, p); });
  if (!all_commute(members)) throw std::invalid_argument("Cartan members must commute");
  if (!is_closed(members, p)) throw std::invalid_argument("Cartan members must be bi-additively closed");
  CartanSubalgebra c;
  c.p = p;
  c.basis = closed_basis(members, p);
  if (c.basis.size() != static_cast<std::size_t>(p))
    throw std::invalid_argument("Cartan members must span a rank-p subgroup");
  c.members = std::move(members);
  return c;
}

CartanSubalgebra CartanSubalgebra::from_generators(const std::vector<Spinor>& gens, int p) {
  return from_members(span(gens, p), p);
}

bool CartanSubalgebra::contains(const Spinor& s) const {
  return std::binary_search(members.begin(), members.end(), s,
                            [this](const Spinor& a, const Spinor& b) {
                              return encode(a, p) < encode(b, p);
                            });
}

word CartanSubalgebra::label_of(const Spinor& m) const {
  word w = encode(m, p);
  word label = 0;
  for (int k = 0; k < p; ++k) {
    word row = encode(basis[k], p);
    if (w & std::bit_floor(row)) {  // highest set bit of an echelon row is its pivot
      w ^= row;
      label |= word{1} << (p - 1 - k);
    }
  }
  if (w != 0) throw std::invalid_argument("spinor is not a member of the subalgebra");
  return label;
}

Spinor CartanSubalgebra::member(word label) const {
  if (label >= (word{1} << p)) throw std::invalid_argument("label out of range");
  Spinor m{0, 0};
  for (int k = 0; k < p; ++k)
    if (label & (word{1} << (p - 1 - k))) m = bi_add(m, basis[k]);
  return m;
}

int CartanSubalgebra::kind() const {
  Gf2Span sp(p);
  for (const Spinor& m : members) sp.insert(m.alpha);
  return sp.rank();
}

BiSubalgebra BiSubalgebra::from_members(CartanSubalgebra parent, std::vector<Spinor> members) {
  const int p = parent.p;
  std::sort(members.begin(), members.end(),
            [p](const Spinor& a, const Spinor& b) { return encode(a, p) < encode(b, p); });
  for (const Spinor& m : members)
    if (!parent.contains(m)) throw std::invalid_argument("bi-subalgebra member outside parent");
  if (!is_closed(members, p)) throw std::invalid_argument("bi-subalgebra must be closed");
  int rank = p;
  while (rank >= 0 && members.size() != (std::size_t{1} << (p - rank))) --rank;
  if (rank < 0) throw std::invalid_argument("bi-subalgebra size must be a power of two");
  BiSubalgebra b;
  b.parent = std::move(parent);
  b.rank = rank;
  b.members = std::move(members);
  return b;
}

BiSubalgebra BiSubalgebra::from_duals(CartanSubalgebra parent, const std::vector<word>& duals) {
  Gf2Span dual_span(parent.p, duals);
  std::vector<Spinor> members;
  for (const Spinor& m : parent.members) {
    word label = parent.label_of(m);
    bool keep = true;
    for (word beta : dual_span.rows())
      if (dot(label, beta)) keep = false;
    if (keep) members.push_back(m);
  }
  return from_members(std::move(parent), std::move(members));
}

bool BiSubalgebra::contains(const Spinor& s) const {
  return std::binary_search(members.begin(), members.end(), s,
                            [this](const Spinor& a, const Spinor& b) {
                              return encode(a, parent.p) < encode(b, parent.p);
                            });
}

std::vector<word> BiSubalgebra::dual_labels() const {
  std::vector<word> labels;
  for (const Spinor& m : members) labels.push_back(parent.label_of(m));
  std::vector<word> duals;
  for (word beta = 0; beta < (word{1} << parent.p); ++beta) {
    bool ok = true;
    for (word label : labels)
      if (dot(label, beta)) ok = false;
    if (ok) duals.push_back(beta);
  }
  return duals;
}

bool is_maximal_bi_subalgebra(const std::vector<Spinor>& b, const CartanSubalgebra& c) {
  std::vector<Spinor> sorted = b;
  const int p = c.p;
  std::sort(sorted.begin(), sorted.end(),
            [p](const Spinor& x, const Spinor& y) { return encode(x, p) < encode(y, p); });
  for (const Spinor& m : sorted)
    if (!c.contains(m)) throw std::invalid_argument("candidate is not a subset of the Cartan subalgebra");
  if (!is_closed(sorted, p)) return false;
  std::vector<Spinor> rest;
  for (const Spinor& m : c.members)
    if (!std::binary_search(sorted.begin(), sorted.end(), m,
                            [p](const Spinor& x, const Spinor& y) {
                              return encode(x, p) < encode(y, p);
                            }))
      rest.push_back(m);
  for (const Spinor& s : rest)
    for (const Spinor& t : rest) {
      Spinor sum = bi_add(s, t);
      if (!std::binary_search(sorted.begin(), sorted.end(), sum,
                              [p](const Spinor& x, const Spinor& y) {
                                return encode(x, p) < encode(y, p);
                              }))
        return false;
    }
  return true;
}

std::vector<BiSubalgebra> enumerate_bi_subalgebras(const CartanSubalgebra& c, int r) {
  if (r < 0 || r > c.p) throw std::invalid_argument("rank out of range");
  std::vector<BiSubalgebra> out;
  for (const std::vector<word>& label_basis : subspaces(c.p, c.p - r)) {
    Gf2Span sp(c.p, label_basis);
    std::vector<Spinor> members;
    for (word label : sp.members()) members.push_back(c.member(label));
    out.push_back(BiSubalgebra::from_members(c, std::move(members)));
  }
  std::sort(out.begin(), out.end(), [&c](const BiSubalgebra& a, const BiSubalgebra& b) {
    return encode_all(closed_basis(a.members, c.p), c.p) <
           encode_all(closed_basis(b.members, c.p), c.p);
  });
  return out;
}

unsigned long long count_bi_subalgebras(int p, int r) {
  if (r < 0 || r > p) throw std::invalid_argument("rank out of range");
  return gaussian_binomial(p, p - r);
}

unsigned long long count_k_supersets(int r, int k) {
  if (k < 0 || k > r) throw std::invalid_argument("rank out of range");
  return gaussian_binomial(r, r - k);
}

unsigned long long count_cartan_supersets(int r) {
  unsigned long long n = 1;
  for (int s = 1; s <= r; ++s) n *= (1ull << s) + 1;
  return n;
}

BiSubalgebra maximal_by_label(const CartanSubalgebra& c, word beta) {
  if (beta >= (word{1} << c.p)) throw std::invalid_argument("label out of range");
  return BiSubalgebra::from_duals(c, {beta});
}

word label_of_maximal(const BiSubalgebra& b) {
  if (b.rank > 1) throw std::invalid_argument("not a maximal bi-subalgebra");
  if (b.rank == 0) return 0;
  for (word beta : b.dual_labels())
    if (beta != 0) return beta;
  throw std::logic_error("maximal bi-subalgebra without a dual label");
}

BiSubalgebra sqcap(const BiSubalgebra& a, const BiSubalgebra& b) {
  if (!(a.parent == b.parent))
    throw std::invalid_argument("meet requires a common Cartan subalgebra");
  return maximal_by_label(a.parent, label_of_maximal(a) ^ label_of_maximal(b));
}

std::vector<BiSubalgebra> group_of(const BiSubalgebra& b_r) {
  std::vector<word> duals = b_r.dual_labels();
  if (duals.size() != (std::size_t{1} << b_r.rank))
    throw std::logic_error("superset group has wrong order (internal consistency error)");
  std::vector<BiSubalgebra> out;
  for (word beta : duals) out.push_back(maximal_by_label(b_r.parent, beta));
  if (b_r.rank >= 1) {
    std::set<word> meet;
    for (const Spinor& m : b_r.parent.members) meet.insert(encode(m, b_r.parent.p));
    for (const BiSubalgebra& b : out) {
      if (b.rank == 0) continue;
      std::set<word> next;
      for (const Spinor& m : b.members) {
        word w = encode(m, b_r.parent.p);
        if (meet.count(w)) next.insert(w);
      }
      meet = std::move(next);
    }
    std::vector<word> base = encode_all(b_r.members, b_r.parent.p);
    if (meet != std::set<word>(base.begin(), base.end()))
      throw std::logic_error("superset intersection mismatch (internal consistency error)");
  }
  return out;
}

CosetDecomposition coset_partition(const CartanSubalgebra& c, const BiSubalgebra& b_r) {
  const int p = c.p;
  Gf2Span sp(2 * p, encode_all(b_r.members, p));
  std::vector<Spinor> transversal;
  for (const Spinor& m : c.members)
    if (sp.insert(encode(m, p))) transversal.push_back(m);
  if (transversal.size() != static_cast<std::size_t>(b_r.rank))
    throw std::invalid_argument("bi-subalgebra does not sit inside the Cartan subalgebra");
  CosetDecomposition out;
  out.base = b_r;
  out.cosets.resize(std::size_t{1} << b_r.rank);
  for (word l = 0; l < (word{1} << b_r.rank); ++l) {
    Spinor shift{0, 0};
    for (int j = 0; j < b_r.rank; ++j)
      if (l & (word{1} << j)) shift = bi_add(shift, transversal[j]);
    std::vector<Spinor> coset;
    for (const Spinor& m : b_r.members) coset.push_back(bi_add(shift, m));
    std::sort(coset.begin(), coset.end(),
              [p](const Spinor& a, const Spinor& b) { return encode(a, p) < encode(b, p); });
    out.cosets[l] = std::move(coset);
  }
  return out;
}

std::vector<CartanSubalgebra> enumerate_cartan_supersets(const BiSubalgebra& b_r) {
  const int p = b_r.parent.p;
  const word all = word{1} << (2 * p);
  // words commuting with every member of the seed
  std::vector<word> candidates;
  for (word w = 1; w < all; ++w) {
    Spinor s = decode(w, p);
    bool ok = true;
    for (const Spinor& m : b_r.members)
      if (!commutes(s, m)) ok = false;
    if (ok) candidates.push_back(w);
  }
  Gf2Span seed(2 * p, encode_all(b_r.members, p));
  std::set<std::vector<word>> level = {seed.members()};
  for (int dim = p - b_r.rank; dim < p; ++dim) {
    std::set<std::vector<word>> next;
    for (const std::vector<word>& space : level) {
      for (word w : candidates) {
        if (std::binary_search(space.begin(), space.end(), w)) continue;
        bool ok = true;
        for (word m : space)
          if (!commutes(decode(w, p), decode(m, p))) ok = false;
        if (!ok) continue;
        std::vector<word> grown = space;
        for (word m : space) grown.push_back(m ^ w);
        std::sort(grown.begin(), grown.end());
        next.insert(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<CartanSubalgebra> out;
  for (const std::vector<word>& space : level)
    out.push_back(CartanSubalgebra::from_members(decode_all(space, p), p));
  std::sort(out.begin(), out.end(), [p](const CartanSubalgebra& a, const CartanSubalgebra& b) {
    return encode_all(a.basis, p) < encode_all(b.basis, p);
  });
  return out;
}

std::vector<CartanSubalgebra> enumerate_cartan_subalgebras(int p) {
  BiSubalgebra trivial;
  trivial.parent = CartanSubalgebra::intrinsic(p);
  trivial.rank = p;
  trivial.members = {Spinor{0, 0}};
  return enumerate_cartan_supersets(trivial);
}

std::string to_json(const CartanSubalgebra& c) {
  nlohmann::json j;
  j["width"] = c.p;
  j["kind"] = c.kind();
  j["members"] = nlohmann::json::array();
  for (const Spinor& m : c.members) j["members"].push_back(to_string(m, c.p));
  j["basis"] = nlohmann::json::array();
  for (const Spinor& m : c.basis) j["basis"].push_back(to_string(m, c.p));
  return j.dump(2);
}

std::string to_json(const BiSubalgebra& b) {
  nlohmann::json j;
  j["width"] = b.parent.p;
  j["rank"] = b.rank;
  j["members"] = nlohmann::json::array();
  for (const Spinor& m : b.members) j["members"].push_back(to_string(m, b.parent.p));
  j["duals"] = nlohmann::json::array();
  for (word beta : b.dual_labels()) j["duals"].push_back(to_digits(beta, b.parent.p));
  return j.dump(2);
}

}  // namespace qap
