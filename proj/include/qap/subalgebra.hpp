// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0
//
// Cartan subalgebras of su(2^p), bi-subalgebras of every rank, the meet-group
// of maximal bi-subalgebras, coset partitions, and the counting formulas.
//
// Group labels are coordinates over the echelon basis of a Cartan subalgebra
// (descending pivots), so for the intrinsic algebra the label of S^nu_0 is nu
// itself.  B_beta = {members m : label(m).beta = 0}; meet labels XOR.

#pragma once

#include <string>
#include <vector>

#include "qap/spinor.hpp"

namespace qap {

std::vector<Spinor> span(const std::vector<Spinor>& generators, int p);
std::vector<Spinor> closed_basis(const std::vector<Spinor>& members, int p);
bool is_closed(const std::vector<Spinor>& set, int p);
bool all_commute(const std::vector<Spinor>& set);

struct CartanSubalgebra {
  int p = 0;
  std::vector<Spinor> members;  // ascending encode, size 2^p, abelian, closed
  std::vector<Spinor> basis;    // echelon over encode words, descending pivots

  static CartanSubalgebra intrinsic(int p);
  static CartanSubalgebra from_members(std::vector<Spinor> members, int p);
  static CartanSubalgebra from_generators(const std::vector<Spinor>& gens, int p);

  bool contains(const Spinor& s) const;
  word label_of(const Spinor& member) const;  // throws on non-members
  Spinor member(word label) const;
  int kind() const;  // GF(2) rank of the alpha strings
  bool operator==(const CartanSubalgebra&) const = default;
};

inline int cartan_kind(const CartanSubalgebra& c) { return c.kind(); }

struct BiSubalgebra {
  CartanSubalgebra parent;
  int rank = 0;
  std::vector<Spinor> members;  // ascending encode, size 2^(p-rank)

  static BiSubalgebra from_members(CartanSubalgebra parent, std::vector<Spinor> members);
  // {m : label(m).beta = 0 for all beta in the span of duals}
  static BiSubalgebra from_duals(CartanSubalgebra parent, const std::vector<word>& duals);

  bool contains(const Spinor& s) const;
  std::vector<word> dual_labels() const;  // the 2^rank beta with B_beta containing this
  bool operator==(const BiSubalgebra&) const = default;
};

bool is_maximal_bi_subalgebra(const std::vector<Spinor>& b, const CartanSubalgebra& c);

// all index-2^r subgroups, ordered by ascending member encoding
std::vector<BiSubalgebra> enumerate_bi_subalgebras(const CartanSubalgebra& c, int r);
unsigned long long count_bi_subalgebras(int p, int r);
// k-th maximal bi-subalgebras of C containing a given r-th maximal one
unsigned long long count_k_supersets(int r, int k);
unsigned long long count_cartan_supersets(int r);

// meet-group G(C)
BiSubalgebra maximal_by_label(const CartanSubalgebra& c, word beta);
word label_of_maximal(const BiSubalgebra& b);  // throws unless rank <= 1
BiSubalgebra sqcap(const BiSubalgebra& a, const BiSubalgebra& b);
std::vector<BiSubalgebra> group_of(const BiSubalgebra& b_r);  // 2^r supersets incl. C

struct CosetDecomposition {
  BiSubalgebra base;
  std::vector<std::vector<Spinor>> cosets;  // cosets[l] = B^[r,l]
};
CosetDecomposition coset_partition(const CartanSubalgebra& c, const BiSubalgebra& b_r);

// every Cartan subalgebra of su(2^p) containing the given bi-subalgebra;
// B^[p] = {identity} yields all of them
std::vector<CartanSubalgebra> enumerate_cartan_supersets(const BiSubalgebra& b_r);
std::vector<CartanSubalgebra> enumerate_cartan_subalgebras(int p);

std::string to_json(const CartanSubalgebra& c);
std::string to_json(const BiSubalgebra& b);

}  // namespace qap
