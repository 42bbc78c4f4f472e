// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0
//
// Quotient-algebra partitions: the 2^(p+r+1) conditioned subspaces
// W^eps(B_beta, B^[r]; i) of su(2^p) determined by a rank-r bi-subalgebra.
// Labels form Z_2^(p+r+1) under tri-addition.  beta and i are assigned by
// fixed linear functionals (the echelon pairing and coset duals) and eps by
// one quadratic refinement of the commutation form, so the group laws hold
// by construction and the published tables are reproduced row for row.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qap/spinor.hpp"
#include "qap/subalgebra.hpp"

namespace qap {

struct SubspaceLabel {
  word beta = 0;    // label of B_beta in G(C); 0 is C itself
  int epsilon = 1;  // 1 = W, 0 = conjugate W-hat
  word i = 0;       // coset index, r bits
  bool operator==(const SubspaceLabel&) const = default;
};

SubspaceLabel tri_add(const SubspaceLabel& l1, const SubspaceLabel& l2);
SubspaceLabel anti_tri_add(const SubspaceLabel& l1, const SubspaceLabel& l2);
std::string to_string(const SubspaceLabel& l, int p, int r);

// the doublet (B, B^[r]) whose conditioned subspaces form one beta block
struct Doublet {
  BiSubalgebra B;
  BiSubalgebra B_r;
};

struct QAPartition {
  BiSubalgebra generator;  // B^[r]
  int p = 0;
  int r = 0;
  std::vector<Spinor> transversal;  // t_1..t_r, greedy coset reps of B^[r] in C
  std::vector<Spinor> duals;        // d_1..d_r; i bit k-1 of s is <s, d_k>
  Spinor quad_shift;                // g; eps(s) = 1 + zeta.alpha + <s, g> mod 2
  std::vector<std::vector<Spinor>> table;  // indexed by pack(), members ascending

  std::size_t pack(const SubspaceLabel& l) const;
  SubspaceLabel unpack(std::size_t index) const;
  std::size_t label_count() const { return table.size(); }
  const std::vector<Spinor>& subspace(const SubspaceLabel& l) const;
  SubspaceLabel classify(const Spinor& s) const;
  bool degrade(word beta) const;  // true iff B_beta contains B^[r]
  Doublet doublet(word beta) const;
};

QAPartition build_partition(const BiSubalgebra& b_r);
SubspaceLabel classify(const QAPartition& q, const Spinor& s);

struct ClosureReport {
  bool passed = true;
  long pairs_checked = 0;
  std::vector<std::string> violations;
};

// exhaustive pair scan: product labels for commuting and anti-commuting
// pairs, abelianness of every subspace, and the conjugate-partition triples
ClosureReport verify_closure(const QAPartition& q);

}  // namespace qap
