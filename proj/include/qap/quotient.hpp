// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0
//
// Quotient and co-quotient algebras over a quotient-algebra partition:
// conjugate pairs with their six types, the pair census, merging and
// detaching rank transitions, and the center-subalgebra theorems.
//
// Every subspace pairs with its tri-addition conjugate through the center
// label; the center's own pair is left out.  Both-null pairs are kept in
// the listing and counted once by the census.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qap/partition.hpp"
#include "qap/spinor.hpp"

namespace qap {

enum class PairType { DegradeI, DegradeII, DegradeIII, RegularI, RegularII, RegularIII };
std::string to_string(PairType t);

enum class Flavor { Quotient, CoquotientDegrade, CoquotientRegular };
std::string to_string(Flavor f);

struct ConjugatePair {
  SubspaceLabel first;
  SubspaceLabel second;
  PairType type = PairType::RegularI;
  bool operator==(const ConjugatePair&) const = default;
};

struct QuotientStructure {
  QAPartition partition;
  SubspaceLabel center;
  Flavor flavor = Flavor::Quotient;
  std::vector<ConjugatePair> pairs;  // degrade blocks first, ascending beta then i
};

struct PairCensus {
  std::size_t degrade_i = 0, degrade_ii = 0, degrade_iii = 0;
  std::size_t regular_i = 0, regular_ii = 0, regular_iii = 0;
  std::size_t null_pairs = 0;   // pairs whose two subspaces are both null
  std::size_t listed() const;   // all pairs in the structure
  std::size_t counted() const;  // null pairs collapsed into a single one
};

// nullity decides degrade versus regular; the superset relations of the two
// blocks against B^[r] and the coset B^[r,s+t] decide I/II/III
PairType classify_pair(const QAPartition& q, const SubspaceLabel& a, const SubspaceLabel& b);

QuotientStructure build_quotient(QAPartition q);
// center must be a non-null conditioned subspace other than the generator
QuotientStructure build_coquotient(QAPartition q, const SubspaceLabel& center);
PairCensus census(const QuotientStructure& s);

// degrade-center structures merge down to rank r-1; regular-center ones
// detach up to rank r+1, restricting the generator to B^[r] meet B_beta
QuotientStructure merge(const QuotientStructure& coq);
QuotientStructure detach(const QuotientStructure& coq);

using SubspacePair = std::pair<std::vector<Spinor>, std::vector<Spinor>>;

struct CenterReport {
  bool conjugate_partition = true;       // [W,A] in Wh, [Wh,A] in W, [W,Wh] in A
  bool closure = true;                   // unique image pair for every two pairs
  bool abelian = true;
  bool bi_subalgebra_or_coset = true;
  std::vector<std::string> violations;
  bool passed() const {
    return conjugate_partition && closure && abelian && bi_subalgebra_or_coset;
  }
};

// validates a proposed center and conjugate partition of su(2^p), p <= 3
CenterReport check_center_theorems(const std::vector<Spinor>& center,
                                   const std::vector<SubspacePair>& pairs, int p);

std::string to_text(const QuotientStructure& s);
std::string to_json(const QuotientStructure& s);

}  // namespace qap
