// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0
//
// s-rotations, basic transformations, and sequences composed of them: the
// diagonalization/exchange operators Q^(r), the 2p-spinor mapping, Cartan-kind
// transitions, and bi-addition preservation checks.
//
// Conjugation direction is S -> U^dag S U throughout.  A sequence applies its
// steps in listed order (step 1 innermost), so the matrix of [U_1,...,U_m] is
// the product U_1 U_2 ... U_m.  Special-angle rotations act spinor-to-spinor
// with tracked signs; free angles exist only behind the matrix oracle.

#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qap/matrix_oracle.hpp"
#include "qap/spinor.hpp"
#include "qap/subalgebra.hpp"

namespace qap {

enum class Angle { plus_half_pi, minus_half_pi, plus_quarter_pi, minus_quarter_pi, free };

double angle_value(Angle a, double theta = 0.0);
std::string angle_text(Angle a, double theta = 0.0);  // "+pi/4", "-pi/2", "0.3"

struct SRotation {
  Spinor axis;
  Angle angle = Angle::plus_quarter_pi;
  double theta = 0.0;  // read only when angle == Angle::free
};

// h^zeta_alpha = (1/sqrt2)(I + i(-i)^(zeta.alpha) Z^zeta X^alpha), the
// exponent taken mod 2; as a matrix this equals the quarter-pi rotation about
// the same axis whose angle sign flips with |zeta AND alpha| mod 4.
struct BasicTransformation {
  word zeta = 0;
  word alpha = 0;
};

SRotation as_rotation(const BasicTransformation& h);

using TransformStep = std::variant<SRotation, BasicTransformation>;

struct TransformSequence {
  int p = 0;
  std::vector<TransformStep> steps;
  mutable std::vector<SignedSpinor> map_cache;  // lazy, filled by as_map()

  SignedSpinor apply(const SignedSpinor& s) const;
  SignedSpinor apply(Spinor s) const;
  // signed image of every spinor, indexed by encode(s, p); needs 2p <= 24
  const std::vector<SignedSpinor>& as_map() const;
};

// symplectic parities of an ordered spinor set; symmetric, zero diagonal
struct CommutationTable {
  std::vector<std::vector<int>> bits;
  static CommutationTable of(const std::vector<Spinor>& spinors);
  bool operator==(const CommutationTable&) const = default;
};

SignedSpinor apply_srotation(const SRotation& rot, const SignedSpinor& s, int p);
Spinor apply_basic(const BasicTransformation& h, Spinor s);

// R^zeta_alpha(theta) rewritten as quarter-pi two-qubit conjugators around a
// single one-qubit rotation of the same (sign-adjusted) free angle.
TransformSequence factorize_srotation(const SRotation& rot, int p);

// Sequence whose map sends gens[i] to the diagonal S^{targets[i]}_0 up to
// sign; gens pairwise commute and are independent, targets are independent.
TransformSequence diagonalizing_sequence(const std::vector<Spinor>& gens,
                                         const std::vector<word>& targets, int p);

enum class Frame { canonical, intrinsic };

// diagonal strings of the rank-r reference bi-subalgebra, descending pivots:
// canonical occupies the first p-r digits, intrinsic the last p-r
std::vector<word> frame_basis_labels(Frame f, int p, int r);

TransformSequence build_Qr(const BiSubalgebra& b_r, Frame target);

// ordered set of Eq. int2nIndpSpin: p diagonal units then p X-type units in
// reversed order, so member p+w pairs with member p-w+1 only
std::vector<Spinor> preferred_spinor_set(int p, int r);

TransformSequence spinor_mapping(const std::vector<Spinor>& s1,
                                 const std::vector<Spinor>& s2, int p);

enum class KindDirection { down, same, up };
std::pair<SRotation, CartanSubalgebra> kind_transition(const CartanSubalgebra& c,
                                                       KindDirection direction);

struct BiadditionReport {
  bool passed = true;
  long pairs_checked = 0;
  std::vector<std::string> violations;
};
BiadditionReport check_biaddition_preservation(const TransformSequence& q);

Mat realize(const SRotation& rot, int p);
Mat realize(const BasicTransformation& h, int p);
Mat realize(const TransformSequence& q);

std::string to_string(const SRotation& rot, int p);       // "R(S^11_11, +pi/4)"
std::string to_string(const BasicTransformation& h, int p);  // "h(S^10_01)"
std::string to_text(const TransformSequence& q);             // one step per line
std::string to_json(const TransformSequence& q);

}  // namespace qap
