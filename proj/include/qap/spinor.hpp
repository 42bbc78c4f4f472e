// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0
//
// Spinors: the hermitian generator basis of su(2^p).
//
// S^zeta_alpha = (-i)^|zeta AND alpha| Z^zeta X^alpha, a p-fold tensor of
// I, Z, X, Y picked per digit pair (0,0), (1,0), (0,1), (1,1).  Two spinors
// either commute or anticommute; their matrix product is another spinor up to
// an integer power of i, which SignedSpinor tracks.

#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "qap/bitword.hpp"

namespace qap {

struct Spinor {
  word zeta = 0;
  word alpha = 0;
  auto operator<=>(const Spinor&) const = default;
};

inline Spinor bi_add(Spinor a, Spinor b) { return {a.zeta ^ b.zeta, a.alpha ^ b.alpha}; }
inline bool commutes(Spinor a, Spinor b) {
  return ((dot(a.zeta, b.alpha) + dot(b.zeta, a.alpha)) & 1) == 0;
}
inline bool is_identity(Spinor s) { return s.zeta == 0 && s.alpha == 0; }

// integer encoding: zeta digits then alpha digits, ascending sort order
inline word encode(Spinor s, int p) { return (s.zeta << p) | s.alpha; }
inline Spinor decode(word v, int p) { return {v >> p, v & ((1u << p) - 1)}; }

std::string to_string(Spinor s, int p);                 // "S^101_001"
Spinor parse_spinor(std::string_view text, int p);      // "S^101_001" or "101_001"

// (+1|-1) * S; the form all special-angle rotation images take.
struct SignedSpinor {
  Spinor s;
  int sign = +1;
  bool operator==(const SignedSpinor&) const = default;
};

// i^phase * S; internal product bookkeeping (hermitian-normalized products can
// pick up odd powers of i).
struct PhasedSpinor {
  int phase = 0;  // mod 4
  Spinor s;
  bool operator==(const PhasedSpinor&) const = default;
};

inline PhasedSpinor as_phased(const SignedSpinor& v) { return {v.sign < 0 ? 2 : 0, v.s}; }
SignedSpinor as_signed(const PhasedSpinor& v);  // throws if phase is odd

PhasedSpinor mul(const PhasedSpinor& a, const PhasedSpinor& b);
std::string to_string(const SignedSpinor& v, int p);
std::string to_string(const PhasedSpinor& v, int p);

}  // namespace qap
