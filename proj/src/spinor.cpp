// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0

#include "qap/spinor.hpp"

#include <stdexcept>

namespace qap {

std::string to_string(Spinor s, int p) {
  return "S^" + to_digits(s.zeta, p) + "_" + to_digits(s.alpha, p);
}

Spinor parse_spinor(std::string_view text, int p) {
  std::string t(text);
  if (t.rfind("S^", 0) == 0) t = t.substr(2);
  auto sep = t.find('_');
  if (sep == std::string::npos) throw std::invalid_argument("bad spinor: " + std::string(text));
  word z = from_digits(t.substr(0, sep));
  word a = from_digits(t.substr(sep + 1));
  word lim = (p >= 31) ? ~0u : ((1u << p) - 1);
  if ((z | a) & ~lim) throw std::invalid_argument("spinor wider than " + std::to_string(p));
  if (t.substr(0, sep).size() != static_cast<size_t>(p) || t.size() - sep - 1 != static_cast<size_t>(p))
    throw std::invalid_argument("spinor digits must have width " + std::to_string(p));
  return {z, a};
}

SignedSpinor as_signed(const PhasedSpinor& v) {
  if (v.phase & 1) throw std::logic_error("phase is not real: " + std::to_string(v.phase));
  return {v.s, v.phase == 2 ? -1 : +1};
}

PhasedSpinor mul(const PhasedSpinor& a, const PhasedSpinor& b) {
  // (-i)^w Z^z X^x conventions give
  //   S1 S2 = i^(w3 - w1 - w2 + 2*|alpha1 AND zeta2|) S3
  Spinor c = bi_add(a.s, b.s);
  int w1 = overlap(a.s.zeta, a.s.alpha);
  int w2 = overlap(b.s.zeta, b.s.alpha);
  int w3 = overlap(c.zeta, c.alpha);
  int e = a.phase + b.phase + w3 - w1 - w2 + 2 * overlap(a.s.alpha, b.s.zeta);
  return {((e % 4) + 4) % 4, c};
}

std::string to_string(const SignedSpinor& v, int p) {
  return (v.sign < 0 ? "- " : "") + to_string(v.s, p);
}

std::string to_string(const PhasedSpinor& v, int p) {
  static const char* pre[4] = {"", "i ", "- ", "-i "};
  return std::string(pre[v.phase & 3]) + to_string(v.s, p);
}

}  // namespace qap
