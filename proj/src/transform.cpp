// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0

#include "qap/transform.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qap {
namespace {

void require_width(Spinor s, int p) {
  if (p < 1 || p > 16) throw std::invalid_argument("width out of range");
  if ((s.zeta >> p) != 0 || (s.alpha >> p) != 0)
    throw std::invalid_argument("spinor exceeds width " + std::to_string(p));
}

int pairing(Spinor a, Spinor b) {
  return (dot(a.zeta, b.alpha) + dot(b.zeta, a.alpha)) & 1;
}

SignedSpinor step_apply(const TransformStep& step, const SignedSpinor& s, int p) {
  if (const auto* rot = std::get_if<SRotation>(&step))
    return apply_srotation(*rot, s, p);
  return apply_srotation(as_rotation(std::get<BasicTransformation>(step)), s, p);
}

// symplectic pairing with X as a gf2_solve row over packed unknowns
// w = (zeta << p) | alpha of the sought axis
word pairing_row(Spinor x, int p) { return (x.alpha << p) | x.zeta; }

std::optional<Spinor> solve_axis(const std::vector<Spinor>& zeros,
                                 const std::vector<Spinor>& ones, int p) {
  std::vector<word> rows;
  std::vector<int> rhs;
  for (const Spinor& z : zeros) {
    rows.push_back(pairing_row(z, p));
    rhs.push_back(0);
  }
  for (const Spinor& o : ones) {
    rows.push_back(pairing_row(o, p));
    rhs.push_back(1);
  }
  auto w = gf2_solve(rows, rhs, 2 * p);
  if (!w) return std::nullopt;
  return decode(*w, p);
}

}  // namespace

double angle_value(Angle a, double theta) {
  const double quarter = std::numbers::pi / 4;
  switch (a) {
    case Angle::plus_half_pi: return 2 * quarter;
    case Angle::minus_half_pi: return -2 * quarter;
    case Angle::plus_quarter_pi: return quarter;
    case Angle::minus_quarter_pi: return -quarter;
    case Angle::free: return theta;
  }
  throw std::logic_error("unknown angle");
}

std::string angle_text(Angle a, double theta) {
  switch (a) {
    case Angle::plus_half_pi: return "+pi/2";
    case Angle::minus_half_pi: return "-pi/2";
    case Angle::plus_quarter_pi: return "+pi/4";
    case Angle::minus_quarter_pi: return "-pi/4";
    case Angle::free: {
      std::ostringstream out;
      out << theta;
      return out.str();
    }
  }
  throw std::logic_error("unknown angle");
}

SRotation as_rotation(const BasicTransformation& h) {
  int ov = overlap(h.zeta, h.alpha) % 4;
  Angle a = (ov == 0 || ov == 1) ? Angle::plus_quarter_pi : Angle::minus_quarter_pi;
  return {{h.zeta, h.alpha}, a, 0.0};
}

SignedSpinor apply_srotation(const SRotation& rot, const SignedSpinor& v, int p) {
  require_width(rot.axis, p);
  require_width(v.s, p);
  if (rot.angle == Angle::free)
    throw std::invalid_argument("free-angle rotation has no symbolic action");
  if (commutes(rot.axis, v.s)) return v;
  if (rot.angle == Angle::plus_half_pi || rot.angle == Angle::minus_half_pi)
    return {v.s, -v.sign};
  // R^dag S R = -i M S for +pi/4 and +i M S for -pi/4, M the axis matrix
  PhasedSpinor prod = mul({0, rot.axis}, {0, v.s});
  int shift = rot.angle == Angle::plus_quarter_pi ? 3 : 1;
  SignedSpinor out = as_signed({(prod.phase + shift) % 4, prod.s});
  out.sign *= v.sign;
  return out;
}

Spinor apply_basic(const BasicTransformation& h, Spinor s) {
  Spinor axis{h.zeta, h.alpha};
  return commutes(axis, s) ? s : bi_add(axis, s);
}

SignedSpinor TransformSequence::apply(const SignedSpinor& s) const {
  if (!map_cache.empty()) {
    SignedSpinor out = map_cache[encode(s.s, p)];
    out.sign *= s.sign;
    return out;
  }
  SignedSpinor cur = s;
  for (const TransformStep& step : steps) cur = step_apply(step, cur, p);
  return cur;
}

SignedSpinor TransformSequence::apply(Spinor s) const { return apply(SignedSpinor{s, +1}); }

const std::vector<SignedSpinor>& TransformSequence::as_map() const {
  if (map_cache.empty()) {
    if (2 * p > 24) throw std::length_error("width too large for a full map");
    map_cache.resize(std::size_t{1} << (2 * p));
    for (word v = 0; v < map_cache.size(); ++v) {
      SignedSpinor cur{decode(v, p), +1};
      for (const TransformStep& step : steps) cur = step_apply(step, cur, p);
      map_cache[v] = cur;
    }
  }
  return map_cache;
}

CommutationTable CommutationTable::of(const std::vector<Spinor>& spinors) {
  int n = static_cast<int>(spinors.size());
  CommutationTable t;
  t.bits.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.bits[i][j] = pairing(spinors[i], spinors[j]);
  return t;
}

TransformSequence factorize_srotation(const SRotation& rot, int p) {
  require_width(rot.axis, p);
  if (is_identity(rot.axis)) throw std::invalid_argument("identity axis");
  const double theta = angle_value(rot.angle, rot.theta);

  // shrink the support one qubit at a time: each conjugator carries the axis
  // letter on the qubit it erases and a different non-identity letter on a
  // kept qubit, so it anticommutes with the running axis and the bi-additive
  // image loses exactly that qubit
  std::vector<SRotation> conj;
  SignedSpinor running{rot.axis, +1};
  while (true) {
    std::vector<int> support;
    for (int b = 0; b < p; ++b)
      if (((running.s.zeta >> b) & 1u) || ((running.s.alpha >> b) & 1u)) support.push_back(b);
    if (support.size() <= 1) break;
    int drop = support[0], keep = support[1];
    word zc = ((running.s.zeta >> drop) & 1u) << drop;
    word ac = ((running.s.alpha >> drop) & 1u) << drop;
    int kz = (running.s.zeta >> keep) & 1, ka = (running.s.alpha >> keep) & 1;
    for (auto [lz, la] : {std::pair{0, 1}, {1, 0}, {1, 1}}) {
      if (lz == kz && la == ka) continue;
      zc |= static_cast<word>(lz) << keep;
      ac |= static_cast<word>(la) << keep;
      break;
    }
    SRotation rc{{zc, ac}, Angle::plus_quarter_pi, 0.0};
    conj.push_back(rc);
    running = apply_srotation(rc, running, p);
  }

  TransformSequence seq{p, {}, {}};
  for (const SRotation& rc : conj) seq.steps.emplace_back(rc);
  seq.steps.emplace_back(SRotation{running.s, Angle::free, running.sign * theta});
  for (auto it = conj.rbegin(); it != conj.rend(); ++it) {
    SRotation inv = *it;
    inv.angle = Angle::minus_quarter_pi;
    seq.steps.emplace_back(inv);
  }
  return seq;
}

TransformSequence diagonalizing_sequence(const std::vector<Spinor>& gens,
                                         const std::vector<word>& targets, int p) {
  if (gens.size() != targets.size()) throw std::invalid_argument("size mismatch");
  const int m = static_cast<int>(gens.size());
  if (m > p) throw std::invalid_argument("more generators than the width");
  Gf2Span gspan(2 * p), tspan(p);
  for (const Spinor& g : gens) {
    require_width(g, p);
    if (!gspan.insert(encode(g, p))) throw std::invalid_argument("dependent generators");
  }
  for (word t : targets) {
    if ((t >> p) != 0) throw std::invalid_argument("target exceeds width");
    if (!tspan.insert(t)) throw std::invalid_argument("dependent targets");
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!commutes(gens[i], gens[j])) throw std::invalid_argument("generators must commute");

  TransformSequence seq{p, {}, {}};

  // diagonalization stage: rebase so the non-diagonal rows carry independent
  // alpha strings, then one basic transformation per such row
  std::vector<Spinor> adapted;  // alpha parts form a descending-pivot echelon
  for (Spinor g : gens) {
    for (const Spinor& row : adapted)
      if (g.alpha & std::bit_floor(row.alpha)) g = bi_add(g, row);
    if (g.alpha != 0) {
      adapted.push_back(g);
      std::sort(adapted.begin(), adapted.end(), [](const Spinor& a, const Spinor& b) {
        return a.alpha > b.alpha;  // distinct top bits, so plain > orders pivots
      });
    }
  }
  const int k = static_cast<int>(adapted.size());
  for (int i = 0; i < k; ++i) {
    std::vector<word> rows;
    std::vector<int> rhs;
    for (int j = 0; j < k; ++j) {
      rows.push_back(adapted[j].alpha);
      rhs.push_back((i == j ? 1 : 0) ^ dot(adapted[j].zeta, adapted[i].alpha));
    }
    auto eta = gf2_solve(rows, rhs, p);
    if (!eta)
      throw std::logic_error("diagonalization constraints unsolvable (internal consistency error)");
    seq.steps.emplace_back(BasicTransformation{*eta, adapted[i].alpha});
  }

  // exchange stage: transvections walking each diagonal image to its target
  std::vector<word> cur(m);
  for (int i = 0; i < m; ++i) {
    SignedSpinor im = seq.apply(gens[i]);
    if (im.s.alpha != 0)
      throw std::logic_error("diagonalization left a non-diagonal image (internal consistency error)");
    cur[i] = im.s.zeta;
  }
  for (int t = 0; t < m; ++t) {
    if (cur[t] == targets[t]) continue;
    std::vector<word> rows;
    std::vector<int> rhs;
    for (int i = 0; i < t; ++i) {
      rows.push_back(targets[i]);
      rhs.push_back(0);
    }
    rows.push_back(cur[t]);
    rhs.push_back(1);
    rows.push_back(targets[t]);
    rhs.push_back(1);
    auto beta = gf2_solve(rows, rhs, p);
    if (!beta)
      throw std::logic_error("exchange constraints unsolvable (internal consistency error)");
    word xi = cur[t] ^ targets[t];
    seq.steps.emplace_back(BasicTransformation{0, *beta});
    seq.steps.emplace_back(BasicTransformation{xi, *beta});
    for (int j = t; j < m; ++j)
      if (dot(cur[j], *beta)) cur[j] ^= xi;
  }
  return seq;
}

std::vector<word> frame_basis_labels(Frame f, int p, int r) {
  if (r < 0 || r > p) throw std::invalid_argument("rank out of range");
  std::vector<word> labels;
  if (f == Frame::intrinsic) {
    for (int b = p - r - 1; b >= 0; --b) labels.push_back(word{1} << b);
  } else {
    for (int b = p - 1; b >= r; --b) labels.push_back(word{1} << b);
  }
  return labels;
}

TransformSequence build_Qr(const BiSubalgebra& b_r, Frame target) {
  const int p = b_r.parent.p;
  std::vector<Spinor> gens = closed_basis(b_r.members, p);
  return diagonalizing_sequence(gens, frame_basis_labels(target, p, b_r.rank), p);
}

std::vector<Spinor> preferred_spinor_set(int p, int r) {
  if (p < 1 || r < 0 || r > p) throw std::invalid_argument("rank out of range");
  std::vector<Spinor> out;
  for (int l = 1; l <= p - r; ++l) out.push_back({word{1} << (p - l), 0});
  for (int u = 1; u <= r; ++u) out.push_back({word{1} << (r - u), 0});
  for (int u = 1; u <= r; ++u) out.push_back({0, word{1} << (u - 1)});
  for (int l = 1; l <= p - r; ++l) out.push_back({0, word{1} << (r + l - 1)});
  return out;
}

TransformSequence spinor_mapping(const std::vector<Spinor>& s1,
                                 const std::vector<Spinor>& s2, int p) {
  if (s1.size() != s2.size()) throw std::invalid_argument("size mismatch");
  const int m = static_cast<int>(s1.size());
  if (m > 2 * p) throw std::invalid_argument("more spinors than 2p");
  Gf2Span sp1(2 * p), sp2(2 * p);
  for (int i = 0; i < m; ++i) {
    require_width(s1[i], p);
    require_width(s2[i], p);
    if (!sp1.insert(encode(s1[i], p)) || !sp2.insert(encode(s2[i], p)))
      throw std::invalid_argument("dependent spinors");
  }
  if (!(CommutationTable::of(s1) == CommutationTable::of(s2)))
    throw std::invalid_argument("commutation tables differ");

  TransformSequence seq{p, {}, {}};
  for (int u = 0; u < m; ++u) {
    SignedSpinor t = seq.apply(s1[u]);
    const Spinor target = s2[u];
    const std::vector<Spinor> fixed(s2.begin(), s2.begin() + u);

    if (t.s == target) {
      if (t.sign == +1) continue;
      // one half-pi rotation about an axis anticommuting with the target only
      auto axis = solve_axis(fixed, {target}, p);
      if (!axis)
        throw std::logic_error("sign-fix constraints unsolvable (internal consistency error)");
      seq.steps.emplace_back(SRotation{*axis, Angle::plus_half_pi, 0.0});
    } else if (!commutes(t.s, target)) {
      // the bi-additive axis sends the running image straight to the target;
      // preceding members are fixed for free by the shared commutation table
      SRotation rot{bi_add(t.s, target), Angle::plus_quarter_pi, 0.0};
      if (apply_srotation(rot, t, p).sign != +1) rot.angle = Angle::minus_quarter_pi;
      seq.steps.emplace_back(rot);
    } else {
      // commuting and unequal: detour through an axis anticommuting with both
      auto axis = solve_axis(fixed, {t.s, target}, p);
      if (!axis)
        throw std::logic_error("mapping constraints unsolvable (internal consistency error)");
      seq.steps.emplace_back(SRotation{*axis, Angle::plus_quarter_pi, 0.0});
      SignedSpinor mid = seq.apply(s1[u]);
      SRotation rot{bi_add(mid.s, target), Angle::plus_quarter_pi, 0.0};
      if (apply_srotation(rot, mid, p).sign != +1) rot.angle = Angle::minus_quarter_pi;
      seq.steps.emplace_back(rot);
    }
    SignedSpinor reached = seq.apply(s1[u]);
    if (!(reached == SignedSpinor{target, +1}))
      throw std::logic_error("mapping step missed its target (internal consistency error)");
  }
  return seq;
}

std::pair<SRotation, CartanSubalgebra> kind_transition(const CartanSubalgebra& c,
                                                       KindDirection direction) {
  const int p = c.p;
  if (p > 8) throw std::invalid_argument("width too large for the kind-transition search");
  const int k = c.kind();
  const int want =
      k + (direction == KindDirection::down ? -1 : direction == KindDirection::up ? 1 : 0);
  if (want >= 0 && want <= p) {
    Gf2Span alpha_span(p);
    for (const Spinor& mbr : c.members) alpha_span.insert(mbr.alpha);
    for (word v = 1; v < (word{1} << (2 * p)); ++v) {
      Spinor axis = decode(v, p);
      if (direction == KindDirection::same && axis.alpha != 0) continue;
      if (direction == KindDirection::down &&
          (axis.alpha == 0 || !alpha_span.contains(axis.alpha)))
        continue;
      if (direction == KindDirection::up && alpha_span.contains(axis.alpha)) continue;
      bool moves = false;
      for (const Spinor& mbr : c.members)
        if (!commutes(axis, mbr)) {
          moves = true;
          break;
        }
      if (!moves) continue;
      SRotation rot{axis, Angle::plus_quarter_pi, 0.0};
      std::vector<Spinor> image;
      image.reserve(c.members.size());
      for (const Spinor& mbr : c.members)
        image.push_back(apply_srotation(rot, {mbr, +1}, p).s);
      CartanSubalgebra out = CartanSubalgebra::from_members(image, p);
      if (out.kind() == want) return {rot, out};
    }
  }
  throw std::invalid_argument("no admissible axis for the requested kind transition");
}

BiadditionReport check_biaddition_preservation(const TransformSequence& q) {
  BiadditionReport rep;
  const int p = q.p;
  const auto& map = q.as_map();
  const word total = word{1} << (2 * p);

  auto check_pair = [&](word a, word b) {
    Spinor sa = decode(a, p), sb = decode(b, p);
    PhasedSpinor lhs = mul(as_phased(map[a]), as_phased(map[b]));
    PhasedSpinor base = mul({0, sa}, {0, sb});
    const SignedSpinor& im3 = map[encode(base.s, p)];
    PhasedSpinor rhs{(base.phase + (im3.sign < 0 ? 2 : 0)) % 4, im3.s};
    ++rep.pairs_checked;
    if (!(lhs == rhs)) {
      rep.passed = false;
      if (rep.violations.size() < 16)
        rep.violations.push_back(to_string(sa, p) + " , " + to_string(sb, p));
    }
  };

  if (p <= 3) {
    for (word a = 0; a < total; ++a)
      for (word b = a; b < total; ++b) check_pair(a, b);
  } else {
    std::mt19937 rng(7);
    for (int n = 0; n < 4096; ++n) check_pair(rng() % total, rng() % total);
  }
  return rep;
}

Mat realize(const SRotation& rot, int p) {
  return exponential_srotation(rot.axis, angle_value(rot.angle, rot.theta), p);
}

Mat realize(const BasicTransformation& h, int p) {
  SRotation rot = as_rotation(h);
  return exponential_srotation(rot.axis, angle_value(rot.angle), p);
}

Mat realize(const TransformSequence& q) {
  const int n = 1 << q.p;
  Mat u = Mat::Identity(n, n);
  for (const TransformStep& step : q.steps) {
    if (const auto* rot = std::get_if<SRotation>(&step))
      u = u * realize(*rot, q.p);
    else
      u = u * realize(std::get<BasicTransformation>(step), q.p);
  }
  return u;
}

std::string to_string(const SRotation& rot, int p) {
  return "R(" + to_string(rot.axis, p) + ", " + angle_text(rot.angle, rot.theta) + ")";
}

std::string to_string(const BasicTransformation& h, int p) {
  return "h(" + to_string(Spinor{h.zeta, h.alpha}, p) + ")";
}

std::string to_text(const TransformSequence& q) {
  std::string out;
  for (const TransformStep& step : q.steps) {
    if (const auto* rot = std::get_if<SRotation>(&step))
      out += to_string(*rot, q.p);
    else
      out += to_string(std::get<BasicTransformation>(step), q.p);
    out += '\n';
  }
  return out;
}

std::string to_json(const TransformSequence& q) {
  nlohmann::json steps = nlohmann::json::array();
  for (const TransformStep& step : q.steps) {
    nlohmann::json entry;
    if (const auto* rot = std::get_if<SRotation>(&step)) {
      entry["op"] = "R";
      entry["axis"] = to_string(rot->axis, q.p);
      if (rot->angle == Angle::free)
        entry["angle"] = rot->theta;
      else
        entry["angle"] = angle_text(rot->angle);
    } else {
      const auto& h = std::get<BasicTransformation>(step);
      entry["op"] = "h";
      entry["axis"] = to_string(Spinor{h.zeta, h.alpha}, q.p);
    }
    steps.push_back(entry);
  }
  nlohmann::json j{{"width", q.p}, {"steps", steps}};
  return j.dump(2);
}

}  // namespace qap
