// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0

#include "qap/quotient.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qap/bitword.hpp"
#include "qap/subalgebra.hpp"

namespace qap {

std::string to_string(PairType t) {
  switch (t) {
    case PairType::DegradeI: return "degrade-I";
    case PairType::DegradeII: return "degrade-II";
    case PairType::DegradeIII: return "degrade-III";
    case PairType::RegularI: return "regular-I";
    case PairType::RegularII: return "regular-II";
    case PairType::RegularIII: return "regular-III";
  }
  throw std::invalid_argument("unknown pair type");
}

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::Quotient: return "quotient";
    case Flavor::CoquotientDegrade: return "coquotient-degrade";
    case Flavor::CoquotientRegular: return "coquotient-regular";
  }
  throw std::invalid_argument("unknown flavor");
}

namespace {

// whether B_beta contains the whole coset B^[r,t]; only called on degrade
// blocks, where membership is constant over each coset
bool block_holds_coset(const QAPartition& q, word beta, word t) {
  if (beta == 0) return true;
  const Spinor& m = q.subspace(SubspaceLabel{0, 1, t}).front();
  return dot(q.generator.parent.label_of(m), beta) == 0;
}

// canonical side order: degrade blocks first, then beta, W before W-hat, i
std::uint64_t label_key(const QAPartition& q, const SubspaceLabel& l) {
  return (std::uint64_t{q.degrade(l.beta) ? 0u : 1u} << 42) | (std::uint64_t{l.beta} << 21) |
         (std::uint64_t{l.epsilon ? 0u : 1u} << 20) | l.i;
}

QuotientStructure assemble(QAPartition q, const SubspaceLabel& center, Flavor flavor) {
  QuotientStructure s{std::move(q), center, flavor, {}};
  const QAPartition& part = s.partition;
  for (std::size_t index = 0; index < part.label_count(); ++index) {
    const SubspaceLabel l = part.unpack(index);
    const SubspaceLabel m = tri_add(l, center);
    if (l == center || m == center) continue;  // the center stays unpaired
    if (label_key(part, l) > label_key(part, m)) continue;
    s.pairs.push_back({l, m, classify_pair(part, l, m)});
  }
  std::sort(s.pairs.begin(), s.pairs.end(), [&part](const ConjugatePair& a, const ConjugatePair& b) {
    return label_key(part, a.first) < label_key(part, b.first);
  });
  return s;
}

}  // namespace

PairType classify_pair(const QAPartition& q, const SubspaceLabel& a, const SubspaceLabel& b) {
  const bool degrade_pair = q.subspace(a).empty() || q.subspace(b).empty();
  const bool da = q.degrade(a.beta), db = q.degrade(b.beta);
  int kind = 1;
  if (da && db) {
    const word t = a.i ^ b.i;
    if (!block_holds_coset(q, a.beta, t) || !block_holds_coset(q, b.beta, t)) kind = 2;
  } else if (da != db) {
    kind = 3;
  }
  switch (kind) {
    case 1: return degrade_pair ? PairType::DegradeI : PairType::RegularI;
    case 2: return degrade_pair ? PairType::DegradeII : PairType::RegularII;
    default: return degrade_pair ? PairType::DegradeIII : PairType::RegularIII;
  }
}

QuotientStructure build_quotient(QAPartition q) {
  return assemble(std::move(q), SubspaceLabel{0, 1, 0}, Flavor::Quotient);
}

QuotientStructure build_coquotient(QAPartition q, const SubspaceLabel& center) {
  if (center == SubspaceLabel{0, 1, 0})
    throw std::invalid_argument("the generator itself cannot serve as a co-quotient center");
  if (q.subspace(center).empty())
    throw std::invalid_argument("a null subspace cannot serve as a co-quotient center");
  const Flavor flavor =
      q.degrade(center.beta) ? Flavor::CoquotientDegrade : Flavor::CoquotientRegular;
  return assemble(std::move(q), center, flavor);
}

std::size_t PairCensus::listed() const {
  return degrade_i + degrade_ii + degrade_iii + regular_i + regular_ii + regular_iii;
}

std::size_t PairCensus::counted() const {
  return listed() - null_pairs + (null_pairs ? 1 : 0);
}

PairCensus census(const QuotientStructure& s) {
  PairCensus c;
  for (const ConjugatePair& pr : s.pairs) {
    switch (pr.type) {
      case PairType::DegradeI: ++c.degrade_i; break;
      case PairType::DegradeII: ++c.degrade_ii; break;
      case PairType::DegradeIII: ++c.degrade_iii; break;
      case PairType::RegularI: ++c.regular_i; break;
      case PairType::RegularII: ++c.regular_ii; break;
      case PairType::RegularIII: ++c.regular_iii; break;
    }
    if (s.partition.subspace(pr.first).empty() && s.partition.subspace(pr.second).empty())
      ++c.null_pairs;
  }
  return c;
}

QuotientStructure merge(const QuotientStructure& coq) {
  if (coq.flavor != Flavor::CoquotientDegrade)
    throw std::invalid_argument("merging requires a degrade-center co-quotient");
  const QAPartition& q = coq.partition;
  std::vector<Spinor> members = q.subspace({0, 1, 0});
  if (coq.center.beta == 0) {
    // absorbing the center coset leaves the quotient of the larger generator
    const auto& coset = q.subspace(coq.center);
    members.insert(members.end(), coset.begin(), coset.end());
    std::sort(members.begin(), members.end());
    return build_quotient(build_partition(BiSubalgebra::from_members(q.generator.parent, members)));
  }
  // absorb the first generator coset outside B_beta0; the center survives as
  // a conditioned subspace of the merged partition, now over a regular block
  for (word j = 1; j < (word{1} << q.r); ++j) {
    const auto& coset = q.subspace(SubspaceLabel{0, 1, j});
    if (dot(q.generator.parent.label_of(coset.front()), coq.center.beta) == 0) continue;
    std::vector<Spinor> larger = members;
    larger.insert(larger.end(), coset.begin(), coset.end());
    std::sort(larger.begin(), larger.end());
    QAPartition merged = build_partition(BiSubalgebra::from_members(q.generator.parent, larger));
    const SubspaceLabel c = merged.classify(q.subspace(coq.center).front());
    if (merged.subspace(c) != q.subspace(coq.center))
      throw std::logic_error("the merged center is no longer a conditioned subspace");
    return build_coquotient(std::move(merged), c);
  }
  throw std::logic_error("every generator coset lies inside the center block");
}

QuotientStructure detach(const QuotientStructure& coq) {
  if (coq.flavor != Flavor::CoquotientRegular)
    throw std::invalid_argument("detaching requires a regular-center co-quotient");
  const QAPartition& q = coq.partition;
  if (q.r + 1 >= q.p) throw std::invalid_argument("detaching would exceed rank p - 1");
  // keep the generator half lying inside B_beta0, which then holds the
  // whole new generator and turns the center block degrade
  std::vector<Spinor> kept;
  for (const Spinor& m : q.subspace({0, 1, 0}))
    if (dot(q.generator.parent.label_of(m), coq.center.beta) == 0) kept.push_back(m);
  QAPartition split = build_partition(BiSubalgebra::from_members(q.generator.parent, kept));
  const SubspaceLabel c = split.classify(q.subspace(coq.center).front());
  if (split.subspace(c) != q.subspace(coq.center))
    throw std::logic_error("the detached center is no longer a conditioned subspace");
  return build_coquotient(std::move(split), c);
}

namespace {

std::string report(const char* what, const Spinor& x, const Spinor& y, int p) {
  std::ostringstream out;
  out << what << ": " << to_string(x, p) << " with " << to_string(y, p);
  return out.str();
}

}  // namespace

CenterReport check_center_theorems(const std::vector<Spinor>& center,
                                   const std::vector<SubspacePair>& pairs, int p) {
  if (p < 1 || p > 3) throw std::invalid_argument("the exhaustive regime requires 1 <= p <= 3");
  if (center.empty()) throw std::invalid_argument("the center must be non-empty");
  const word n = word{1} << (2 * p);
  // code 0 marks the center, 1 + 2m the subspace W_m, 2 + 2m its conjugate
  std::vector<int> where(n, -1);
  auto place = [&](const std::vector<Spinor>& set, int code) {
    for (const Spinor& s : set) {
      const word e = encode(s, p);
      if (e >= n) throw std::invalid_argument("spinor outside su(2^p)");
      if (where[e] != -1) throw std::invalid_argument("duplicate spinor in the proposed partition");
      where[e] = code;
    }
  };
  place(center, 0);
  for (std::size_t m = 0; m < pairs.size(); ++m) {
    place(pairs[m].first, 1 + 2 * static_cast<int>(m));
    place(pairs[m].second, 2 + 2 * static_cast<int>(m));
  }
  for (word e = 0; e < n; ++e)
    if (where[e] == -1) throw std::invalid_argument("the proposed partition must cover su(2^p)");

  CenterReport rep;
  auto code_of = [&](const Spinor& s) { return where[encode(s, p)]; };
  auto images_land_in = [&](const std::vector<Spinor>& xs, const std::vector<Spinor>& ys,
                            int target, const char* what) {
    for (const Spinor& x : xs)
      for (const Spinor& y : ys) {
        if (commutes(x, y)) continue;
        if (code_of(bi_add(x, y)) != target) {
          rep.conjugate_partition = false;
          rep.violations.push_back(report(what, x, y, p));
        }
      }
  };
  for (std::size_t m = 0; m < pairs.size(); ++m) {
    images_land_in(pairs[m].first, center, 2 + 2 * static_cast<int>(m), "[W, A] escapes Wh");
    images_land_in(pairs[m].second, center, 1 + 2 * static_cast<int>(m), "[Wh, A] escapes W");
    images_land_in(pairs[m].first, pairs[m].second, 0, "[W, Wh] escapes the center");
  }

  // condition of closure: the brackets of two pairs fill one unique image
  // pair, same-side brackets on one component, cross-side on the other
  for (std::size_t m = 0; m < pairs.size(); ++m)
    for (std::size_t k = m + 1; k < pairs.size(); ++k) {
      int same_code = -1, cross_code = -1;
      bool ok = true;
      auto absorb = [&](const std::vector<Spinor>& xs, const std::vector<Spinor>& ys, bool same) {
        for (const Spinor& x : xs)
          for (const Spinor& y : ys) {
            if (commutes(x, y)) continue;
            const int code = code_of(bi_add(x, y));
            int& slot = same ? same_code : cross_code;
            if (code == 0)
              ok = false;  // escaped into the center
            else if (slot == -1)
              slot = code;
            else if (slot != code)
              ok = false;  // no unique image
          }
      };
      absorb(pairs[m].first, pairs[k].first, true);
      absorb(pairs[m].second, pairs[k].second, true);
      absorb(pairs[m].first, pairs[k].second, false);
      absorb(pairs[m].second, pairs[k].first, false);
      if (ok && same_code != -1 && cross_code != -1 &&
          ((same_code - 1) / 2 != (cross_code - 1) / 2 || same_code == cross_code))
        ok = false;  // the two components are not the two sides of one pair
      if (!ok) {
        rep.closure = false;
        std::ostringstream out;
        out << "pairs " << m << " and " << k << " admit no unique image pair";
        rep.violations.push_back(out.str());
      }
    }

  rep.abelian = all_commute(center);
  if (!rep.abelian) rep.violations.push_back("the center is not abelian");

  // a center obeying the theorems is a bi-subalgebra or one of its cosets:
  // translating by any member must give a group under bi-addition
  auto translates_to_group = [&] {
    std::set<word> translated;
    for (const Spinor& s : center) translated.insert(encode(bi_add(s, center.front()), p));
    for (word x : translated)
      for (word y : translated)
        if (!translated.count(x ^ y)) return false;
    return true;
  };
  rep.bi_subalgebra_or_coset = translates_to_group();
  if (!rep.bi_subalgebra_or_coset) rep.violations.push_back("the center is not a bi-subalgebra coset");
  return rep;
}

namespace {

std::string member_list(const std::vector<Spinor>& set, int p) {
  if (set.empty()) return "{0}";
  std::ostringstream out;
  for (std::size_t k = 0; k < set.size(); ++k) out << (k ? ", " : "") << to_string(set[k], p);
  return out.str();
}

nlohmann::json side_json(const QAPartition& q, const SubspaceLabel& l) {
  nlohmann::json j;
  j["beta"] = to_digits(l.beta, q.p);
  j["epsilon"] = l.epsilon;
  j["i"] = to_digits(l.i, q.r);
  j["members"] = nlohmann::json::array();
  for (const Spinor& s : q.subspace(l)) j["members"].push_back(to_string(s, q.p));
  return j;
}

}  // namespace

std::string to_text(const QuotientStructure& s) {
  const QAPartition& q = s.partition;
  std::ostringstream out;
  out << to_string(s.flavor) << "  center " << to_string(s.center, q.p, q.r) << "  "
      << member_list(q.subspace(s.center), q.p) << "\n";
  for (const ConjugatePair& pr : s.pairs)
    out << to_string(pr.first, q.p, q.r) << "  " << member_list(q.subspace(pr.first), q.p)
        << "  |  " << member_list(q.subspace(pr.second), q.p) << "  "
        << to_string(pr.second, q.p, q.r) << "  [" << to_string(pr.type) << "]\n";
  const PairCensus c = census(s);
  out << "census  degrade-I " << c.degrade_i << "  degrade-II " << c.degrade_ii
      << "  degrade-III " << c.degrade_iii << "  regular-I " << c.regular_i << "  regular-II "
      << c.regular_ii << "  regular-III " << c.regular_iii << "  null pairs " << c.null_pairs
      << "  counted " << c.counted() << "\n";
  return out.str();
}

std::string to_json(const QuotientStructure& s) {
  const QAPartition& q = s.partition;
  nlohmann::json j;
  j["flavor"] = to_string(s.flavor);
  j["generator"] = nlohmann::json::parse(to_json(q.generator));
  j["center"] = side_json(q, s.center);
  j["pairs"] = nlohmann::json::array();
  for (const ConjugatePair& pr : s.pairs) {
    nlohmann::json row;
    row["first"] = side_json(q, pr.first);
    row["second"] = side_json(q, pr.second);
    row["type"] = to_string(pr.type);
    j["pairs"].push_back(row);
  }
  const PairCensus c = census(s);
  j["census"] = {{"degrade-I", c.degrade_i},     {"degrade-II", c.degrade_ii},
                 {"degrade-III", c.degrade_iii}, {"regular-I", c.regular_i},
                 {"regular-II", c.regular_ii},   {"regular-III", c.regular_iii},
                 {"null-pairs", c.null_pairs},   {"counted", c.counted()}};
  return j.dump(2);
}

}  // namespace qap
