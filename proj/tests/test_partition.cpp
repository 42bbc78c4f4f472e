// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qap/bitword.hpp"
#include "qap/partition.hpp"
#include "qap/render.hpp"
#include "qap/spinor.hpp"
#include "qap/subalgebra.hpp"
#include "qap/transform.hpp"

using namespace qap;

namespace {

std::vector<Spinor> parse_all(const std::vector<std::string>& names, int p) {
  std::vector<Spinor> out;
  for (const auto& n : names) out.push_back(parse_spinor(n, p));
  return out;
}

// su(8) Cartan subalgebra with alpha strings {000,100}
CartanSubalgebra c3_third_kind() {
  return CartanSubalgebra::from_members(
      parse_all({"S^000_000", "S^001_000", "S^010_000", "S^011_000", "S^100_100", "S^101_100",
                 "S^110_100", "S^111_100"},
                3),
      3);
}

std::set<std::string> names_of(const std::vector<Spinor>& set, int p) {
  std::set<std::string> out;
  for (const Spinor& s : set) out.insert(to_string(s, p));
  return out;
}

SubspaceLabel label_from(const std::string& beta, int eps, const std::string& i) {
  return {from_digits(beta), eps, i.empty() ? word{0} : from_digits(i)};
}

// membership set plus classify round trip for one conditioned subspace
void check_row(const QAPartition& q, const SubspaceLabel& l,
               const std::vector<std::string>& members) {
  CHECK(names_of(q.subspace(l), q.p) == std::set<std::string>(members.begin(), members.end()));
  for (const auto& name : members) CHECK(q.classify(parse_spinor(name, q.p)) == l);
}

}  // namespace

TEST_CASE("intrinsic rank-one partition reproduces the published table") {
  auto c = CartanSubalgebra::intrinsic(3);
  auto q = build_partition(maximal_by_label(c, from_digits("100")));
  CHECK(q.p == 3);
  CHECK(q.r == 1);
  CHECK(q.label_count() == 32);
  CHECK(q.transversal == parse_all({"S^100_000"}, 3));
  CHECK(q.duals == parse_all({"S^000_100"}, 3));
  CHECK(q.quad_shift == Spinor{0, 0});

  // center rows: the generator and its coset, conjugate sides empty
  check_row(q, label_from("000", 1, "0"),
            {"S^000_000", "S^001_000", "S^010_000", "S^011_000"});
  check_row(q, label_from("000", 1, "1"),
            {"S^100_000", "S^101_000", "S^110_000", "S^111_000"});
  CHECK(q.subspace(label_from("000", 0, "0")).empty());
  CHECK(q.subspace(label_from("000", 0, "1")).empty());

  // the degrade block beta=100 fills one side per coset
  check_row(q, label_from("100", 1, "0"),
            {"S^000_100", "S^001_100", "S^010_100", "S^011_100"});
  check_row(q, label_from("100", 0, "1"),
            {"S^100_100", "S^101_100", "S^110_100", "S^111_100"});
  CHECK(q.subspace(label_from("100", 0, "0")).empty());
  CHECK(q.subspace(label_from("100", 1, "1")).empty());

  // a regular block splits into four half-size subspaces
  check_row(q, label_from("001", 1, "0"), {"S^000_001", "S^010_001"});
  check_row(q, label_from("001", 0, "0"), {"S^001_001", "S^011_001"});
  check_row(q, label_from("001", 1, "1"), {"S^100_001", "S^110_001"});
  check_row(q, label_from("001", 0, "1"), {"S^101_001", "S^111_001"});

  CHECK(q.classify(parse_spinor("S^011_010", 3)) == label_from("010", 0, "0"));
  for (const Spinor& m : q.generator.members)
    CHECK(q.classify(m) == label_from("000", 1, "0"));
  CHECK(classify(q, parse_spinor("S^011_010", 3)) == label_from("010", 0, "0"));

  // commuting pair: the bi-additive lands in the anti-triaddition label
  Spinor s1 = parse_spinor("S^000_001", 3), s2 = parse_spinor("S^100_010", 3);
  CHECK(commutes(s1, s2));
  CHECK(q.classify(s1) == label_from("001", 1, "0"));
  CHECK(q.classify(s2) == label_from("010", 1, "1"));
  CHECK(q.classify(bi_add(s1, s2)) == anti_tri_add(q.classify(s1), q.classify(s2)));
  CHECK(q.classify(bi_add(s1, s2)) == label_from("011", 1, "1"));
}

TEST_CASE("rank-zero partition splits each K_beta into one conjugate pair") {
  auto c = CartanSubalgebra::intrinsic(3);
  auto q = build_partition(BiSubalgebra::from_members(c, c.members));
  CHECK(q.r == 0);
  CHECK(q.label_count() == 16);
  CHECK(q.transversal.empty());
  CHECK(q.duals.empty());

  check_row(q, label_from("000", 1, ""),
            {"S^000_000", "S^001_000", "S^010_000", "S^011_000", "S^100_000", "S^101_000",
             "S^110_000", "S^111_000"});
  CHECK(q.subspace(label_from("000", 0, "")).empty());
  check_row(q, label_from("001", 1, ""),
            {"S^000_001", "S^010_001", "S^100_001", "S^110_001"});
  check_row(q, label_from("001", 0, ""),
            {"S^001_001", "S^011_001", "S^101_001", "S^111_001"});
  for (word beta = 1; beta < 8; ++beta) {
    CHECK(q.subspace({beta, 1, 0}).size() == 4);
    CHECK(q.subspace({beta, 0, 0}).size() == 4);
  }
  CHECK(verify_closure(q).passed);
}

TEST_CASE("canonical rank-two partition at p = 3") {
  auto c = CartanSubalgebra::intrinsic(3);
  auto b = BiSubalgebra::from_members(c, parse_all({"S^000_000", "S^100_000"}, 3));
  auto q = build_partition(b);
  CHECK(q.r == 2);
  CHECK(q.label_count() == 64);
  CHECK(q.transversal == parse_all({"S^001_000", "S^010_000"}, 3));
  CHECK(q.duals == parse_all({"S^000_001", "S^000_010"}, 3));
  CHECK(q.quad_shift == Spinor{0, 0});

  check_row(q, label_from("100", 1, "01"), {"S^001_100"});
  check_row(q, label_from("100", 0, "01"), {"S^101_100"});

  // center cosets coincide with the coset decomposition of the generator
  auto cp = coset_partition(c, b);
  REQUIRE(cp.cosets.size() == 4);
  for (word i = 0; i < 4; ++i)
    CHECK(names_of(q.subspace({0, 1, i}), 3) == names_of(cp.cosets[i], 3));

  // the group of the generator gives the degrade labels
  CHECK(q.degrade(from_digits("000")));
  CHECK(q.degrade(from_digits("001")));
  CHECK(q.degrade(from_digits("010")));
  CHECK(q.degrade(from_digits("011")));
  CHECK_FALSE(q.degrade(from_digits("100")));
  CHECK_FALSE(q.degrade(from_digits("111")));

  auto d = q.doublet(from_digits("001"));
  CHECK(d.B.members == maximal_by_label(c, from_digits("001")).members);
  CHECK(d.B_r.members == b.members);
  auto d0 = q.doublet(0);
  CHECK(d0.B.rank == 0);
  CHECK(d0.B.members == c.members);

  // checkerboard of a degrade block
  check_row(q, label_from("001", 1, "00"), {"S^000_001", "S^100_001"});
  CHECK(q.subspace(label_from("001", 0, "00")).empty());
  check_row(q, label_from("001", 0, "01"), {"S^001_001", "S^101_001"});
  CHECK(q.subspace(label_from("001", 1, "01")).empty());
  check_row(q, label_from("001", 1, "10"), {"S^010_001", "S^110_001"});
  check_row(q, label_from("001", 0, "11"), {"S^011_001", "S^111_001"});
}

TEST_CASE("third-kind rank-zero partition matches the published figure") {
  auto c = c3_third_kind();
  auto q = build_partition(BiSubalgebra::from_members(c, c.members));
  check_row(q, label_from("000", 1, ""),
            {"S^000_000", "S^001_000", "S^010_000", "S^011_000", "S^100_100", "S^101_100",
             "S^110_100", "S^111_100"});
  check_row(q, label_from("100", 1, ""),
            {"S^000_100", "S^001_100", "S^010_100", "S^011_100"});
  check_row(q, label_from("100", 0, ""),
            {"S^100_000", "S^101_000", "S^110_000", "S^111_000"});
  check_row(q, label_from("001", 1, ""),
            {"S^000_001", "S^010_001", "S^100_101", "S^110_101"});
  check_row(q, label_from("001", 0, ""),
            {"S^001_001", "S^011_001", "S^101_101", "S^111_101"});
  check_row(q, label_from("101", 1, ""),
            {"S^101_001", "S^111_001", "S^000_101", "S^010_101"});
  check_row(q, label_from("101", 0, ""),
            {"S^100_001", "S^110_001", "S^001_101", "S^011_101"});
  check_row(q, label_from("010", 1, ""),
            {"S^000_010", "S^001_010", "S^100_110", "S^101_110"});
  check_row(q, label_from("010", 0, ""),
            {"S^010_010", "S^011_010", "S^110_110", "S^111_110"});
  check_row(q, label_from("110", 1, ""),
            {"S^110_010", "S^111_010", "S^000_110", "S^001_110"});
  check_row(q, label_from("110", 0, ""),
            {"S^100_010", "S^101_010", "S^010_110", "S^011_110"});
  check_row(q, label_from("011", 1, ""),
            {"S^000_011", "S^011_011", "S^100_111", "S^111_111"});
  check_row(q, label_from("011", 0, ""),
            {"S^001_011", "S^010_011", "S^101_111", "S^110_111"});
  check_row(q, label_from("111", 1, ""),
            {"S^101_011", "S^110_011", "S^000_111", "S^011_111"});
  check_row(q, label_from("111", 0, ""),
            {"S^100_011", "S^111_011", "S^001_111", "S^010_111"});
}

TEST_CASE("third-kind rank-one partition matches the published figure") {
  auto c = c3_third_kind();
  auto b = BiSubalgebra::from_members(
      c, parse_all({"S^000_000", "S^001_000", "S^010_000", "S^011_000"}, 3));
  auto q = build_partition(b);
  CHECK(q.transversal == parse_all({"S^100_100"}, 3));
  CHECK(q.duals == parse_all({"S^000_100"}, 3));
  CHECK(q.quad_shift == parse_spinor("S^000_100", 3));

  check_row(q, label_from("000", 1, "0"),
            {"S^000_000", "S^001_000", "S^010_000", "S^011_000"});
  check_row(q, label_from("000", 1, "1"),
            {"S^100_100", "S^101_100", "S^110_100", "S^111_100"});

  check_row(q, label_from("100", 1, "0"),
            {"S^000_100", "S^001_100", "S^010_100", "S^011_100"});
  check_row(q, label_from("100", 0, "1"),
            {"S^100_000", "S^101_000", "S^110_000", "S^111_000"});
  CHECK(q.subspace(label_from("100", 0, "0")).empty());
  CHECK(q.subspace(label_from("100", 1, "1")).empty());

  check_row(q, label_from("001", 1, "0"), {"S^000_001", "S^010_001"});
  check_row(q, label_from("001", 0, "0"), {"S^001_001", "S^011_001"});
  check_row(q, label_from("001", 1, "1"), {"S^100_101", "S^110_101"});
  check_row(q, label_from("001", 0, "1"), {"S^101_101", "S^111_101"});

  check_row(q, label_from("101", 1, "0"), {"S^000_101", "S^010_101"});
  check_row(q, label_from("101", 0, "0"), {"S^001_101", "S^011_101"});
  check_row(q, label_from("101", 1, "1"), {"S^101_001", "S^111_001"});
  check_row(q, label_from("101", 0, "1"), {"S^100_001", "S^110_001"});

  check_row(q, label_from("010", 1, "0"), {"S^000_010", "S^001_010"});
  check_row(q, label_from("010", 0, "0"), {"S^010_010", "S^011_010"});
  check_row(q, label_from("010", 1, "1"), {"S^100_110", "S^101_110"});
  check_row(q, label_from("010", 0, "1"), {"S^110_110", "S^111_110"});

  check_row(q, label_from("110", 1, "0"), {"S^000_110", "S^001_110"});
  check_row(q, label_from("110", 0, "0"), {"S^010_110", "S^011_110"});
  check_row(q, label_from("110", 1, "1"), {"S^110_010", "S^111_010"});
  check_row(q, label_from("110", 0, "1"), {"S^100_010", "S^101_010"});

  check_row(q, label_from("011", 1, "0"), {"S^000_011", "S^011_011"});
  check_row(q, label_from("011", 0, "0"), {"S^001_011", "S^010_011"});
  // sides of the (011; 1) pair are forced by closure against the (011; 0) row
  check_row(q, label_from("011", 1, "1"), {"S^100_111", "S^111_111"});
  check_row(q, label_from("011", 0, "1"), {"S^101_111", "S^110_111"});

  check_row(q, label_from("111", 1, "0"), {"S^000_111", "S^011_111"});
  check_row(q, label_from("111", 0, "0"), {"S^001_111", "S^010_111"});
  check_row(q, label_from("111", 1, "1"), {"S^101_011", "S^110_011"});
  check_row(q, label_from("111", 0, "1"), {"S^100_011", "S^111_011"});

  CHECK(verify_closure(q).passed);
}

TEST_CASE("third-kind rank-two partition matches the published figure") {
  auto c = c3_third_kind();
  auto b = BiSubalgebra::from_members(c, parse_all({"S^000_000", "S^001_000"}, 3));
  auto q = build_partition(b);
  CHECK(q.transversal == parse_all({"S^010_000", "S^100_100"}, 3));
  CHECK(q.duals == parse_all({"S^000_010", "S^000_100"}, 3));
  CHECK(q.quad_shift == parse_spinor("S^000_100", 3));

  check_row(q, label_from("000", 1, "00"), {"S^000_000", "S^001_000"});
  check_row(q, label_from("000", 1, "01"), {"S^010_000", "S^011_000"});
  check_row(q, label_from("000", 1, "10"), {"S^100_100", "S^101_100"});
  check_row(q, label_from("000", 1, "11"), {"S^110_100", "S^111_100"});

  check_row(q, label_from("100", 1, "00"), {"S^000_100", "S^001_100"});
  check_row(q, label_from("100", 1, "01"), {"S^010_100", "S^011_100"});
  check_row(q, label_from("100", 0, "10"), {"S^100_000", "S^101_000"});
  check_row(q, label_from("100", 0, "11"), {"S^110_000", "S^111_000"});
  CHECK(q.subspace(label_from("100", 0, "00")).empty());
  CHECK(q.subspace(label_from("100", 0, "01")).empty());
  CHECK(q.subspace(label_from("100", 1, "10")).empty());
  CHECK(q.subspace(label_from("100", 1, "11")).empty());

  check_row(q, label_from("010", 1, "00"), {"S^000_010", "S^001_010"});
  check_row(q, label_from("010", 0, "01"), {"S^010_010", "S^011_010"});
  check_row(q, label_from("010", 1, "10"), {"S^100_110", "S^101_110"});
  check_row(q, label_from("010", 0, "11"), {"S^110_110", "S^111_110"});

  check_row(q, label_from("110", 1, "00"), {"S^000_110", "S^001_110"});
  check_row(q, label_from("110", 0, "01"), {"S^010_110", "S^011_110"});
  check_row(q, label_from("110", 0, "10"), {"S^100_010", "S^101_010"});
  check_row(q, label_from("110", 1, "11"), {"S^110_010", "S^111_010"});

  check_row(q, label_from("001", 1, "00"), {"S^000_001"});
  check_row(q, label_from("001", 0, "00"), {"S^001_001"});
  check_row(q, label_from("001", 1, "01"), {"S^010_001"});
  check_row(q, label_from("001", 0, "01"), {"S^011_001"});
  check_row(q, label_from("001", 1, "10"), {"S^100_101"});
  check_row(q, label_from("001", 0, "10"), {"S^101_101"});
  check_row(q, label_from("001", 1, "11"), {"S^110_101"});
  check_row(q, label_from("001", 0, "11"), {"S^111_101"});

  check_row(q, label_from("101", 1, "00"), {"S^000_101"});
  check_row(q, label_from("101", 0, "00"), {"S^001_101"});
  check_row(q, label_from("101", 1, "01"), {"S^010_101"});
  check_row(q, label_from("101", 0, "01"), {"S^011_101"});
  check_row(q, label_from("101", 1, "10"), {"S^101_001"});
  check_row(q, label_from("101", 0, "10"), {"S^100_001"});
  check_row(q, label_from("101", 1, "11"), {"S^111_001"});
  check_row(q, label_from("101", 0, "11"), {"S^110_001"});

  check_row(q, label_from("011", 1, "00"), {"S^000_011"});
  check_row(q, label_from("011", 0, "00"), {"S^001_011"});
  check_row(q, label_from("011", 1, "01"), {"S^011_011"});
  check_row(q, label_from("011", 0, "01"), {"S^010_011"});
  check_row(q, label_from("011", 1, "10"), {"S^100_111"});
  check_row(q, label_from("011", 0, "10"), {"S^101_111"});
  check_row(q, label_from("011", 1, "11"), {"S^111_111"});
  check_row(q, label_from("011", 0, "11"), {"S^110_111"});

  check_row(q, label_from("111", 1, "00"), {"S^000_111"});
  check_row(q, label_from("111", 0, "00"), {"S^001_111"});
  check_row(q, label_from("111", 1, "01"), {"S^011_111"});
  check_row(q, label_from("111", 0, "01"), {"S^010_111"});
  // sides of the (111; 10) pair are forced by closure against the (111; 00) row
  check_row(q, label_from("111", 1, "10"), {"S^101_011"});
  check_row(q, label_from("111", 0, "10"), {"S^100_011"});
  check_row(q, label_from("111", 1, "11"), {"S^110_011"});
  check_row(q, label_from("111", 0, "11"), {"S^111_011"});

  CHECK(q.classify(parse_spinor("S^111_110", 3)) == label_from("010", 0, "11"));
  CHECK(verify_closure(q).passed);
}

TEST_CASE("tri-addition and anti-triaddition act componentwise") {
  SubspaceLabel l1 = label_from("001", 1, "0"), l2 = label_from("010", 1, "1");
  CHECK(tri_add(l1, l2) == label_from("011", 0, "1"));
  CHECK(anti_tri_add(l1, l2) == label_from("011", 1, "1"));
  SubspaceLabel id{0, 0, 0};
  CHECK(tri_add(l1, id) == l1);
  CHECK(tri_add(l1, l1) == id);
  CHECK(anti_tri_add(anti_tri_add(l1, l2), l2) == l1);

  CHECK(to_string(label_from("000", 1, "0"), 3, 1) == "B^[1,0]");
  CHECK(to_string(label_from("000", 1, "1"), 3, 1) == "B^[1,1]");
  CHECK(to_string(label_from("000", 0, "1"), 3, 1) == "{0}");
  CHECK(to_string(label_from("001", 1, "1"), 3, 1) == "W(B_001, B^[1]; 1)");
  CHECK(to_string(label_from("001", 0, "1"), 3, 1) == "Wh(B_001, B^[1]; 1)");
  CHECK(to_string(label_from("000", 1, ""), 3, 0) == "B^[0]");
  CHECK(to_string(label_from("011", 0, ""), 3, 0) == "Wh(B_011, B^[0])");
}

TEST_CASE("label-group law, sizes, and closure hold for every partition at p <= 3") {
  long partitions_checked = 0;
  for (int p = 2; p <= 3; ++p) {
    for (const auto& c : enumerate_cartan_subalgebras(p)) {
      for (int r = 0; r < p; ++r) {
        for (const auto& b : enumerate_bi_subalgebras(c, r)) {
          auto q = build_partition(b);
          ++partitions_checked;
          auto report = verify_closure(q);
          REQUIRE_MESSAGE(report.passed,
                          (report.violations.empty() ? "" : report.violations.front()));
          CHECK(report.pairs_checked > 0);

          std::size_t total = 0;
          const std::size_t full = std::size_t{1} << (p - r);
          for (std::size_t index = 0; index < q.label_count(); ++index) {
            auto l = q.unpack(index);
            auto size = q.subspace(l).size();
            total += size;
            if (l.beta == 0) {
              CHECK(size == (l.epsilon == 1 ? full : 0));
            } else if (q.degrade(l.beta)) {
              SubspaceLabel partner{l.beta, l.epsilon ^ 1, l.i};
              CHECK((size == 0 || size == full));
              CHECK(size + q.subspace(partner).size() == full);
            } else {
              CHECK(size == full / 2);
            }
          }
          CHECK(total == (std::size_t{1} << (2 * p)));

          auto cp = coset_partition(c, b);
          for (word i = 0; i < (word{1} << r); ++i)
            CHECK(names_of(q.subspace({0, 1, i}), p) == names_of(cp.cosets[i], p));
        }
      }
    }
  }
  CHECK(partitions_checked == 15 * 4 + 135 * 15);
}

TEST_CASE("verify_closure reports a corrupted table") {
  auto c = CartanSubalgebra::intrinsic(3);
  auto q = build_partition(maximal_by_label(c, from_digits("100")));
  Spinor moved = parse_spinor("S^100_001", 3);
  auto& from = q.table[q.pack(label_from("001", 1, "1"))];
  auto& to = q.table[q.pack(label_from("001", 0, "1"))];
  from.erase(std::find(from.begin(), from.end(), moved));
  to.push_back(moved);

  auto report = verify_closure(q);
  CHECK_FALSE(report.passed);
  CHECK(!report.violations.empty());
  CHECK(report.violations.size() <= 32);
}

TEST_CASE("the adopted inclusion convention holds for sampled pairs at p = 4") {
  std::mt19937 rng(20260823u);
  std::vector<CartanSubalgebra> algebras;
  algebras.push_back(CartanSubalgebra::intrinsic(4));
  algebras.push_back(CartanSubalgebra::from_members(
      span(parse_all({"S^1000_1000", "S^0100_0100", "S^0010_0000", "S^0001_0000"}, 4), 4), 4));

  long samples = 0;
  for (const auto& c : algebras) {
    auto b = BiSubalgebra::from_members(
        c, span(parse_all({"S^0010_0000", "S^0001_0000"}, 4), 4));
    REQUIRE(b.rank == 2);
    auto q = build_partition(b);
    auto cp = coset_partition(c, b);
    std::uniform_int_distribution<word> beta_pick(1, 15), i_pick(0, 3);
    std::uniform_int_distribution<int> eps_pick(0, 1);
    for (int trial = 0; trial < 10000; ++trial) {
      SubspaceLabel l1{beta_pick(rng), eps_pick(rng), i_pick(rng)};
      SubspaceLabel l2{l1.beta, eps_pick(rng), i_pick(rng)};
      const auto& row1 = q.subspace(l1);
      const auto& row2 = q.subspace(l2);
      if (row1.empty() || row2.empty()) continue;
      std::uniform_int_distribution<std::size_t> m1(0, row1.size() - 1), m2(0, row2.size() - 1);
      Spinor s = row1[m1(rng)], t = row2[m2(rng)];
      if (s == t) continue;
      Spinor u = bi_add(s, t);
      word l = l1.i ^ l2.i;
      REQUIRE(c.contains(u));
      CHECK(std::count(cp.cosets[l].begin(), cp.cosets[l].end(), u) == 1);
      // same side sums into B_beta, opposite sides into its complement
      bool in_b_beta = dot(c.label_of(u), l1.beta) == 0;
      CHECK(in_b_beta == (l1.epsilon == l2.epsilon));
      ++samples;
    }
  }
  CHECK(samples >= 10000);
}

TEST_CASE("partition renderers print the conjugate-pair layout") {
  auto c = CartanSubalgebra::intrinsic(3);
  auto q = build_partition(maximal_by_label(c, from_digits("100")));

  auto txt = to_text(q);
  CHECK(txt.find("B^[1,0]  S^000_000, S^001_000, S^010_000, S^011_000") != std::string::npos);
  CHECK(txt.find("B^[1,1]  S^100_000, S^101_000, S^110_000, S^111_000") != std::string::npos);
  CHECK(txt.find("W(B_001, B^[1]; 1)  S^100_001, S^110_001  |  "
                 "S^101_001, S^111_001  Wh(B_001, B^[1]; 1)") != std::string::npos);
  CHECK(txt.find("{0}") != std::string::npos);
  CHECK(txt.find("W(B_100") < txt.find("W(B_001"));  // degrade block first

  auto parsed = nlohmann::json::parse(to_json(q));
  CHECK(parsed["generator"]["rank"] == 1);
  REQUIRE(parsed["rows"].is_array());
  CHECK(parsed["rows"].size() == 28);  // non-empty subspaces only
  bool found = false;
  for (const auto& row : parsed["rows"]) {
    CHECK(!row["members"].empty());
    if (row["beta"] == "001" && row["epsilon"] == 1 && row["i"] == "1") {
      CHECK(row["members"] == nlohmann::json::array({"S^100_001", "S^110_001"}));
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("transform sequences carry partitions onto partitions") {
  auto c = CartanSubalgebra::intrinsic(2);
  auto b = maximal_by_label(c, from_digits("10"));
  auto q = build_partition(b);

  TransformSequence seq;
  seq.p = 2;
  seq.steps = {SRotation{parse_spinor("S^01_01", 2), Angle::plus_quarter_pi},
               BasicTransformation{from_digits("10"), from_digits("11")},
               SRotation{parse_spinor("S^11_10", 2), Angle::minus_quarter_pi},
               SRotation{parse_spinor("S^10_01", 2), Angle::plus_half_pi}};

  std::vector<Spinor> c_image, b_image;
  for (const Spinor& m : c.members) c_image.push_back(seq.apply(m).s);
  for (const Spinor& m : b.members) b_image.push_back(seq.apply(m).s);
  std::sort(c_image.begin(), c_image.end());
  std::sort(b_image.begin(), b_image.end());
  auto q2 = build_partition(
      BiSubalgebra::from_members(CartanSubalgebra::from_members(c_image, 2), b_image));

  // conditioned subspaces map onto conditioned subspaces, sizes intact
  std::map<std::size_t, std::size_t> images;
  for (std::size_t index = 0; index < q.label_count(); ++index)
    for (const Spinor& s : q.subspace(q.unpack(index))) {
      auto target = q2.pack(q2.classify(seq.apply(s).s));
      auto [it, inserted] = images.emplace(index, target);
      CHECK(it->second == target);
    }
  std::set<std::size_t> hit;
  for (const auto& [source, target] : images) {
    CHECK(hit.insert(target).second);
    CHECK(q.subspace(q.unpack(source)).size() == q2.subspace(q2.unpack(target)).size());
  }
}

TEST_CASE("construction and lookup reject invalid input") {
  auto c = CartanSubalgebra::intrinsic(3);
  // a rank-p generator leaves no conditioned subspaces
  CHECK_THROWS_AS(build_partition(BiSubalgebra::from_members(c, {Spinor{0, 0}})),
                  std::invalid_argument);
  auto q = build_partition(maximal_by_label(c, from_digits("100")));
  CHECK_THROWS_AS(q.classify(parse_spinor("S^1000_0000", 4)), std::invalid_argument);
  CHECK_THROWS_AS(q.subspace({word{1} << 3, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(q.subspace({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(q.unpack(q.label_count()), std::invalid_argument);
  // width guard
  auto c9 = CartanSubalgebra::intrinsic(9);
  CHECK_THROWS_AS(build_partition(maximal_by_label(c9, word{1} << 8)), std::invalid_argument);
}
