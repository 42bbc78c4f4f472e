// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0

#include "qap/render.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "qap/bitword.hpp"

namespace qap {

namespace {

std::string member_list(const std::vector<Spinor>& set, int p) {
  if (set.empty()) return "{0}";
  std::ostringstream out;
  for (std::size_t k = 0; k < set.size(); ++k) out << (k ? ", " : "") << to_string(set[k], p);
  return out.str();
}

// degrade blocks lead, then regular blocks, each ascending
std::vector<word> ordered_betas(const QAPartition& q) {
  std::vector<word> degrade, regular;
  for (word beta = 1; beta < (word{1} << q.p); ++beta)
    (q.degrade(beta) ? degrade : regular).push_back(beta);
  degrade.insert(degrade.end(), regular.begin(), regular.end());
  return degrade;
}

}  // namespace

std::string to_text(const QAPartition& q) {
  std::ostringstream out;
  for (word i = 0; i < (word{1} << q.r); ++i)
    out << to_string(SubspaceLabel{0, 1, i}, q.p, q.r) << "  "
        << member_list(q.subspace({0, 1, i}), q.p) << "\n";
  for (word beta : ordered_betas(q))
    for (word i = 0; i < (word{1} << q.r); ++i)
      out << to_string(SubspaceLabel{beta, 1, i}, q.p, q.r) << "  "
          << member_list(q.subspace({beta, 1, i}), q.p) << "  |  "
          << member_list(q.subspace({beta, 0, i}), q.p) << "  "
          << to_string(SubspaceLabel{beta, 0, i}, q.p, q.r) << "\n";
  return out.str();
}

std::string to_json(const QAPartition& q) {
  nlohmann::json j;
  j["generator"] = nlohmann::json::parse(to_json(q.generator));
  j["rows"] = nlohmann::json::array();
  auto add_row = [&](const SubspaceLabel& l) {
    const auto& members = q.subspace(l);
    if (members.empty()) return;
    nlohmann::json row;
    row["beta"] = to_digits(l.beta, q.p);
    row["epsilon"] = l.epsilon;
    row["i"] = to_digits(l.i, q.r);
    row["members"] = nlohmann::json::array();
    for (const Spinor& s : members) row["members"].push_back(to_string(s, q.p));
    j["rows"].push_back(row);
  };
  for (word i = 0; i < (word{1} << q.r); ++i) add_row({0, 1, i});
  for (word beta : ordered_betas(q))
    for (word i = 0; i < (word{1} << q.r); ++i) {
      add_row({beta, 1, i});
      add_row({beta, 0, i});
    }
  return j.dump(2);
}

}  // namespace qap
