// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0

#include "qap/partition.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qap/bitword.hpp"

namespace qap {

namespace {

int pairing(const Spinor& a, const Spinor& b) {
  return dot(a.zeta, b.alpha) ^ dot(b.zeta, a.alpha);
}

// Functionals s -> <s, d> are solved for d with the unknown packed as
// (alpha << p) | zeta, so the eliminator spends alpha bits first and free
// zeta bits stay zero.  Whenever a pure zeta-functional exists (d = S^0_delta)
// it is chosen, which is what the published tables use.
Spinor solve_functional(const std::vector<word>& rows, const std::vector<int>& rhs, int p) {
  auto w = gf2_solve(rows, rhs, 2 * p);
  if (!w) throw std::logic_error("inconsistent label functional");
  return {*w & ((word{1} << p) - 1), *w >> p};
}

word functional_row(const Spinor& x, int p) { return (x.zeta << p) | x.alpha; }

}  // namespace

SubspaceLabel tri_add(const SubspaceLabel& l1, const SubspaceLabel& l2) {
  return {l1.beta ^ l2.beta, l1.epsilon ^ l2.epsilon, l1.i ^ l2.i};
}

SubspaceLabel anti_tri_add(const SubspaceLabel& l1, const SubspaceLabel& l2) {
  return {l1.beta ^ l2.beta, 1 ^ l1.epsilon ^ l2.epsilon, l1.i ^ l2.i};
}

std::string to_string(const SubspaceLabel& l, int p, int r) {
  std::ostringstream out;
  if (l.beta == 0) {
    if (l.epsilon == 0) return "{0}";
    out << "B^[" << r << (r > 0 ? "," + to_digits(l.i, r) : "") << "]";
    return out.str();
  }
  out << (l.epsilon == 1 ? "W" : "Wh") << "(B_" << to_digits(l.beta, p) << ", B^[" << r << "]";
  if (r > 0) out << "; " << to_digits(l.i, r);
  out << ")";
  return out.str();
}

std::size_t QAPartition::pack(const SubspaceLabel& l) const {
  if (l.beta >= (word{1} << p) || l.i >= (word{1} << r) || (l.epsilon & ~1))
    throw std::invalid_argument("label out of range for this partition");
  return (std::size_t{l.beta} << (r + 1)) | (std::size_t(l.epsilon) << r) | l.i;
}

SubspaceLabel QAPartition::unpack(std::size_t index) const {
  if (index >= table.size()) throw std::invalid_argument("label index out of range");
  return {word(index >> (r + 1)), int((index >> r) & 1), word(index) & ((word{1} << r) - 1)};
}

const std::vector<Spinor>& QAPartition::subspace(const SubspaceLabel& l) const {
  return table[pack(l)];
}

SubspaceLabel QAPartition::classify(const Spinor& s) const {
  if (s.zeta >= (word{1} << p) || s.alpha >= (word{1} << p))
    throw std::invalid_argument("spinor too wide for this partition");
  SubspaceLabel l;
  l.beta = 0;
  const auto& rows = generator.parent.basis;
  for (std::size_t k = 0; k < rows.size(); ++k)
    l.beta |= word(pairing(s, rows[k])) << (p - 1 - int(k));
  l.i = 0;
  for (int k = 0; k < r; ++k) l.i |= word(pairing(s, duals[k])) << k;
  l.epsilon = 1 ^ dot(s.zeta, s.alpha) ^ pairing(s, quad_shift);
  return l;
}

bool QAPartition::degrade(word beta) const {
  auto labels = generator.dual_labels();
  return std::find(labels.begin(), labels.end(), beta) != labels.end();
}

Doublet QAPartition::doublet(word beta) const {
  const CartanSubalgebra& c = generator.parent;
  if (beta == 0) return {BiSubalgebra::from_members(c, c.members), generator};
  return {maximal_by_label(c, beta), generator};
}

QAPartition build_partition(const BiSubalgebra& b_r) {
  const CartanSubalgebra& c = b_r.parent;
  const int p = c.p;
  const int r = b_r.rank;
  if (p > 8) throw std::invalid_argument("width too large for partition tables");
  if (r >= p) throw std::invalid_argument("a rank-p generator leaves no conditioned subspaces");

  QAPartition q;
  q.generator = b_r;
  q.p = p;
  q.r = r;

  // greedy transversal of B^[r] in C by ascending encode
  Gf2Span reached(2 * p);
  for (const Spinor& m : b_r.members) reached.insert(encode(m, p));
  for (const Spinor& m : c.members) {
    if (reached.contains(encode(m, p))) continue;
    q.transversal.push_back(m);
    reached.insert(encode(m, p));
  }

  // coset duals: <d_k, B^[r]> = 0 and <d_k, t_j> = delta_kj
  std::vector<word> rows;
  for (const Spinor& b : closed_basis(b_r.members, p)) rows.push_back(functional_row(b, p));
  std::size_t nfixed = rows.size();
  for (const Spinor& t : q.transversal) rows.push_back(functional_row(t, p));
  for (int k = 0; k < r; ++k) {
    std::vector<int> rhs(rows.size(), 0);
    rhs[nfixed + k] = 1;
    q.duals.push_back(solve_functional(rows, rhs, p));
  }

  // quadratic shift: <g, c> = zeta_c.alpha_c over the echelon basis, so that
  // eps is 1 on all of C
  std::vector<word> crows;
  std::vector<int> crhs;
  for (const Spinor& row : c.basis) {
    crows.push_back(functional_row(row, p));
    crhs.push_back(dot(row.zeta, row.alpha));
  }
  q.quad_shift = solve_functional(crows, crhs, p);

  q.table.assign(std::size_t{1} << (p + r + 1), {});
  for (word v = 0; v < (word{1} << (2 * p)); ++v) {
    Spinor s = decode(v, p);
    q.table[q.pack(q.classify(s))].push_back(s);
  }
  return q;
}

SubspaceLabel classify(const QAPartition& q, const Spinor& s) { return q.classify(s); }

ClosureReport verify_closure(const QAPartition& q) {
  ClosureReport report;
  const int p = q.p;
  const word total = word{1} << (2 * p);
  auto complain = [&](const std::string& what) {
    report.passed = false;
    if (report.violations.size() < 32) report.violations.push_back(what);
  };
  auto label_text = [&](const SubspaceLabel& l) { return to_string(l, p, q.r); };

  // cache labels by encode
  std::vector<SubspaceLabel> labels(total);
  for (word v = 0; v < total; ++v) labels[v] = q.classify(decode(v, p));

  // (1)+(2): product labels over all unordered pairs
  for (word a = 0; a < total; ++a) {
    for (word b = a + 1; b < total; ++b) {
      Spinor s1 = decode(a, p), s2 = decode(b, p);
      SubspaceLabel expect = commutes(s1, s2) ? anti_tri_add(labels[a], labels[b])
                                              : tri_add(labels[a], labels[b]);
      ++report.pairs_checked;
      if (labels[a ^ b] == expect) continue;
      std::ostringstream out;
      out << to_string(s1, p) << " * " << to_string(s2, p) << " lands in "
          << label_text(labels[a ^ b]) << ", expected " << label_text(expect);
      complain(out.str());
    }
  }

  // (3): every conditioned subspace is abelian
  for (std::size_t index = 0; index < q.table.size(); ++index) {
    const auto& row = q.table[index];
    for (std::size_t x = 0; x < row.size(); ++x)
      for (std::size_t y = x + 1; y < row.size(); ++y) {
        ++report.pairs_checked;
        if (commutes(row[x], row[y])) continue;
        complain(label_text(q.unpack(index)) + " is not abelian: " + to_string(row[x], p) +
                 " vs " + to_string(row[y], p));
      }
  }

  // (4): conjugate-partition triples (W(i), Wh(j), B^[r,l]) with l = i + j
  const word nbeta = word{1} << p;
  const word ni = word{1} << q.r;
  auto check_into = [&](const std::vector<Spinor>& lhs, const std::vector<Spinor>& rhs,
                        const SubspaceLabel& want) {
    for (const Spinor& s : lhs)
      for (const Spinor& t : rhs) {
        if (commutes(s, t)) continue;
        ++report.pairs_checked;
        word v = encode(s, p) ^ encode(t, p);
        if (labels[v] == want) continue;
        complain("[" + to_string(s, p) + ", " + to_string(t, p) + "] escapes " +
                 label_text(want));
      }
  };
  for (word beta = 1; beta < nbeta; ++beta)
    for (word i = 0; i < ni; ++i)
      for (word j = 0; j < ni; ++j) {
        word l = i ^ j;
        const auto& w = q.subspace({beta, 1, i});
        const auto& wh = q.subspace({beta, 0, j});
        const auto& center = q.subspace({0, 1, l});
        check_into(w, center, {beta, 0, j});
        check_into(wh, center, {beta, 1, i});
        check_into(w, wh, {0, 1, l});
      }
  return report;
}

}  // namespace qap
