// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0

#include "qap/matrix_oracle.hpp"

#include <stdexcept>
#include <vector>

namespace qap {

namespace {
const cplx I1(0.0, 1.0);

Mat one_qubit(int z, int a) {
  Mat m(2, 2);
  if (z == 0 && a == 0) m << 1, 0, 0, 1;
  if (z == 1 && a == 0) m << 1, 0, 0, -1;
  if (z == 0 && a == 1) m << 0, 1, 1, 0;
  if (z == 1 && a == 1) m << 0, -I1, I1, 0;
  return m;
}
}  // namespace

Mat kronecker(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat realize(Spinor s, int p) {
  if (p < 1 || p > 6) throw std::invalid_argument("matrix realization needs 1 <= p <= 6");
  Mat m = one_qubit(digit(s.zeta, 1, p), digit(s.alpha, 1, p));
  for (int k = 2; k <= p; ++k) m = kronecker(m, one_qubit(digit(s.zeta, k, p), digit(s.alpha, k, p)));
  return m;
}

Mat realize(const SignedSpinor& v, int p) { return double(v.sign) * realize(v.s, p); }

Mat realize(const PhasedSpinor& v, int p) {
  static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return ipow[v.phase & 3] * realize(v.s, p);
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }
Mat anticommutator(const Mat& a, const Mat& b) { return a * b + b * a; }
Mat conjugate(const Mat& u, const Mat& a) { return u * a * u.adjoint(); }
cplx trace_inner(const Mat& a, const Mat& b) { return (a.adjoint() * b).trace(); }

bool approx_zero(const Mat& a, double tol) { return a.cwiseAbs().maxCoeff() < tol; }

bool approx_equal(const Mat& a, const Mat& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && approx_zero(a - b, tol);
}

bool equal_up_to_phase(const Mat& a, const Mat& b, double tol, cplx* phase) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  double best = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (std::abs(a(i, j)) > best) {
        best = std::abs(a(i, j));
        r = i;
        c = j;
      }
  if (best < tol) return approx_zero(b, tol);
  cplx q = b(r, c) / a(r, c);
  if (std::abs(std::abs(q) - 1.0) > tol) return false;
  if (!approx_equal(q * a, b, tol)) return false;
  if (phase) *phase = q;
  return true;
}

bool is_unitary(const Mat& u, double tol) {
  return approx_equal(u.adjoint() * u, Mat::Identity(u.rows(), u.cols()), tol);
}

bool is_hermitian(const Mat& a, double tol) { return approx_equal(a, a.adjoint(), tol); }

Mat exponential_srotation(Spinor s, double theta, int p) {
  Eigen::Index n = Eigen::Index(1) << p;
  return std::cos(theta) * Mat::Identity(n, n) + I1 * std::sin(theta) * realize(s, p);
}

int span_rank(const std::vector<Mat>& mats, double threshold) {
  if (mats.empty()) return 0;
  Eigen::Index dim = mats[0].rows() * mats[0].cols();
  Mat stacked(dim, static_cast<Eigen::Index>(mats.size()));
  for (size_t k = 0; k < mats.size(); ++k) {
    Mat m = mats[k];
    stacked.col(static_cast<Eigen::Index>(k)) = Eigen::Map<Eigen::VectorXcd>(m.data(), dim);
  }
  Eigen::JacobiSVD<Mat> svd(stacked);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > threshold) ++rank;
  return rank;
}

}  // namespace qap
