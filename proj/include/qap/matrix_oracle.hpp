// Copyright 2026 The qap Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense complex-matrix backend: the independent ground truth every symbolic
// claim is checked against.  Dimensions stay at or below 64; nothing here is
// performance-sensitive.

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qap/spinor.hpp"

namespace qap {

using Mat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

Mat realize(Spinor s, int p);  // hermitian (-i)^|zeta AND alpha| Z^zeta X^alpha; p <= 6
Mat realize(const SignedSpinor& v, int p);
Mat realize(const PhasedSpinor& v, int p);

Mat kronecker(const Mat& a, const Mat& b);
Mat commutator(const Mat& a, const Mat& b);      // AB - BA
Mat anticommutator(const Mat& a, const Mat& b);  // AB + BA
Mat conjugate(const Mat& u, const Mat& a);       // U A U^dagger
cplx trace_inner(const Mat& a, const Mat& b);    // tr(A^dagger B)

bool approx_zero(const Mat& a, double tol);
bool approx_equal(const Mat& a, const Mat& b, double tol);
// equal up to one unit scalar; reports the scalar through *phase if non-null
bool equal_up_to_phase(const Mat& a, const Mat& b, double tol, cplx* phase = nullptr);
bool is_unitary(const Mat& u, double tol);
bool is_hermitian(const Mat& a, double tol);

// exp(i theta (-i)^(zeta.alpha) S^zeta_alpha) = cos(theta) I + i sin(theta) * realize(s)
Mat exponential_srotation(Spinor s, double theta, int p);

// numerical rank of the column span of a list of matrices (flattened), with
// singular values below threshold treated as zero
int span_rank(const std::vector<Mat>& mats, double threshold);

}  // namespace qap
