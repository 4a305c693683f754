#pragma once

#include "momctl/real.hpp"

#include <cstddef>
#include <vector>

namespace momctl {

// Dense square/rectangular matrix of Reals, row-major.
class Matrix {
public:
	Matrix() : rows_(0), cols_(0) {}
	Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, Real(0)) {}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	Real& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
	const Real& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

private:
	std::size_t rows_, cols_;
	std::vector<Real> d_;
};

// Symmetric LDL^T factorization with diagonal pivoting: P A P^T = L D L^T
// with unit lower-triangular L.  Intended for (numerically) positive
// definite matrices; a nonpositive pivot raises FactorizationError.
struct LdltFactor {
	Matrix l;                       // unit lower triangle (diagonal implied 1)
	std::vector<Real> d;            // pivots
	std::vector<std::size_t> perm;  // perm[i] = original index of pivoted row i
};

LdltFactor ldlt_factor(const Matrix& a);
std::vector<Real> ldlt_solve(const LdltFactor& f, const std::vector<Real>& b);

// 1-norm condition estimate ||A||_1 * ||A^{-1}||_1 (the inverse norm is
// exact via n solves; cheap at the sizes used here).
Real condition_estimate(const Matrix& a, const LdltFactor& f);

// Cyclic Jacobi eigendecomposition of a symmetric matrix: A = V diag(w) V^T,
// columns of V orthonormal eigenvectors.
void jacobi_eigensym(const Matrix& a, std::vector<Real>& w, Matrix& v,
                     std::size_t max_sweeps = 50);

Real dot(const std::vector<Real>& x, const std::vector<Real>& y);
Real norm_l2(const std::vector<Real>& x);
std::vector<Real> mat_vec(const Matrix& a, const std::vector<Real>& x);

}  // namespace momctl
