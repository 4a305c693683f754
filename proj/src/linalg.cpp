#include "momctl/linalg.hpp"

#include "momctl/errors.hpp"

#include <cmath>
#include <string>

namespace momctl {

Real dot(const std::vector<Real>& x, const std::vector<Real>& y) {
	Real s = 0;
	for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
	return s;
}

Real norm_l2(const std::vector<Real>& x) {
	Real s = 0;
	for (const Real& v : x) s += v * v;
	return sqrt(s);
}

std::vector<Real> mat_vec(const Matrix& a, const std::vector<Real>& x) {
	std::vector<Real> y(a.rows(), Real(0));
	for (std::size_t i = 0; i < a.rows(); ++i) {
		Real s = 0;
		for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
		y[i] = s;
	}
	return y;
}

LdltFactor ldlt_factor(const Matrix& a) {
	const std::size_t n = a.rows();
	if (n != a.cols()) throw ValidationError("ldlt_factor: matrix not square");

	// Working copy of the symmetric matrix; we overwrite its lower triangle.
	Matrix w(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);

	LdltFactor f;
	f.l = Matrix(n, n);
	f.d.assign(n, Real(0));
	f.perm.resize(n);
	for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;

	for (std::size_t k = 0; k < n; ++k) {
		// Diagonal pivoting: largest remaining diagonal entry.
		std::size_t p = k;
		for (std::size_t i = k + 1; i < n; ++i)
			if (w(i, i) > w(p, p)) p = i;
		if (p != k) {
			std::swap(f.perm[k], f.perm[p]);
			for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
			for (std::size_t i = 0; i < n; ++i) std::swap(w(i, k), w(i, p));
			// the already-computed part of L moves with its rows
			for (std::size_t j = 0; j < k; ++j) std::swap(f.l(k, j), f.l(p, j));
		}
		const Real piv = w(k, k);
		if (!(piv > 0)) {
			const unsigned rec = 2 * working_digits();
			throw FactorizationError(
				"ldlt_factor: nonpositive pivot at index " + std::to_string(k) +
					"; recommend raising precision to " + std::to_string(rec) + " digits",
				k, rec);
		}
		f.d[k] = piv;
		for (std::size_t i = k + 1; i < n; ++i) {
			const Real lik = w(i, k) / piv;
			f.l(i, k) = lik;
			for (std::size_t j = k + 1; j <= i; ++j) {
				w(i, j) -= lik * w(k, j);
				w(j, i) = w(i, j);
			}
		}
	}
	return f;
}

std::vector<Real> ldlt_solve(const LdltFactor& f, const std::vector<Real>& b) {
	const std::size_t n = f.d.size();
	if (b.size() != n) throw ValidationError("ldlt_solve: size mismatch");
	std::vector<Real> y(n);
	for (std::size_t i = 0; i < n; ++i) y[i] = b[f.perm[i]];
	// Forward solve L y = Pb.
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < i; ++j) y[i] -= f.l(i, j) * y[j];
	for (std::size_t i = 0; i < n; ++i) y[i] /= f.d[i];
	// Back solve L^T z = y.
	for (std::size_t ii = n; ii-- > 0;)
		for (std::size_t j = ii + 1; j < n; ++j) y[ii] -= f.l(j, ii) * y[j];
	std::vector<Real> x(n);
	for (std::size_t i = 0; i < n; ++i) x[f.perm[i]] = y[i];
	return x;
}

Real condition_estimate(const Matrix& a, const LdltFactor& f) {
	const std::size_t n = a.rows();
	Real norm_a = 0;
	for (std::size_t j = 0; j < n; ++j) {
		Real col = 0;
		for (std::size_t i = 0; i < n; ++i) col += abs(a(i, j));
		if (col > norm_a) norm_a = col;
	}
	Real norm_inv = 0;
	std::vector<Real> e(n, Real(0));
	for (std::size_t j = 0; j < n; ++j) {
		e[j] = 1;
		std::vector<Real> x = ldlt_solve(f, e);
		e[j] = 0;
		Real col = 0;
		for (const Real& v : x) col += abs(v);
		if (col > norm_inv) norm_inv = col;
	}
	return norm_a * norm_inv;
}

void jacobi_eigensym(const Matrix& a, std::vector<Real>& w, Matrix& v, std::size_t max_sweeps) {
	const std::size_t n = a.rows();
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
	v = Matrix(n, n);
	for (std::size_t i = 0; i < n; ++i) v(i, i) = 1;

	Real scale = 0;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j) scale += abs(m(i, j));
	if (scale == 0) scale = 1;
	const Real tol = scale * pow(Real(10), -static_cast<long>(working_digits()) + 5);

	for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
		Real off = 0;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i + 1; j < n; ++j) off += abs(m(i, j));
		if (off < tol) break;
		for (std::size_t p = 0; p < n; ++p) {
			for (std::size_t q = p + 1; q < n; ++q) {
				if (abs(m(p, q)) == 0) continue;
				const Real theta = (m(q, q) - m(p, p)) / (2 * m(p, q));
				Real t = 1 / (abs(theta) + sqrt(theta * theta + 1));
				if (theta < 0) t = -t;
				const Real c = 1 / sqrt(t * t + 1);
				const Real s = t * c;
				for (std::size_t k = 0; k < n; ++k) {
					const Real mkp = m(k, p), mkq = m(k, q);
					m(k, p) = c * mkp - s * mkq;
					m(k, q) = s * mkp + c * mkq;
				}
				for (std::size_t k = 0; k < n; ++k) {
					const Real mpk = m(p, k), mqk = m(q, k);
					m(p, k) = c * mpk - s * mqk;
					m(q, k) = s * mpk + c * mqk;
				}
				for (std::size_t k = 0; k < n; ++k) {
					const Real vkp = v(k, p), vkq = v(k, q);
					v(k, p) = c * vkp - s * vkq;
					v(k, q) = s * vkp + c * vkq;
				}
			}
		}
	}
	w.assign(n, Real(0));
	for (std::size_t i = 0; i < n; ++i) w[i] = m(i, i);
}

}  // namespace momctl
