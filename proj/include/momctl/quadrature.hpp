#pragma once

#include "momctl/real.hpp"

#include <cstddef>
#include <vector>

namespace momctl {

// Gauss-Legendre rule on [0, 1] computed at the current working precision.
struct QuadRule {
	std::vector<Real> nodes;
	std::vector<Real> weights;
};

// Nodes/weights by Newton iteration on the Legendre recurrence, refined
// through a precision ladder from double seeds.  Cached per (n, digits).
const QuadRule& gauss_legendre_unit(std::size_t n);

// Closed form for int_0^len exp(-p s) ds = (1 - exp(-p len))/p, with the
// p -> 0 limit branch (= len).  Valid for any sign of p (expm1-based).
Real exp_integral_closed(const Real& p, const Real& len);

// Quadrature evaluator for int_0^len exp(-(f_i + f_k) s) ds over all pairs
// of a frequency table, built from Gauss-Legendre on a dyadically refined
// base cell [0, len 2^-M] and lifted by the exact bisection identity
//   int_0^{2L} = (1 + exp(-pL)) int_0^L.
// The base-cell depth M is chosen so that the rule error on the base cell
// is below the working precision; node values exp(-f_i s_q) are tabulated
// per mode, so a pair integral costs only multiplications.
class DyadicExpQuad {
public:
	DyadicExpQuad(const std::vector<Real>& freqs, const Real& len, std::size_t nodes);

	// int_0^len exp(-(freqs[i] + freqs[k]) s) ds
	Real pair_integral(std::size_t i, std::size_t k) const;

	std::size_t node_count() const { return n_; }
	long depth() const { return m_; }

private:
	std::size_t n_;
	long m_;
	Real len_;
	std::vector<Real> scaled_weights_;        // w_q * base_len
	std::vector<std::vector<Real>> mode_nodes_;  // [mode][node] = exp(-f s_q)
	std::vector<Real> mode_end_;                 // exp(-f * base_len)
};

}  // namespace momctl
