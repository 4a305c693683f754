#pragma once

#include "momctl/linalg.hpp"
#include "momctl/real.hpp"

#include <cstddef>
#include <vector>

namespace momctl {

// Truncated exponential moment problem int_0^T e^{mu_k t} u(t) dt = x_k.
struct MomentProblem {
	std::vector<Real> freqs;    // strictly increasing, positive
	Real horizon;               // T
	std::vector<Real> targets;  // x_k
	std::vector<Real> weights;  // optional z_k (empty = none)
	unsigned precision_digits = 0;  // 0 = auto policy
	bool allow_zero_first_freq = false;  // for shifted-frequency problems
};

// Solution in the decayed basis u(t) = sum_j c_j e^{-mu_j (T - t)}.
struct MomentSolution {
	std::vector<Real> coeffs;
	Real norm_l2;
	std::vector<Real> residuals;
	Real gram_condition;
	unsigned precision_digits = 0;
};

struct SolveOptions {
	bool compute_residuals = true;
	unsigned digits_ceiling = 400000;
	std::size_t min_quad_nodes = 0;  // 0 = 4N + 50
};

// digits = max(50, 4N + ceil(mu_N T log10 e))
unsigned default_digits(const std::vector<Real>& freqs, const Real& horizon);

// Gram matrix of the decayed basis: G_{jk} = (1 - e^{-(mu_j+mu_k)T})/(mu_j+mu_k).
Matrix gram_matrix(const std::vector<Real>& freqs, const Real& horizon, unsigned digits);

MomentSolution solve_moments(const MomentProblem& problem, const SolveOptions& opts = {});

// k-th solution has targets = k-th unit vector.
std::vector<MomentSolution> biorthogonal_family(const std::vector<Real>& freqs,
                                                const Real& horizon, unsigned digits);

// Cross moments int_0^T sigma_k(t) e^{mu_j t} dt by independent quadrature.
Matrix cross_moment_matrix(const std::vector<MomentSolution>& family,
                           const std::vector<Real>& freqs, const Real& horizon,
                           unsigned digits, std::size_t min_nodes);

struct WeightedResult {
	MomentSolution sol;
	Real measured_cost;
	Real delta;
};

WeightedResult solve_weighted_moment_theorem(const MomentProblem& problem, const Real& delta,
                                             const SolveOptions& opts = {});

}  // namespace momctl
