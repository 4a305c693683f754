#include "momctl/moment.hpp"

#include "momctl/errors.hpp"
#include "momctl/quadrature.hpp"

#include <algorithm>
#include <string>

namespace momctl {

namespace {

void validate_problem(const MomentProblem& p) {
	const std::size_t n = p.freqs.size();
	if (n == 0) throw ValidationError("moment problem: no frequencies");
	if (p.targets.size() != n) throw ValidationError("moment problem: targets size mismatch");
	if (!p.weights.empty() && p.weights.size() != n)
		throw ValidationError("moment problem: weights size mismatch");
	if (!(p.horizon > 0)) throw ValidationError("moment problem: horizon must be positive");
	for (std::size_t i = 0; i < n; ++i) {
		const bool ok_first = p.allow_zero_first_freq && i == 0 && p.freqs[i] == 0;
		if (!(p.freqs[i] > 0) && !ok_first)
			throw ValidationError("moment problem: frequencies must be positive");
		if (i > 0 && !(p.freqs[i] > p.freqs[i - 1]))
			throw ValidationError("moment problem: coincident or decreasing frequencies at index " +
			                      std::to_string(i + 1));
	}
	if (!p.weights.empty())
		for (const Real& z : p.weights)
			if (!(abs(z) > 0)) throw ValidationError("moment problem: zero weight");
}

}  // namespace

unsigned default_digits(const std::vector<Real>& freqs, const Real& horizon) {
	const Real log10e = 1 / log(Real(10));
	const Real extent = freqs.back() * horizon * log10e;
	unsigned d = 4 * static_cast<unsigned>(freqs.size()) +
	             static_cast<unsigned>(static_cast<unsigned long>(ceil(extent)));
	return std::max(50u, d);
}

Matrix gram_matrix(const std::vector<Real>& freqs, const Real& horizon, unsigned digits) {
	DigitScope scope(digits);
	const std::size_t n = freqs.size();
	Matrix g(n, n);
	const Real t = promoted(horizon);
	for (std::size_t j = 0; j < n; ++j) {
		const Real fj = promoted(freqs[j]);
		for (std::size_t k = j; k < n; ++k) {
			const Real p = fj + promoted(freqs[k]);
			const Real v = exp_integral_closed(p, t);
			g(j, k) = v;
			g(k, j) = v;
		}
	}
	return g;
}

namespace {

// Residuals of a batch of coefficient vectors against growing-exponential
// targets, by the independent dyadic Gauss-Legendre oracle:
// achieved_k = sum_i c_i e^{mu_k T} int_0^T e^{-(mu_k + mu_i)s} ds.
std::vector<std::vector<Real>> quadrature_residuals(
	const std::vector<std::vector<Real>>& coeff_sets,
	const std::vector<std::vector<Real>>& target_sets, const std::vector<Real>& freqs,
	const Real& horizon, std::size_t min_nodes) {
	const std::size_t n = freqs.size();
	const std::size_t nodes = std::max<std::size_t>(min_nodes, 4 * n + 50);
	DyadicExpQuad quad(freqs, horizon, nodes);

	Matrix pair_int(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t k = i; k < n; ++k) {
			const Real v = quad.pair_integral(i, k);
			pair_int(i, k) = v;
			pair_int(k, i) = v;
		}
	std::vector<Real> grow(n);
	const Real t = promoted(horizon);
	for (std::size_t k = 0; k < n; ++k) grow[k] = exp(promoted(freqs[k]) * t);

	std::vector<std::vector<Real>> out(coeff_sets.size());
	for (std::size_t s = 0; s < coeff_sets.size(); ++s) {
		out[s].resize(n);
		for (std::size_t k = 0; k < n; ++k) {
			Real achieved = 0;
			for (std::size_t i = 0; i < n; ++i) achieved += coeff_sets[s][i] * pair_int(k, i);
			achieved *= grow[k];
			out[s][k] = abs(achieved - target_sets[s][k]);
		}
	}
	return out;
}

}  // namespace

MomentSolution solve_moments(const MomentProblem& problem, const SolveOptions& opts) {
	validate_problem(problem);
	const std::size_t n = problem.freqs.size();
	unsigned digits =
		problem.precision_digits ? problem.precision_digits : default_digits(problem.freqs, problem.horizon);

	for (;;) {
		try {
			DigitScope scope(digits);
			Matrix g = gram_matrix(problem.freqs, problem.horizon, digits);
			LdltFactor f = ldlt_factor(g);

			std::vector<Real> m(n);
			const Real t = promoted(problem.horizon);
			for (std::size_t k = 0; k < n; ++k)
				m[k] = promoted(problem.targets[k]) * exp(-promoted(problem.freqs[k]) * t);
			MomentSolution sol;
			sol.precision_digits = digits;
			sol.coeffs = ldlt_solve(f, m);
			sol.norm_l2 = sqrt(dot(sol.coeffs, mat_vec(g, sol.coeffs)));
			sol.gram_condition = condition_estimate(g, f);
			if (opts.compute_residuals) {
				std::vector<Real> targets(n);
				for (std::size_t k = 0; k < n; ++k) targets[k] = promoted(problem.targets[k]);
				sol.residuals = quadrature_residuals({sol.coeffs}, {std::move(targets)}, problem.freqs,
				                                     problem.horizon, opts.min_quad_nodes)[0];
			}
			return sol;
		} catch (const FactorizationError&) {
			if (digits * 2 > opts.digits_ceiling) throw;
			digits *= 2;
		}
	}
}

std::vector<MomentSolution> biorthogonal_family(const std::vector<Real>& freqs,
                                                const Real& horizon, unsigned digits) {
	const std::size_t n = freqs.size();
	if (n == 0) throw ValidationError("biorthogonal_family: no frequencies");
	if (digits == 0) digits = default_digits(freqs, horizon);
	DigitScope scope(digits);
	Matrix g = gram_matrix(freqs, horizon, digits);
	LdltFactor f = ldlt_factor(g);
	const Real cond = condition_estimate(g, f);

	std::vector<MomentSolution> family;
	family.reserve(n);
	for (std::size_t k = 0; k < n; ++k) {
		std::vector<Real> m(n, Real(0));
		m[k] = exp(-promoted(freqs[k]) * promoted(horizon));
		MomentSolution sol;
		sol.precision_digits = digits;
		sol.coeffs = ldlt_solve(f, m);
		sol.norm_l2 = sqrt(dot(sol.coeffs, mat_vec(g, sol.coeffs)));
		sol.gram_condition = cond;
		family.push_back(std::move(sol));
	}
	return family;
}

Matrix cross_moment_matrix(const std::vector<MomentSolution>& family,
                           const std::vector<Real>& freqs, const Real& horizon,
                           unsigned digits, std::size_t min_nodes) {
	const std::size_t n = freqs.size();
	if (family.size() != n) throw ValidationError("cross_moment_matrix: family size mismatch");
	if (digits == 0) digits = default_digits(freqs, horizon);
	DigitScope scope(digits);
	const std::size_t nodes = std::max<std::size_t>(min_nodes, 4 * n + 50);
	DyadicExpQuad quad(freqs, horizon, nodes);
	Matrix pair_int(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t k = i; k < n; ++k) {
			const Real v = quad.pair_integral(i, k);
			pair_int(i, k) = v;
			pair_int(k, i) = v;
		}
	Matrix cross(n, n);
	for (std::size_t j = 0; j < n; ++j) {
		const Real grow = exp(promoted(freqs[j]) * promoted(horizon));
		for (std::size_t k = 0; k < n; ++k) {
			Real acc = 0;
			for (std::size_t i = 0; i < n; ++i) acc += family[k].coeffs[i] * pair_int(j, i);
			cross(j, k) = acc * grow;
		}
	}
	return cross;
}

WeightedResult solve_weighted_moment_theorem(const MomentProblem& problem, const Real& delta,
                                             const SolveOptions& opts) {
	if (problem.weights.empty())
		throw ValidationError("solve_weighted_moment_theorem: weights required");
	WeightedResult res;
	res.delta = delta;
	res.sol = solve_moments(problem, opts);
	DigitScope scope(res.sol.precision_digits);
	Real zx = 0;
	for (std::size_t k = 0; k < problem.freqs.size(); ++k) {
		const Real t = promoted(problem.weights[k]) * promoted(problem.targets[k]);
		zx += t * t;
	}
	zx = sqrt(zx);
	if (!(zx > 0)) throw ValidationError("solve_weighted_moment_theorem: ||zx|| must be positive");
	res.measured_cost = res.sol.norm_l2 / zx;
	return res;
}

}  // namespace momctl
