#include "momctl/hypotheses.hpp"

#include "momctl/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace momctl {

namespace {

struct JumpPoint {
	Real gamma;
	Real n;  // counting-function value at gamma
};

std::vector<JumpPoint> jump_points(const SpectralSequence& seq, const Real& gamma_max,
                                   std::size_t n_used) {
	std::vector<JumpPoint> pts;
	pts.reserve(2 * n_used + 1);
	for (std::size_t i = 0; i < n_used; ++i) {
		pts.push_back({seq.values[i], Real(static_cast<unsigned long>(i + 1))});
		if (i > 0) {
			const Real eta = (seq.values[i] - seq.values[i - 1]) / 2;
			pts.push_back({seq.values[i] - eta, Real(static_cast<unsigned long>(i))});
		}
	}
	if (gamma_max > seq.values[n_used - 1])
		pts.push_back({gamma_max, Real(static_cast<unsigned long>(n_used))});
	return pts;
}

}  // namespace

WeylFit fit_weyl(const SpectralSequence& seq, const Real& a, const Real& b,
                 const Real& gamma_max) {
	if (!(b > 0) || !(b < a)) throw ValidationError("fit_weyl: need 0 < b < a");
	if (seq.values.empty()) throw ValidationError("fit_weyl: empty sequence");
	if (!(gamma_max >= seq.values.front()))
		throw ValidationError("fit_weyl: gamma_max below the first value");
	if (gamma_max > seq.values.back())
		throw ValidationError("fit_weyl: sequence does not cover gamma_max");

	const std::size_t n_used = counting_function(seq, gamma_max);
	std::vector<JumpPoint> pts = jump_points(seq, gamma_max, n_used);

	std::vector<Real> ga(pts.size()), gb(pts.size());
	for (std::size_t i = 0; i < pts.size(); ++i) {
		ga[i] = pow(pts[i].gamma, a);
		gb[i] = pow(pts[i].gamma, b);
	}

	auto deviation = [&](const Real& c1) {
		Real worst = 0;
		for (std::size_t i = 0; i < pts.size(); ++i) {
			const Real d = abs(pts[i].n - c1 * ga[i]) / gb[i];
			if (d > worst) worst = d;
		}
		return worst;
	};

	// Golden-section minimization of the (convex) sup deviation in c_w1.
	Real lo = 0, hi = 1;
	for (std::size_t i = 0; i < pts.size(); ++i) {
		const Real r = pts[i].n / ga[i];
		if (2 * r + 1 > hi) hi = 2 * r + 1;
	}
	const Real gr = (sqrt(Real(5)) - 1) / 2;
	Real x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
	Real f1 = deviation(x1), f2 = deviation(x2);
	for (int it = 0; it < 300; ++it) {
		if (f1 < f2) {
			hi = x2;
			x2 = x1;
			f2 = f1;
			x1 = hi - gr * (hi - lo);
			f1 = deviation(x1);
		} else {
			lo = x1;
			x1 = x2;
			f1 = f2;
			x2 = lo + gr * (hi - lo);
			f2 = deviation(x2);
		}
	}
	const Real c1 = (lo + hi) / 2;
	Real c2 = deviation(c1);
	c2 += c2 * pow(Real(10), -30) + pow(Real(10), -40);

	// Post-check both two-term bounds at every jump point.
	for (std::size_t i = 0; i < pts.size(); ++i) {
		const Real low = c1 * ga[i] - c2 * gb[i];
		const Real high = c1 * ga[i] + c2 * gb[i];
		if (!(low <= pts[i].n && pts[i].n <= high))
			throw NumericalError("fit_weyl: bounds violated at Gamma = " +
			                     decimal_string(pts[i].gamma, 20));
	}

	// Smallest one-term constant on the checked range (eigenvalue bounds and
	// the counting sandwich for Gamma >= mu_1, including left limits).
	Real k_w = 1;
	const Real inv_a = 1 / a;
	for (std::size_t i = 0; i < n_used; ++i) {
		const Real k_pow = pow(Real(static_cast<unsigned long>(i + 1)), inv_a);
		const Real r1 = seq.values[i] / k_pow;
		const Real r2 = k_pow / seq.values[i];
		if (r1 > k_w) k_w = r1;
		if (r2 > k_w) k_w = r2;
		if (i > 0) {
			const Real r3 = seq.values[i] / pow(Real(static_cast<unsigned long>(i)), inv_a);
			if (r3 > k_w) k_w = r3;
		}
	}
	{
		const Real r4 = gamma_max / pow(Real(static_cast<unsigned long>(n_used)), inv_a);
		if (r4 > k_w) k_w = r4;
	}

	WeylFit fit;
	fit.a = a;
	fit.b = b;
	fit.c_w1 = c1;
	fit.c_w2 = c2;
	fit.k_w = k_w;
	fit.checked_up_to = gamma_max;
	return fit;
}

GapCertificate check_weak_gap(const SpectralSequence& seq) {
	if (seq.values.size() < 2) throw ValidationError("check_weak_gap: need at least 2 values");
	GapCertificate cert;
	cert.c_w = 0;
	cert.worst_index = 1;
	cert.worst_ratio = -std::numeric_limits<double>::infinity();
	Real worst = 0;
	bool have = false;
	for (std::size_t i = 0; i + 1 < seq.values.size(); ++i) {
		const Real gap = seq.values[i + 1] - seq.values[i];
		if (!(gap > 0))
			throw ValidationError("check_weak_gap: repeated value at index " +
			                      std::to_string(i + 1));
		const Real ratio = -log(gap) / sqrt(seq.values[i]);
		if (!have || ratio > worst) {
			worst = ratio;
			cert.worst_index = i + 1;
			have = true;
		}
	}
	cert.worst_ratio = worst;
	cert.c_w = worst > 0 ? worst : Real(0);
	return cert;
}

std::uint64_t k_star_index(const WeylFit& fit) {
	const Real base = fit.c_w2 * pow(fit.k_w, fit.a + fit.b) / fit.c_w1;
	const Real v = pow(base, fit.a / (fit.a - fit.b));
	return static_cast<std::uint64_t>(static_cast<long double>(floor(v))) + 1;
}

StructuralConstants structural_constants(const WeylFit& fit, const Real& mu1,
                                         const Real& k_star_value_mu, const Real& delta) {
	if (!(fit.a > 0) || !(fit.a < Real(5) / 8))
		throw ValidationError("structural_constants: exponent a outside (0, 5/8)");
	if (!(delta > 0) || !(delta < 1))
		throw ValidationError("structural_constants: delta outside (0, 1)");

	StructuralConstants c;
	c.a = fit.a;
	c.b = fit.b;
	c.c_w1 = fit.c_w1;
	c.c_w2 = fit.c_w2;
	c.k_w = fit.k_w;
	c.delta = delta;
	c.epsilon = std::min(Real((5 - 8 * fit.a) / 4), Real((1 - 2 * fit.b) / 4));
	c.kappa = pow(fit.k_w, fit.a);
	c.k_star = k_star_index(fit);

	c.lambda0 = mu1 + pow(8 * c.kappa * fit.c_w1 * fit.c_w2, 4 / (1 - 2 * fit.b)) +
	            pow(2 * fit.k_w * k_star_value_mu, 4 * fit.a);
	const Real t1 = pow(fit.c_w1 + fit.c_w2, -2) / 4 *
	                pow(2 * c.kappa + c.kappa * c.kappa, (1 - 2 * fit.a) / 2);
	const Real t2 = 1 / (8 * Real(c.k_star) * fit.k_w);
	const Real t3 = pow(fit.k_w, -2 * fit.a);
	c.theta = std::min(t1, std::min(t2, t3));

	c.alpha = std::max(Real((1 - c.epsilon) / c.epsilon), Real((1 - delta) / delta));
	c.beta_defined = fit.a < Real(1) / 2;
	if (c.beta_defined)
		c.beta = std::max(Real(4 / (fit.a * (1 - 2 * fit.a))), Real((1 - delta) / delta));
	else
		c.beta = 0;
	return c;
}

std::vector<std::pair<std::size_t, Real>> estimate_condensation_index(
	const SpectralSequence& seq, std::size_t n_terms) {
	if (n_terms < 1) throw ValidationError("estimate_condensation_index: n_terms must be >= 1");
	if (n_terms > seq.values.size())
		throw ValidationError("estimate_condensation_index: n_terms exceeds sequence length");
	std::vector<std::pair<std::size_t, Real>> out;
	out.reserve(n_terms);
	for (std::size_t k = 0; k < n_terms; ++k) {
		const Real& mk = seq.values[k];
		Real log_abs_deriv = log(2 / mk);
		for (std::size_t j = 0; j < n_terms; ++j) {
			if (j == k) continue;
			log_abs_deriv += log(abs(1 - (mk * mk) / (seq.values[j] * seq.values[j])));
		}
		out.emplace_back(k + 1, -log_abs_deriv / mk);
	}
	return out;
}

}  // namespace momctl
