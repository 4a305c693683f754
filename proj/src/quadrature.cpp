#include "momctl/quadrature.hpp"

#include "momctl/errors.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace momctl {

namespace {

// Legendre P_n and derivative at z, by the three-term recurrence.
void legendre_eval(std::size_t n, const Real& z, Real& p, Real& dp) {
	Real p1 = 1, p2 = 0;
	for (std::size_t j = 0; j < n; ++j) {
		const Real p3 = p2;
		p2 = p1;
		p1 = ((2 * Real(static_cast<unsigned long>(j)) + 1) * z * p2 -
		      Real(static_cast<unsigned long>(j)) * p3) /
		     Real(static_cast<unsigned long>(j + 1));
	}
	p = p1;
	dp = Real(static_cast<unsigned long>(n)) * (z * p1 - p2) / (z * z - 1);
}

QuadRule build_rule(std::size_t n, unsigned digits) {
	QuadRule rule;
	rule.nodes.resize(n);
	rule.weights.resize(n);
	const std::size_t half = (n + 1) / 2;

	// Precision ladder: double seeds, then Newton with doubling digit counts.
	std::vector<unsigned> stages;
	for (unsigned d = 30; d < digits; d *= 2) stages.push_back(d);
	stages.push_back(digits);

	for (std::size_t i = 0; i < half; ++i) {
		double seed = std::cos(3.14159265358979323846 * (static_cast<double>(i) + 0.75) /
		                       (static_cast<double>(n) + 0.5));
		Real z;
		{
			DigitScope scope(stages.front());
			z = Real(seed);
			for (int it = 0; it < 40; ++it) {
				Real p, dp;
				legendre_eval(n, z, p, dp);
				const Real dz = p / dp;
				z -= dz;
				if (abs(dz) < pow(Real(10), -20)) break;
			}
		}
		for (std::size_t s = 1; s < stages.size(); ++s) {
			DigitScope scope(stages[s]);
			Real zz = z;
			zz.precision(stages[s]);
			for (int it = 0; it < 3; ++it) {
				Real p, dp;
				legendre_eval(n, zz, p, dp);
				zz -= p / dp;
			}
			z = zz;
		}
		DigitScope scope(digits);
		Real p, dp;
		legendre_eval(n, z, p, dp);
		// Map from [-1,1] (root z, decreasing in i) to [0,1].
		const Real x_hi = (1 + z) / 2;
		const Real x_lo = (1 - z) / 2;
		const Real w = 1 / ((1 - z * z) * dp * dp);
		rule.nodes[i] = x_lo;
		rule.nodes[n - 1 - i] = x_hi;
		rule.weights[i] = w;
		rule.weights[n - 1 - i] = w;
	}
	return rule;
}

}  // namespace

const QuadRule& gauss_legendre_unit(std::size_t n) {
	if (n < 2) throw ValidationError("gauss_legendre_unit: need at least 2 nodes");
	static std::map<std::pair<std::size_t, unsigned>, QuadRule> cache;
	const unsigned digits = working_digits();
	auto key = std::make_pair(n, digits);
	auto it = cache.find(key);
	if (it == cache.end()) it = cache.emplace(key, build_rule(n, digits)).first;
	return it->second;
}

Real exp_integral_closed(const Real& p, const Real& len) {
	if (p == 0) return len;
	// (1 - exp(-p len))/p computed via expm1 for stability near p = 0.
	return -expm1(-p * len) / p;
}

DyadicExpQuad::DyadicExpQuad(const std::vector<Real>& raw_freqs, const Real& raw_len,
                             std::size_t nodes)
	: n_(nodes < 4 ? 4 : nodes), m_(0), len_(promoted(raw_len)) {
	const Real& len = len_;
	if (!(len > 0)) throw ValidationError("DyadicExpQuad: nonpositive length");
	const unsigned digits = working_digits();

	std::vector<Real> freqs;
	freqs.reserve(raw_freqs.size());
	for (const Real& f : raw_freqs) freqs.push_back(promoted(f));

	Real p_max = 0;
	for (const Real& f : freqs) {
		if (f < 0) throw ValidationError("DyadicExpQuad: negative frequency");
		if (f > p_max) p_max = f;
	}
	p_max *= 2;

	// Rule-error model for int_0^lambda e^{-y} dy with an n-point rule:
	// relative error ~ (lambda e / (8n))^{2n}.  Choose the base-cell depth M
	// so that lambda = p_max len 2^-M keeps the error below 10^-(digits+10).
	const double dn = static_cast<double>(n_);
	const double log10_lambda_star =
		std::log10(8.0 * dn / 2.718281828459045) - (static_cast<double>(digits) + 10.0) / (2.0 * dn);
	if (p_max > 0) {
		const double log10_pl = static_cast<double>(log10(p_max * len));
		const double excess = (log10_pl - log10_lambda_star) / 0.30102999566398120;
		if (excess > 0) m_ = static_cast<long>(std::ceil(excess)) + 2;
	}

	Real base_len = len;
	for (long i = 0; i < m_; ++i) base_len /= 2;

	const QuadRule& rule = gauss_legendre_unit(n_);
	scaled_weights_.resize(n_);
	for (std::size_t q = 0; q < n_; ++q) scaled_weights_[q] = rule.weights[q] * base_len;

	mode_nodes_.resize(freqs.size());
	mode_end_.resize(freqs.size());
	for (std::size_t i = 0; i < freqs.size(); ++i) {
		mode_nodes_[i].resize(n_);
		for (std::size_t q = 0; q < n_; ++q)
			mode_nodes_[i][q] = exp(-freqs[i] * base_len * rule.nodes[q]);
		mode_end_[i] = exp(-freqs[i] * base_len);
	}
}

Real DyadicExpQuad::pair_integral(std::size_t i, std::size_t k) const {
	const std::vector<Real>& ei = mode_nodes_[i];
	const std::vector<Real>& ek = mode_nodes_[k];
	Real acc = 0;
	for (std::size_t q = 0; q < n_; ++q) acc += scaled_weights_[q] * ei[q] * ek[q];
	// Lift [0, L] -> [0, 2L] exactly: int_0^{2L} = (1 + e^{-pL}) int_0^L.
	Real e = mode_end_[i] * mode_end_[k];
	const Real cutoff = pow(Real(10), -static_cast<long>(working_digits()) - 10);
	for (long lev = 0; lev < m_; ++lev) {
		if (e < cutoff) break;  // remaining lifts are no-ops at this precision
		acc *= 1 + e;
		e *= e;
	}
	return acc;
}

}  // namespace momctl
