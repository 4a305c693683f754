#include "momctl/auxiliary.hpp"

#include "momctl/errors.hpp"

#include <algorithm>

namespace momctl {

FarOracle perturbed_square_far_oracle() {
	FarOracle far;
	far.value = [](std::uint64_t k) { return perturbed_square_far_value(k); };
	far.window = [](std::uint64_t start, std::size_t count) {
		return perturbed_square_far_window(start, count);
	};
	far.rank_of = [](const Real& gamma) { return perturbed_square_rank_of(gamma); };
	return far;
}

AuxiliarySequence build_auxiliary(const SpectralSequence& seq, const WeylFit& fit,
                                  const Real& lambda_cut, const FarOracle* far) {
	if (seq.values.empty()) throw ValidationError("build_auxiliary: empty sequence");
	if (!(lambda_cut >= seq.values.front()))
		throw ValidationError("build_auxiliary: lambda_cut below mu_1");
	if (!(fit.a >= Real(1) / 2))
		throw ValidationError("build_auxiliary: requires exponent a >= 1/2");

	AuxiliarySequence aux;
	aux.lambda_cut = lambda_cut;
	aux.kappa = pow(fit.k_w, fit.a);
	aux.a = fit.a;
	const Real ramp = aux.kappa * aux.kappa * pow(lambda_cut, 1 - 2 * fit.a);

	aux.values.reserve(seq.values.size());
	for (std::size_t i = 0; i < seq.values.size(); ++i) {
		const Real k(static_cast<unsigned long>(i + 1));
		aux.values.push_back(seq.values[i] <= lambda_cut ? seq.values[i] : Real(ramp * k * k));
	}

	if (seq.values.back() <= lambda_cut) {
		aux.k_star_lambda = (far && far->rank_of) ? far->rank_of(lambda_cut) : 0;
	} else {
		aux.k_star_lambda = counting_function(seq, lambda_cut);
	}

	Certificate mono;
	mono.name = "monotonicity";
	mono.range_lo = 1;
	mono.range_hi = aux.values.size();
	mono.passed = true;
	bool have = false;
	for (std::size_t i = 0; i + 1 < aux.values.size(); ++i) {
		const Real margin = aux.values[i + 1] - aux.values[i];
		if (!have || margin < mono.worst_margin) {
			mono.worst_margin = margin;
			mono.witness_index = i + 1;
			have = true;
		}
		if (!(margin > 0)) mono.passed = false;
	}
	if (!have) mono.worst_margin = 0;
	aux.monotonicity = mono;
	return aux;
}

BlockGapParams block_gap_parameters(const StructuralConstants& consts, const Real& lambda_cut) {
	if (!(lambda_cut > 0)) throw ValidationError("block_gap_parameters: lambda_cut must be > 0");
	BlockGapParams p;
	const Real n_real = floor(pow(lambda_cut, (1 - 2 * consts.epsilon) / 2));
	p.n_lambda = static_cast<std::uint64_t>(static_cast<long double>(n_real)) + 1;
	p.gamma_lambda = consts.theta * pow(lambda_cut, 1 - 2 * consts.a);
	return p;
}

namespace {

// sup_{x >= 1} x^{-1/2} log(kappa^{-2} x^{2a-1}) by the closed-form
// stationary point, cross-checked against a log-spaced grid.
Real weak_gap_c0(const Real& kappa, const Real& a) {
	auto f = [&](const Real& x) {
		return (((2 * a - 1) * log(x) - 2 * log(kappa)) / sqrt(x));
	};
	Real best = 0;  // the x -> infinity limit is 0
	const Real f1 = f(Real(1));
	if (f1 > best) best = f1;
	if (a > Real(1) / 2) {
		const Real xs = exp(2 + 2 * log(kappa) / (2 * a - 1));
		if (xs >= 1) {
			const Real fs = f(xs);
			if (fs > best) best = fs;
		}
	}
	// Grid fallback over x in [1, 1e12].
	for (int i = 0; i <= 240; ++i) {
		const Real x = pow(Real(10), Real(i) / 20);
		const Real fx = f(x);
		if (fx > best) best = fx;
	}
	return best;
}

struct NuAccess {
	const AuxiliarySequence* aux;
	const FarOracle* far;
	Real ramp;

	// nu values at ranks [start, start+count)
	std::vector<Real> window(std::uint64_t start, std::size_t count) const {
		const std::size_t len = aux->values.size();
		std::vector<Real> out;
		out.reserve(count);
		if (start + count - 1 <= len) {
			for (std::size_t i = 0; i < count; ++i)
				out.push_back(aux->values[static_cast<std::size_t>(start - 1 + i)]);
			return out;
		}
		if (!far || !far->window)
			throw ValidationError("certify_auxiliary: range exceeds prefix and no far oracle");
		std::vector<Real> mu = far->window(start, count);
		for (std::size_t i = 0; i < count; ++i) {
			const Real k(static_cast<unsigned long>(start + i));
			out.push_back(mu[i] <= aux->lambda_cut ? mu[i] : Real(ramp * k * k));
		}
		return out;
	}
};

}  // namespace

std::vector<Certificate> certify_auxiliary(const AuxiliarySequence& aux,
                                           const StructuralConstants& consts,
                                           const BlockGapParams& params,
                                           const GapCertificate& gap_cert,
                                           std::uint64_t range_end, const FarOracle* far) {
	if (aux.values.empty()) throw ValidationError("certify_auxiliary: empty auxiliary sequence");
	const std::size_t len = aux.values.size();
	const std::uint64_t r_pref = std::min<std::uint64_t>(range_end, len);
	const bool within = aux.lambda_cut >= consts.lambda0;
	const Real ramp = aux.kappa * aux.kappa * pow(aux.lambda_cut, 1 - 2 * aux.a);
	NuAccess nu{&aux, far, ramp};
	const std::uint64_t n = params.n_lambda;
	const Real g = params.gamma_lambda;

	std::vector<Certificate> certs;

	// (i) block gap: nu_{k+n} - nu_k >= gamma (2kn + n^2)
	{
		Certificate c;
		c.name = "block-gap";
		c.range_lo = 1;
		c.range_hi = r_pref;
		c.within_guarantee = within;
		const bool reachable = (r_pref + n <= len) || (far && far->window);
		if (r_pref == 0 || !reachable) {
			c.conclusive = false;
			c.passed = false;
			c.worst_margin = 0;
		} else {
			std::vector<Real> hi = nu.window(n + 1, static_cast<std::size_t>(r_pref));
			bool have = false;
			for (std::uint64_t k = 1; k <= r_pref; ++k) {
				const Real rk(static_cast<unsigned long>(k));
				const Real rn(static_cast<unsigned long>(n));
				const Real margin = hi[static_cast<std::size_t>(k - 1)] -
				                    aux.values[static_cast<std::size_t>(k - 1)] -
				                    g * (2 * rk * rn + rn * rn);
				if (!have || margin < c.worst_margin) {
					c.worst_margin = margin;
					c.witness_index = k;
					have = true;
				}
			}
			c.passed = c.worst_margin >= 0;
		}
		certs.push_back(c);
	}

	// (ii) consecutive gap: nu_{k+1} - nu_k >= exp(-c Lambda^{1/2})
	{
		Certificate c;
		c.name = "weak-gap";
		c.range_lo = 1;
		c.range_hi = r_pref > 1 ? r_pref - 1 : 0;
		c.within_guarantee = within;
		if (r_pref < 2) {
			c.conclusive = false;
			c.passed = false;
			c.worst_margin = 0;
		} else {
			const Real c0 = weak_gap_c0(aux.kappa, aux.a);
			const Real cc = std::max(c0, gap_cert.c_w);
			const Real threshold = exp(-cc * sqrt(aux.lambda_cut));
			bool have = false;
			for (std::uint64_t k = 1; k + 1 <= r_pref; ++k) {
				const Real margin = aux.values[static_cast<std::size_t>(k)] -
				                    aux.values[static_cast<std::size_t>(k - 1)] - threshold;
				if (!have || margin < c.worst_margin) {
					c.worst_margin = margin;
					c.witness_index = k;
					have = true;
				}
			}
			c.passed = c.worst_margin >= 0;
		}
		certs.push_back(c);
	}

	// (iii) counting sandwich at jump points Gamma = nu_k:
	// c1 Gamma^{1/2} <= N_nu(Gamma) = k <= c2 Gamma^{1/2} Lambda^{(2a-1)/2}
	{
		Certificate c;
		c.name = "counting-sandwich";
		c.range_lo = 1;
		c.range_hi = r_pref;
		c.within_guarantee = within;
		const Real c1 = std::min(Real(pow(aux.kappa, -2)), Real(1 / aux.kappa)) / 2;
		const Real c2 = 2 * std::max(aux.kappa, Real(1 / aux.kappa));
		const Real lam_factor = pow(aux.lambda_cut, (2 * aux.a - 1) / 2);
		bool have = false;
		for (std::uint64_t k = 1; k <= r_pref; ++k) {
			const Real rk(static_cast<unsigned long>(k));
			const Real root = sqrt(aux.values[static_cast<std::size_t>(k - 1)]);
			const Real m_lo = rk - c1 * root;
			const Real m_hi = c2 * root * lam_factor - rk;
			const Real margin = std::min(m_lo, m_hi);
			if (!have || margin < c.worst_margin) {
				c.worst_margin = margin;
				c.witness_index = k;
				have = true;
			}
		}
		if (!have) {
			c.conclusive = false;
			c.worst_margin = 0;
		}
		c.passed = have && c.worst_margin >= 0;
		certs.push_back(c);
	}

	// (iv) induction step: nu_{k+jn} - nu_k >= gamma ((k+jn)^2 - k^2), j <= 4
	{
		Certificate c;
		c.name = "induction";
		c.range_lo = 1;
		c.range_hi = r_pref;
		c.within_guarantee = within;
		const bool reachable = (r_pref + 4 * n <= len) || (far && far->window);
		if (r_pref == 0 || !reachable) {
			c.conclusive = false;
			c.passed = false;
			c.worst_margin = 0;
		} else {
			bool have = false;
			for (std::uint64_t j = 1; j <= 4; ++j) {
				std::vector<Real> hi = nu.window(j * n + 1, static_cast<std::size_t>(r_pref));
				const Real rjn(static_cast<unsigned long>(j * n));
				for (std::uint64_t k = 1; k <= r_pref; ++k) {
					const Real rk(static_cast<unsigned long>(k));
					const Real margin = hi[static_cast<std::size_t>(k - 1)] -
					                    aux.values[static_cast<std::size_t>(k - 1)] -
					                    g * ((rk + rjn) * (rk + rjn) - rk * rk);
					if (!have || margin < c.worst_margin) {
						c.worst_margin = margin;
						c.witness_index = k;
						have = true;
					}
				}
			}
			c.passed = c.worst_margin >= 0;
		}
		certs.push_back(c);
	}

	return certs;
}

}  // namespace momctl
