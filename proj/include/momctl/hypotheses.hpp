#pragma once

#include "momctl/real.hpp"
#include "momctl/sequence.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace momctl {

// Two-term counting-law fit: c_w1 G^a - c_w2 G^b <= N(G) <= c_w1 G^a + c_w2 G^b
// on the checked range, plus the smallest one-term constant K_W with
// K_W^{-1} k^{1/a} <= mu_k <= K_W k^{1/a} and the matching counting sandwich
// K_W^{-a} G^a <= N(G) <= K_W^a G^a for G >= mu_1.
struct WeylFit {
	Real a, b;
	Real c_w1, c_w2;
	Real k_w;
	Real checked_up_to;
};

struct GapCertificate {
	Real c_w;
	std::size_t worst_index;  // 1-based k attaining the max ratio
	Real worst_ratio;
};

struct StructuralConstants {
	Real epsilon;
	Real lambda0;
	Real theta;
	std::uint64_t k_star;
	Real kappa;
	Real alpha;
	Real beta;
	bool beta_defined;
	Real delta;
	// carried along for downstream certificate checks
	Real a, b, c_w1, c_w2, k_w;
};

WeylFit fit_weyl(const SpectralSequence& seq, const Real& a, const Real& b,
                 const Real& gamma_max);

GapCertificate check_weak_gap(const SpectralSequence& seq);

std::uint64_t k_star_index(const WeylFit& fit);

StructuralConstants structural_constants(const WeylFit& fit, const Real& mu1,
                                         const Real& k_star_value_mu, const Real& delta);

// Truncated condensation-index diagnostic: per-k estimates
// log(1/|E'(mu_k)|)/mu_k with E'(mu_k) = (-2/mu_k) prod_{j != k}(1 - mu_k^2/mu_j^2),
// products taken over j <= n_terms, evaluated in log space.
std::vector<std::pair<std::size_t, Real>> estimate_condensation_index(
	const SpectralSequence& seq, std::size_t n_terms);

}  // namespace momctl
