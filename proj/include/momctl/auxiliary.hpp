#pragma once

#include "momctl/hypotheses.hpp"
#include "momctl/real.hpp"
#include "momctl/sequence.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace momctl {

// Machine-checkable pass/fail record over a finite index range.
struct Certificate {
	std::string name;
	std::uint64_t range_lo = 0, range_hi = 0;
	bool passed = false;
	Real worst_margin;
	std::uint64_t witness_index = 0;
	bool conclusive = true;        // false when the range was too short to test
	bool within_guarantee = true;  // false when run below the guaranteed cutoff
};

// nu_k = mu_k for mu_k <= Lambda, kappa^2 Lambda^{1-2a} k^2 above.
struct AuxiliarySequence {
	Real lambda_cut;
	Real kappa;
	Real a;
	std::uint64_t k_star_lambda = 0;  // 0 when the crossing lies beyond the prefix
	std::vector<Real> values;
	Certificate monotonicity;
};

struct BlockGapParams {
	std::uint64_t n_lambda;
	Real gamma_lambda;
};

// Far access to base-sequence entries beyond the materialized prefix.
struct FarOracle {
	std::function<Real(std::uint64_t)> value;  // 1-based rank -> mu_rank
	std::function<std::vector<Real>(std::uint64_t, std::size_t)> window;
	std::function<std::uint64_t(const Real&)> rank_of;  // #\{k : mu_k <= gamma\}
};

FarOracle perturbed_square_far_oracle();

AuxiliarySequence build_auxiliary(const SpectralSequence& seq, const WeylFit& fit,
                                  const Real& lambda_cut, const FarOracle* far = nullptr);

BlockGapParams block_gap_parameters(const StructuralConstants& consts, const Real& lambda_cut);

// Executable finite-range certificates: (i) block gap, (ii) consecutive
// (weak) gap, (iii) counting sandwich, (iv) spot-checked induction step.
std::vector<Certificate> certify_auxiliary(const AuxiliarySequence& aux,
                                           const StructuralConstants& consts,
                                           const BlockGapParams& params,
                                           const GapCertificate& gap_cert,
                                           std::uint64_t range_end,
                                           const FarOracle* far = nullptr);

}  // namespace momctl
