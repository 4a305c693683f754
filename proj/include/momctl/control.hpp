#pragma once

#include "momctl/moment.hpp"
#include "momctl/real.hpp"
#include "momctl/sequence.hpp"

#include <cstddef>
#include <vector>

namespace momctl {

// Diagonal system xi' + A xi = B v in spectral coordinates:
// xi_k'(t) + mu_k xi_k(t) = b_k v(t), k = 1..truncation.
struct ControlProblem {
	SpectralSequence spectrum;
	std::vector<Real> b_coeffs;
	std::vector<Real> xi0;
	Real horizon;
	std::size_t truncation = 0;
};

// v(t) = sum_j coeffs[j] e^{-basis_freqs[j] (t_end - t)} on [t_start, t_end],
// zero elsewhere.  Exactly integrable against any exponential.
struct ControlSegment {
	Real t_start, t_end;
	std::vector<Real> coeffs;
	std::vector<Real> basis_freqs;
	Real norm_l2;
	unsigned precision_digits = 0;
};

struct StageRecord {
	Real t_start, t_end;
	Real lambda;       // spectral cutoff of the stage
	std::size_t modes; // #J_Lambda actually controlled
	Real cost;
	Real state_norm_after;
};

struct ControlSolution {
	std::vector<ControlSegment> segments;
	Real total_norm;
	Real final_state_norm;
	std::vector<StageRecord> schedule;
	bool converged = false;
	Real delta_used;  // dyadic schedule parameter after any automatic halving
};

struct ControlOptions {
	Real tol;  // relative final-state tolerance
	std::size_t segment_budget = 64;
	unsigned digits = 0;            // 0 = auto per stage
	bool compute_residuals = false; // inner moment solves
	int max_delta_halvings = 8;
	ControlOptions() : tol(Real(1) / 100000000) {}
};

// b_k = exp(-c_b mu_k^{1-delta})
std::vector<Real> b_profile_expdelta(const std::vector<Real>& mu, const Real& c_b,
                                     const Real& delta);

// Copy of the problem with every frequency shifted by sigma (change of
// unknown e^{sigma t} xi for spectra with small mu_1); costs are reported in
// the shifted variables.
ControlProblem apply_shift(const ControlProblem& problem, const Real& sigma);

// One-shot spectral-cutoff control on [t0, t1]: zeroes every mode with
// mu_k <= lambda_cut at t1 via a single minimal-norm moment solve with
// targets d_k = -xi_k(t0)/b_k.  If state_at_t0 is null, the state is the
// free evolution of xi0 from time 0.
ControlSegment finite_dim_control(const ControlProblem& problem, const Real& lambda_cut,
                                  const Real& t0, const Real& t1,
                                  const std::vector<Real>* state_at_t0 = nullptr,
                                  const ControlOptions& opts = {});

// Dyadic low-frequency/dissipation scheme: intervals
// I_j = [T(1-2^{-j}), T(1-2^{-j-1})], active first half with cutoff
// Lambda_j = (delta_param |I_j|)^{-(1+alpha)}, passive second half.
ControlSolution lebeau_robbiano_control(const ControlProblem& problem, const Real& delta_param,
                                        const Real& alpha, const ControlOptions& opts = {});

// Exact per-mode mild solution at t = horizon; no time-stepping error.
std::vector<Real> simulate(const ControlProblem& problem, const ControlSolution& solution,
                           unsigned digits = 0);

struct CostScan {
	std::vector<Real> t_values;
	std::vector<Real> costs;
	Real alpha;
	Real fitted_c;       // log(cost) <= fitted_c (1 + T^{-alpha}) for all grid points
	Real max_deviation;  // max of log(cost_i) - fitted_c (1 + T_i^{-alpha})
	bool partial = false;
};

CostScan cost_scan(const ControlProblem& problem, const std::vector<Real>& t_grid,
                   const Real& alpha, const Real& delta_param, const ControlOptions& opts = {});

// Pairing inequality behind observability: for the one-shot control v of
// initial state zeta with cutoff lambda_cut,
//   <e^{-TA} zeta, zeta>  <=  ||v|| * || sum_k b_k zeta_k e^{-mu_k(T-s)} ||.
struct DualityCheck {
	Real lhs, rhs;
	bool ok;
};
DualityCheck duality_check(const ControlProblem& problem, const Real& lambda_cut,
                           const std::vector<Real>& zeta, const ControlOptions& opts = {});

}  // namespace momctl
