#pragma once

#include "momctl/auxiliary.hpp"
#include "momctl/control.hpp"
#include "momctl/hypotheses.hpp"
#include "momctl/linalg.hpp"
#include "momctl/real.hpp"
#include "momctl/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace momctl {

// Rectangle (0,a) x (0,b) with the clamped Bi-Laplace spectrum
// mu = pi^4 (l^2/a^2 + m^2/b^2)^2 and the multiplication control operator
// Q(x,y) = Q1(x) Q2(y), both factors polynomial (coeffs[d] * x^d).
struct RectangleSystem {
	Real a_len, b_len;
	std::string ratio_tag;  // exact symbolic form of a^2/b^2, e.g. "2^(-2/3)"
	LatticeSpectrum spectrum;
	std::vector<Real> q1, q2;
	std::size_t truncation = 0;
};

RectangleSystem make_rectangle_system(const Real& a_len, const Real& b_len,
                                      const std::vector<Real>& q1, const std::vector<Real>& q2,
                                      std::size_t truncation,
                                      const std::string& ratio_tag = "");

// int_0^L Q(x) sin(k pi x / L) sin(l pi x / L) dx; closed form via the
// monomial-against-trigonometric recurrences (any polynomial degree).
Real sine_product_integral(const std::vector<Real>& poly, std::uint64_t k, std::uint64_t l,
                           const Real& length);

// Same integral by composite Gauss-Legendre quadrature (independent path).
Real sine_product_integral_quad(const std::vector<Real>& poly, std::uint64_t k,
                                std::uint64_t l, const Real& length);

// <Q phi_j, phi_k> for k = 1..truncation; phi normalized to unit L^2 norm.
std::vector<Real> multiplication_matrix_elements(const RectangleSystem& sys, std::size_t j);

// Full symmetric truncation x truncation block of the operator.
Matrix multiplication_matrix(const RectangleSystem& sys);

struct SpreadingResult {
	Real c_bj;  // fitted constant in |<Q phi_j, phi_k>| >= exp(-c_bj mu_k^{1-delta})
	Certificate cert;
};
SpreadingResult verify_spreading(const RectangleSystem& sys, std::size_t j, const Real& delta);

struct RothScan {
	Certificate cert;  // no repeated eigenvalues and positive fitted constant
	Real fitted_c;     // largest C with mu_{k+1} - mu_k >= C / mu_{k+1}^{eps/2}
	GapCertificate weak_gap;  // only meaningful when !has_repeats
	bool has_repeats = false;
	std::vector<std::pair<std::uint64_t, std::uint64_t>> repeat_witness;  // lattice pairs
};
RothScan roth_gap_scan(const RectangleSystem& sys, const Real& epsilon);

struct BilinearSimOptions {
	std::size_t steps_init = 512;
	Real tol;  // relative state difference under step doubling
	int max_doublings = 12;
	unsigned digits = 120;
	BilinearSimOptions() : tol(pow(Real(10), -12)) {}
};

struct BilinearTrajectory {
	std::vector<Real> final_state;
	std::size_t steps_used = 0;
	Real richardson_error;  // relative difference between the last two resolutions
	bool converged = false;
};

// psi' + A psi + v(t) Q psi = 0 by Strang splitting: exact diagonal decay
// composed with the kick exp(-theta Q), theta the exact integral of v over
// the step.  v piecewise constant: v_samples[i] on the i-th of equally many
// subintervals of [0, horizon].  v identically zero short-circuits to the
// exact per-mode decay.
BilinearTrajectory simulate_bilinear(const RectangleSystem& sys, const std::vector<Real>& psi0,
                                     const std::vector<Real>& v_samples, const Real& horizon,
                                     const BilinearSimOptions& opts = {});

// Same dynamics with v given as an exponential-sum segment spanning [0, T].
BilinearTrajectory simulate_bilinear_segment(const RectangleSystem& sys,
                                             const std::vector<Real>& psi0,
                                             const ControlSegment& seg, const Real& horizon,
                                             const BilinearSimOptions& opts = {});

struct BilinearResult {
	ControlSegment control;  // accumulated correction control on [0, T]
	std::vector<Real> defect_history;  // defect before iterate 1, after 1, 2, ...
	Real final_error;  // ||psi(T) - Phi_j(T)|| / e^{-mu_j T}
	std::size_t iterations = 0;
	bool converged = false;
	bool diverged = false;
	std::size_t sim_steps = 0;
};

struct ReachOptions {
	Real tol;  // target relative defect
	BilinearSimOptions sim;
	unsigned moment_digits = 0;  // 0 = auto
	ReachOptions() : tol(pow(Real(10), -4)) {}
};

// Fixed-point scheme toward the eigensolution Phi_j(t) = e^{-mu_j t} phi_j:
// each iterate solves the frozen-profile linearized null-control for the
// current defect and re-measures it in the full bilinear simulator.
BilinearResult reach_eigensolution(const RectangleSystem& sys, std::size_t j,
                                   const std::vector<Real>& psi0, const Real& horizon,
                                   std::size_t max_iters, const ReachOptions& opts = {});

// Two-point contraction-order test for the scheme above.  For perturbation
// sizes eps_hi > eps_lo (initial state phi_j + eps phi_{j+1}) the one-iterate
// control is exactly linear in eps, so simulating both at the same fixed
// resolution makes every eps-linear term — including the splitting bias of
// the integrator — cancel exactly in d = eta(hi) - (hi/lo) eta(lo).  The
// amplitude defect along mode j converges fast (no stiff boundary layer) and
// is the dominant genuine component; its hi/lo ratio near (hi/lo)^2 certifies
// quadratic (super-linear) defect reduction.
struct ReachRatio {
	Real eps_hi, eps_lo;
	Real defect_hi, defect_lo;  // mode-j amplitude defects after one iterate
	Real ratio;                 // defect_hi / defect_lo; linear reduction gives hi/lo
	Real richardson_hi, richardson_lo;  // relative change of the defects under doubling
	Real quad_residual;  // | ||d|| - (1 - lo/hi) defect_hi | / defect_hi
	bool superlinear = false;
	std::size_t steps = 0;  // finer of the two matched resolutions
};
ReachRatio perturbation_ratio(const RectangleSystem& sys, std::size_t j, const Real& eps_hi,
                              const Real& eps_lo, const Real& horizon, std::size_t steps,
                              const ReachOptions& opts = {});

}  // namespace momctl
