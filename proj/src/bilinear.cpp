#include "momctl/bilinear.hpp"

#include "momctl/errors.hpp"
#include "momctl/moment.hpp"
#include "momctl/quadrature.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace momctl {

RectangleSystem make_rectangle_system(const Real& a_len, const Real& b_len,
                                      const std::vector<Real>& q1, const std::vector<Real>& q2,
                                      std::size_t truncation, const std::string& ratio_tag) {
	if (!(a_len > 0 && b_len > 0))
		throw ValidationError("make_rectangle_system: side lengths must be positive");
	if (truncation == 0)
		throw ValidationError("make_rectangle_system: truncation must be positive");
	if (q1.empty() || q2.empty())
		throw ValidationError("make_rectangle_system: empty factor polynomial");
	RectangleSystem sys;
	sys.a_len = a_len;
	sys.b_len = b_len;
	sys.ratio_tag = ratio_tag;
	sys.q1 = q1;
	sys.q2 = q2;
	sys.truncation = truncation;
	sys.spectrum = generate_rectangle_bilaplacian(a_len, b_len, truncation);
	return sys;
}

namespace {

// C_d(n) = int_0^1 x^d cos(n pi x) dx and S_d(n) = int_0^1 x^d sin(n pi x) dx
// for d = 0..dmax, by integration-by-parts recurrences.
void monomial_trig_integrals(std::uint64_t n, std::size_t dmax, std::vector<Real>& c,
                             std::vector<Real>& s) {
	c.assign(dmax + 1, Real(0));
	s.assign(dmax + 1, Real(0));
	if (n == 0) {
		for (std::size_t d = 0; d <= dmax; ++d)
			c[d] = Real(1) / Real(static_cast<unsigned long>(d + 1));
		return;
	}
	const Real npi = Real(static_cast<unsigned long>(n)) * pi_value();
	const Real sgn = (n % 2 == 0) ? Real(1) : Real(-1);  // (-1)^n
	c[0] = 0;
	s[0] = (1 - sgn) / npi;
	for (std::size_t d = 1; d <= dmax; ++d) {
		const Real dr(static_cast<unsigned long>(d));
		c[d] = -(dr / npi) * s[d - 1];
		s[d] = -sgn / npi + (dr / npi) * c[d - 1];
	}
}

}  // namespace

Real sine_product_integral(const std::vector<Real>& poly, std::uint64_t k, std::uint64_t l,
                           const Real& length) {
	if (k == 0 || l == 0) throw ValidationError("sine_product_integral: indices are 1-based");
	if (poly.empty()) throw ValidationError("sine_product_integral: empty polynomial");
	const std::size_t dmax = poly.size() - 1;
	const std::uint64_t nd = k > l ? k - l : l - k;
	const std::uint64_t ns = k + l;
	std::vector<Real> cd, sd, cs, ss;
	monomial_trig_integrals(nd, dmax, cd, sd);
	monomial_trig_integrals(ns, dmax, cs, ss);
	const Real len = promoted(length);
	Real acc = 0;
	Real scale = len;  // length^{d+1}
	for (std::size_t d = 0; d <= dmax; ++d) {
		acc += promoted(poly[d]) * scale * (cd[d] - cs[d]) / 2;
		scale *= len;
	}
	return acc;
}

Real sine_product_integral_quad(const std::vector<Real>& poly, std::uint64_t k,
                                std::uint64_t l, const Real& length) {
	if (k == 0 || l == 0)
		throw ValidationError("sine_product_integral_quad: indices are 1-based");
	const std::size_t panels = std::max<std::size_t>(16, static_cast<std::size_t>(k + l) / 2);
	const QuadRule& rule = gauss_legendre_unit(24);
	const Real len = promoted(length);
	const Real pi = pi_value();
	const Real fk = Real(static_cast<unsigned long>(k)) * pi;
	const Real fl = Real(static_cast<unsigned long>(l)) * pi;
	const Real pw = Real(1) / Real(static_cast<unsigned long>(panels));
	Real acc = 0;
	for (std::size_t p = 0; p < panels; ++p) {
		for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
			const Real u = (Real(static_cast<unsigned long>(p)) + rule.nodes[q]) * pw;
			Real qval = 0;
			const Real x = len * u;
			for (std::size_t d = poly.size(); d-- > 0;) qval = qval * x + promoted(poly[d]);
			acc += rule.weights[q] * pw * qval * sin(fk * u) * sin(fl * u);
		}
	}
	return acc * len;
}

std::vector<Real> multiplication_matrix_elements(const RectangleSystem& sys, std::size_t j) {
	if (j == 0 || j > sys.truncation)
		throw ValidationError("multiplication_matrix_elements: mode index out of range");
	const auto& pj = sys.spectrum.pairs[j - 1];
	const Real norm = 4 / (promoted(sys.a_len) * promoted(sys.b_len));
	std::vector<Real> out(sys.truncation);
	for (std::size_t k = 1; k <= sys.truncation; ++k) {
		const auto& pk = sys.spectrum.pairs[k - 1];
		const Real x = sine_product_integral(sys.q1, pj.first, pk.first, sys.a_len);
		const Real y = sine_product_integral(sys.q2, pj.second, pk.second, sys.b_len);
		out[k - 1] = norm * x * y;
	}
	return out;
}

Matrix multiplication_matrix(const RectangleSystem& sys) {
	Matrix m(sys.truncation, sys.truncation);
	for (std::size_t j = 1; j <= sys.truncation; ++j) {
		std::vector<Real> row = multiplication_matrix_elements(sys, j);
		for (std::size_t k = 0; k < sys.truncation; ++k) m(j - 1, k) = row[k];
	}
	return m;
}

SpreadingResult verify_spreading(const RectangleSystem& sys, std::size_t j, const Real& delta) {
	if (!(delta > 0 && delta < 1))
		throw ValidationError("verify_spreading: delta must lie in (0, 1)");
	std::vector<Real> elems = multiplication_matrix_elements(sys, j);
	SpreadingResult res;
	res.cert.name = "spreading";
	res.cert.range_lo = 1;
	res.cert.range_hi = sys.truncation;
	res.cert.passed = true;
	bool have = false;
	for (std::size_t k = 0; k < sys.truncation; ++k) {
		const Real mag = abs(elems[k]);
		if (!(mag > 0)) {
			res.cert.passed = false;
			res.cert.witness_index = k + 1;
			res.cert.worst_margin = 0;
			return res;
		}
		const Real ratio = -log(mag) / pow(sys.spectrum.raw_values[k], 1 - delta);
		if (!have || ratio > res.c_bj) res.c_bj = ratio;
		if (!have || mag < res.cert.worst_margin) {
			res.cert.worst_margin = mag;
			res.cert.witness_index = k + 1;
		}
		have = true;
	}
	return res;
}

RothScan roth_gap_scan(const RectangleSystem& sys, const Real& epsilon) {
	if (!(epsilon > 0)) throw ValidationError("roth_gap_scan: epsilon must be positive");
	const std::vector<Real>& v = sys.spectrum.raw_values;
	const std::size_t n = std::min(sys.truncation, v.size());
	if (n < 2) throw ValidationError("roth_gap_scan: need at least two eigenvalues");

	RothScan scan;
	scan.cert.name = "roth-gap";
	scan.cert.range_lo = 1;
	scan.cert.range_hi = n;

	for (std::size_t i = 0; i + 1 < n; ++i) {
		if (v[i + 1] == v[i]) {
			scan.has_repeats = true;
			scan.cert.passed = false;
			scan.cert.worst_margin = 0;
			scan.cert.witness_index = i + 2;
			for (std::size_t r = 0; r < n; ++r)
				if (v[r] == v[i]) scan.repeat_witness.push_back(sys.spectrum.pairs[r]);
			return scan;
		}
	}

	bool have = false;
	for (std::size_t i = 0; i + 1 < n; ++i) {
		const Real c = (v[i + 1] - v[i]) * pow(v[i + 1], epsilon / 2);
		if (!have || c < scan.fitted_c) {
			scan.fitted_c = c;
			scan.cert.witness_index = i + 1;
			have = true;
		}
	}
	scan.cert.worst_margin = scan.fitted_c;
	scan.cert.passed = scan.fitted_c > 0;

	SpectralSequence seq;
	seq.values.assign(v.begin(), v.begin() + n);
	seq.generator_tag = "bilaplacian-prefix";
	seq.first_value = seq.values.front();
	scan.weak_gap = check_weak_gap(seq);
	return scan;
}

namespace {

struct KickBasis {
	Matrix v;
	std::vector<Real> d;
};

// One fixed-resolution Strang pass: e^{-hA/2} e^{-theta_i Q} e^{-hA/2} per step.
std::vector<Real> strang_run(const RectangleSystem& sys, const std::vector<Real>& psi0,
                             const std::vector<Real>& thetas, const Real& horizon,
                             const KickBasis& kb) {
	const std::size_t n = sys.truncation;
	const std::size_t steps = thetas.size();
	const Real h = promoted(horizon) / Real(static_cast<unsigned long>(steps));
	std::vector<Real> half(n);
	for (std::size_t k = 0; k < n; ++k)
		half[k] = exp(-promoted(sys.spectrum.raw_values[k]) * h / 2);

	std::vector<Real> state(n), w(n);
	for (std::size_t k = 0; k < n; ++k) state[k] = promoted(psi0[k]);

	for (std::size_t i = 0; i < steps; ++i) {
		for (std::size_t k = 0; k < n; ++k) state[k] *= half[k];
		if (thetas[i] != 0) {
			const Real th = promoted(thetas[i]);
			for (std::size_t r = 0; r < n; ++r) {
				Real acc = 0;
				for (std::size_t k = 0; k < n; ++k) acc += kb.v(k, r) * state[k];
				w[r] = acc * exp(-th * kb.d[r]);
			}
			for (std::size_t k = 0; k < n; ++k) {
				Real acc = 0;
				for (std::size_t r = 0; r < n; ++r) acc += kb.v(k, r) * w[r];
				state[k] = acc;
			}
		}
		for (std::size_t k = 0; k < n; ++k) state[k] *= half[k];
	}
	return state;
}

std::vector<Real> exact_free_decay(const RectangleSystem& sys, const std::vector<Real>& psi0,
                                   const Real& horizon) {
	std::vector<Real> out(sys.truncation);
	const Real t = promoted(horizon);
	for (std::size_t k = 0; k < sys.truncation; ++k)
		out[k] = exp(-promoted(sys.spectrum.raw_values[k]) * t) * promoted(psi0[k]);
	return out;
}

// Step integrals of the exponential-sum control at the segment's own
// precision, then rounded to out_digits for the splitting run.
std::vector<Real> segment_thetas(const ControlSegment& seg, const Real& horizon,
                                 std::size_t steps, unsigned out_digits) {
	// Relative precision suffices here: the coefficients enter linearly and
	// the exponentials span a huge dynamic range but need no extra digits.
	DigitScope scope(out_digits + 60);
	const std::size_t m = seg.coeffs.size();
	const Real t = promoted(horizon);
	const Real h = t / Real(static_cast<unsigned long>(steps));
	std::vector<Real> e(m), g(m), base(m);
	for (std::size_t j = 0; j < m; ++j) {
		const Real nu = promoted(seg.basis_freqs[j]);
		e[j] = exp(-nu * (t - h));  // e^{-nu (T - t_1)}, t_1 the first step end
		g[j] = exp(nu * h);
		base[j] = promoted(seg.coeffs[j]) * exp_integral_closed(nu, h);
	}
	std::vector<Real> thetas(steps);
	for (std::size_t i = 0; i < steps; ++i) {
		Real acc = 0;
		for (std::size_t j = 0; j < m; ++j) {
			acc += base[j] * e[j];
			e[j] *= g[j];
		}
		acc.precision(out_digits);
		thetas[i] = acc;
	}
	return thetas;
}

template <typename ThetaBuilder>
BilinearTrajectory run_doubling(const RectangleSystem& sys, const std::vector<Real>& psi0,
                                const Real& horizon, const BilinearSimOptions& opts,
                                std::size_t steps0, ThetaBuilder&& build_thetas) {
	DigitScope scope(opts.digits);
	Matrix q = multiplication_matrix(sys);
	KickBasis kb;
	jacobi_eigensym(q, kb.d, kb.v);

	BilinearTrajectory traj;
	std::size_t steps = steps0;
	std::vector<Real> prev = strang_run(sys, psi0, build_thetas(steps), horizon, kb);
	if (opts.max_doublings == 0) {  // fixed-resolution run, no doubling check
		traj.final_state = std::move(prev);
		traj.steps_used = steps;
		traj.richardson_error = 0;
		traj.converged = true;
		return traj;
	}
	for (int d = 0; d < opts.max_doublings; ++d) {
		steps *= 2;
		std::vector<Real> cur = strang_run(sys, psi0, build_thetas(steps), horizon, kb);
		Real diff = 0, scale = 0;
		for (std::size_t k = 0; k < sys.truncation; ++k) {
			diff += (cur[k] - prev[k]) * (cur[k] - prev[k]);
			scale += cur[k] * cur[k];
		}
		traj.richardson_error = scale > 0 ? Real(sqrt(diff / scale)) : Real(sqrt(diff));
		prev = std::move(cur);
		if (traj.richardson_error < opts.tol) {
			traj.converged = true;
			break;
		}
	}
	traj.final_state = std::move(prev);
	traj.steps_used = steps;
	if (!traj.converged)
		throw UnconvergedError("simulate_bilinear: step doubling ceiling reached, estimate " +
		                       decimal_string(traj.richardson_error, 8));
	return traj;
}

}  // namespace

BilinearTrajectory simulate_bilinear(const RectangleSystem& sys, const std::vector<Real>& psi0,
                                     const std::vector<Real>& v_samples, const Real& horizon,
                                     const BilinearSimOptions& opts) {
	if (psi0.size() < sys.truncation)
		throw ValidationError("simulate_bilinear: psi0 shorter than truncation");
	if (!(horizon > 0)) throw ValidationError("simulate_bilinear: horizon must be positive");

	bool all_zero = true;
	for (const Real& v : v_samples)
		if (v != 0) all_zero = false;
	if (v_samples.empty() || all_zero) {
		DigitScope scope(opts.digits);
		BilinearTrajectory traj;
		traj.final_state = exact_free_decay(sys, psi0, horizon);
		traj.steps_used = 0;
		traj.richardson_error = 0;
		traj.converged = true;
		return traj;
	}

	std::size_t steps0 = v_samples.size();
	while (steps0 < opts.steps_init) steps0 *= 2;
	const std::size_t cells = v_samples.size();
	return run_doubling(sys, psi0, horizon, opts, steps0, [&](std::size_t steps) {
		const Real h = promoted(horizon) / Real(static_cast<unsigned long>(steps));
		std::vector<Real> thetas(steps);
		for (std::size_t i = 0; i < steps; ++i)
			thetas[i] = promoted(v_samples[i * cells / steps]) * h;
		return thetas;
	});
}

BilinearTrajectory simulate_bilinear_segment(const RectangleSystem& sys,
                                             const std::vector<Real>& psi0,
                                             const ControlSegment& seg, const Real& horizon,
                                             const BilinearSimOptions& opts) {
	if (psi0.size() < sys.truncation)
		throw ValidationError("simulate_bilinear_segment: psi0 shorter than truncation");
	if (!(seg.t_start == 0 && seg.t_end == horizon))
		throw ValidationError("simulate_bilinear_segment: segment must span [0, horizon]");
	bool all_zero = true;
	for (const Real& c : seg.coeffs)
		if (c != 0) all_zero = false;
	if (all_zero) {
		DigitScope scope(opts.digits);
		BilinearTrajectory traj;
		traj.final_state = exact_free_decay(sys, psi0, horizon);
		traj.steps_used = 0;
		traj.richardson_error = 0;
		traj.converged = true;
		return traj;
	}
	return run_doubling(sys, psi0, horizon, opts, opts.steps_init, [&](std::size_t steps) {
		return segment_thetas(seg, horizon, steps, opts.digits);
	});
}

BilinearResult reach_eigensolution(const RectangleSystem& sys, std::size_t j,
                                   const std::vector<Real>& psi0, const Real& horizon,
                                   std::size_t max_iters, const ReachOptions& opts) {
	if (j != 1)
		throw ValidationError(
			"reach_eigensolution: only the lowest mode (j = 1) is supported; higher modes "
			"would need negative shifted frequencies in the moment basis");
	if (psi0.size() < sys.truncation)
		throw ValidationError("reach_eigensolution: psi0 shorter than truncation");
	if (!(horizon > 0)) throw ValidationError("reach_eigensolution: horizon must be positive");
	const std::size_t n = sys.truncation;

	// Shifted frequencies omega_k = mu_k - mu_j; omega_j = 0.
	std::vector<Real> omegas(n);
	for (std::size_t k = 0; k < n; ++k)
		omegas[k] = sys.spectrum.raw_values[k] - sys.spectrum.raw_values[j - 1];
	const unsigned mdigits =
		opts.moment_digits ? opts.moment_digits : default_digits(omegas, horizon);

	BilinearResult res;
	res.control.t_start = 0;
	res.control.t_end = horizon;
	res.control.basis_freqs = omegas;
	res.control.coeffs.assign(n, Real(0));
	res.control.precision_digits = mdigits;
	res.control.norm_l2 = 0;

	// Defect at t = 0 in the rescaled variables e^{mu_j t} psi - phi_j.
	std::vector<Real> eta0(n);
	for (std::size_t k = 0; k < n; ++k) eta0[k] = psi0[k] - (k == j - 1 ? Real(1) : Real(0));
	const Real e0 = norm_l2(eta0);
	res.defect_history.push_back(e0);
	if (e0 == 0) {
		res.converged = true;
		res.final_error = 0;
		return res;
	}

	// Frozen-profile couplings g_k = <Q phi_j, phi_k> at solve precision.
	std::vector<Real> g;
	{
		DigitScope scope(mdigits);
		g = multiplication_matrix_elements(sys, j);
		for (std::size_t k = 0; k < n; ++k)
			if (!(abs(g[k]) > 0))
				throw ValidationError("reach_eigensolution: vanishing coupling at mode " +
				                      std::to_string(k + 1));
	}

	auto solve_correction = [&](const std::vector<Real>& targets) {
		MomentProblem mp;
		mp.freqs = omegas;
		mp.horizon = horizon;
		mp.targets = targets;
		mp.precision_digits = mdigits;
		mp.allow_zero_first_freq = true;
		SolveOptions so;
		so.compute_residuals = false;
		return solve_moments(mp, so);
	};

	// First correction targets from the t = 0 defect.
	{
		DigitScope scope(mdigits);
		std::vector<Real> x(n);
		for (std::size_t k = 0; k < n; ++k) x[k] = promoted(eta0[k]) / promoted(g[k]);
		MomentSolution sol = solve_correction(x);
		for (std::size_t k = 0; k < n; ++k) res.control.coeffs[k] += sol.coeffs[k];
	}

	Real prev_defect = e0;
	int growth_streak = 0;
	for (std::size_t iter = 1; iter <= max_iters; ++iter) {
		BilinearTrajectory traj =
			simulate_bilinear_segment(sys, psi0, res.control, horizon, opts.sim);
		res.sim_steps = traj.steps_used;
		res.iterations = iter;

		DigitScope scope(opts.sim.digits);
		const Real psij = traj.final_state[j - 1];
		if (!(abs(psij) > 0))
			throw NumericalError("reach_eigensolution: mode-" + std::to_string(j) +
			                     " amplitude vanished at horizon");
		// Rescaled defect eta_k = psi_k(T)/psi_j(T) (zero at k = j).
		std::vector<Real> eta(n, Real(0));
		for (std::size_t k = 0; k < n; ++k)
			if (k != j - 1) eta[k] = traj.final_state[k] / psij;
		const Real defect = norm_l2(eta);
		res.defect_history.push_back(defect);

		// Unrescaled relative error ||psi(T) - Phi_j(T)|| / e^{-mu_j T}.
		const Real grow = exp(promoted(sys.spectrum.raw_values[j - 1]) * promoted(horizon));
		Real err_sq = 0;
		for (std::size_t k = 0; k < n; ++k) {
			Real d = promoted(traj.final_state[k]) * grow - (k == j - 1 ? Real(1) : Real(0));
			err_sq += d * d;
		}
		res.final_error = sqrt(err_sq);

		if (res.final_error <= opts.tol) {
			res.converged = true;
			break;
		}
		growth_streak = defect > prev_defect ? growth_streak + 1 : 0;
		if (growth_streak >= 2) {
			res.diverged = true;
			break;
		}
		prev_defect = defect;
		if (iter == max_iters) break;

		// Next correction from the at-horizon defect, pulled back through the
		// solver's decayed-target normalization.
		DigitScope mscope(mdigits);
		const Real t = promoted(horizon);
		std::vector<Real> x(n);
		for (std::size_t k = 0; k < n; ++k)
			x[k] = promoted(eta[k]) * exp(promoted(omegas[k]) * t) / promoted(g[k]);
		MomentSolution sol = solve_correction(x);
		for (std::size_t k = 0; k < n; ++k) res.control.coeffs[k] += sol.coeffs[k];
	}

	// Record the accumulated control's own norm over [0, T].
	{
		DigitScope scope(mdigits);
		Matrix gm = gram_matrix(omegas, horizon, mdigits);
		res.control.norm_l2 =
			sqrt(dot(res.control.coeffs, mat_vec(gm, res.control.coeffs)));
	}
	return res;
}

ReachRatio perturbation_ratio(const RectangleSystem& sys, std::size_t j, const Real& eps_hi,
                              const Real& eps_lo, const Real& horizon, std::size_t steps,
                              const ReachOptions& opts) {
	if (!(eps_hi > eps_lo && eps_lo > 0))
		throw ValidationError("perturbation_ratio: need eps_hi > eps_lo > 0");
	if (j >= sys.truncation)
		throw ValidationError("perturbation_ratio: perturbed mode j + 1 out of range");
	if (steps < 2) throw ValidationError("perturbation_ratio: need at least two steps");
	const std::size_t n = sys.truncation;

	DigitScope scope(opts.sim.digits);
	ReachRatio out;
	out.eps_hi = promoted(eps_hi);
	out.eps_lo = promoted(eps_lo);
	out.steps = 2 * steps;
	const Real grow = exp(promoted(sys.spectrum.raw_values[j - 1]) * promoted(horizon));

	// Per perturbation size: one-iterate control, then the same trajectory at
	// two matched resolutions.  eta[0] is the mode-j amplitude defect, the
	// rest the rescaled off-mode components.
	std::vector<Real> eta_hi, eta_lo;
	Real rich[2];
	const Real eps_pair[2] = {out.eps_hi, out.eps_lo};
	for (int s = 0; s < 2; ++s) {
		std::vector<Real> psi0(n, Real(0));
		psi0[j - 1] = 1;
		psi0[j] = eps_pair[s];
		BilinearResult one = reach_eigensolution(sys, j, psi0, horizon, 1, opts);
		std::vector<Real> eta_c, eta_f;
		for (int r = 0; r < 2; ++r) {
			BilinearSimOptions so = opts.sim;
			so.steps_init = r == 0 ? steps : 2 * steps;
			so.max_doublings = 0;
			BilinearTrajectory tr =
				simulate_bilinear_segment(sys, psi0, one.control, horizon, so);
			std::vector<Real> eta(n);
			eta[0] = tr.final_state[j - 1] * grow - 1;
			std::size_t w = 1;
			for (std::size_t k = 0; k < n; ++k)
				if (k != j - 1) eta[w++] = tr.final_state[k] / tr.final_state[j - 1];
			(r == 0 ? eta_c : eta_f) = std::move(eta);
		}
		const Real scale = abs(eta_f[0]);
		rich[s] = scale > 0 ? Real(abs(eta_f[0] - eta_c[0]) / scale) : abs(eta_f[0] - eta_c[0]);
		(s == 0 ? eta_hi : eta_lo) = std::move(eta_f);
	}
	out.richardson_hi = rich[0];
	out.richardson_lo = rich[1];
	out.defect_hi = abs(eta_hi[0]);
	out.defect_lo = abs(eta_lo[0]);
	if (!(out.defect_lo > 0)) {
		out.ratio = 0;
		return out;
	}
	out.ratio = out.defect_hi / out.defect_lo;

	// eps-linear cancellation: d carries only the genuine quadratic response.
	const Real lam = out.eps_hi / out.eps_lo;
	std::vector<Real> d(n);
	for (std::size_t k = 0; k < n; ++k) d[k] = eta_hi[k] - lam * eta_lo[k];
	out.quad_residual = abs(norm_l2(d) - (1 - 1 / lam) * out.defect_hi) / out.defect_hi;

	out.superlinear = out.richardson_hi < Real(1) / 100 && out.richardson_lo < Real(1) / 100 &&
	                  out.ratio >= 3 * lam && out.quad_residual < Real(1) / 10;
	return out;
}

}  // namespace momctl
