// End-to-end acceptance run: one line per criterion, exit 0 only if all pass.
#include "momctl/auxiliary.hpp"
#include "momctl/bilinear.hpp"
#include "momctl/control.hpp"
#include "momctl/hypotheses.hpp"
#include "momctl/moment.hpp"
#include "momctl/real.hpp"
#include "momctl/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

using namespace momctl;

namespace {

int failures = 0;

void run(int idx, const std::string& label, const std::function<bool()>& body) {
	bool ok = false;
	std::string note;
	try {
		ok = body();
	} catch (const std::exception& e) {
		note = std::string(" (") + e.what() + ")";
	}
	if (!ok) ++failures;
	std::cout << "criterion " << idx << ": " << (ok ? "PASS" : "FAIL") << " - " << label << note
	          << std::endl;
}

bool close_rel(const Real& x, const Real& y, int digits10) {
	const Real tol = pow(Real(10), -digits10);
	const Real scale = abs(y) > 1 ? abs(y) : Real(1);
	return abs(x - y) <= tol * scale;
}

}  // namespace

int main() {
	DigitScope scope(50);

	SpectralSequence seq = generate_perturbed_square_example(5000);
	WeylFit fit;
	GapCertificate gap;

	run(1, "counting-law fit and gap constants on the 5000-mode example", [&] {
		fit = fit_weyl(seq, Real(1) / 2, Real(1) / 4, seq.values.back());
		gap = check_weak_gap(seq);
		bool ok = fit.c_w1 > 0 && fit.c_w2 > 0 && fit.k_w > 0 && gap.c_w >= 0;
		// sandwich at sampled jump points (the fit itself re-checks all of them)
		for (std::size_t k : {std::size_t(1), std::size_t(100), std::size_t(4999)}) {
			const Real g = seq.values[k];
			const Real n(static_cast<unsigned long>(k + 1));
			ok = ok && fit.c_w1 * pow(g, fit.a) - fit.c_w2 * pow(g, fit.b) <= n;
			ok = ok && n - 1 <= fit.c_w1 * pow(g, fit.a) + fit.c_w2 * pow(g, fit.b);
		}
		// consecutive gaps obey both the certified log bound and the coarse
		// polynomial floor 1/(k(k+1)), attained inside repeated-lattice blocks
		for (std::size_t k = 1; k < seq.values.size(); ++k) {
			const Real kr(static_cast<unsigned long>(k));
			const Real g = seq.values[k] - seq.values[k - 1];
			ok = ok && g >= 1 / (kr * (kr + 1)) * Real("0.999999");
			if (!ok) return false;
		}
		return ok;
	});

	StructuralConstants consts;
	run(2, "auxiliary-sequence certificates at the cutoff and two doublings", [&] {
		const std::uint64_t ks = k_star_index(fit);
		consts = structural_constants(fit, seq.values.front(), perturbed_square_far_value(ks),
		                              Real("0.99"));
		FarOracle far = perturbed_square_far_oracle();
		for (int mult : {1, 2, 4}) {
			const Real lam = consts.lambda0 * mult;
			AuxiliarySequence aux = build_auxiliary(seq, fit, lam, &far);
			if (!aux.monotonicity.passed) return false;
			BlockGapParams params = block_gap_parameters(consts, lam);
			std::vector<Certificate> certs =
				certify_auxiliary(aux, consts, params, gap, 2000, &far);
			for (const Certificate& c : certs)
				if (!(c.passed && c.conclusive && c.worst_margin >= 0)) return false;
		}
		return true;
	});

	run(3, "biorthogonal family vs independent quadrature, 12 modes", [&] {
		std::vector<Real> freqs(seq.values.begin(), seq.values.begin() + 12);
		const Real horizon = Real(1) / 2;
		unsigned digits = default_digits(freqs, horizon);
		if (digits < 300) digits = 300;
		std::vector<MomentSolution> fam = biorthogonal_family(freqs, horizon, digits);
		Matrix cross = cross_moment_matrix(fam, freqs, horizon, digits, 200);
		Real worst = 0;
		for (std::size_t j = 0; j < 12; ++j)
			for (std::size_t k = 0; k < 12; ++k) {
				const Real e = abs(cross(j, k) - (j == k ? 1 : 0));
				if (e > worst) worst = e;
			}
		return worst <= pow(Real(10), -20);
	});

	run(4, "moment residuals on random unit targets, monotone under doubling", [&] {
		std::vector<Real> freqs(seq.values.begin(), seq.values.begin() + 12);
		for (const Real& horizon : {Real(1) / 4, Real(1) / 2}) {
			for (std::uint64_t sd = 1; sd <= 5; ++sd) {
				std::mt19937_64 rng(sd);
				std::uniform_real_distribution<double> u(-1, 1);
				std::vector<Real> x(12);
				for (Real& v : x) v = u(rng);
				const Real nn = norm_l2(x);
				for (Real& v : x) v /= nn;
				MomentProblem mp;
				mp.freqs = freqs;
				mp.horizon = horizon;
				mp.targets = x;
				MomentSolution s1 = solve_moments(mp);
				Real r1 = 0;
				for (const Real& r : s1.residuals)
					if (abs(r) > r1) r1 = abs(r);
				if (!(r1 <= pow(Real(10), -15))) return false;
				mp.precision_digits = 2 * s1.precision_digits;
				MomentSolution s2 = solve_moments(mp);
				Real r2 = 0;
				for (const Real& r : s2.residuals)
					if (abs(r) > r2) r2 = abs(r);
				if (!(r2 <= r1)) return false;
			}
		}
		return true;
	});

	ControlProblem heat;
	heat.spectrum = generate_perturbed_square_example(40);
	heat.truncation = 40;
	heat.b_coeffs = b_profile_expdelta(heat.spectrum.values, Real(1), Real(1) / 2);
	heat.xi0.assign(40, Real(0));
	heat.xi0[0] = 1;
	heat.horizon = Real(1) / 2;

	run(5, "staged null control of the 40-mode system, simulator-verified", [&] {
		ControlSolution sol = lebeau_robbiano_control(heat, Real(1) / 4, Real(7));
		if (!sol.converged) return false;
		if (!(sol.final_state_norm <= pow(Real(10), -8))) return false;
		std::vector<Real> fin = simulate(heat, sol);
		return norm_l2(fin) <= pow(Real(10), -8);
	});

	run(6, "cost envelope over shrinking horizons, exponent 7", [&] {
		std::vector<Real> grid = {Real(15) / 100, Real(2) / 10, Real(3) / 10,
		                          Real(4) / 10, Real(6) / 10, Real(8) / 10};
		CostScan scan = cost_scan(heat, grid, Real(7), Real(1) / 4);
		if (scan.partial) return false;
		if (!(abs(scan.fitted_c) < pow(Real(10), 30))) return false;
		for (std::size_t i = 0; i + 1 < grid.size(); ++i)
			if (!(scan.costs[i + 1] <= scan.costs[i])) return false;  // cheaper with more time
		for (std::size_t i = 0; i < grid.size(); ++i) {
			const Real bound = scan.fitted_c * (1 + pow(grid[i], -7)) + pow(Real(10), -6);
			if (!(log(scan.costs[i]) <= bound)) return false;
		}
		return true;
	});

	run(7, "multiplication-operator closed forms and quadrature agreement", [&] {
		const Real pi2 = pi_value() * pi_value();
		const std::vector<Real> x2 = {Real(0), Real(0), Real(1)};
		const Real off = sine_product_integral(x2, 1, 2, Real(1));
		const Real diag = sine_product_integral(x2, 1, 1, Real(1));
		if (!close_rel(abs(off), Real(8 / (9 * pi2)), 12)) return false;
		if (!close_rel(diag, Real((2 * pi2 - 3) / (12 * pi2)), 12)) return false;
		for (std::uint64_t k = 1; k <= 50; ++k)
			for (std::uint64_t l = 1; l <= 50; ++l) {
				const Real c = sine_product_integral(x2, k, l, Real(1));
				const Real q = sine_product_integral_quad(x2, k, l, Real(1));
				const Real sc = abs(c) > 1 ? abs(c) : Real(1);
				if (!(abs(q - c) <= pow(Real(10), -12) * sc)) return false;
			}
		return true;
	});

	run(8, "fourth-order gap scan: irrational aspect passes, square fails", [&] {
		const std::vector<Real> one = {Real(1)};
		RectangleSystem ir = make_rectangle_system(Real(1), pow(Real(2), Real(1) / 3), one, one,
		                                           200, "2^(-2/3)");
		RothScan rs = roth_gap_scan(ir, Real(1));
		if (rs.has_repeats || !rs.cert.passed || !(rs.fitted_c > 0)) return false;
		RectangleSystem sq = make_rectangle_system(Real(1), Real(1), one, one, 200, "1");
		RothScan rq = roth_gap_scan(sq, Real(1));
		return rq.has_repeats && !rq.cert.passed && !rq.repeat_witness.empty();
	});

	run(9, "bilinear steering to the ground eigensolution, superlinear defect decay", [&] {
		const std::vector<Real> x2 = {Real(0), Real(0), Real(1)};
		RectangleSystem sys = make_rectangle_system(Real(1), pow(Real(2), Real(1) / 3), x2, x2,
		                                            25, "2^(-2/3)");
		std::vector<Real> psi0(25, Real(0));
		psi0[0] = 1;
		psi0[1] = pow(Real(10), -3);
		const Real horizon = Real(1) / 2;
		BilinearResult res;
		{
			DigitScope inner(120);
			res = reach_eigensolution(sys, 1, psi0, horizon, 4);
		}
		if (!res.converged || res.diverged) return false;
		if (!(res.final_error <= pow(Real(10), -4))) return false;
		// re-verify the reported error at doubled simulation resolution
		{
			DigitScope inner(120);
			BilinearSimOptions so;
			so.digits = 120;
			so.steps_init = 2 * res.sim_steps;
			so.max_doublings = 0;
			BilinearTrajectory t = simulate_bilinear_segment(sys, psi0, res.control, horizon, so);
			const Real decay = exp(-sys.spectrum.raw_values[0] * horizon);
			std::vector<Real> d = t.final_state;
			d[0] -= decay;
			if (!(norm_l2(d) / decay <= pow(Real(10), -4))) return false;
		}
		// two-point perturbation test at matched fixed resolution
		DigitScope inner(240);
		ReachOptions ro;
		ro.sim.digits = 240;
		ReachRatio rr = perturbation_ratio(sys, 1, pow(Real(10), -3), pow(Real(10), -4),
		                                   horizon, 8192, ro);
		return rr.superlinear && rr.ratio >= 30;
	});

	run(10, "second-order multiplicity blocks up to rank 5000", [&] {
		LatticeSpectrum lap = generate_rectangle_laplacian(Real(1), Real(1), 5000);
		std::map<std::string, std::size_t> mult;
		for (std::size_t i = 0; i < 5000; ++i)
			mult[decimal_string(lap.raw_values[i], 30)]++;
		bool m2 = false, m3 = false, m4 = false;
		for (const auto& [key, c] : mult) {
			if (c >= 2) m2 = true;
			if (c >= 3) m3 = true;
			if (c >= 4) m4 = true;
		}
		const std::string witness = decimal_string(Real(325 * pi_value() * pi_value()), 30);
		return m2 && m3 && m4 && mult[witness] == 6;
	});

	if (failures == 0)
		std::cout << "all criteria passed" << std::endl;
	else
		std::cout << failures << " criteria failed" << std::endl;
	return failures == 0 ? 0 : 1;
}
