#include "momctl/auxiliary.hpp"
#include "momctl/bilinear.hpp"
#include "momctl/control.hpp"
#include "momctl/errors.hpp"
#include "momctl/hypotheses.hpp"
#include "momctl/io.hpp"
#include "momctl/moment.hpp"
#include "momctl/sequence.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace momctl;

namespace {

unsigned env_default_digits() {
	const char* v = std::getenv("MOMCTL_DIGITS");
	if (!v) return 50;
	const long d = std::strtol(v, nullptr, 10);
	if (d < 10 || d > 1000000) throw ValidationError("MOMCTL_DIGITS out of range");
	return static_cast<unsigned>(d);
}

std::vector<Real> seeded_unit_vector(std::size_t n, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<double> dist(-1.0, 1.0);
	std::vector<Real> x(n);
	for (std::size_t i = 0; i < n; ++i) x[i] = Real(dist(rng));
	const Real nrm = norm_l2(x);
	if (nrm > 0)
		for (Real& v : x) v /= nrm;
	return x;
}

// "random:N" (seeded), "mode:k" (unit vector), or a file of decimal values.
std::vector<Real> load_vector_spec(const std::string& spec, std::size_t n,
                                   std::uint64_t seed) {
	if (spec.rfind("random:", 0) == 0) {
		const std::size_t m = std::stoull(spec.substr(7));
		return seeded_unit_vector(m ? m : n, seed);
	}
	if (spec.rfind("mode:", 0) == 0) {
		const std::size_t k = std::stoull(spec.substr(5));
		if (k == 0 || k > n) throw ValidationError("mode index out of range: " + spec);
		std::vector<Real> x(n, Real(0));
		x[k - 1] = 1;
		return x;
	}
	return read_reals_file(spec);
}

std::vector<Real> load_b_profile(const std::string& spec, const std::vector<Real>& mu) {
	if (spec.rfind("expdelta:", 0) == 0) {
		std::vector<Real> p = parse_reals_csv(spec.substr(9));
		if (p.size() != 2)
			throw ValidationError("b-profile expdelta needs two parameters C,delta");
		return b_profile_expdelta(mu, p[0], p[1]);
	}
	return read_reals_file(spec);
}

// Monomial product like "x^2*y^2", with an optional leading coefficient.
void parse_q(const std::string& q, std::vector<Real>& q1, std::vector<Real>& q2) {
	Real coef = 1;
	std::size_t dx = 0, dy = 0;
	bool have_x = false, have_y = false;
	std::string tok;
	auto take = [&](const std::string& t) {
		if (t.empty()) return;
		if (t[0] == 'x' || t[0] == 'y') {
			std::size_t d = 1;
			if (t.size() > 1) {
				if (t[1] != '^') throw ValidationError("cannot parse factor: " + t);
				d = std::stoull(t.substr(2));
			}
			if (t[0] == 'x') {
				dx = d;
				have_x = true;
			} else {
				dy = d;
				have_y = true;
			}
		} else {
			coef *= Real(t);
		}
	};
	for (char ch : q) {
		if (ch == '*') {
			take(tok);
			tok.clear();
		} else if (ch != ' ') {
			tok += ch;
		}
	}
	take(tok);
	if (!have_x && !have_y) throw ValidationError("weight must involve x or y: " + q);
	q1.assign(dx + 1, Real(0));
	q1[dx] = coef;
	q2.assign(dy + 1, Real(0));
	q2[dy] = 1;
}

WeylFit fit_from_json(const Json& j) {
	WeylFit f;
	f.a = Real(j.at("a").get<std::string>());
	f.b = Real(j.at("b").get<std::string>());
	f.c_w1 = Real(j.at("c_w1").get<std::string>());
	f.c_w2 = Real(j.at("c_w2").get<std::string>());
	f.k_w = Real(j.at("k_w").get<std::string>());
	return f;
}

StructuralConstants constants_from_json(const Json& j) {
	StructuralConstants c;
	c.epsilon = Real(j.at("epsilon").get<std::string>());
	c.lambda0 = Real(j.at("lambda0").get<std::string>());
	c.theta = Real(j.at("theta").get<std::string>());
	c.k_star = j.at("k_star").get<std::uint64_t>();
	c.kappa = Real(j.at("kappa").get<std::string>());
	c.alpha = Real(j.at("alpha").get<std::string>());
	c.beta_defined = j.contains("beta");
	if (c.beta_defined) c.beta = Real(j.at("beta").get<std::string>());
	c.delta = Real(j.at("delta").get<std::string>());
	c.a = Real(j.at("a").get<std::string>());
	c.b = Real(j.at("b").get<std::string>());
	c.c_w1 = Real(j.at("c_w1").get<std::string>());
	c.c_w2 = Real(j.at("c_w2").get<std::string>());
	c.k_w = Real(j.at("k_w").get<std::string>());
	return c;
}

struct Common {
	unsigned digits = 0;
	std::uint64_t seed = 1;
	int threads = 0;  // accepted for interface stability; modules run serially
};

Json base_config(const Common& c, const std::string& cmd) {
	Json j;
	j["command"] = cmd;
	j["digits"] = c.digits;
	j["seed"] = c.seed;
	return j;
}

int cmd_spectra(const Common& com, const std::string& generator, const std::string& a_len,
                const std::string& b_len, std::size_t count, const std::string& a_exp,
                const std::string& in, const std::string& out) {
	DigitScope scope(com.digits);
	Json config = base_config(com, "spectra");
	config["generator"] = generator;
	config["count"] = count;
	Json meta;
	if (generator == "laplacian" || generator == "bilaplacian") {
		config["a_len"] = a_len;
		config["b_len"] = b_len;
		LatticeSpectrum spec =
			generator == "laplacian"
				? generate_rectangle_laplacian(Real(a_len), Real(b_len), count)
				: generate_rectangle_bilaplacian(Real(a_len), Real(b_len), count);
		write_lattice_csv(out, spec);
		meta["entries"] = spec.raw_values.size();
	} else if (generator == "perturbed-square") {
		SpectralSequence seq = generate_perturbed_square_example(count);
		write_spectrum_csv(out, seq);
		meta["entries"] = seq.values.size();
		meta["generator_tag"] = seq.generator_tag;
	} else if (generator == "densify") {
		if (in.empty()) throw ValidationError("densify needs --in");
		config["a_exponent"] = a_exp;
		SpectralSequence seq = read_spectrum_csv(in);
		DensifiedSequence dens = densify_sequence(seq, Real(a_exp));
		write_spectrum_csv(out, dens.seq);
		meta["entries"] = dens.seq.values.size();
	} else {
		throw ValidationError("unknown generator: " + generator);
	}
	write_json_file(out + ".json", with_provenance(meta, config, com.seed, com.digits));
	return 0;
}

int cmd_verify(const Common& com, const std::string& a, const std::string& b,
               const std::string& delta, const std::string& gamma_max, const std::string& in,
               const std::string& out) {
	DigitScope scope(com.digits);
	SpectralSequence seq = read_spectrum_csv(in);
	const Real gmax = gamma_max.empty() ? seq.values.back() : Real(gamma_max);
	WeylFit fit = fit_weyl(seq, Real(a), Real(b), gmax);
	GapCertificate gap = check_weak_gap(seq);
	const std::uint64_t ks = k_star_index(fit);
	// mu at the condensation crossing: exact when inside the prefix, far
	// oracle for the perturbed-square generator, one-term upper bound otherwise.
	Real mu_ks;
	if (ks <= seq.values.size()) {
		mu_ks = seq.values[ks - 1];
	} else if (seq.generator_tag == "perturbed-square") {
		mu_ks = perturbed_square_far_value(ks);
	} else {
		mu_ks = fit.k_w * pow(Real(static_cast<unsigned long>(ks)), 1 / fit.a);
	}
	StructuralConstants consts = structural_constants(fit, seq.values.front(), mu_ks, Real(delta));
	Json config = base_config(com, "verify");
	config["a"] = a;
	config["b"] = b;
	config["delta"] = delta;
	config["in"] = in;
	Json payload;
	payload["weyl_fit"] = to_json(fit);
	payload["weak_gap"] = to_json(gap);
	payload["constants"] = to_json(consts);
	payload["checked_entries"] = seq.values.size();
	write_json_file(out, with_provenance(payload, config, com.seed, com.digits));
	return 0;
}

int cmd_certify(const Common& com, const std::string& lambda, std::uint64_t range,
                const std::string& in, const std::string& constants_path,
                const std::string& out) {
	DigitScope scope(com.digits);
	SpectralSequence seq = read_spectrum_csv(in);
	Json cj = read_json_file(constants_path);
	const Json& result = cj.contains("result") ? cj.at("result") : cj;
	WeylFit fit = fit_from_json(result.at("weyl_fit"));
	GapCertificate gap;
	gap.c_w = Real(result.at("weak_gap").at("c_w").get<std::string>());
	StructuralConstants consts = constants_from_json(result.at("constants"));

	FarOracle far;
	const FarOracle* farp = nullptr;
	if (seq.generator_tag == "perturbed-square") {
		far = perturbed_square_far_oracle();
		farp = &far;
	}
	AuxiliarySequence aux = build_auxiliary(seq, fit, Real(lambda), farp);
	BlockGapParams params = block_gap_parameters(consts, Real(lambda));
	std::vector<Certificate> certs =
		certify_auxiliary(aux, consts, params, gap, range, farp);

	Json config = base_config(com, "certify");
	config["lambda"] = lambda;
	config["range"] = range;
	config["in"] = in;
	Json payload = Json::array();
	bool all_passed = true;
	for (const Certificate& c : certs) {
		payload.push_back(to_json(c));
		// inconclusive = range too short to exercise the check; not a failure
		if (!c.passed && c.conclusive) all_passed = false;
	}
	write_json_file(out, with_provenance(payload, config, com.seed, com.digits));
	return all_passed ? 0 : 4;
}

int cmd_moment(const Common& com, const std::string& freqs_path, const std::string& horizon,
               const std::string& targets_spec, const std::string& weights_path,
               bool biorthogonal, const std::string& out) {
	std::vector<Real> freqs = read_reals_file(freqs_path);
	Json config = base_config(com, "moment");
	config["freqs"] = freqs_path;
	config["horizon"] = horizon;
	Json payload;
	const unsigned digits = com.digits > 50 ? com.digits : 0;
	if (biorthogonal) {
		std::vector<MomentSolution> family = biorthogonal_family(freqs, Real(horizon), digits);
		DigitScope scope(family.front().precision_digits);
		Json fam = Json::array();
		for (const MomentSolution& s : family) fam.push_back(to_json(s));
		payload["family"] = fam;
	} else {
		if (targets_spec.empty()) throw ValidationError("moment needs --targets");
		MomentProblem mp;
		mp.freqs = freqs;
		mp.horizon = Real(horizon);
		mp.targets = load_vector_spec(targets_spec, freqs.size(), com.seed);
		if (mp.targets.size() != freqs.size())
			throw ValidationError("targets length does not match frequencies");
		if (!weights_path.empty()) mp.weights = read_reals_file(weights_path);
		mp.precision_digits = digits;
		MomentSolution sol = solve_moments(mp);
		DigitScope scope(sol.precision_digits);
		payload = to_json(sol);
	}
	write_json_file(out, with_provenance(payload, config, com.seed, com.digits));
	return 0;
}

ControlProblem load_control_problem(const std::string& spectrum_path,
                                    const std::string& b_spec, const std::string& xi0_spec,
                                    const std::string& horizon, std::size_t truncation,
                                    bool shift, std::uint64_t seed) {
	ControlProblem p;
	p.spectrum = read_spectrum_csv(spectrum_path);
	p.truncation = truncation ? truncation : p.spectrum.values.size();
	if (p.truncation > p.spectrum.values.size())
		throw ValidationError("truncation exceeds spectrum length");
	p.b_coeffs = load_b_profile(b_spec, p.spectrum.values);
	p.xi0 = load_vector_spec(xi0_spec, p.truncation, seed);
	p.horizon = Real(horizon);
	if (shift && p.spectrum.values.front() < 1)
		p = apply_shift(p, 1 - p.spectrum.values.front());
	return p;
}

int cmd_control(const Common& com, const std::string& spectrum_path, const std::string& b_spec,
                const std::string& xi0_spec, const std::string& horizon,
                const std::string& alpha, const std::string& delta_param,
                const std::string& tol, std::size_t truncation, bool shift,
                const std::string& out) {
	DigitScope scope(com.digits);
	ControlProblem p =
		load_control_problem(spectrum_path, b_spec, xi0_spec, horizon, truncation, shift,
		                     com.seed);
	ControlOptions opts;
	if (!tol.empty()) opts.tol = Real(tol);
	ControlSolution sol = lebeau_robbiano_control(p, Real(delta_param), Real(alpha), opts);
	Json config = base_config(com, "control");
	config["spectrum"] = spectrum_path;
	config["horizon"] = horizon;
	config["alpha"] = alpha;
	config["delta_param"] = delta_param;
	config["shift"] = shift;
	write_json_file(out, with_provenance(to_json(sol), config, com.seed, com.digits));
	return sol.converged ? 0 : 4;
}

int cmd_cost_scan(const Common& com, const std::string& spectrum_path,
                  const std::string& b_spec, const std::string& xi0_spec,
                  const std::string& t_grid, const std::string& alpha,
                  const std::string& delta_param, const std::string& tol,
                  std::size_t truncation, bool shift, const std::string& out) {
	DigitScope scope(com.digits);
	std::vector<Real> grid = parse_reals_csv(t_grid);
	if (grid.empty()) throw ValidationError("cost-scan needs --t-grid");
	ControlProblem p =
		load_control_problem(spectrum_path, b_spec, xi0_spec,
		                     decimal_string(grid.front(), 30), truncation, shift, com.seed);
	ControlOptions opts;
	if (!tol.empty()) opts.tol = Real(tol);
	CostScan scan = cost_scan(p, grid, Real(alpha), Real(delta_param), opts);
	Json config = base_config(com, "cost-scan");
	config["spectrum"] = spectrum_path;
	config["t_grid"] = t_grid;
	config["alpha"] = alpha;
	write_json_file(out, with_provenance(to_json(scan), config, com.seed, com.digits));
	std::ofstream csv(out + ".csv");
	csv << "t,cost\n";
	for (std::size_t i = 0; i < scan.t_values.size(); ++i)
		csv << decimal_string(scan.t_values[i], 20) << ","
		    << decimal_string(scan.costs[i], 20) << "\n";
	return scan.partial ? 4 : 0;
}

int cmd_bilinear(const Common& com, const std::string& a_len, bool b_cube_root_2,
                 const std::string& b_len, const std::string& q, std::size_t mode,
                 const std::string& perturb, const std::string& horizon,
                 std::size_t truncation, std::size_t max_iters, const std::string& out) {
	DigitScope scope(std::max(com.digits, 120u));
	Real b = b_cube_root_2 ? Real(pow(Real(2), Real(1) / 3)) : Real(b_len);
	std::vector<Real> q1, q2;
	parse_q(q, q1, q2);
	RectangleSystem sys = make_rectangle_system(Real(a_len), b, q1, q2, truncation,
	                                            b_cube_root_2 ? "2^(-2/3)" : "");
	std::vector<Real> psi0(truncation, Real(0));
	if (mode == 0 || mode > truncation) throw ValidationError("--mode out of range");
	psi0[mode - 1] = 1;
	if (!perturb.empty() && truncation >= mode + 1) psi0[mode] = Real(perturb);
	BilinearResult res = reach_eigensolution(sys, mode, psi0, Real(horizon), max_iters);
	Json config = base_config(com, "bilinear");
	config["q"] = q;
	config["mode"] = mode;
	config["perturb"] = perturb;
	config["horizon"] = horizon;
	config["truncation"] = truncation;
	write_json_file(out, with_provenance(to_json(res), config, com.seed, com.digits));
	std::ofstream csv(out + ".csv");
	csv << "iteration,defect\n";
	for (std::size_t i = 0; i < res.defect_history.size(); ++i)
		csv << i << "," << decimal_string(res.defect_history[i], 20) << "\n";
	if (res.diverged) return 3;
	return res.converged ? 0 : 4;
}

int cmd_pipeline(const Common& com, std::size_t count, const std::string& a,
                 const std::string& b, const std::string& delta, const std::string& workdir) {
	const std::string spectra_csv = workdir + "/spectrum.csv";
	const std::string verify_json = workdir + "/verify.json";
	const std::string certify_json = workdir + "/certify.json";
	int rc = cmd_spectra(com, "perturbed-square", "", "", count, "", "", spectra_csv);
	if (rc) return rc;
	rc = cmd_verify(com, a, b, delta, "", spectra_csv, verify_json);
	if (rc) return rc;
	Json vj = read_json_file(verify_json);
	const std::string lambda0 =
		vj.at("result").at("constants").at("lambda0").get<std::string>();
	return cmd_certify(com, lambda0, std::min<std::uint64_t>(count, 2000), spectra_csv,
	                   verify_json, certify_json);
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"moment-method spectral control toolkit"};
	app.require_subcommand(1);

	Common com;
	com.digits = env_default_digits();
	app.add_option("--digits", com.digits, "working decimal digits");
	app.add_option("--seed", com.seed, "seed for randomized vectors");
	app.add_option("--threads", com.threads, "thread cap (reserved)");

	std::string generator = "perturbed-square", a_len = "1", b_len = "1", a_exp = "0.25";
	std::string in, out = "out.json";
	std::size_t count = 100;
	auto* sp = app.add_subcommand("spectra", "generate spectral sequences")->fallthrough();
	sp->add_option("--generator", generator);
	sp->add_option("--a-len", a_len);
	sp->add_option("--b-len", b_len);
	sp->add_option("--count", count);
	sp->add_option("--a-exponent", a_exp);
	sp->add_option("--in", in);
	sp->add_option("--out", out)->required();

	std::string va = "0.5", vb = "0.25", vdelta = "0.99", gamma_max;
	auto* vf = app.add_subcommand("verify", "fit counting law and gap constants")->fallthrough();
	vf->add_option("--a", va);
	vf->add_option("--b", vb);
	vf->add_option("--delta", vdelta);
	vf->add_option("--gamma-max", gamma_max);
	vf->add_option("--in", in)->required();
	vf->add_option("--out", out)->required();

	std::string lambda = "0";
	std::uint64_t range = 2000;
	std::string constants_path;
	auto* cf = app.add_subcommand("certify", "auxiliary-sequence certificates")->fallthrough();
	cf->add_option("--lambda", lambda)->required();
	cf->add_option("--range", range);
	cf->add_option("--in", in)->required();
	cf->add_option("--constants", constants_path)->required();
	cf->add_option("--out", out)->required();

	std::string freqs_path, horizon = "0.5", targets_spec, weights_path;
	bool biorthogonal = false;
	auto* mo = app.add_subcommand("moment", "minimal-norm moment solves")->fallthrough();
	mo->add_option("--freqs", freqs_path)->required();
	mo->add_option("--horizon", horizon);
	mo->add_option("--targets", targets_spec);
	mo->add_option("--weights", weights_path);
	mo->add_flag("--biorthogonal", biorthogonal);
	mo->add_option("--out", out)->required();

	std::string spectrum_path, b_spec = "expdelta:1,0.5", xi0_spec = "mode:1";
	std::string alpha = "7", delta_param = "0.25", tol, t_grid;
	std::size_t truncation = 0;
	bool shift = false;
	auto* co = app.add_subcommand("control", "dyadic null-control synthesis")->fallthrough();
	co->add_option("--spectrum", spectrum_path)->required();
	co->add_option("--b-profile", b_spec);
	co->add_option("--xi0", xi0_spec);
	co->add_option("--horizon", horizon);
	co->add_option("--alpha", alpha);
	co->add_option("--delta-param", delta_param);
	co->add_option("--tol", tol);
	co->add_option("--truncation", truncation);
	co->add_flag("--shift", shift);
	co->add_option("--out", out)->required();

	auto* cs = app.add_subcommand("cost-scan", "control cost over a horizon grid")->fallthrough();
	cs->add_option("--spectrum", spectrum_path)->required();
	cs->add_option("--b-profile", b_spec);
	cs->add_option("--xi0", xi0_spec);
	cs->add_option("--t-grid", t_grid)->required();
	cs->add_option("--alpha", alpha);
	cs->add_option("--delta-param", delta_param);
	cs->add_option("--tol", tol);
	cs->add_option("--truncation", truncation);
	cs->add_flag("--shift", shift);
	cs->add_option("--out", out)->required();

	std::string q = "x^2*y^2", perturb = "0.001";
	std::size_t mode = 1, max_iters = 8, btrunc = 25;
	bool b_cube_root_2 = false;
	auto* bi = app.add_subcommand("bilinear", "rectangle multiplication-control experiment")->fallthrough();
	bi->add_option("--a-len", a_len);
	bi->add_flag("--b-len-cube-root-2", b_cube_root_2);
	bi->add_option("--b-len", b_len);
	bi->add_option("--q", q);
	bi->add_option("--mode", mode);
	bi->add_option("--perturb", perturb);
	bi->add_option("--horizon", horizon);
	bi->add_option("--truncation", btrunc);
	bi->add_option("--max-iters", max_iters);
	bi->add_option("--out", out)->required();

	std::string workdir = ".";
	auto* pl = app.add_subcommand("pipeline", "spectra -> verify -> certify chain")->fallthrough();
	pl->add_option("--count", count);
	pl->add_option("--a", va);
	pl->add_option("--b", vb);
	pl->add_option("--delta", vdelta);
	pl->add_option("--workdir", workdir);

	CLI11_PARSE(app, argc, argv);

	try {
		if (sp->parsed())
			return cmd_spectra(com, generator, a_len, b_len, count, a_exp, in, out);
		if (vf->parsed()) return cmd_verify(com, va, vb, vdelta, gamma_max, in, out);
		if (cf->parsed()) return cmd_certify(com, lambda, range, in, constants_path, out);
		if (mo->parsed())
			return cmd_moment(com, freqs_path, horizon, targets_spec, weights_path,
			                  biorthogonal, out);
		if (co->parsed())
			return cmd_control(com, spectrum_path, b_spec, xi0_spec, horizon, alpha,
			                   delta_param, tol, truncation, shift, out);
		if (cs->parsed())
			return cmd_cost_scan(com, spectrum_path, b_spec, xi0_spec, t_grid, alpha,
			                     delta_param, tol, truncation, shift, out);
		if (bi->parsed())
			return cmd_bilinear(com, a_len, b_cube_root_2, b_len, q, mode, perturb, horizon,
			                    btrunc, max_iters, out);
		if (pl->parsed()) return cmd_pipeline(com, count, va, vb, vdelta, workdir);
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return e.exit_code;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	}
	return 2;
}
