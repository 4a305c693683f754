#include "momctl/io.hpp"

#include "momctl/errors.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace momctl {

Json jreal(const Real& x, unsigned digits) { return decimal_string(x, digits); }

Json to_json(const Certificate& c, unsigned digits) {
	Json j;
	j["name"] = c.name;
	j["range_lo"] = c.range_lo;
	j["range_hi"] = c.range_hi;
	j["passed"] = c.passed;
	j["worst_margin"] = jreal(c.worst_margin, digits);
	j["witness_index"] = c.witness_index;
	j["conclusive"] = c.conclusive;
	j["within_guarantee"] = c.within_guarantee;
	return j;
}

Json to_json(const WeylFit& f, unsigned digits) {
	Json j;
	j["a"] = jreal(f.a, digits);
	j["b"] = jreal(f.b, digits);
	j["c_w1"] = jreal(f.c_w1, digits);
	j["c_w2"] = jreal(f.c_w2, digits);
	j["k_w"] = jreal(f.k_w, digits);
	j["checked_up_to"] = jreal(f.checked_up_to, digits);
	return j;
}

Json to_json(const GapCertificate& g, unsigned digits) {
	Json j;
	j["c_w"] = jreal(g.c_w, digits);
	j["worst_index"] = g.worst_index;
	j["worst_ratio"] = jreal(g.worst_ratio, digits);
	return j;
}

Json to_json(const StructuralConstants& c, unsigned digits) {
	Json j;
	j["epsilon"] = jreal(c.epsilon, digits);
	j["lambda0"] = jreal(c.lambda0, digits);
	j["theta"] = jreal(c.theta, digits);
	j["k_star"] = c.k_star;
	j["kappa"] = jreal(c.kappa, digits);
	j["alpha"] = jreal(c.alpha, digits);
	if (c.beta_defined) j["beta"] = jreal(c.beta, digits);
	j["delta"] = jreal(c.delta, digits);
	j["a"] = jreal(c.a, digits);
	j["b"] = jreal(c.b, digits);
	j["c_w1"] = jreal(c.c_w1, digits);
	j["c_w2"] = jreal(c.c_w2, digits);
	j["k_w"] = jreal(c.k_w, digits);
	return j;
}

Json to_json(const MomentSolution& s, unsigned digits) {
	Json j;
	j["precision_digits"] = s.precision_digits;
	j["norm_l2"] = jreal(s.norm_l2, digits);
	j["gram_condition"] = jreal(s.gram_condition, digits);
	Json coeffs = Json::array();
	for (const Real& c : s.coeffs) coeffs.push_back(jreal(c, digits));
	j["coeffs"] = coeffs;
	Json res = Json::array();
	for (const Real& r : s.residuals) res.push_back(jreal(r, digits));
	j["residuals"] = res;
	return j;
}

Json to_json(const ControlSolution& s, unsigned digits) {
	Json j;
	j["converged"] = s.converged;
	j["total_norm"] = jreal(s.total_norm, digits);
	j["final_state_norm"] = jreal(s.final_state_norm, digits);
	j["delta_used"] = jreal(s.delta_used, digits);
	Json sched = Json::array();
	for (const StageRecord& r : s.schedule) {
		Json e;
		e["t_start"] = jreal(r.t_start, digits);
		e["t_end"] = jreal(r.t_end, digits);
		e["lambda"] = jreal(r.lambda, digits);
		e["modes"] = r.modes;
		e["cost"] = jreal(r.cost, digits);
		e["state_norm_after"] = jreal(r.state_norm_after, digits);
		sched.push_back(e);
	}
	j["schedule"] = sched;
	j["segments"] = s.segments.size();
	return j;
}

Json to_json(const CostScan& s, unsigned digits) {
	Json j;
	j["alpha"] = jreal(s.alpha, digits);
	j["fitted_c"] = jreal(s.fitted_c, digits);
	j["max_deviation"] = jreal(s.max_deviation, digits);
	j["partial"] = s.partial;
	Json pts = Json::array();
	for (std::size_t i = 0; i < s.t_values.size(); ++i) {
		Json p;
		p["t"] = jreal(s.t_values[i], digits);
		p["cost"] = jreal(s.costs[i], digits);
		pts.push_back(p);
	}
	j["points"] = pts;
	return j;
}

Json to_json(const BilinearResult& r, unsigned digits) {
	Json j;
	j["converged"] = r.converged;
	j["diverged"] = r.diverged;
	j["iterations"] = r.iterations;
	j["final_error"] = jreal(r.final_error, digits);
	j["sim_steps"] = r.sim_steps;
	j["control_norm"] = jreal(r.control.norm_l2, digits);
	Json hist = Json::array();
	for (const Real& d : r.defect_history) hist.push_back(jreal(d, digits));
	j["defect_history"] = hist;
	return j;
}

void write_spectrum_csv(const std::string& path, const SpectralSequence& seq,
                        unsigned digits) {
	std::ofstream out(path);
	if (!out) throw ValidationError("cannot open for writing: " + path);
	out << "k,value,l_index,m_index\n";
	for (std::size_t i = 0; i < seq.values.size(); ++i) {
		out << (i + 1) << "," << decimal_string(seq.values[i], digits);
		if (i < seq.labels.size())
			out << "," << seq.labels[i].first << "," << seq.labels[i].second;
		else
			out << ",,";
		out << "\n";
	}
}

void write_lattice_csv(const std::string& path, const LatticeSpectrum& spec,
                       unsigned digits) {
	std::ofstream out(path);
	if (!out) throw ValidationError("cannot open for writing: " + path);
	out << "k,value,l_index,m_index\n";
	for (std::size_t i = 0; i < spec.raw_values.size(); ++i)
		out << (i + 1) << "," << decimal_string(spec.raw_values[i], digits) << ","
		    << spec.pairs[i].first << "," << spec.pairs[i].second << "\n";
}

SpectralSequence read_spectrum_csv(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw ValidationError("cannot open for reading: " + path);
	SpectralSequence seq;
	std::string line;
	if (!std::getline(in, line)) throw ValidationError("empty spectrum file: " + path);
	while (std::getline(in, line)) {
		if (line.empty()) continue;
		std::stringstream ss(line);
		std::string k, value, l, m;
		std::getline(ss, k, ',');
		std::getline(ss, value, ',');
		std::getline(ss, l, ',');
		std::getline(ss, m, ',');
		if (value.empty()) throw ValidationError("malformed spectrum row: " + line);
		seq.values.push_back(Real(value));
		if (!l.empty() && !m.empty())
			seq.labels.emplace_back(std::stoull(l), std::stoull(m));
	}
	if (seq.values.empty()) throw ValidationError("no rows in spectrum file: " + path);
	for (std::size_t i = 0; i + 1 < seq.values.size(); ++i)
		if (!(seq.values[i + 1] > seq.values[i]))
			throw ValidationError("spectrum file not strictly increasing at row " +
			                      std::to_string(i + 2));
	seq.generator_tag = "file:" + path;
	seq.first_value = seq.values.front();
	return seq;
}

std::vector<Real> parse_reals_csv(const std::string& text) {
	std::vector<Real> out;
	std::string tok;
	for (char ch : text) {
		if (ch == ',' || ch == '\n' || ch == '\r' || ch == ' ' || ch == '\t') {
			if (!tok.empty()) out.push_back(Real(tok));
			tok.clear();
		} else {
			tok += ch;
		}
	}
	if (!tok.empty()) out.push_back(Real(tok));
	return out;
}

std::vector<Real> read_reals_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw ValidationError("cannot open for reading: " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	std::vector<Real> out = parse_reals_csv(ss.str());
	if (out.empty()) throw ValidationError("no values in file: " + path);
	return out;
}

void write_json_file(const std::string& path, const Json& j) {
	std::ofstream out(path);
	if (!out) throw ValidationError("cannot open for writing: " + path);
	out << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw ValidationError("cannot open for reading: " + path);
	Json j;
	try {
		in >> j;
	} catch (const std::exception& e) {
		throw ValidationError("invalid JSON in " + path + ": " + e.what());
	}
	return j;
}

std::string config_hash(const Json& config) {
	const std::string dump = config.dump();
	std::uint64_t h = 1469598103934665603ull;
	for (unsigned char c : dump) {
		h ^= c;
		h *= 1099511628211ull;
	}
	char buf[17];
	std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
	return buf;
}

Json with_provenance(const Json& payload, const Json& config, std::uint64_t seed,
                     unsigned digits) {
	Json j;
	j["config"] = config;
	j["config_hash"] = config_hash(config);
	j["seed"] = seed;
	j["precision_digits"] = digits;
	j["library"] = "momctl 1.0";
	j["result"] = payload;
	return j;
}

}  // namespace momctl
