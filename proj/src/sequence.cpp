#include "momctl/sequence.hpp"

#include "momctl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace momctl {

namespace {

std::uint64_t isqrt_u64(std::uint64_t s) {
	if (s == 0) return 0;
	std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(s)));
	while (r > 0 && r * r > s) --r;
	while ((r + 1) * (r + 1) <= s) ++r;
	return r;
}

struct Entry {
	Real value;
	std::uint64_t l, m;
};

// All lattice entries with closed-form value <= cutoff for the rectangle
// Laplacian; `quartic` squares the closed form (Bi-Laplacian).
std::vector<Entry> enumerate_below(const Real& inv_a2, const Real& inv_b2, const Real& pi2,
                                   const Real& cutoff, bool quartic) {
	// For the quartic case the Laplacian-value cutoff is sqrt(cutoff).
	const Real base_cutoff = quartic ? sqrt(cutoff) : cutoff;
	std::vector<Entry> out;
	const Real l_bound = sqrt(base_cutoff / (pi2 * inv_a2));
	if (l_bound > Real(1e15))
		throw NumericalError("lattice enumeration bound overflow at Gamma = " +
		                     decimal_string(cutoff, 20));
	const std::uint64_t l_max = static_cast<std::uint64_t>(static_cast<long double>(l_bound));
	for (std::uint64_t l = 1; l <= l_max + 1; ++l) {
		const Real lx = pi2 * inv_a2 * Real(l) * Real(l);
		if (lx > base_cutoff) break;
		for (std::uint64_t m = 1;; ++m) {
			const Real v = lx + pi2 * inv_b2 * Real(m) * Real(m);
			if (v > base_cutoff) break;
			out.push_back({quartic ? Real(v * v) : v, l, m});
		}
	}
	std::sort(out.begin(), out.end(), [](const Entry& x, const Entry& y) {
		if (x.value != y.value) return x.value < y.value;
		return std::make_pair(x.l, x.m) < std::make_pair(y.l, y.m);
	});
	return out;
}

LatticeSpectrum generate_rectangle(const Real& a_len, const Real& b_len, std::size_t count,
                                   bool quartic) {
	if (count < 1) throw ValidationError("count must be >= 1");
	if (!(a_len > 0) || !(b_len > 0)) throw ValidationError("side lengths must be positive");
	const Real pi2 = pi_value() * pi_value();
	const Real inv_a2 = 1 / (a_len * a_len);
	const Real inv_b2 = 1 / (b_len * b_len);

	// Grow the cutoff until at least `count` candidates are found, then
	// re-enumerate below 1.5x the count-th candidate so nothing is missed.
	Real cutoff = pi2 * (inv_a2 + inv_b2) * Real(4 + 4 * static_cast<unsigned long>(count));
	if (quartic) cutoff *= cutoff;
	std::vector<Entry> cand;
	for (int rounds = 0; rounds < 64; ++rounds) {
		cand = enumerate_below(inv_a2, inv_b2, pi2, cutoff, quartic);
		if (cand.size() >= count) break;
		cutoff *= 4;
	}
	if (cand.size() < count) throw NumericalError("lattice enumeration failed to reach count");
	const Real final_cutoff = cand[count - 1].value * Real(3) / 2;
	cand = enumerate_below(inv_a2, inv_b2, pi2, final_cutoff, quartic);
	if (cand.size() < count) throw NumericalError("lattice enumeration inconsistency");

	LatticeSpectrum out;
	out.raw_values.reserve(count);
	out.pairs.reserve(count);
	for (std::size_t i = 0; i < count; ++i) {
		out.raw_values.push_back(cand[i].value);
		out.pairs.emplace_back(cand[i].l, cand[i].m);
	}
	return out;
}

}  // namespace

LatticeSpectrum generate_rectangle_laplacian(const Real& a_len, const Real& b_len,
                                             std::size_t count) {
	return generate_rectangle(a_len, b_len, count, false);
}

LatticeSpectrum generate_rectangle_bilaplacian(const Real& a_len, const Real& b_len,
                                               std::size_t count) {
	return generate_rectangle(a_len, b_len, count, true);
}

SpectralSequence generate_perturbed_square_example(std::size_t count) {
	LatticeSpectrum lap = generate_rectangle_laplacian(1, 1, count);
	SpectralSequence seq;
	seq.generator_tag = "perturbed-square";
	seq.values.reserve(count);
	seq.labels = lap.pairs;
	for (std::size_t i = 0; i < count; ++i) {
		const Real k(static_cast<unsigned long>(i + 1));
		seq.values.push_back(lap.raw_values[i] * lap.raw_values[i] - 1 / k + 2);
	}
	for (std::size_t i = 0; i + 1 < count; ++i)
		if (!(seq.values[i] < seq.values[i + 1]))
			throw NumericalError("perturbed sequence not strictly increasing at index " +
			                     std::to_string(i + 1));
	seq.first_value = seq.values.front();
	return seq;
}

DensifiedSequence densify_sequence(const SpectralSequence& seq, const Real& a) {
	if (!(a > 0) || !(a < Real(1) / 2))
		throw ValidationError("densify_sequence: exponent a must lie in (0, 1/2)");
	if (seq.values.size() < 2) throw ValidationError("densify_sequence: need at least 2 values");
	const Real e = (1 - 2 * a) / (2 * a);
	DensifiedSequence out;
	out.seq.generator_tag = "densified:" + seq.generator_tag;
	for (std::size_t i = 0; i + 1 < seq.values.size(); ++i) {
		const Real k(static_cast<unsigned long>(i + 1));
		const Real k_pow = pow(k, e);
		const std::uint64_t block =
			static_cast<std::uint64_t>(static_cast<long double>(floor(k_pow)));
		out.block_sizes.push_back(block);
		const Real gap = seq.values[i + 1] - seq.values[i];
		for (std::uint64_t l = 0; l < block; ++l)
			out.seq.values.push_back(seq.values[i] + Real(l) * gap / k_pow);
	}
	for (std::size_t i = 0; i + 1 < out.seq.values.size(); ++i)
		if (!(out.seq.values[i] < out.seq.values[i + 1]))
			throw NumericalError("densified sequence not strictly increasing");
	out.seq.first_value = out.seq.values.front();
	return out;
}

std::size_t counting_function(const SpectralSequence& seq, const Real& gamma) {
	return static_cast<std::size_t>(
		std::upper_bound(seq.values.begin(), seq.values.end(), gamma) - seq.values.begin());
}

std::uint64_t lattice_square_rank(std::uint64_t s) {
	if (s < 2) return 0;
	std::uint64_t count = 0;
	std::uint64_t m = isqrt_u64(s - 1);
	for (std::uint64_t l = 1; l * l < s; ++l) {
		while (m > 0 && l * l + m * m > s) --m;
		if (m == 0) break;
		count += m;
	}
	return count;
}

namespace {

// All values l^2 + m^2 in (s_lo, s_hi], sorted, with multiplicity.
std::vector<std::uint64_t> list_values_between(std::uint64_t s_lo, std::uint64_t s_hi) {
	std::vector<std::uint64_t> out;
	for (std::uint64_t l = 1; l * l + 1 <= s_hi; ++l) {
		const std::uint64_t l2 = l * l;
		const std::uint64_t lo = s_lo > l2 ? s_lo - l2 : 0;
		const std::uint64_t m_min = isqrt_u64(lo) + 1;
		const std::uint64_t m_max = isqrt_u64(s_hi - l2);
		for (std::uint64_t mm = m_min; mm <= m_max; ++mm) out.push_back(l2 + mm * mm);
	}
	std::sort(out.begin(), out.end());
	return out;
}

}  // namespace

std::uint64_t lattice_square_value_at_rank(std::uint64_t rank) {
	if (rank == 0) throw ValidationError("rank must be >= 1");
	// Smooth estimate: rank(s) ~ (pi/4) s - sqrt(s); invert approximately.
	long double s_est = static_cast<long double>(rank) * 4.0L / 3.14159265358979323846L;
	for (int i = 0; i < 3; ++i)
		s_est = (static_cast<long double>(rank) + std::sqrt(static_cast<double>(s_est))) * 4.0L /
		        3.14159265358979323846L;
	std::uint64_t s = s_est < 2 ? 2 : static_cast<std::uint64_t>(s_est);
	std::uint64_t r = lattice_square_rank(s);
	for (int it = 0; it < 60; ++it) {
		if (r >= rank && r <= rank + 2000000) break;
		if (r < rank && rank - r <= 2000000) break;
		const long double d = static_cast<long double>(rank) - static_cast<long double>(r);
		long double step = d * 4.0L / 3.14159265358979323846L;
		if (step > -2 && step < 2) break;
		long double sn = static_cast<long double>(s) + step;
		if (sn < 2) sn = 2;
		s = static_cast<std::uint64_t>(sn);
		r = lattice_square_rank(s);
	}
	// Ensure undershoot: rank(s) < target.
	while (r >= rank) {
		const std::uint64_t back =
			static_cast<std::uint64_t>((static_cast<long double>(r - rank) + 1) * 1.4L + 16);
		s = s > back ? s - back : 1;
		r = lattice_square_rank(s);
	}
	const std::uint64_t need = rank - r;
	std::uint64_t span = static_cast<std::uint64_t>(static_cast<long double>(need) * 1.4L + 64);
	for (int it = 0; it < 40; ++it) {
		std::vector<std::uint64_t> vals = list_values_between(s, s + span);
		if (vals.size() >= need) return vals[need - 1];
		span *= 2;
	}
	throw NumericalError("lattice_square_value_at_rank: window expansion failed");
}

std::vector<std::uint64_t> lattice_square_window(std::uint64_t start_rank, std::size_t count) {
	if (start_rank == 0 || count == 0) throw ValidationError("invalid window");
	const std::uint64_t s0 = lattice_square_value_at_rank(start_rank);
	const std::uint64_t r_prev = lattice_square_rank(s0 - 1);
	const std::uint64_t skip = start_rank - r_prev - 1;
	const std::uint64_t need = skip + count;
	std::uint64_t span = static_cast<std::uint64_t>(static_cast<long double>(need) * 1.4L + 64);
	for (int it = 0; it < 40; ++it) {
		std::vector<std::uint64_t> vals = list_values_between(s0 - 1, s0 + span);
		if (vals.size() >= need)
			return std::vector<std::uint64_t>(vals.begin() + static_cast<std::ptrdiff_t>(skip),
			                                  vals.begin() + static_cast<std::ptrdiff_t>(need));
		span *= 2;
	}
	throw NumericalError("lattice_square_window: window expansion failed");
}

namespace {

Real perturbed_value_from(std::uint64_t s, std::uint64_t rank) {
	const Real pi2 = pi_value() * pi_value();
	const Real lam = pi2 * Real(s);
	return lam * lam + 2 - 1 / Real(rank);
}

}  // namespace

Real perturbed_square_far_value(std::uint64_t rank) {
	return perturbed_value_from(lattice_square_value_at_rank(rank), rank);
}

std::vector<Real> perturbed_square_far_window(std::uint64_t start_rank, std::size_t count) {
	std::vector<std::uint64_t> s = lattice_square_window(start_rank, count);
	std::vector<Real> out;
	out.reserve(count);
	for (std::size_t i = 0; i < count; ++i)
		out.push_back(perturbed_value_from(s[i], start_rank + i));
	return out;
}

std::uint64_t perturbed_square_rank_of(const Real& gamma) {
	const Real pi2 = pi_value() * pi_value();
	if (gamma < pi2 * pi2 * 4 + 1) return 0;  // below mu_1
	// mu = (pi^2 s)^2 + 2 - 1/rank, so s ~ sqrt(gamma)/pi^2.
	const Real s_real = sqrt(gamma) / pi2;
	const std::uint64_t s_c = static_cast<std::uint64_t>(static_cast<long double>(s_real));
	const std::uint64_t s_lo = s_c > 4 ? s_c - 4 : 1;
	const std::uint64_t s_hi = s_c + 4;
	const std::uint64_t r_hi = lattice_square_rank(s_hi);
	std::vector<std::uint64_t> vals = list_values_between(s_lo - 1, s_hi);
	// Ranks of the listed values run (r_hi - vals.size(), r_hi].
	std::uint64_t rank = r_hi - vals.size();
	std::uint64_t best = rank;  // all earlier values are certainly <= gamma
	for (std::size_t i = 0; i < vals.size(); ++i) {
		++rank;
		if (perturbed_value_from(vals[i], rank) <= gamma) best = rank;
	}
	return best;
}

}  // namespace momctl
