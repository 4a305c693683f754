#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "momctl/errors.hpp"
#include "momctl/hypotheses.hpp"
#include "momctl/real.hpp"
#include "momctl/sequence.hpp"

using namespace momctl;

namespace {

bool close_rel(const Real& x, const Real& y, int digits10) {
	const Real tol = pow(Real(10), -digits10);
	const Real scale = abs(y) > 1 ? abs(y) : Real(1);
	return abs(x - y) <= tol * scale;
}

// Shared 5000-entry example sequence and its counting-law fit.
const SpectralSequence& example_seq() {
	static SpectralSequence seq = [] {
		DigitScope scope(50);
		return generate_perturbed_square_example(5000);
	}();
	return seq;
}

const WeylFit& example_fit() {
	static WeylFit fit = [] {
		DigitScope scope(50);
		const SpectralSequence& seq = example_seq();
		return fit_weyl(seq, Real(1) / 2, Real(1) / 4, seq.values.back());
	}();
	return fit;
}

}  // namespace

TEST_CASE("counting-law fit reproduces the frozen constants") {
	DigitScope scope(50);
	const WeylFit& fit = example_fit();
	CHECK(close_rel(fit.c_w1, Real("0.07716725"), 6));
	CHECK(close_rel(fit.c_w2, Real("0.32088933"), 6));
	// one-term constant is attained at the second element
	CHECK(close_rel(fit.k_w, example_seq().values[1], 30));
	CHECK(fit.a == Real(1) / 2);
	CHECK(fit.b == Real(1) / 4);
}

TEST_CASE("two-term sandwich holds at sampled jump points") {
	DigitScope scope(50);
	const SpectralSequence& seq = example_seq();
	const WeylFit& fit = example_fit();
	for (std::size_t k : {std::size_t(1), std::size_t(2), std::size_t(50),
	                      std::size_t(777), std::size_t(4999)}) {
		const Real g = seq.values[k];  // count jumps to k+1 here
		const Real lo = fit.c_w1 * pow(g, fit.a) - fit.c_w2 * pow(g, fit.b);
		const Real hi = fit.c_w1 * pow(g, fit.a) + fit.c_w2 * pow(g, fit.b);
		const Real n(static_cast<unsigned long>(k + 1));
		CHECK(lo <= n);
		CHECK(n - 1 <= hi);  // just below the jump
	}
}

TEST_CASE("one-term sandwich on elements and counts") {
	DigitScope scope(50);
	const SpectralSequence& seq = example_seq();
	const WeylFit& fit = example_fit();
	const Real inv_a = 1 / fit.a;
	for (std::size_t k : {std::size_t(1), std::size_t(13), std::size_t(2500),
	                      std::size_t(5000)}) {
		const Real kr(static_cast<unsigned long>(k));
		CHECK(seq.values[k - 1] >= pow(kr, inv_a) / fit.k_w);
		CHECK(seq.values[k - 1] <= fit.k_w * pow(kr, inv_a));
	}
}

TEST_CASE("consecutive-gap certificate: frozen constant and witness") {
	DigitScope scope(50);
	GapCertificate gap = check_weak_gap(example_seq());
	CHECK(close_rel(gap.c_w, Real("0.036297461"), 6));
	CHECK(gap.worst_index == 2);
	// certified inequality mu_{k+1} - mu_k >= exp(-c_w sqrt(mu_k)) on a sample
	const SpectralSequence& seq = example_seq();
	for (std::size_t k : {std::size_t(1), std::size_t(2), std::size_t(1000)})
		CHECK(seq.values[k] - seq.values[k - 1] >=
		      exp(-gap.c_w * sqrt(seq.values[k - 1])) * Real("0.999999"));
	// the example's coarse polynomial gap bound 1/k - 1/(k+1), attained
	// exactly inside repeated-lattice blocks
	for (std::size_t k = 1; k < seq.values.size(); ++k) {
		const Real kr(static_cast<unsigned long>(k));
		CHECK(seq.values[k] - seq.values[k - 1] >= 1 / (kr * (kr + 1)) * Real("0.999999"));
	}
}

TEST_CASE("structural constants derived from the fit") {
	DigitScope scope(50);
	const WeylFit& fit = example_fit();
	const std::uint64_t ks = k_star_index(fit);
	CHECK(ks == 2079960);
	const Real mu_ks = perturbed_square_far_value(ks);
	StructuralConstants c =
		structural_constants(fit, example_seq().values.front(), mu_ks, Real("0.99"));
	CHECK(close_rel(c.lambda0, Real("1.111998225e37"), 6));
	CHECK(close_rel(c.theta, Real("2.466312507e-11"), 6));
	CHECK(close_rel(c.kappa, Real("49.36321784"), 6));
	CHECK(c.alpha == 7);
	CHECK(c.k_star == ks);
	CHECK(c.delta == Real("0.99"));
	// theta must make the cutoff scale consistent: lambda0^{-theta-ish} sane
	CHECK(c.lambda0 > 0);
	CHECK(c.theta > 0);
}

TEST_CASE("condensation diagnostic matches a direct product evaluation") {
	DigitScope scope(60);
	SpectralSequence seq;
	seq.values = {Real(2), Real(3), Real(5), Real(8), Real(13)};
	seq.generator_tag = "handmade";
	seq.first_value = seq.values.front();
	std::vector<std::pair<std::size_t, Real>> est = estimate_condensation_index(seq, 5);
	REQUIRE(est.size() == 5);
	// recompute the k = 2 entry directly
	const Real mu = seq.values[1];
	Real dprime = -2 / mu;
	for (std::size_t j = 0; j < 5; ++j)
		if (j != 1) dprime *= 1 - mu * mu / (seq.values[j] * seq.values[j]);
	const Real expected = log(1 / abs(dprime)) / mu;
	CHECK(est[1].first == 2);
	CHECK(close_rel(est[1].second, expected, 40));
}

TEST_CASE("fit validation") {
	DigitScope scope(50);
	const SpectralSequence& seq = example_seq();
	CHECK_THROWS_AS(fit_weyl(seq, Real(0), Real(1) / 4, seq.values.back()), ValidationError);
	CHECK_THROWS_AS(fit_weyl(seq, Real(1) / 4, Real(1) / 2, seq.values.back()),
	                ValidationError);  // b must be below a
}
