#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "momctl/auxiliary.hpp"
#include "momctl/errors.hpp"
#include "momctl/hypotheses.hpp"
#include "momctl/real.hpp"
#include "momctl/sequence.hpp"

using namespace momctl;

namespace {

SpectralSequence toy_seq() {
	SpectralSequence seq;
	seq.values = {Real(10), Real(20), Real(30), Real(40)};
	seq.generator_tag = "toy";
	seq.first_value = seq.values.front();
	return seq;
}

WeylFit toy_fit(const Real& k_w) {
	WeylFit fit;
	fit.a = Real(1) / 2;
	fit.b = Real(1) / 4;
	fit.c_w1 = Real(1);
	fit.c_w2 = Real(1);
	fit.k_w = k_w;
	fit.checked_up_to = 40;
	return fit;
}

}  // namespace

TEST_CASE("auxiliary sequence keeps the prefix and ramps above the cutoff") {
	DigitScope scope(50);
	AuxiliarySequence aux = build_auxiliary(toy_seq(), toy_fit(Real(4)), Real(25));
	// kappa = k_w^a = 2; a = 1/2 makes the ramp factor kappa^2 = 4
	CHECK(aux.kappa == 2);
	REQUIRE(aux.values.size() == 4);
	CHECK(aux.values[0] == 10);
	CHECK(aux.values[1] == 20);
	CHECK(aux.values[2] == 36);  // 4 * 3^2
	CHECK(aux.values[3] == 64);  // 4 * 4^2
	CHECK(aux.k_star_lambda == 2);
	CHECK(aux.monotonicity.passed);
	CHECK(aux.monotonicity.worst_margin == 10);
}

TEST_CASE("auxiliary build validation") {
	DigitScope scope(50);
	CHECK_THROWS_AS(build_auxiliary(toy_seq(), toy_fit(Real(4)), Real(5)), ValidationError);
	WeylFit bad = toy_fit(Real(4));
	bad.a = Real(1) / 4;
	CHECK_THROWS_AS(build_auxiliary(toy_seq(), bad, Real(25)), ValidationError);
}

TEST_CASE("block parameters from the cutoff") {
	DigitScope scope(50);
	StructuralConstants c;
	c.epsilon = Real(1) / 8;
	c.a = Real(1) / 2;
	c.theta = Real(1) / 1000;
	// 256^{(1 - 2/8)/2} = 256^{3/8} = 8
	BlockGapParams p = block_gap_parameters(c, Real(256));
	CHECK(p.n_lambda == 9);
	CHECK(p.gamma_lambda == c.theta);  // Lambda^{1-2a} = 1 at a = 1/2
	CHECK_THROWS_AS(block_gap_parameters(c, Real(0)), ValidationError);
}

TEST_CASE("far oracle agrees with direct generation") {
	DigitScope scope(50);
	FarOracle far = perturbed_square_far_oracle();
	SpectralSequence seq = generate_perturbed_square_example(500);
	const Real tol = pow(Real(10), -40) * seq.values[332];
	CHECK(abs(far.value(333) - seq.values[332]) <= tol);
	std::vector<Real> win = far.window(100, 5);
	for (int i = 0; i < 5; ++i)
		CHECK(abs(win[i] - seq.values[99 + i]) <= tol);
	CHECK(far.rank_of((seq.values[249] + seq.values[250]) / 2) == 250);
}

TEST_CASE("certificates pass at the guaranteed cutoff on the example sequence") {
	DigitScope scope(50);
	SpectralSequence seq = generate_perturbed_square_example(5000);
	WeylFit fit = fit_weyl(seq, Real(1) / 2, Real(1) / 4, seq.values.back());
	GapCertificate gap = check_weak_gap(seq);
	const std::uint64_t ks = k_star_index(fit);
	StructuralConstants consts =
		structural_constants(fit, seq.values.front(), perturbed_square_far_value(ks),
		                     Real("0.99"));
	FarOracle far = perturbed_square_far_oracle();
	AuxiliarySequence aux = build_auxiliary(seq, fit, consts.lambda0, &far);
	CHECK(aux.monotonicity.passed);
	BlockGapParams params = block_gap_parameters(consts, consts.lambda0);
	CHECK(params.n_lambda == 78034928221610ull);
	std::vector<Certificate> certs =
		certify_auxiliary(aux, consts, params, gap, 2000, &far);
	REQUIRE(certs.size() == 4);
	CHECK(certs[0].name == "block-gap");
	CHECK(certs[1].name == "weak-gap");
	CHECK(certs[2].name == "counting-sandwich");
	CHECK(certs[3].name == "induction");
	for (const Certificate& c : certs) {
		CHECK(c.passed);
		CHECK(c.conclusive);
		CHECK(c.within_guarantee);
		CHECK(c.worst_margin >= 0);
	}
}

TEST_CASE("missing far oracle is reported as inconclusive, not as failure") {
	DigitScope scope(50);
	SpectralSequence seq = generate_perturbed_square_example(200);
	WeylFit fit = fit_weyl(seq, Real(1) / 2, Real(1) / 4, seq.values.back());
	GapCertificate gap = check_weak_gap(seq);
	StructuralConstants consts =
		structural_constants(fit, seq.values.front(),
		                     fit.k_w * pow(Real(k_star_index(fit)), 2), Real("0.99"));
	AuxiliarySequence aux = build_auxiliary(seq, fit, consts.lambda0);
	BlockGapParams params = block_gap_parameters(consts, consts.lambda0);
	std::vector<Certificate> certs = certify_auxiliary(aux, consts, params, gap, 200);
	// block spacing needs indices far beyond the prefix
	CHECK_FALSE(certs[0].conclusive);
	CHECK_FALSE(certs[3].conclusive);
	// the consecutive-gap and counting checks stay conclusive on the prefix
	CHECK(certs[1].conclusive);
	CHECK(certs[2].conclusive);
}
