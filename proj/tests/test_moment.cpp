#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "momctl/errors.hpp"
#include "momctl/moment.hpp"
#include "momctl/real.hpp"

using namespace momctl;

namespace {

bool close_rel(const Real& x, const Real& y, int digits10) {
	const Real tol = pow(Real(10), -digits10);
	const Real scale = abs(y) > 1 ? abs(y) : Real(1);
	return abs(x - y) <= tol * scale;
}

}  // namespace

TEST_CASE("gram matrix entries against hand-evaluated integrals") {
	DigitScope scope(50);
	Matrix g = gram_matrix({Real(1), Real(2)}, Real(1), 50);
	// (1 - e^{-p})/p for p = 2, 3, 4
	CHECK(close_rel(g(0, 0), Real("0.432332358381693654053000252514"), 28));
	CHECK(close_rel(g(0, 1), Real("0.316737643877378685673552528117"), 28));
	CHECK(close_rel(g(1, 1), Real("0.245421090277816454926570494682"), 28));
	CHECK(g(1, 0) == g(0, 1));
}

TEST_CASE("digit policy") {
	DigitScope scope(50);
	CHECK(default_digits({Real(1), Real(2), Real(3)}, Real(1)) == 50);
	// 4*3 + ceil(1000 * log10 e) = 12 + 435
	CHECK(default_digits({Real(1), Real(2), Real(1000)}, Real(1)) == 447);
}

TEST_CASE("moment solution: independent-quadrature residuals are tiny") {
	DigitScope scope(50);
	MomentProblem p;
	p.freqs = {Real(1), Real(2), Real(3), Real(4)};
	p.horizon = Real(1) / 2;
	p.targets = {Real(1), Real(0), Real(0), Real(0)};
	MomentSolution sol = solve_moments(p);
	REQUIRE(sol.residuals.size() == 4);
	for (const Real& r : sol.residuals) CHECK(r < pow(Real(10), -35));
	CHECK(sol.norm_l2 > 0);
	CHECK(sol.gram_condition > 1);
	// the control norm identity ||u||^2 = sum_k c_k x_k e^{-mu_k T}
	DigitScope inner(sol.precision_digits);
	Real ip = 0;
	for (std::size_t k = 0; k < 4; ++k)
		ip += sol.coeffs[k] * promoted(p.targets[k]) * exp(-promoted(p.freqs[k]) * promoted(p.horizon));
	CHECK(close_rel(Real(sol.norm_l2 * sol.norm_l2), ip, 35));
}

TEST_CASE("solution is stable under extra precision") {
	DigitScope scope(50);
	MomentProblem p;
	p.freqs = {Real(2), Real(5), Real(11)};
	p.horizon = Real(1);
	p.targets = {Real(1), Real(-1), Real(2)};
	MomentSolution a = solve_moments(p);
	p.precision_digits = 2 * a.precision_digits;
	MomentSolution b = solve_moments(p);
	CHECK(close_rel(a.norm_l2, b.norm_l2, 30));
	for (std::size_t k = 0; k < 3; ++k) CHECK(close_rel(a.coeffs[k], b.coeffs[k], 30));
}

TEST_CASE("biorthogonal family: cross moments reproduce the identity") {
	DigitScope scope(60);
	std::vector<Real> freqs = {Real(1), Real(3), Real(7), Real(12), Real(20)};
	const Real horizon(1);
	std::vector<MomentSolution> fam = biorthogonal_family(freqs, horizon, 60);
	REQUIRE(fam.size() == 5);
	Matrix cross = cross_moment_matrix(fam, freqs, horizon, 60, 0);
	for (std::size_t j = 0; j < 5; ++j)
		for (std::size_t k = 0; k < 5; ++k) {
			const Real want = j == k ? Real(1) : Real(0);
			CHECK(abs(cross(j, k) - want) < pow(Real(10), -40));
		}
	// norm identity for unit targets: ||sigma_k||^2 = c_k e^{-mu_k T}
	for (std::size_t k = 0; k < 5; ++k) {
		const Real ip = fam[k].coeffs[k] * exp(-freqs[k] * horizon);
		CHECK(close_rel(Real(fam[k].norm_l2 * fam[k].norm_l2), ip, 40));
	}
}

TEST_CASE("precision auto-doubling recovers from a degenerate start") {
	DigitScope scope(50);
	MomentProblem p;
	// nearly coincident frequencies make the gram factorization fail at 50
	// digits; the solver must double its way out
	p.freqs = {Real(1), Real(1) + pow(Real(10), -40), Real(1) + 2 * pow(Real(10), -40)};
	p.horizon = Real(1);
	p.targets = {Real(1), Real(0), Real(0)};
	p.precision_digits = 50;
	MomentSolution sol = solve_moments(p);
	CHECK(sol.precision_digits > 50);
	// capping the doubling surfaces the diagnosable error instead
	SolveOptions capped;
	capped.digits_ceiling = 90;
	CHECK_THROWS_AS(solve_moments(p, capped), FactorizationError);
	// with ample precision the huge divided-difference coefficients resolve
	p.precision_digits = 400;
	MomentSolution fine = solve_moments(p);
	for (const Real& r : fine.residuals) CHECK(r < pow(Real(10), -50));
}

TEST_CASE("weighted solve reports the normalized cost") {
	DigitScope scope(50);
	MomentProblem p;
	p.freqs = {Real(1), Real(2)};
	p.horizon = Real(1);
	p.targets = {Real(3), Real(4)};
	p.weights = {Real(1), Real(1) / 2};
	WeightedResult wr = solve_weighted_moment_theorem(p, Real(1) / 10);
	CHECK(wr.delta == Real(1) / 10);
	// ||zx|| = sqrt(9 + 4) = sqrt(13)
	CHECK(close_rel(wr.measured_cost, Real(wr.sol.norm_l2 / sqrt(Real(13))), 40));
	p.weights.clear();
	CHECK_THROWS_AS(solve_weighted_moment_theorem(p, Real(1) / 10), ValidationError);
}

TEST_CASE("zero first frequency only with the explicit flag") {
	DigitScope scope(50);
	MomentProblem p;
	p.freqs = {Real(0), Real(1)};
	p.horizon = Real(1);
	p.targets = {Real(1), Real(1)};
	CHECK_THROWS_AS(solve_moments(p), ValidationError);
	p.allow_zero_first_freq = true;
	MomentSolution sol = solve_moments(p);
	for (const Real& r : sol.residuals) CHECK(r < pow(Real(10), -35));
}

TEST_CASE("problem validation") {
	DigitScope scope(50);
	MomentProblem p;
	CHECK_THROWS_AS(solve_moments(p), ValidationError);  // no frequencies
	p.freqs = {Real(1), Real(2)};
	p.targets = {Real(1)};
	CHECK_THROWS_AS(solve_moments(p), ValidationError);  // size mismatch
	p.targets = {Real(1), Real(1)};
	p.horizon = Real(0);
	CHECK_THROWS_AS(solve_moments(p), ValidationError);  // bad horizon
	p.horizon = Real(1);
	p.freqs = {Real(2), Real(1)};
	CHECK_THROWS_AS(solve_moments(p), ValidationError);  // decreasing
	p.freqs = {Real(1), Real(2)};
	p.weights = {Real(1), Real(0)};
	CHECK_THROWS_AS(solve_moments(p), ValidationError);  // zero weight
}
