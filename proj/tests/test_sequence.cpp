#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "momctl/errors.hpp"
#include "momctl/real.hpp"
#include "momctl/sequence.hpp"

#include <algorithm>

using namespace momctl;

namespace {

bool close_rel(const Real& x, const Real& y, int digits10) {
	const Real tol = pow(Real(10), -digits10);
	const Real scale = abs(y) > 1 ? abs(y) : Real(1);
	return abs(x - y) <= tol * scale;
}

}  // namespace

TEST_CASE("square lattice spectrum: first values and tie ordering") {
	DigitScope scope(50);
	LatticeSpectrum lap = generate_rectangle_laplacian(Real(1), Real(1), 10);
	const Real pi2 = pi_value() * pi_value();
	CHECK(close_rel(lap.raw_values[0], 2 * pi2, 40));   // (1,1)
	CHECK(close_rel(lap.raw_values[1], 5 * pi2, 40));   // (1,2)
	CHECK(close_rel(lap.raw_values[2], 5 * pi2, 40));   // (2,1)
	CHECK(close_rel(lap.raw_values[3], 8 * pi2, 40));   // (2,2)
	CHECK(lap.pairs[1] == std::make_pair<std::uint64_t, std::uint64_t>(1, 2));
	CHECK(lap.pairs[2] == std::make_pair<std::uint64_t, std::uint64_t>(2, 1));
	for (std::size_t i = 0; i + 1 < lap.raw_values.size(); ++i)
		CHECK(lap.raw_values[i] <= lap.raw_values[i + 1]);
}

TEST_CASE("perturbed-square sequence: closed-form anchors") {
	DigitScope scope(50);
	SpectralSequence seq = generate_perturbed_square_example(100);
	const Real pi4 = pow(pi_value(), 4);
	// mu_1 = (2 pi^2)^2 - 1 + 2, mu_2 = (5 pi^2)^2 - 1/2 + 2
	CHECK(close_rel(seq.values[0], 4 * pi4 + 1, 40));
	CHECK(close_rel(seq.values[1], 25 * pi4 + Real(3) / 2, 40));
	// repeated lattice value 5 pi^2 at k = 2, 3: gap is exactly 1/2 - 1/3
	CHECK(close_rel(seq.values[2] - seq.values[1], Real(1) / 6, 40));
	CHECK(seq.generator_tag == "perturbed-square");
	CHECK(seq.first_value == seq.values[0]);
}

TEST_CASE("perturbed-square sequence: strictly increasing, in-block gap law") {
	DigitScope scope(50);
	SpectralSequence seq = generate_perturbed_square_example(5000);
	LatticeSpectrum lap = generate_rectangle_laplacian(Real(1), Real(1), 5000);
	for (std::size_t i = 0; i + 1 < seq.values.size(); ++i) {
		CHECK(seq.values[i] < seq.values[i + 1]);
		// within a repeated lattice block the gap is exactly 1/(k (k+1))
		if (lap.raw_values[i] == lap.raw_values[i + 1]) {
			const Real k(static_cast<unsigned long>(i + 1));
			CHECK(close_rel(seq.values[i + 1] - seq.values[i], 1 / (k * (k + 1)), 35));
		}
	}
}

TEST_CASE("counting function agrees with a linear scan") {
	DigitScope scope(50);
	SpectralSequence seq = generate_perturbed_square_example(300);
	const std::vector<Real> probes = {Real(0), seq.values[0], seq.values[137],
	                                  Real(seq.values[137] + Real(1) / 100),
	                                  Real(seq.values.back() + 1)};
	for (const Real& g : probes) {
		std::size_t direct = 0;
		for (const Real& v : seq.values)
			if (v <= g) ++direct;
		CHECK(counting_function(seq, g) == direct);
	}
}

TEST_CASE("lattice rank utilities are mutually consistent") {
	DigitScope scope(50);
	// brute-force sorted list of l^2 + m^2 values
	std::vector<std::uint64_t> brute;
	for (std::uint64_t l = 1; l <= 60; ++l)
		for (std::uint64_t m = 1; m <= 60; ++m)
			if (l * l + m * m <= 3600) brute.push_back(l * l + m * m);
	std::sort(brute.begin(), brute.end());
	for (std::uint64_t rank : {std::uint64_t(1), std::uint64_t(2), std::uint64_t(17),
	                           std::uint64_t(100), std::uint64_t(500)}) {
		CHECK(lattice_square_value_at_rank(rank) == brute[rank - 1]);
	}
	CHECK(lattice_square_rank(2) == 1);
	CHECK(lattice_square_rank(5) == 3);  // (1,1), (1,2), (2,1)
	CHECK(lattice_square_rank(brute[499]) >= 500);
	std::vector<std::uint64_t> win = lattice_square_window(101, 50);
	for (std::size_t i = 0; i < 50; ++i) CHECK(win[i] == brute[100 + i]);
}

TEST_CASE("far values match the materialized prefix and extend it") {
	DigitScope scope(50);
	SpectralSequence seq = generate_perturbed_square_example(2000);
	for (std::uint64_t k : {std::uint64_t(1), std::uint64_t(2), std::uint64_t(777),
	                        std::uint64_t(2000)})
		CHECK(close_rel(perturbed_square_far_value(k), seq.values[k - 1], 40));
	std::vector<Real> win = perturbed_square_far_window(1995, 10);
	for (int i = 0; i < 6; ++i) CHECK(close_rel(win[i], seq.values[1994 + i], 40));
	for (int i = 6; i < 10; ++i) CHECK(win[i] > win[i - 1]);
	// rank_of inverts the value map (probe at gap midpoints to dodge ties)
	CHECK(perturbed_square_rank_of((seq.values[1499] + seq.values[1500]) / 2) == 1500);
	CHECK(perturbed_square_rank_of((seq.values[1498] + seq.values[1499]) / 2) == 1499);
	CHECK(perturbed_square_rank_of(Real(0)) == 0);
	// far window deep beyond any prefix stays strictly increasing
	std::vector<Real> deep = perturbed_square_far_window(1000000000, 5);
	for (int i = 1; i < 5; ++i) CHECK(deep[i] > deep[i - 1]);
	CHECK(perturbed_square_rank_of(deep[2]) == 1000000002);
}

TEST_CASE("densification block sizes follow the exponent rule") {
	DigitScope scope(50);
	SpectralSequence seq = generate_perturbed_square_example(40);
	// a = 1/4: floor(k^{(1-2a)/(2a)}) = k extra points in block k
	DensifiedSequence dens = densify_sequence(seq, Real(1) / 4);
	REQUIRE(dens.block_sizes.size() == 39);
	CHECK(dens.block_sizes[0] == 1);
	CHECK(dens.block_sizes[15] == 16);
	CHECK(dens.block_sizes[38] == 39);
	for (std::size_t i = 0; i + 1 < dens.seq.values.size(); ++i)
		CHECK(dens.seq.values[i] < dens.seq.values[i + 1]);
	// total size is the sum of the block sizes (last endpoint not emitted)
	std::uint64_t total = 0;
	for (std::uint64_t bsz : dens.block_sizes) total += bsz;
	CHECK(dens.seq.values.size() == total);
	// the exponent must lie strictly inside (0, 1/2)
	CHECK_THROWS_AS(densify_sequence(seq, Real(1) / 2), ValidationError);
	CHECK_THROWS_AS(densify_sequence(seq, Real(0)), ValidationError);
}

TEST_CASE("generator rejects invalid geometry") {
	DigitScope scope(50);
	CHECK_THROWS_AS(generate_rectangle_laplacian(Real(0), Real(1), 5), ValidationError);
	CHECK_THROWS_AS(generate_rectangle_bilaplacian(Real(1), Real(-2), 5), ValidationError);
	CHECK_THROWS_AS(generate_perturbed_square_example(0), ValidationError);
}
