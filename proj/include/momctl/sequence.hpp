#pragma once

#include "momctl/real.hpp"

#include <cstdint>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace momctl {

// Raw rectangle spectrum: nondecreasing eigenvalues (repeats allowed) with
// their lattice pairs, ties ordered lexicographically in (l, m).
struct LatticeSpectrum {
	std::vector<Real> raw_values;
	std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
};

// Strictly increasing positive frequency sequence with provenance.
struct SpectralSequence {
	std::vector<Real> values;
	std::vector<std::pair<std::uint64_t, std::uint64_t>> labels;  // optional, may be empty
	std::string generator_tag;
	Real first_value;
};

LatticeSpectrum generate_rectangle_laplacian(const Real& a_len, const Real& b_len,
                                             std::size_t count);
LatticeSpectrum generate_rectangle_bilaplacian(const Real& a_len, const Real& b_len,
                                               std::size_t count);

// mu_k = lambda_k^2 - 1/k + 2 on the sorted unit-square Laplacian values.
SpectralSequence generate_perturbed_square_example(std::size_t count);

// Appendix-style densification: each [mu_k, mu_{k+1}) block subdivided into
// floor(k^{(1-2a)/(2a)}) equally spaced points.
struct DensifiedSequence {
	SpectralSequence seq;
	std::vector<std::uint64_t> block_sizes;
};
DensifiedSequence densify_sequence(const SpectralSequence& seq, const Real& a);

// #\{k : values[k] <= gamma\}, by binary search.
std::size_t counting_function(const SpectralSequence& seq, const Real& gamma);

// ---- Lazy far-index access for the perturbed-square example ----
// Integer lattice rank utilities for s = l^2 + m^2, l, m >= 1.

// #\{(l, m) >= 1 : l^2 + m^2 <= s\}; O(sqrt(s)) monotone two-pointer walk.
std::uint64_t lattice_square_rank(std::uint64_t s);

// s-value occupying the given 1-based sorted rank (with multiplicity).
std::uint64_t lattice_square_value_at_rank(std::uint64_t rank);

// s-values at ranks [start_rank, start_rank + count), sorted.
std::vector<std::uint64_t> lattice_square_window(std::uint64_t start_rank, std::size_t count);

// mu_rank of the perturbed-square sequence at the current working precision.
Real perturbed_square_far_value(std::uint64_t rank);
std::vector<Real> perturbed_square_far_window(std::uint64_t start_rank, std::size_t count);

// #\{k : mu_k <= gamma\} for the perturbed-square sequence.
std::uint64_t perturbed_square_rank_of(const Real& gamma);

}  // namespace momctl
