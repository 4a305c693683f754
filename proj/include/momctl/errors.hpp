#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace momctl {

// Error hierarchy mapped to process exit codes:
//   2 validation, 3 numerical failure, 4 unconverged.
struct Error : std::runtime_error {
	int exit_code;
	Error(const std::string& msg, int code) : std::runtime_error(msg), exit_code(code) {}
};

struct ValidationError : Error {
	explicit ValidationError(const std::string& msg) : Error(msg, 2) {}
};

struct NumericalError : Error {
	explicit NumericalError(const std::string& msg) : Error(msg, 3) {}
};

struct UnconvergedError : Error {
	explicit UnconvergedError(const std::string& msg) : Error(msg, 4) {}
};

// Loss of positive definiteness during a symmetric factorization.  Carries
// the failing pivot and a precision recommendation (double the digits).
struct FactorizationError : NumericalError {
	std::size_t pivot_index;
	unsigned recommended_digits;
	FactorizationError(const std::string& msg, std::size_t pivot, unsigned recommended)
		: NumericalError(msg), pivot_index(pivot), recommended_digits(recommended) {}
};

}  // namespace momctl
