#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace momctl {

// Arbitrary-precision real with a process-wide default precision, set in
// decimal digits.  All numerical kernels take an explicit digit count and
// install it with a DigitScope for the duration of the computation.
using Real = boost::multiprecision::mpfr_float;

inline unsigned working_digits() { return Real::default_precision(); }

inline void set_working_digits(unsigned digits) {
	Real::default_precision(digits);
}

// RAII guard: switches the default precision and restores it on exit.
struct DigitScope {
	unsigned saved;
	explicit DigitScope(unsigned digits) : saved(working_digits()) {
		set_working_digits(digits);
	}
	~DigitScope() { set_working_digits(saved); }
	DigitScope(const DigitScope&) = delete;
	DigitScope& operator=(const DigitScope&) = delete;
};

// Pi at the current working precision.
inline Real pi_value() {
	Real x = 0;
	mpfr_const_pi(x.backend().data(), MPFR_RNDN);
	return x;
}

// Copy of x padded to the current working precision.  Precision propagates
// from operands here (max rule), so kernels promote their external inputs
// once on entry; the padded value is treated as exact thereafter.
inline Real promoted(const Real& x) {
	Real y(x);
	if (y.precision() < working_digits()) y.precision(working_digits());
	return y;
}

inline std::string decimal_string(const Real& x, unsigned digits = 0) {
	return x.str(digits == 0 ? working_digits() : digits);
}

}  // namespace momctl
