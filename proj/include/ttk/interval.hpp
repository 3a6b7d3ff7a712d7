#pragma once

#include "ttk/pa.hpp"

namespace ttk {

// Rational enclosures of transcendental values, from MPFR with directed
// rounding; precision starts at 64 bits and doubles until width <= tol.
Interval exp_interval(const Rational& t, const Rational& tol);
Interval log_interval(const Rational& x, const Rational& tol);
// Encloses log over a positive interval.
Interval log_interval(const Interval& x, const Rational& tol);
Interval sqrt_interval(const Rational& x, const Rational& tol);

}  // namespace ttk
