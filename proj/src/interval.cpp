#include "ttk/interval.hpp"

#include <mpfr.h>

namespace ttk {

namespace {

using Fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Rational get_q(mpfr_t f) {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), f);
    return q;
}

Interval enclose(const Rational& x, Fn fn, const Rational& tol) {
    for (mpfr_prec_t prec = 64; prec <= 1 << 16; prec *= 2) {
        mpfr_t a, r;
        mpfr_init2(a, prec);
        mpfr_init2(r, prec);
        mpfr_set_q(a, x.get_mpq_t(), MPFR_RNDD);
        fn(r, a, MPFR_RNDD);
        Rational lo = get_q(r);
        mpfr_set_q(a, x.get_mpq_t(), MPFR_RNDU);
        fn(r, a, MPFR_RNDU);
        Rational hi = get_q(r);
        mpfr_clear(a);
        mpfr_clear(r);
        if (hi - lo <= tol) return Interval{lo, hi};
    }
    throw Error("precision", "interval enclosure did not reach the tolerance");
}

}  // namespace

Interval exp_interval(const Rational& t, const Rational& tol) { return enclose(t, mpfr_exp, tol); }

Interval log_interval(const Rational& x, const Rational& tol) {
    if (x <= 0) throw Error("domain", "log of a non-positive number");
    return enclose(x, mpfr_log, tol);
}

Interval log_interval(const Interval& x, const Rational& tol) {
    return Interval{log_interval(x.lo, tol).lo, log_interval(x.hi, tol).hi};
}

Interval sqrt_interval(const Rational& x, const Rational& tol) {
    if (x < 0) throw Error("domain", "sqrt of a negative number");
    return enclose(x, mpfr_sqrt, tol);
}

}  // namespace ttk
