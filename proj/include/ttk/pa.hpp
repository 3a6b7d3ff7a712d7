#pragma once

#include "ttk/moves.hpp"

namespace ttk {

struct PeriodicSequence {
    SplitSequence seq;
    TrackIso iso;  // end -> start
    int order = 1;
};

std::optional<PeriodicSequence> close_sequence(const SplitSequence& seq);
// Checks a declared branch map end -> start.
PeriodicSequence close_with(const SplitSequence& seq, const std::vector<int>& branch_map);
// Runs b after a (both loops on the same start track).
PeriodicSequence concatenate(const PeriodicSequence& a, const PeriodicSequence& b);
PeriodicSequence power(const PeriodicSequence& a, int n);

// C maps measures on the start track to measures on the start track:
// column sigma(j) of C is column j of the carrying matrix.
IntMatrix period_matrix(const PeriodicSequence& ps);

// Least n <= (p-1)^2 + 1 with C^n > 0, from the zero pattern alone.
std::optional<int> positivity_power(const IntMatrix& C);

struct Interval {
    Rational lo, hi;
    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Collatz-Wielandt range of (Cv)_b / v_b over b; v must be positive.
Interval cw_range(const IntMatrix& C, const RVec& v);

struct PFResult {
    Interval alpha;
    RVec right, left;             // positive, unnormalized
    std::vector<Interval> history;  // per iteration, from the right vector
};

// Power iteration with rigorous Collatz-Wielandt brackets; the returned
// interval contains the ranges of both the right and the left vector.
// With a kernel basis (free coordinate f has a 1 in basis vector f only) the
// returned right vector is rebuilt from its free coordinates, so it satisfies
// the linear conditions cut out by that kernel exactly.
PFResult perron_frobenius(const IntMatrix& C, const Rational& tol, int max_iter = 100000,
                          const std::vector<RVec>* kernel = nullptr);

// Bracket for the n-th root of a positive interval, width <= tol.
Interval root_interval(const Interval& x, int n, const Rational& tol);

struct PACertificate {
    IntMatrix C;
    std::vector<int> sigma;
    int order = 1;
    std::optional<int> positivity_power;
    Interval alpha;
    std::optional<TransverseMeasure> lambda_plus;
    std::optional<TangentialMeasure> lambda_minus;
    std::vector<Interval> history;
};

PACertificate certify_pa(const PeriodicSequence& ps, const Rational& tol);
// Same eigenvalue through C^order and an order-th root.
Interval certify_via_power(const PeriodicSequence& ps, const Rational& tol);

struct InvariantReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};
InvariantReport invariant_check(const PACertificate& cert);
InvariantReport invariant_check(const IntMatrix& C, const Interval& alpha, const RVec& right, const RVec& left);

Rational default_tol();

}  // namespace ttk
