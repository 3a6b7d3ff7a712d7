#include "common.hpp"

using namespace testing;

namespace {

template <class F>
std::string error_kind(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

const PeriodicSequence& loop() {
    static const PeriodicSequence ps = *load_sequence(fixture("g0m7_loop.seq")).loop;
    return ps;
}

const PACertificate& loop_cert() {
    static const PACertificate c = certify_pa(loop(), default_tol());
    return c;
}

// golden-ratio squared, the top eigenvalue of [[1,1],[1,2]], is the larger
// root of x^2 - 3x + 1
bool below_phi2(const Rational& x) { return x <= Rational(3, 2) || (x - Rational(3, 2)) * (x - Rational(3, 2)) <= Rational(5, 4); }
bool above_phi2(const Rational& x) { return x >= Rational(3, 2) && (x - Rational(3, 2)) * (x - Rational(3, 2)) >= Rational(5, 4); }

bool overlap(const Interval& a, const Interval& b) { return a.lo <= b.hi && b.lo <= a.hi; }

}  // namespace

TEST_CASE("closing the fixture loop") {
    const auto& ps = loop();
    std::vector<int> sigma{9, 2, 8, 1, 12, 22, 7, 3, 19, 6, 11, 5, 10, 18, 4, 17, 16, 14, 20, 13, 21, 24, 23, 15};
    for (auto& x : sigma) --x;
    CHECK(ps.iso.branch == sigma);
    CHECK(ps.order == 132);
    CHECK(ps.seq.size() == 192);
    auto again = close_sequence(ps.seq);
    REQUIRE(again);
    CHECK(again->iso.branch == sigma);

    auto t = load("g0m7.ttk");
    SplitSequence one(t, {Move{MoveKind::SplitRight, 2}});
    CHECK_FALSE(close_sequence(one));

    PeriodicSequence twice = concatenate(ps, ps);
    CHECK(twice.seq.size() == 384);
    CHECK(twice.order == 66);
    for (int j = 0; j < 24; ++j) CHECK(twice.iso.branch[j] == sigma[sigma[j]]);
}

TEST_CASE("period matrix") {
    const auto& ps = loop();
    IntMatrix C = period_matrix(ps);
    IntMatrix A = carrying_matrix(ps.seq);
    Integer d = C.determinant();
    CHECK((d == 1 || d == -1));
    for (int j = 0; j < 24; ++j)
        for (int i = 0; i < 24; ++i) CHECK(C(i, ps.iso.branch[j]) == A(i, j));
    CHECK(C.min_entry() > 0);
    // the period matrix of the doubled loop is C^2
    CHECK(period_matrix(concatenate(ps, ps)) == C * C);
}

TEST_CASE("power iteration brackets a known eigenvalue") {
    IntMatrix C(2, 2);
    C(0, 0) = 1;
    C(0, 1) = 1;
    C(1, 0) = 1;
    C(1, 1) = 2;
    Rational tol(1, 1000000000);
    PFResult pf = perron_frobenius(C, tol);
    CHECK(pf.alpha.width() <= tol);
    CHECK(below_phi2(pf.alpha.lo));
    CHECK(above_phi2(pf.alpha.hi));
    REQUIRE(!pf.history.empty());
    for (const auto& h : pf.history) {
        CHECK(below_phi2(h.lo));
        CHECK(above_phi2(h.hi));
    }
    for (size_t i = 1; i < pf.history.size(); ++i) {
        CHECK(pf.history[i].lo >= pf.history[i - 1].lo);
        CHECK(pf.history[i].hi <= pf.history[i - 1].hi);
    }
}

TEST_CASE("non-primitive loops are refused") {
    auto t = load("g0m7.ttk");
    PeriodicSequence still{SplitSequence(t, {}), identity_iso(*t), 1};
    CHECK(error_kind([&] { certify_pa(still, default_tol()); }) == "not-primitive");
    auto bad = load_sequence(fixture("bad_loop.seq"));
    REQUIRE(bad.loop);
    CHECK(error_kind([&] { certify_pa(*bad.loop, default_tol()); }) == "not-primitive");
}

TEST_CASE("positivity power") {
    IntMatrix shift(3, 3);
    shift(0, 1) = 1;
    shift(1, 2) = 1;
    shift(2, 0) = 1;
    CHECK_FALSE(positivity_power(shift));
    // a cycle with one loop is primitive
    IntMatrix w = shift;
    w(0, 0) = 1;
    w(0, 1) = 1;
    auto n = positivity_power(w);
    REQUIRE(n);
    CHECK(*n <= (3 - 1) * (3 - 1) + 1);
    IntMatrix m = w;
    for (int i = 1; i < *n; ++i) m = m * w;
    CHECK(m.min_entry() > 0);
    IntMatrix before = w;
    for (int i = 1; i < *n - 1; ++i) before = before * w;
    if (*n > 1) CHECK(before.min_entry() == 0);
    CHECK(*loop_cert().positivity_power == 1);
}

TEST_CASE("the fixture loop is certified") {
    const auto& c = loop_cert();
    CHECK(c.alpha.lo > 1);
    CHECK(c.alpha.width() <= default_tol());
    // value from an independent floating-point eigensolver
    CHECK(c.alpha.lo.get_d() == doctest::Approx(1334783.2877190232).epsilon(1e-12));
    CHECK(c.order == 132);
    CHECK(invariant_check(c).ok());
    CHECK(sum(c.lambda_plus->weights()) == 1);
    CHECK(pairing(*c.lambda_plus, *c.lambda_minus) == 1);
    for (size_t i = 1; i < c.history.size(); ++i) {
        CHECK(c.history[i].lo >= c.history[i - 1].lo);
        CHECK(c.history[i].hi <= c.history[i - 1].hi);
    }
}

TEST_CASE("invariant check rejects perturbed eigenvectors") {
    const auto& c = loop_cert();
    RVec lp = c.lambda_plus->weights(), lm = c.lambda_minus->weights();
    RVec bumped = lp;
    bumped[5] *= Rational(1000001, 1000000);
    CHECK_FALSE(invariant_check(c.C, c.alpha, bumped, lm).ok());
    RVec lm2 = lm;
    lm2[0] *= Rational(999999, 1000000);
    CHECK_FALSE(invariant_check(c.C, c.alpha, lp, lm2).ok());
    RVec tripled = lp;
    for (auto& x : tripled) x *= 3;
    CHECK(invariant_check(c.C, c.alpha, tripled, lm).ok());
    CHECK_FALSE(invariant_check(c.C, Interval{c.alpha.lo + c.alpha.width() * 2, c.alpha.hi + 1}, lp, lm).ok());
}

TEST_CASE("the doubled loop has the squared dilatation") {
    PACertificate c2 = certify_pa(concatenate(loop(), loop()), default_tol());
    const auto& a = loop_cert().alpha;
    CHECK(overlap(c2.alpha, Interval{a.lo * a.lo, a.hi * a.hi}));
}

TEST_CASE("certifying through the order power agrees") {
    Interval via = certify_via_power(loop(), default_tol());
    CHECK(overlap(via, loop_cert().alpha));
    CHECK(via.width() <= default_tol());
}

TEST_CASE("integer roots") {
    Rational tol(1, 1000000);
    Interval r = root_interval(Interval{8, 8}, 3, tol);
    CHECK(r.contains(2));
    CHECK(r.width() <= tol);
    Interval s = root_interval(Interval{2, 3}, 2, tol);
    CHECK(s.lo * s.lo <= 2);
    CHECK(s.hi * s.hi >= 3);
    CHECK(s.hi - s.lo <= Rational(1, 3));
    CHECK(root_interval(Interval{5, 7}, 1, tol).lo == 5);
    CHECK(error_kind([&] { root_interval(Interval{0, 1}, 2, tol); }) == "domain");
    Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        Rational x = frac(long(rng() % 100000 + 1), long(rng() % 1000 + 1));
        int n = int(rng() % 7) + 2;
        Interval q = root_interval(Interval{x, x}, n, tol);
        Rational lo = 1, hi = 1;
        for (int k = 0; k < n; ++k) {
            lo *= q.lo;
            hi *= q.hi;
        }
        CHECK(lo <= x);
        CHECK(hi >= x);
    }
}
