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

}  // namespace

TEST_CASE("recurrence of the fixtures") {
    auto t = load("g0m7.ttk");
    auto r = is_recurrent(t);
    REQUIRE(r.ok);
    // max-min weight at total weight 1, also found by an independent LP
    CHECK(r.min_weight == Rational(1, 77));
    CHECK(switch_violation(*t, r.witness->weights()).empty());
    CHECK(sum(r.witness->weights()) == 1);
    CHECK(min_of(r.witness->weights()) == Rational(1, 77));

    auto g2 = is_recurrent(load("g2m1.ttk"));
    REQUIRE(g2.ok);
    CHECK(g2.min_weight == Rational(1, 62));

    auto nr = is_recurrent(load("nonrec.ttk"));
    CHECK_FALSE(nr.ok);
    CHECK_FALSE(nr.witness);
}

TEST_CASE("the tangential proxy") {
    auto t = load("g0m7.ttk");
    auto r = is_transversely_recurrent_proxy(t);
    REQUIRE(r.ok);
    CHECK(r.min_weight == Rational(1, 24));
    CHECK(triangle_violation(*t, r.witness->weights()).empty());
    auto g2 = is_transversely_recurrent_proxy(load("g2m1.ttk"));
    REQUIRE(g2.ok);
    CHECK(g2.min_weight == Rational(1, 38));
    CHECK(error_kind([] { is_transversely_recurrent_proxy(load("nonrec.ttk")); }) == "not-maximal");
}

TEST_CASE("witnesses scale") {
    auto t = load("g0m7.ttk");
    auto mu = *is_recurrent(t).witness;
    auto nu = *is_transversely_recurrent_proxy(t).witness;
    CHECK(switch_violation(*t, mu.scaled(7).weights()).empty());
    CHECK(triangle_violation(*t, nu.scaled(Rational(3, 11)).weights()).empty());
}

TEST_CASE("pairing") {
    auto t = load("g0m7.ttk");
    auto mu = *is_recurrent(t).witness;
    auto nu = *is_transversely_recurrent_proxy(t).witness;
    TransverseMeasure zero(t, RVec(t->branches()));
    CHECK(pairing(zero, nu) == 0);
    Rational direct;
    for (int b = 0; b < t->branches(); ++b) direct += mu[b] * nu[b];
    CHECK(pairing(mu, nu) == direct);
    // the proxy witness is uniform, so the pairing is 1/24 of the total weight
    CHECK(pairing(mu, nu) == Rational(1, 24));
    CHECK(pairing(mu.scaled(2), nu) == 2 * pairing(mu, nu));
    CHECK(pairing(mu, nu.scaled(5)) == 5 * pairing(mu, nu));
}

TEST_CASE("pairing is bilinear on random cone elements") {
    Rng rng(21);
    auto t = load("g2m1.ttk");
    auto nu = *is_transversely_recurrent_proxy(t).witness;
    for (int i = 0; i < 20; ++i) {
        TransverseMeasure a(t, random_positive_measure(t, rng)), b(t, random_positive_measure(t, rng));
        CHECK(pairing(a + b, nu) == pairing(a, nu) + pairing(b, nu));
        CHECK(pairing(a, nu) > 0);
    }
}

TEST_CASE("pairing refuses different tracks") {
    auto t = load("g0m7.ttk"), u = load("g2m1.ttk");
    TransverseMeasure mu = *is_recurrent(t).witness;
    TangentialMeasure nu = *is_transversely_recurrent_proxy(u).witness;
    CHECK(error_kind([&] { pairing(mu, nu); }) == "track-mismatch");
}

TEST_CASE("normalize") {
    Rng rng(22);
    auto t = load("g0m7.ttk");
    auto [n1, s1] = normalize(*is_recurrent(t).witness);
    CHECK(s1 == 1);
    TransverseMeasure mu(t, random_positive_measure(t, rng));
    Rational w = mu.total();
    auto [scaled, s] = normalize(mu.scaled(Rational(5, 2) / w));
    CHECK(s == Rational(5, 2));
    CHECK(scaled.total() == 1);
    CHECK(normalize(normalize(mu).first).second == 1);
    TransverseMeasure zero(t, RVec(t->branches()));
    CHECK(error_kind([&] { normalize(zero); }) == "zero-measure");
}

TEST_CASE("curves as measures") {
    auto t = load("g0m7.ttk");
    auto g1 = closed_trainpath(*t, {14, 15, 16});
    auto g2 = closed_trainpath(*t, {20, 21, 22});
    auto m1 = curve_as_measure(t, g1), m2 = curve_as_measure(t, g2);
    CHECK(sum(m1.weights()) == 3);
    auto nu = *is_transversely_recurrent_proxy(t).witness;
    CHECK(pairing(m1, nu) == nu[14] + nu[15] + nu[16]);
    for (int b = 0; b < t->branches(); ++b) CHECK(m1[b] * m2[b] == 0);
    auto both = m1 + m2;
    CHECK(sum(both.weights()) == 6);
}

TEST_CASE("constructors reject vectors outside the cones") {
    Rng rng(23);
    for (auto name : {"g0m7.ttk", "g2m1.ttk"}) {
        auto t = load(name);
        int p = t->branches();
        auto mu = random_positive_measure(t, rng);
        for (int b = 0; b < p; ++b) {
            RVec w = mu;
            w[b] += Rational(1, 1000000);
            CHECK(error_kind([&] { TransverseMeasure(t, w); }) != "");
        }
        RVec neg = mu;
        neg[int(rng() % p)] = -1;
        CHECK(error_kind([&] { TransverseMeasure(t, neg); }) != "");

        // push one side of a triangle past the sum of the other two
        auto sides = triangle_sides(*t);
        REQUIRE(!sides.empty());
        RVec nu(p, Rational(1));
        int b = sides[0][0][0];
        nu[b] = 100 * p;
        CHECK(error_kind([&] { TangentialMeasure(t, nu); }) != "");
        RVec nneg(p, Rational(1));
        nneg[0] = Rational(-1, 3);
        CHECK(error_kind([&] { TangentialMeasure(t, nneg); }) != "");
    }
}

TEST_CASE("cones are closed under sums and positive scaling") {
    Rng rng(24);
    auto t = load("g0m7.ttk");
    auto nu0 = *is_transversely_recurrent_proxy(t).witness;
    for (int i = 0; i < 30; ++i) {
        TransverseMeasure a(t, random_positive_measure(t, rng)), b(t, random_positive_measure(t, rng));
        Rational s = frac(long(rng() % 1000 + 1), long(rng() % 1000 + 1));
        CHECK(switch_violation(*t, (a + b.scaled(s)).weights()).empty());
        CHECK(triangle_violation(*t, (nu0 + nu0.scaled(s)).weights()).empty());
    }
}

TEST_CASE("recurrence witnesses stay measures under carrying") {
    Rng rng(25);
    auto t = load("g0m7.ttk");
    for (int i = 0; i < 10; ++i) {
        SplitSequence seq(t, random_splits(t, rng, 15));
        auto rec = is_recurrent(seq.end());
        if (!rec.ok) continue;
        RVec back = carrying_matrix(seq).apply(rec.witness->weights());
        CHECK(switch_violation(*t, back).empty());
    }
}

TEST_CASE("the normalized pair") {
    auto t = load("g0m7.ttk");
    auto mu = *is_recurrent(t).witness;
    auto nu = *is_transversely_recurrent_proxy(t).witness;
    NormalizedPair np(mu, nu.scaled(1 / pairing(mu, nu)));
    CHECK(pairing(np.lambda, np.nu) == 1);
    CHECK(error_kind([&] { NormalizedPair(mu, nu); }) != "");
}
