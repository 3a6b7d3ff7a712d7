#include "common.hpp"

#include <map>

using namespace testing;

namespace {

std::vector<int> large_of(const TrainTrack& t) {
    std::vector<int> out;
    auto r = branch_roles(t);
    for (int b = 0; b < t.branches(); ++b)
        if (r[b] == Role::Large) out.push_back(b);
    return out;
}

std::vector<int> mixed_of(const TrainTrack& t) {
    std::vector<int> out;
    auto r = branch_roles(t);
    for (int b = 0; b < t.branches(); ++b)
        if (r[b] == Role::Mixed) out.push_back(b);
    return out;
}

template <class F>
std::string error_kind(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return "";
}

// t*m1 + (1-t)*m2 with weight(a) = ratio * weight(b); m1 and m2 must lie on
// opposite sides of that line
RVec blend(const RVec& m1, const RVec& m2, int a, int b, const Rational& ratio) {
    Rational f1 = m1[a] - ratio * m1[b], f2 = m2[a] - ratio * m2[b];
    Rational t = -f2 / (f1 - f2);
    RVec out(m1.size());
    for (size_t i = 0; i < m1.size(); ++i) out[i] = t * m1[i] + (1 - t) * m2[i];
    return out;
}

// two positive measures on either side of mu(a) = mu(b) at the large branch e,
// when the cone has both
std::optional<std::pair<RVec, RVec>> straddle(const TrackRef& t, int e, Rng& rng) {
    SplitLabels L = split_labels(*t, e);
    MeasureSampler draw(t);
    std::optional<RVec> hi, lo;
    for (int i = 0; i < 400 && !(hi && lo); ++i) {
        RVec mu = draw(rng);
        if (mu[L.a.branch] > mu[L.b.branch]) hi = mu;
        if (mu[L.a.branch] < mu[L.b.branch]) lo = mu;
    }
    if (!hi || !lo) return std::nullopt;
    return std::pair{*hi, *lo};
}

// switch equations only, signs allowed
bool balanced(const TrainTrack& t, const RVec& w) {
    for (const auto& s : t.switches())
        if (w[s.a.branch] != w[s.b[0].branch] + w[s.b[1].branch]) return false;
    return true;
}

RVec random_kernel_vector(const TrainTrack& t, Rng& rng) {
    RVec v(t.branches());
    for (const auto& k : switch_kernel(t)) {
        Rational c(long(rng() % 2001) - 1000);
        for (size_t b = 0; b < v.size(); ++b) v[b] += c * k[b];
    }
    return v;
}

}  // namespace

TEST_CASE("one split moves the loser weights onto the split branch") {
    auto t = load("g0m7.ttk");
    Rng rng(31);
    for (int e : large_of(*t)) {
        SplitLabels L = split_labels(*t, e);
        for (Side s : {Side::L, Side::R}) {
            MoveResult r = split(*t, e, s);
            // the split track need not be recurrent; any solution of its
            // switch equations will do
            RVec mu = random_kernel_vector(r.track, rng);
            REQUIRE(balanced(r.track, mu));
            RVec mu0 = pull_back(r.info, mu);
            // a left split loses a and c: mu0(e) = mu(e') + mu(a) + mu(c);
            // a right split loses b and d
            if (s == Side::L) CHECK(mu0[e] == mu[e] + mu[L.a.branch] + mu[L.c.branch]);
            else CHECK(mu0[e] == mu[e] + mu[L.b.branch] + mu[L.d.branch]);
            for (int b = 0; b < t->branches(); ++b)
                if (b != e) CHECK(mu0[b] == mu[b]);
            CHECK(balanced(*t, mu0));
            CHECK(elementary_matrix(t->branches(), r.info).apply(mu) == mu0);
        }
    }
}

TEST_CASE("elementary matrices") {
    auto t = load("g0m7.ttk");
    int p = t->branches();
    for (int e : large_of(*t))
        for (Side s : {Side::L, Side::R}) {
            IntMatrix m = elementary_matrix(p, split(*t, e, s).info);
            int nz = 0;
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j) nz += m(i, j) != 0;
            CHECK(nz == p + 2);
            CHECK(m.determinant() == 1);
        }
}

TEST_CASE("left and right splits of the fixture differ") {
    for (auto name : {"g0m7.ttk", "g2m1.ttk"}) {
        auto t = load(name);
        for (int e : large_of(*t)) CHECK_FALSE(isomorphism(split(*t, e, Side::R).track, split(*t, e, Side::L).track));
    }
}

TEST_CASE("split then collapse is the identity") {
    Rng rng(32);
    auto tracks = random_tracks(rng, 100, 6);
    int tried = 0;
    for (const auto& t : tracks) {
        auto large = large_of(*t);
        if (large.empty()) continue;
        ++tried;
        int e = large[rng() % large.size()];
        Move mv{rng() % 2 ? MoveKind::SplitRight : MoveKind::SplitLeft, e};
        TrainTrack s = apply_move(*t, mv).track;
        CHECK(collapse(s, mv) == *t);
    }
    CHECK(tried >= 90);
}

TEST_CASE("collapse errors") {
    auto t = load("g0m7.ttk");
    int m = mixed_of(*t).front();
    TrainTrack sh = shift(*t, m).track;
    CHECK(error_kind([&] { collapse(sh, Move{MoveKind::Shift, m}); }) == "non-invertible");
    int e = large_of(*t).front();
    Move mv{MoveKind::SplitRight, e};
    TrainTrack once = collapse(split(*t, e, Side::R).track, mv);
    CHECK(error_kind([&] { collapse(once, mv); }) == "non-invertible");
}

TEST_CASE("shifts") {
    auto t = load("g0m7.ttk");
    for (int m : mixed_of(*t)) {
        MoveResult r = shift(*t, m);
        std::map<std::pair<int, int>, int> before, after;
        for (const auto& g : t->regions()) before[{g.cusps, g.punctures}]++;
        for (const auto& g : r.track.regions()) after[{g.cusps, g.punctures}]++;
        CHECK(before == after);
        auto r0 = branch_roles(*t), r1 = branch_roles(r.track);
        for (int b = 0; b < t->branches(); ++b)
            if (b != m && b != r.info.shift_y && b != r.info.shift_other) CHECK(r0[b] == r1[b]);
        REQUIRE(r.track.role(m) == Role::Mixed);
        TrainTrack back = shift(r.track, m).track;
        auto iso = isomorphism(back, *t);
        REQUIRE(iso);
        CHECK(is_identity(*iso));
    }
    CHECK(error_kind([&] { shift(*t, large_of(*t).front()); }) == "wrong-role");
    CHECK(error_kind([&] { split(*t, mixed_of(*t).front(), Side::R); }) == "wrong-role");
}

TEST_CASE("lambda split on a measure with mu(a) = 2, mu(b) = 1") {
    Rng rng(33);
    auto t = load("g0m7.ttk");
    int e = -1;
    std::optional<std::pair<RVec, RVec>> both;
    for (int b : large_of(*t))
        if ((both = straddle(t, b, rng))) {
            e = b;
            break;
        }
    REQUIRE(both);
    SplitLabels L = split_labels(*t, e);
    auto [hi, lo] = *both;
    RVec mu = blend(hi, lo, L.a.branch, L.b.branch, 2);
    Rational s = 1 / mu[L.b.branch];
    for (auto& x : mu) x *= s;
    REQUIRE(mu[L.a.branch] == 2);
    REQUIRE(mu[L.b.branch] == 1);
    REQUIRE(switch_violation(*t, mu).empty());
    LambdaSplit ls = lambda_split(*t, mu, e);
    CHECK(ls.side == Side::R);
    CHECK(ls.weights[e] == 1);
    CHECK(ls.weights[e] == mu[e] - mu[L.b.branch] - mu[L.d.branch]);
    CHECK(switch_violation(ls.track, ls.weights).empty());
    CHECK(elementary_matrix(t->branches(), ls.info).apply(ls.weights) == mu);
}

TEST_CASE("lambda split ties are errors") {
    Rng rng(34);
    int ties = 0;
    for (auto name : {"g0m7.ttk", "g2m1.ttk"}) {
        auto t = load(name);
        for (int e : large_of(*t)) {
            SplitLabels L = split_labels(*t, e);
            auto both = straddle(t, e, rng);
            if (!both) continue;
            RVec mu = blend(both->first, both->second, L.a.branch, L.b.branch, 1);
            REQUIRE(mu[L.a.branch] == mu[L.b.branch]);
            CHECK(error_kind([&] { lambda_split(*t, mu, e); }) == "tie");
            ++ties;
        }
    }
    CHECK(ties > 0);
}

TEST_CASE("lambda split transport is inverted by the elementary matrix") {
    Rng rng(35);
    for (int i = 0; i < 30; ++i) {
        // lambda walks keep a positive measure, so their end tracks are recurrent
        auto tr = lambda_trajectory(load(i % 2 ? "g2m1.ttk" : "g0m7.ttk"), rng, i % 6);
        const TrackRef& t = tr.seq.end();
        RVec mu = random_positive_measure(t, rng);
        for (int e : large_of(*t)) {
            LambdaSplit ls = lambda_split(*t, mu, e);
            for (const auto& x : ls.weights) CHECK(x > 0);
            CHECK(elementary_matrix(t->branches(), ls.info).apply(ls.weights) == mu);
        }
    }
}

TEST_CASE("carrying matrices") {
    auto t = load("g0m7.ttk");
    int p = t->branches();
    CHECK(carrying_matrix(SplitSequence(t, {})) == IntMatrix::identity(p));
    int e = large_of(*t).front();
    SplitSequence one(t, {Move{MoveKind::SplitLeft, e}});
    CHECK(carrying_matrix(one) == elementary_matrix(p, one.steps()[0]));
}

TEST_CASE("carrying matrices compose and match the stepwise oracle") {
    Rng rng(36);
    for (auto name : {"g0m7.ttk", "g2m1.ttk"}) {
        auto t = load(name);
        for (int i = 0; i < 15; ++i) {
            SplitSequence seq(t, random_splits(t, rng, 30));
            int cut = int(rng() % (seq.size() + 1));
            IntMatrix whole = carrying_matrix(seq);
            CHECK(whole == carrying_matrix_stepwise(seq));
            CHECK(whole == carrying_matrix(seq, 0, cut) * carrying_matrix(seq, cut, seq.size()));
            Integer d = whole.determinant();
            CHECK((d == 1 || d == -1));
        }
    }
}

TEST_CASE("tightness") {
    auto t = load("g0m7.ttk");
    CHECK_FALSE(is_tight(SplitSequence(t, {})));
    auto ld = load_sequence(fixture("g0m7_loop.seq"));
    CHECK(is_tight(ld.seq));
    CHECK(carrying_matrix(ld.seq).min_entry() == 8);
    // appending moves after a tight piece keeps it tight
    Rng rng(37);
    for (int i = 0; i < 5; ++i) {
        auto extra = random_splits(ld.seq.end(), rng, 10);
        SplitSequence longer = ld.seq.then(extra);
        CHECK(is_tight(longer));
        CHECK(carrying_matrix(longer).min_entry() >= 8);
    }
}

TEST_CASE("minimal weight bound on a toy matrix") {
    IntMatrix ones(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ones(i, j) = 1;
    Rational beta = min_weight_bound(ones);
    CHECK(beta == Rational(1, 2));
    // brute force over the simplex of end measures
    for (int k = 0; k <= 100; ++k) {
        RVec mu{frac(k, 100), frac(100 - k, 100)};
        RVec m0 = ones.apply(mu);
        CHECK(min_of(m0) / sum(m0) >= beta);
    }
}

TEST_CASE("minimal weight bound on the fixture loop") {
    auto ld = load_sequence(fixture("g0m7_loop.seq"));
    Rational beta = min_weight_bound(ld.seq);
    CHECK(beta == Rational(18, 60187));
    Rng rng(38);
    for (int i = 0; i < 200; ++i) {
        RVec m0 = random_carried_measure(ld.seq, rng);
        CHECK(min_of(m0) / sum(m0) >= beta);
        RVec twice = m0;
        for (auto& x : twice) x *= 3;
        CHECK(min_of(twice) / sum(twice) == min_of(m0) / sum(m0));
    }
    CHECK(error_kind([&] { min_weight_bound(SplitSequence(ld.seq.start(), {})); }) == "not-tight");
}

TEST_CASE("replaying is deterministic") {
    Rng rng(39);
    auto t = load("g2m1.ttk");
    auto mv = random_splits(t, rng, 40);
    SplitSequence a(t, mv), b(t, mv);
    for (int i = 0; i <= a.size(); ++i) CHECK(*a.track(i) == *b.track(i));
}
