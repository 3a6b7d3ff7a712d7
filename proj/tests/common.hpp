#pragma once

#include "doctest.h"
#include "ttk/families.hpp"
#include "ttk/generators.hpp"
#include "ttk/io.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace testing {

using namespace ttk;

inline std::string fixture(const std::string& name) { return std::string(TTK_FIXTURES) + "/" + name; }

inline TrackRef load(const std::string& name) { return share(load_track(fixture(name))); }

inline std::vector<int> random_perm(int p, Rng& rng) {
    std::vector<int> v(p);
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

// Same track with branch b renamed perm[b].
inline TrainTrack relabel(const TrainTrack& t, const std::vector<int>& perm) {
    std::vector<Switch> sws = t.switches();
    for (auto& s : sws) {
        s.a.branch = perm[s.a.branch];
        for (auto& e : s.b) e.branch = perm[e.branch];
    }
    std::vector<BranchSide> marks = t.marks();
    for (auto& m : marks) m.branch = perm[m.branch];
    return TrainTrack(t.surface(), t.branches(), sws, marks);
}

// Tracks reached from the fixtures by random splits; the generator for the
// structural property tests.
inline std::vector<TrackRef> random_tracks(Rng& rng, int count, int max_len = 12) {
    std::vector<TrackRef> base{load("g0m7.ttk"), load("g2m1.ttk")};
    std::vector<TrackRef> out;
    for (int i = 0; i < count; ++i) {
        TrackRef t = base[i % base.size()];
        auto mv = random_splits(t, rng, int(rng() % (max_len + 1)));
        out.push_back(SplitSequence(t, mv).end());
    }
    return out;
}

// gmpxx leaves two-argument constructions unreduced
inline Rational frac(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline Rational sum(const RVec& v) {
    Rational s;
    for (const auto& x : v) s += x;
    return s;
}

inline Rational min_of(const RVec& v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace testing
