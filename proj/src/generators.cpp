#include "ttk/generators.hpp"

#include <algorithm>

namespace ttk {

namespace {

Rational random_fraction(Rng& rng) {
    std::uniform_int_distribution<long> d(1, 999999);
    Rational q(d(rng), 1000000);
    q.canonicalize();
    return q;
}

std::vector<int> large_branches(const TrainTrack& t) {
    std::vector<int> out;
    auto roles = branch_roles(t);
    for (int b = 0; b < int(roles.size()); ++b)
        if (roles[b] == Role::Large) out.push_back(b);
    return out;
}

}  // namespace

MeasureSampler::MeasureSampler(const TrackRef& t) : kernel_(switch_kernel(*t)) {
    auto rec = is_recurrent(t);
    if (!rec.ok) throw Error("not-recurrent", "track carries no positive measure");
    start_ = rec.witness->weights();
}

RVec MeasureSampler::operator()(Rng& rng, int walk) const {
    RVec mu = start_;
    std::uniform_int_distribution<long> coef(-1000000, 1000000);
    for (int step = 0; step < walk; ++step) {
        RVec v(mu.size());
        for (const auto& k : kernel_) {
            Rational c(coef(rng));
            for (size_t b = 0; b < v.size(); ++b) v[b] += c * k[b];
        }
        // largest s with mu + s v >= 0, then a random fraction of it
        std::optional<Rational> smax;
        for (size_t b = 0; b < v.size(); ++b)
            if (v[b] < 0) {
                Rational s = -mu[b] / v[b];
                if (!smax || s < *smax) smax = s;
            }
        Rational s = smax ? *smax * random_fraction(rng) : random_fraction(rng);
        for (size_t b = 0; b < v.size(); ++b) mu[b] += s * v[b];
    }
    return mu;
}

RVec random_positive_measure(const TrackRef& t, Rng& rng, int walk) { return MeasureSampler(t)(rng, walk); }

RVec random_carried_measure(const SplitSequence& seq, Rng& rng) {
    RVec mu = random_positive_measure(seq.end(), rng);
    for (int i = seq.size() - 1; i >= 0; --i) mu = pull_back(seq.steps()[i], mu);
    return mu;
}

Trajectory lambda_trajectory(const TrackRef& t, Rng& rng, int length) {
    RVec mu = random_positive_measure(t, rng);
    std::vector<Move> moves;
    TrackRef cur = t;
    for (int i = 0; i < length; ++i) {
        auto large = large_branches(*cur);
        std::shuffle(large.begin(), large.end(), rng);
        bool moved = false;
        for (int e : large) {
            try {
                LambdaSplit ls = lambda_split(*cur, mu, e);
                moves.push_back(Move{ls.side == Side::R ? MoveKind::SplitRight : MoveKind::SplitLeft, e});
                mu = std::move(ls.weights);
                cur = share(std::move(ls.track));
                moved = true;
                break;
            } catch (const Error& err) {
                if (err.kind() != "tie") throw;
            }
        }
        if (!moved) break;
    }
    return Trajectory{SplitSequence(t, moves), mu};
}

std::vector<Move> random_splits(const TrackRef& t, Rng& rng, int length) {
    std::vector<Move> moves;
    TrackRef cur = t;
    for (int i = 0; i < length; ++i) {
        auto large = large_branches(*cur);
        if (large.empty()) break;
        int e = large[std::uniform_int_distribution<size_t>(0, large.size() - 1)(rng)];
        Move mv{rng() % 2 ? MoveKind::SplitRight : MoveKind::SplitLeft, e};
        cur = share(apply_move(*cur, mv).track);
        moves.push_back(mv);
    }
    return moves;
}

}  // namespace ttk
