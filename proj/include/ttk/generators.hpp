#pragma once

#include "ttk/moves.hpp"

#include <random>

namespace ttk {

using Rng = std::mt19937_64;

// Draws positive measures on one track; the recurrence LP runs once.
class MeasureSampler {
public:
    explicit MeasureSampler(const TrackRef& t);
    RVec operator()(Rng& rng, int walk = 4) const;

private:
    RVec start_;
    std::vector<RVec> kernel_;
};

// A strictly positive transverse measure: a random walk inside the cone,
// started from the recurrence witness. Throws "not-recurrent" otherwise.
RVec random_positive_measure(const TrackRef& t, Rng& rng, int walk = 4);

// Positive measure on the end of a sequence, pulled back to its start.
RVec random_carried_measure(const SplitSequence& seq, Rng& rng);

struct Trajectory {
    SplitSequence seq;
    RVec mu_end;  // the measure the sides were chosen by, on the end track
};

// Lambda-splits at random large branches; branches whose weights tie are
// skipped, and the walk stops early when every large branch ties.
Trajectory lambda_trajectory(const TrackRef& t, Rng& rng, int length);

// Uniformly random splits (side and large branch), no measure involved.
std::vector<Move> random_splits(const TrackRef& t, Rng& rng, int length);

}  // namespace ttk
