#pragma once

#include "ttk/track.hpp"

#include <memory>

namespace ttk {

using TrackRef = std::shared_ptr<const TrainTrack>;

inline TrackRef share(TrainTrack t) { return std::make_shared<const TrainTrack>(std::move(t)); }
bool same_track(const TrackRef& a, const TrackRef& b);

// Nonnegative weights satisfying every switch condition; enforced on construction.
class TransverseMeasure {
public:
    TransverseMeasure(TrackRef t, RVec w);
    const TrackRef& track() const { return t_; }
    const RVec& weights() const { return w_; }
    const Rational& operator[](int b) const { return w_[b]; }
    Rational total() const;
    TransverseMeasure scaled(const Rational& s) const;
    TransverseMeasure operator+(const TransverseMeasure& o) const;

private:
    TrackRef t_;
    RVec w_;
};

// Nonnegative weights satisfying the triangle inequalities of every 3-cusp region.
class TangentialMeasure {
public:
    TangentialMeasure(TrackRef t, RVec w);
    const TrackRef& track() const { return t_; }
    const RVec& weights() const { return w_; }
    const Rational& operator[](int b) const { return w_[b]; }
    TangentialMeasure scaled(const Rational& s) const;
    TangentialMeasure operator+(const TangentialMeasure& o) const;

private:
    TrackRef t_;
    RVec w_;
};

// Reasons a vector fails to be a measure; empty when it is one.
std::string switch_violation(const TrainTrack& t, const RVec& w);
std::string triangle_violation(const TrainTrack& t, const RVec& w);

// The three sides of a 3-cusp region as branch multisets (branch lists).
std::vector<std::array<std::vector<int>, 3>> triangle_sides(const TrainTrack& t);

struct RecurrenceResult {
    bool ok = false;
    Rational min_weight;  // optimum of the max-min problem (total weight 1)
    std::optional<TransverseMeasure> witness;
};
struct TangentialResult {
    bool ok = false;
    Rational min_weight;
    std::optional<TangentialMeasure> witness;
};

RecurrenceResult is_recurrent(const TrackRef& t);
TangentialResult is_transversely_recurrent_proxy(const TrackRef& t);

Rational pairing(const TransverseMeasure& mu, const TangentialMeasure& nu);
std::pair<TransverseMeasure, Rational> normalize(const TransverseMeasure& mu);
TransverseMeasure curve_as_measure(const TrackRef& t, const EmbeddedCurve& c);

struct NormalizedPair {
    NormalizedPair(TransverseMeasure l, TangentialMeasure n);
    TransverseMeasure lambda;
    TangentialMeasure nu;
};

// Rational basis of the solution space of the switch conditions.
std::vector<RVec> switch_kernel(const TrainTrack& t);

}  // namespace ttk
