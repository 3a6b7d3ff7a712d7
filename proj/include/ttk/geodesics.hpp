#pragma once

#include "ttk/interval.hpp"

namespace ttk {

struct RoofProfile {
    RVec a;       // a(0) = 1 <= a(1) <= ...
    RVec ratios;  // a(i+1) / a(i)
};

// mu lives on the end track; it is pulled back to every track of the sequence.
std::vector<RVec> transport_back(const SplitSequence& seq, const RVec& mu_end);
// Inverse direction: a measure on the start track written on every later track.
std::vector<RVec> transport_forward(const SplitSequence& seq, const RVec& mu_start);
RoofProfile roof_profile(const SplitSequence& seq, const RVec& mu_end);

// Half the weight of the branches meeting the curve from outside, counted per
// half-branch.
Rational curve_intersection_plus(const TrainTrack& t, const RVec& mu, const EmbeddedCurve& c);
Rational curve_intersection_minus(const TrainTrack& t, const RVec& nu, const EmbeddedCurve& c);

struct CurveSpec {
    std::string name;
    int time_index = 0;      // the curve is a trainpath on track(time_index) of the loop
    std::vector<int> cycle;  // 0-based branches
    int translate = 0;       // image under the j-th power of the mapping class
};

struct CurveTerm {
    CurveSpec spec;
    Rational i_plus, i_minus;
};

// L(t) = 2 (e^t i+ + e^-t i-), bounded over a time grid of one period.
struct SystoleProfile {
    std::vector<CurveTerm> curves;
    Interval period;              // log of the dilatation
    std::vector<Rational> points;  // partition of [0, period.hi]
    Interval sup_min;             // rigorous enclosure of sup_t min_curves L
};

std::vector<CurveTerm> curve_terms(const PACertificate& cert, const PeriodicSequence& ps,
                                   const std::vector<CurveSpec>& curves);
SystoleProfile systole_profile(const PACertificate& cert, const PeriodicSequence& ps,
                               const std::vector<CurveSpec>& curves, int grid_steps = 256);
// Upper bound of max_t L over [t0, t1] for one term, given the period enclosure.
Rational length_upper(const CurveTerm& c, const Rational& t0, const Rational& t1, const Interval& period);
Rational length_lower(const CurveTerm& c, const Rational& t, const Interval& period);
SystoleProfile systole_from_terms(std::vector<CurveTerm> terms, const Interval& period, int grid_steps);

}  // namespace ttk
