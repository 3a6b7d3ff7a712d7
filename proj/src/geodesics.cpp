#include "ttk/geodesics.hpp"

#include <algorithm>
#include <map>

namespace ttk {

namespace {

const Rational& fine_tol() {
    static const Rational t(Integer(1), Integer("10000000000000000000000000000000000000000"));
    return t;
}

// e^s enclosures are requested many times at the same points
Interval exp_cached(const Rational& s) {
    static thread_local std::map<Rational, Interval> cache;
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
    Interval r = exp_interval(s, fine_tol());
    if (cache.size() > 200000) cache.clear();
    cache.emplace(s, r);
    return r;
}

Rational total(const RVec& v) {
    Rational s;
    for (const auto& x : v) s += x;
    return s;
}

RVec push_forward(const StepInfo& st, const RVec& v) {
    RVec out = v;
    int k = st.move.branch;
    if (st.move.kind == MoveKind::Shift) {
        out[k] = v[k] + v[st.shift_y] - v[st.shift_other];
    } else {
        for (int l : st.losers) out[k] -= v[l];
    }
    return out;
}

}  // namespace

std::vector<RVec> transport_back(const SplitSequence& seq, const RVec& mu_end) {
    std::vector<RVec> out(seq.size() + 1);
    out[seq.size()] = mu_end;
    for (int i = seq.size() - 1; i >= 0; --i) out[i] = pull_back(seq.steps()[i], out[i + 1]);
    return out;
}

std::vector<RVec> transport_forward(const SplitSequence& seq, const RVec& mu_start) {
    std::vector<RVec> out{mu_start};
    for (int i = 0; i < seq.size(); ++i) {
        out.push_back(push_forward(seq.steps()[i], out.back()));
        for (const auto& x : out.back())
            if (x < 0) throw Error("curve-not-carried", "measure is not carried past move " + std::to_string(i + 1));
    }
    return out;
}

RoofProfile roof_profile(const SplitSequence& seq, const RVec& mu_end) {
    auto ms = transport_back(seq, mu_end);
    Rational w0 = total(ms[0]);
    if (w0 == 0) throw Error("zero-measure", "roof profile of the zero measure");
    RoofProfile r;
    for (const auto& m : ms) r.a.push_back(w0 / total(m));
    for (size_t i = 0; i + 1 < r.a.size(); ++i) r.ratios.push_back(r.a[i + 1] / r.a[i]);
    return r;
}

Rational curve_intersection_plus(const TrainTrack& t, const RVec& mu, const EmbeddedCurve& c) {
    if (int(mu.size()) != t.branches()) throw Error("track-mismatch", "measure length differs from the track");
    Rational s;
    for (auto e : c.off_ends) {
        if (e.branch >= t.branches()) throw Error("track-mismatch", "curve does not live on this track");
        s += mu[e.branch];
    }
    return s / 2;
}

Rational curve_intersection_minus(const TrainTrack& t, const RVec& nu, const EmbeddedCurve& c) {
    if (int(nu.size()) != t.branches()) throw Error("track-mismatch", "measure length differs from the track");
    Rational s;
    for (int b : c.cycle) s += nu[b];
    return s;
}

std::vector<CurveTerm> curve_terms(const PACertificate& cert, const PeriodicSequence& ps,
                                   const std::vector<CurveSpec>& curves) {
    const SplitSequence& seq = ps.seq;
    auto mus = transport_forward(seq, cert.lambda_plus->weights());
    std::vector<CurveTerm> out;
    for (const auto& cs : curves) {
        if (cs.time_index < 0 || cs.time_index > seq.size())
            throw Error("curve-not-carried", "curve time index outside the period");
        const TrainTrack& t = *seq.track(cs.time_index);
        EmbeddedCurve c = closed_trainpath(t, cs.cycle);
        CurveTerm term;
        term.spec = cs;
        term.i_plus = curve_intersection_plus(t, mus[cs.time_index], c);
        RVec count(t.branches());
        for (int b : c.cycle) count[b] = 1;
        RVec c0 = carrying_matrix(seq, 0, cs.time_index).apply(count);
        Rational im;
        for (size_t b = 0; b < c0.size(); ++b) im += c0[b] * cert.lambda_minus->weights()[b];
        term.i_minus = im;
        out.push_back(term);
    }
    return out;
}

namespace {

// argument range of L for a translate: t - j*T with T in the period enclosure
std::pair<Rational, Rational> arg_range(int j, const Rational& t0, const Rational& t1, const Interval& T) {
    Rational a = j * T.lo, b = j * T.hi;
    return {t0 - std::max(a, b), t1 - std::min(a, b)};
}

Rational L_hi(const CurveTerm& c, const Rational& s) {
    return 2 * (exp_cached(s).hi * c.i_plus + exp_cached(-s).hi * c.i_minus);
}

}  // namespace

Rational length_upper(const CurveTerm& c, const Rational& t0, const Rational& t1, const Interval& period) {
    auto [s0, s1] = arg_range(c.spec.translate, t0, t1, period);
    return std::max(L_hi(c, s0), L_hi(c, s1));
}

Rational length_lower(const CurveTerm& c, const Rational& t, const Interval& period) {
    auto [s0, s1] = arg_range(c.spec.translate, t, t, period);
    return 2 * (exp_cached(s0).lo * c.i_plus + exp_cached(-s1).lo * c.i_minus);
}

SystoleProfile systole_from_terms(std::vector<CurveTerm> terms, const Interval& period, int grid_steps) {
    if (grid_steps < 1) throw Error("usage", "grid needs at least one step");
    if (terms.empty()) throw Error("usage", "systole profile needs at least one curve");
    SystoleProfile sp;
    sp.curves = std::move(terms);
    sp.period = period;
    std::vector<Rational> pts;
    for (int g = 0; g <= grid_steps; ++g) pts.push_back(period.hi * g / grid_steps);
    // per-curve minimizers t* = log(i-/i+)/2 + j T, rounded to a nearby rational
    for (const auto& c : sp.curves) {
        if (c.i_plus <= 0 || c.i_minus <= 0) continue;
        Interval lg = log_interval(c.i_minus / c.i_plus, Rational(1, 1000000));
        Rational ts = (lg.lo + lg.hi) / 4 + c.spec.translate * period.lo;
        if (ts > 0 && ts < period.hi) pts.push_back(ts);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    sp.points = pts;
    Rational hi, lo;
    bool have_lo = false;
    for (size_t g = 0; g + 1 < pts.size(); ++g) {
        Rational best;
        for (size_t k = 0; k < sp.curves.size(); ++k) {
            Rational u = length_upper(sp.curves[k], pts[g], pts[g + 1], period);
            if (k == 0 || u < best) best = u;
        }
        if (g == 0 || best > hi) hi = best;
    }
    for (const auto& t : pts) {
        if (t > period.lo) continue;
        Rational best;
        for (size_t k = 0; k < sp.curves.size(); ++k) {
            Rational l = length_lower(sp.curves[k], t, period);
            if (k == 0 || l < best) best = l;
        }
        if (!have_lo || best > lo) { lo = best; have_lo = true; }
    }
    sp.sup_min = Interval{lo, hi};
    return sp;
}

SystoleProfile systole_profile(const PACertificate& cert, const PeriodicSequence& ps,
                               const std::vector<CurveSpec>& curves, int grid_steps) {
    Interval period = log_interval(cert.alpha, Rational(1, Integer("1000000000000000000000000")));
    return systole_from_terms(curve_terms(cert, ps, curves), period, grid_steps);
}

}  // namespace ttk
