#include "ttk/measures.hpp"

#include "ttk/lp.hpp"

namespace ttk {

bool same_track(const TrackRef& a, const TrackRef& b) { return a == b || (a && b && *a == *b); }

namespace {

// switch rows: +1 on the side-A branch, -1 on each side-B branch
std::vector<RVec> switch_rows(const TrainTrack& t) {
    std::vector<RVec> rows;
    for (const auto& w : t.switches()) {
        RVec r(t.branches());
        r[w.a.branch] += 1;
        r[w.b[0].branch] -= 1;
        r[w.b[1].branch] -= 1;
        rows.push_back(r);
    }
    return rows;
}

Rational side_sum(const std::vector<int>& side, const RVec& w) {
    Rational s;
    for (int b : side) s += w[b];
    return s;
}

}  // namespace

std::string switch_violation(const TrainTrack& t, const RVec& w) {
    if (int(w.size()) != t.branches()) return "weight vector has length " + std::to_string(w.size());
    for (int b = 0; b < t.branches(); ++b)
        if (w[b] < 0) return "negative weight on branch " + std::to_string(b + 1);
    for (const auto& s : t.switches())
        if (w[s.a.branch] != w[s.b[0].branch] + w[s.b[1].branch])
            return "switch condition fails at switch " + std::to_string(s.id);
    return {};
}

std::vector<std::array<std::vector<int>, 3>> triangle_sides(const TrainTrack& t) {
    std::vector<std::array<std::vector<int>, 3>> out;
    for (const auto& r : t.regions()) {
        if (r.punctured() || r.cusps != 3) continue;
        int n = int(r.boundary.size());
        int start = 0;
        while (!r.corner_cusp[start]) ++start;
        std::array<std::vector<int>, 3> sides;
        int k = 0;
        for (int i = 1; i <= n; ++i) {
            int j = (start + i) % n;
            sides[k].push_back(r.boundary[j].branch);
            if (r.corner_cusp[j]) ++k;
        }
        out.push_back(sides);
    }
    return out;
}

std::string triangle_violation(const TrainTrack& t, const RVec& w) {
    if (int(w.size()) != t.branches()) return "weight vector has length " + std::to_string(w.size());
    for (int b = 0; b < t.branches(); ++b)
        if (w[b] < 0) return "negative weight on branch " + std::to_string(b + 1);
    for (const auto& sides : triangle_sides(t)) {
        Rational s[3];
        for (int i = 0; i < 3; ++i) s[i] = side_sum(sides[i], w);
        for (int i = 0; i < 3; ++i)
            if (s[i] > s[(i + 1) % 3] + s[(i + 2) % 3])
                return "triangle inequality fails on a region through branch " + std::to_string(sides[i][0] + 1);
    }
    return {};
}

TransverseMeasure::TransverseMeasure(TrackRef t, RVec w) : t_(std::move(t)), w_(std::move(w)) {
    if (!t_) throw Error("measure", "measure without a track");
    auto why = switch_violation(*t_, w_);
    if (!why.empty()) throw Error("measure", why);
}

Rational TransverseMeasure::total() const {
    Rational s;
    for (const auto& x : w_) s += x;
    return s;
}

TransverseMeasure TransverseMeasure::scaled(const Rational& s) const {
    if (s < 0) throw Error("measure", "negative scale");
    RVec w = w_;
    for (auto& x : w) x *= s;
    return TransverseMeasure(t_, std::move(w));
}

TransverseMeasure TransverseMeasure::operator+(const TransverseMeasure& o) const {
    if (!same_track(t_, o.t_)) throw Error("track-mismatch", "measures live on different tracks");
    RVec w = w_;
    for (size_t i = 0; i < w.size(); ++i) w[i] += o.w_[i];
    return TransverseMeasure(t_, std::move(w));
}

TangentialMeasure::TangentialMeasure(TrackRef t, RVec w) : t_(std::move(t)), w_(std::move(w)) {
    if (!t_) throw Error("measure", "measure without a track");
    auto why = triangle_violation(*t_, w_);
    if (!why.empty()) throw Error("measure", why);
}

TangentialMeasure TangentialMeasure::scaled(const Rational& s) const {
    if (s < 0) throw Error("measure", "negative scale");
    RVec w = w_;
    for (auto& x : w) x *= s;
    return TangentialMeasure(t_, std::move(w));
}

TangentialMeasure TangentialMeasure::operator+(const TangentialMeasure& o) const {
    if (!same_track(t_, o.t_)) throw Error("track-mismatch", "measures live on different tracks");
    RVec w = w_;
    for (size_t i = 0; i < w.size(); ++i) w[i] += o.w_[i];
    return TangentialMeasure(t_, std::move(w));
}

// Both problems substitute w = y + s*1 with y >= 0, maximize s, total weight 1.
RecurrenceResult is_recurrent(const TrackRef& t) {
    int p = t->branches();
    std::vector<RVec> A;
    RVec rhs;
    for (auto row : switch_rows(*t)) {
        Rational sum;
        for (auto& x : row) sum += x;
        row.push_back(sum);
        A.push_back(row);
        rhs.push_back(0);
    }
    RVec tot(p + 1, 1);
    tot[p] = p;
    A.push_back(tot);
    rhs.push_back(1);
    RVec c(p + 1);
    c[p] = 1;
    RecurrenceResult res;
    auto sol = lp_maximize(A, rhs, c);
    if (!sol) return res;
    res.min_weight = sol->value;
    res.ok = sol->value > 0;
    if (res.ok) {
        RVec w(p);
        for (int b = 0; b < p; ++b) w[b] = sol->x[b] + sol->x[p];
        res.witness.emplace(t, std::move(w));
    }
    return res;
}

TangentialResult is_transversely_recurrent_proxy(const TrackRef& t) {
    for (const auto& r : t->regions())
        if (!((r.punctures == 0 && r.cusps == 3) || (r.punctures == 1 && r.cusps == 1)))
            throw Error("not-maximal", "tangential proxy needs a maximal track");
    int p = t->branches();
    auto tris = triangle_sides(*t);
    int nslack = 3 * int(tris.size());
    int nv = p + 1 + nslack;
    std::vector<RVec> A;
    RVec rhs;
    int k = 0;
    for (const auto& sides : tris)
        for (int i = 0; i < 3; ++i) {
            RVec row(nv);
            for (int b : sides[(i + 1) % 3]) row[b] += 1;
            for (int b : sides[(i + 2) % 3]) row[b] += 1;
            for (int b : sides[i]) row[b] -= 1;
            Rational sum;
            for (int b = 0; b < p; ++b) sum += row[b];
            row[p] = sum;
            row[p + 1 + k++] = -1;
            A.push_back(row);
            rhs.push_back(0);
        }
    RVec tot(nv);
    for (int b = 0; b < p; ++b) tot[b] = 1;
    tot[p] = p;
    A.push_back(tot);
    rhs.push_back(1);
    RVec c(nv);
    c[p] = 1;
    TangentialResult res;
    auto sol = lp_maximize(A, rhs, c);
    if (!sol) return res;
    res.min_weight = sol->value;
    res.ok = sol->value > 0;
    if (res.ok) {
        RVec w(p);
        for (int b = 0; b < p; ++b) w[b] = sol->x[b] + sol->x[p];
        res.witness.emplace(t, std::move(w));
    }
    return res;
}

Rational pairing(const TransverseMeasure& mu, const TangentialMeasure& nu) {
    if (!same_track(mu.track(), nu.track())) throw Error("track-mismatch", "pairing across different tracks");
    Rational s;
    for (size_t b = 0; b < mu.weights().size(); ++b) s += mu[b] * nu[b];
    return s;
}

std::pair<TransverseMeasure, Rational> normalize(const TransverseMeasure& mu) {
    Rational w = mu.total();
    if (w == 0) throw Error("zero-measure", "cannot normalize the zero measure");
    return {mu.scaled(1 / w), w};
}

TransverseMeasure curve_as_measure(const TrackRef& t, const EmbeddedCurve& c) {
    RVec w(t->branches());
    for (int b : c.cycle) {
        if (b < 0 || b >= t->branches()) throw Error("track-mismatch", "curve names a branch outside the track");
        w[b] = 1;
    }
    return TransverseMeasure(t, std::move(w));
}

NormalizedPair::NormalizedPair(TransverseMeasure l, TangentialMeasure n) : lambda(std::move(l)), nu(std::move(n)) {
    if (lambda.total() != 1) throw Error("measure", "lambda must have total weight 1");
    if (pairing(lambda, nu) != 1) throw Error("measure", "pairing of lambda and nu must be 1");
}

std::vector<RVec> switch_kernel(const TrainTrack& t) {
    auto rows = switch_rows(t);
    int p = t.branches();
    // reduced row echelon form
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < p && r < int(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < int(rows.size()); ++i)
            if (rows[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (int i = 0; i < int(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (int j = 0; j < p; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<int> is_piv(p, -1);
    for (int i = 0; i < r; ++i) is_piv[pivcol[i]] = i;
    std::vector<RVec> basis;
    for (int f = 0; f < p; ++f) {
        if (is_piv[f] >= 0) continue;
        RVec v(p);
        v[f] = 1;
        for (int i = 0; i < r; ++i) v[pivcol[i]] = -rows[i][f];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace ttk
