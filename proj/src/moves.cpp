#include "ttk/moves.hpp"

#include <algorithm>

namespace ttk {

namespace {

std::string bname(int b) { return std::to_string(b + 1); }

// Picks, for every mark, an anchor on its region that avoids `avoid`.
std::vector<BranchSide> anchors_avoiding(const TrainTrack& t, int avoid) {
    std::vector<BranchSide> out;
    for (auto m : t.marks()) {
        const Region& r = t.regions()[t.region_of(m)];
        bool found = false;
        for (auto bs : r.boundary)
            if (bs.branch != avoid) { out.push_back(bs); found = true; break; }
        if (!found) throw Error("degenerate", "puncture region bounded only by branch " + bname(avoid));
    }
    return out;
}

int switch_index(const TrainTrack& t, End e) { return t.slot(e).sw; }

}  // namespace

SplitLabels split_labels(const TrainTrack& t, int e) {
    if (e < 0 || e >= t.branches()) throw Error("wrong-role", "no branch " + bname(e));
    if (t.role(e) != Role::Large) throw Error("wrong-role", "branch " + bname(e) + " is not large");
    const Switch& s0 = t.switches()[switch_index(t, End{e, 0})];
    const Switch& s1 = t.switches()[switch_index(t, End{e, 1})];
    return SplitLabels{s0.b[1], s1.b[0], s1.b[1], s0.b[0]};
}

MoveResult split(const TrainTrack& t, int e, Side side) {
    SplitLabels L = split_labels(t, e);
    int i0 = switch_index(t, End{e, 0}), i1 = switch_index(t, End{e, 1});
    std::vector<Switch> sws = t.switches();
    Switch& s0 = sws[i0];
    Switch& s1 = sws[i1];
    StepInfo info;
    if (side == Side::R) {
        s0.a = L.a;
        s0.b = {L.b, End{e, 0}};
        s1.a = L.c;
        s1.b = {L.d, End{e, 1}};
        info.move = Move{MoveKind::SplitRight, e};
        info.losers = {L.b.branch, L.d.branch};
    } else {
        s0.a = L.d;
        s0.b = {End{e, 0}, L.c};
        s1.a = L.b;
        s1.b = {End{e, 1}, L.a};
        info.move = Move{MoveKind::SplitLeft, e};
        info.losers = {L.a.branch, L.c.branch};
    }
    std::sort(info.losers.begin(), info.losers.end());
    return MoveResult{TrainTrack(t.surface(), t.branches(), std::move(sws), anchors_avoiding(t, e)), info};
}

MoveResult shift(const TrainTrack& t, int m) {
    if (m < 0 || m >= t.branches()) throw Error("wrong-role", "no branch " + bname(m));
    if (t.role(m) != Role::Mixed) throw Error("wrong-role", "branch " + bname(m) + " is not mixed");
    int eu = t.large_end(End{m, 0}) ? 0 : 1, ev = 1 - eu;
    int iu = switch_index(t, End{m, eu}), iv = switch_index(t, End{m, ev});
    if (iu == iv) throw Error("degenerate", "branch " + bname(m) + " returns to its own switch");
    std::vector<Switch> sws = t.switches();
    Switch u = sws[iu], v = sws[iv];
    int k = t.slot(End{m, ev}).pos - 1;
    End X0 = u.b[0], X1 = u.b[1], Z = v.a, Y = v.b[1 - k];
    StepInfo info;
    info.move = Move{MoveKind::Shift, m};
    info.shift_y = Y.branch;
    Switch& nv = sws[iu];  // keeps the id of u, holds the large end of m
    Switch& nu = sws[iv];  // keeps the id of v, holds Z
    nv.a = End{m, eu};
    nu.a = Z;
    if (k == 1) {
        nv.b = {Y, X0};
        nu.b = {End{m, ev}, X1};
        info.shift_other = X1.branch;
    } else {
        nv.b = {X1, Y};
        nu.b = {X0, End{m, ev}};
        info.shift_other = X0.branch;
    }
    return MoveResult{TrainTrack(t.surface(), t.branches(), std::move(sws), anchors_avoiding(t, m)), info};
}

MoveResult apply_move(const TrainTrack& t, const Move& mv) {
    switch (mv.kind) {
        case MoveKind::SplitRight: return split(t, mv.branch, Side::R);
        case MoveKind::SplitLeft: return split(t, mv.branch, Side::L);
        default: return shift(t, mv.branch);
    }
}

TrainTrack collapse(const TrainTrack& t, const Move& step) {
    if (step.kind == MoveKind::Shift) throw Error("non-invertible", "a shift is not undone by a collapse");
    int e = step.branch;
    if (e < 0 || e >= t.branches()) throw Error("non-invertible", "no branch " + bname(e));
    Slot p0 = t.slot(End{e, 0}), p1 = t.slot(End{e, 1});
    int want = step.kind == MoveKind::SplitRight ? 2 : 1;
    if (p0.pos != want || p1.pos != want || p0.sw == p1.sw)
        throw Error("non-invertible", "branch " + bname(e) + " is not the diagonal of such a split");
    std::vector<Switch> sws = t.switches();
    Switch& s0 = sws[p0.sw];
    Switch& s1 = sws[p1.sw];
    End a, b, c, d;
    if (want == 2) {
        a = s0.a; b = s0.b[0]; c = s1.a; d = s1.b[0];
    } else {
        d = s0.a; c = s0.b[1]; b = s1.a; a = s1.b[1];
    }
    s0.a = End{e, 0};
    s0.b = {d, a};
    s1.a = End{e, 1};
    s1.b = {b, c};
    return TrainTrack(t.surface(), t.branches(), std::move(sws), anchors_avoiding(t, e));
}

IntMatrix elementary_matrix(int p, const StepInfo& info) {
    IntMatrix m = IntMatrix::identity(p);
    int k = info.move.branch;
    if (info.move.kind == MoveKind::Shift) {
        m(k, info.shift_y) -= 1;
        m(k, info.shift_other) += 1;
    } else {
        for (int l : info.losers) m(k, l) += 1;
    }
    return m;
}

RVec pull_back(const StepInfo& info, const RVec& v) {
    RVec out = v;
    int k = info.move.branch;
    if (info.move.kind == MoveKind::Shift) {
        out[k] = v[k] - v[info.shift_y] + v[info.shift_other];
    } else {
        for (int l : info.losers) out[k] += v[l];
    }
    return out;
}

LambdaSplit lambda_split(const TrainTrack& t, const RVec& mu, int e) {
    SplitLabels L = split_labels(t, e);
    if (int(mu.size()) != t.branches()) throw Error("dimension", "measure length mismatch");
    const Rational& wa = mu[L.a.branch];
    const Rational& wb = mu[L.b.branch];
    if (wa == wb) throw Error("tie", "weights tie at branch " + bname(e));
    Side side = wa > wb ? Side::R : Side::L;
    MoveResult r = split(t, e, side);
    RVec w = mu;
    for (int l : r.info.losers) w[e] -= mu[l];
    return LambdaSplit{side, std::move(r.track), std::move(w), r.info};
}

SplitSequence::SplitSequence(TrackRef start, std::vector<Move> moves) : moves_(std::move(moves)) {
    tracks_.push_back(std::move(start));
    for (const auto& mv : moves_) {
        MoveResult r = apply_move(*tracks_.back(), mv);
        steps_.push_back(r.info);
        tracks_.push_back(share(std::move(r.track)));
    }
}

SplitSequence SplitSequence::prefix(int n) const { return slice(0, n); }

SplitSequence SplitSequence::slice(int from, int to) const {
    SplitSequence s;
    s.moves_.assign(moves_.begin() + from, moves_.begin() + to);
    s.steps_.assign(steps_.begin() + from, steps_.begin() + to);
    s.tracks_.assign(tracks_.begin() + from, tracks_.begin() + to + 1);
    return s;
}

SplitSequence SplitSequence::then(const std::vector<Move>& more) const {
    SplitSequence s = *this;
    for (const auto& mv : more) {
        MoveResult r = apply_move(*s.tracks_.back(), mv);
        s.moves_.push_back(mv);
        s.steps_.push_back(r.info);
        s.tracks_.push_back(share(std::move(r.track)));
    }
    return s;
}

IntMatrix carrying_matrix(const SplitSequence& seq, int from, int to) {
    int p = seq.start()->branches();
    IntMatrix m = IntMatrix::identity(p);
    // right-multiplying by an elementary matrix is a column operation
    for (int i = from; i < to; ++i) {
        const StepInfo& st = seq.steps()[i];
        int k = st.move.branch;
        if (st.move.kind == MoveKind::Shift) {
            for (int r = 0; r < p; ++r) {
                m(r, st.shift_other) += m(r, k);
                m(r, st.shift_y) -= m(r, k);
            }
        } else {
            for (int l : st.losers)
                for (int r = 0; r < p; ++r) m(r, l) += m(r, k);
        }
    }
    return m;
}

IntMatrix carrying_matrix(const SplitSequence& seq) { return carrying_matrix(seq, 0, seq.size()); }

IntMatrix carrying_matrix_stepwise(const SplitSequence& seq) {
    int p = seq.start()->branches();
    IntMatrix m(p, p);
    for (int s = 0; s < p; ++s) {
        RVec v(p);
        v[s] = 1;
        for (int i = seq.size() - 1; i >= 0; --i) v = pull_back(seq.steps()[i], v);
        for (int r = 0; r < p; ++r) m(r, s) = v[r].get_num();
    }
    return m;
}

bool is_tight(const IntMatrix& m) { return m.rows() > 0 && m.all_at_least(1); }
bool is_tight(const SplitSequence& seq) { return is_tight(carrying_matrix(seq)); }

Rational min_weight_bound(const IntMatrix& m) {
    if (!is_tight(m)) throw Error("not-tight", "sequence is not tight");
    Rational best;
    bool first = true;
    for (int s = 0; s < m.cols(); ++s) {
        Integer col = 0, mn = m(0, s);
        for (int r = 0; r < m.rows(); ++r) {
            col += m(r, s);
            if (m(r, s) < mn) mn = m(r, s);
        }
        Rational q(mn, col);
        q.canonicalize();
        if (first || q < best) { best = q; first = false; }
    }
    return best;
}

Rational min_weight_bound(const SplitSequence& seq) { return min_weight_bound(carrying_matrix(seq)); }

std::vector<Move> renumber(const std::vector<Move>& moves, const std::vector<int>& map) {
    std::vector<Move> out;
    for (auto mv : moves) out.push_back(Move{mv.kind, map[mv.branch]});
    return out;
}

}  // namespace ttk

namespace ttk {

namespace {

struct Passage {
    bool merge;
    bool off_right;
};

std::vector<Passage> passages(const TrainTrack& t, const EmbeddedCurve& c) {
    std::vector<Passage> out;
    int n = int(c.cycle.size());
    for (int i = 0; i < n; ++i) {
        int b = c.cycle[i];
        int arr_end = c.forward[i] ? 1 : 0;
        Slot s = t.slot(End{b, arr_end});
        Slot off = t.slot(c.off_ends[i]);
        bool merge = s.pos != 0;
        // looking from side A, B-left is slot 1; walking towards A reverses left and right
        bool off_left_seen_from_a = off.pos == 1;
        out.push_back(Passage{merge, merge ? off_left_seen_from_a : !off_left_seen_from_a});
    }
    return out;
}

}  // namespace

int twist_type(const TrainTrack& t, const EmbeddedCurve& c) {
    bool x = true, y = true, m = false, d = false;
    for (auto ps : passages(t, c)) {
        (ps.merge ? m : d) = true;
        if (ps.merge != ps.off_right) x = false;
        if (ps.merge == ps.off_right) y = false;
    }
    if (!m || !d) return 0;
    return x ? 1 : (y ? -1 : 0);
}

std::vector<Move> twist_moves(const TrainTrack& t0, const std::vector<int>& cycle) {
    EmbeddedCurve c = closed_trainpath(t0, cycle);
    int type = twist_type(t0, c);
    if (type == 0) throw Error("not-twist-ready", "curve is not twist-ready");
    int nm = 0, nd = 0;
    for (auto ps : passages(t0, c)) (ps.merge ? nm : nd)++;
    MoveKind kind = type > 0 ? MoveKind::SplitRight : MoveKind::SplitLeft;
    std::vector<Move> moves;
    TrainTrack t = t0;
    for (int step = 0; step < nm * nd; ++step) {
        int pick = -1;
        for (int b : cycle)
            if (t.role(b) == Role::Large) { pick = b; break; }
        if (pick < 0) throw Error("not-twist-ready", "no large branch left on the curve");
        Move mv{kind, pick};
        t = apply_move(t, mv).track;
        moves.push_back(mv);
        EmbeddedCurve cc = closed_trainpath(t, cycle);
        if (twist_type(t, cc) != type) throw Error("not-twist-ready", "split did not preserve the curve");
    }
    return moves;
}

}  // namespace ttk
