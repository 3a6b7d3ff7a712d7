#include "ttk/track.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace ttk {

namespace {

// Clockwise neighbour of a slot position around a switch. Counter-clockwise
// the order is B-left, A, B-right; the corner from B-left to B-right is the cusp.
int cw(int pos) { return pos == 0 ? 1 : (pos == 1 ? 2 : 0); }

std::string bname(int b) { return std::to_string(b + 1); }

}  // namespace

TrainTrack::TrainTrack(SurfaceSig surf, int p, std::vector<Switch> sws, std::vector<BranchSide> marks)
    : surf_(surf), p_(p), sw_(std::move(sws)), marks_(std::move(marks)) {
    build();
}

End TrainTrack::at(Slot s) const {
    const Switch& w = sw_[s.sw];
    return s.pos == 0 ? w.a : w.b[s.pos - 1];
}

void TrainTrack::build() {
    if (p_ <= 0) throw malformed("track has no branches");
    if (surf_.genus < 0 || surf_.punctures < 0) throw malformed("negative surface data");
    std::sort(sw_.begin(), sw_.end(), [](const Switch& x, const Switch& y) { return x.id < y.id; });
    for (size_t i = 1; i < sw_.size(); ++i)
        if (sw_[i].id == sw_[i - 1].id) throw malformed("switch id " + std::to_string(sw_[i].id) + " repeated");
    where_.assign(p_, {Slot{}, Slot{}});
    for (int i = 0; i < int(sw_.size()); ++i) {
        for (int pos = 0; pos < 3; ++pos) {
            End e = at(Slot{i, pos});
            if (e.branch < 0 || e.branch >= p_ || (e.end != 0 && e.end != 1))
                throw malformed("switch " + std::to_string(sw_[i].id) + " names a nonexistent branch end");
            Slot& s = where_[e.branch][e.end];
            if (s.sw >= 0)
                throw malformed("branch end " + bname(e.branch) + "." + std::to_string(e.end) + " placed twice");
            s = Slot{i, pos};
        }
    }
    for (int b = 0; b < p_; ++b)
        for (int e = 0; e < 2; ++e)
            if (where_[b][e].sw < 0)
                throw malformed("branch end " + bname(b) + "." + std::to_string(e) + " is not attached");

    // Faces: dart (b, d) runs from end d to end 1-d with the region on its left.
    region_at_.assign(p_, {-1, -1});
    regions_.clear();
    for (int b0 = 0; b0 < p_; ++b0)
        for (int d0 = 0; d0 < 2; ++d0) {
            if (region_at_[b0][d0] >= 0) continue;
            Region r;
            int id = int(regions_.size());
            int b = b0, d = d0;
            while (region_at_[b][d] < 0) {
                region_at_[b][d] = id;
                r.boundary.push_back(BranchSide{b, d == 0 ? Side::L : Side::R});
                Slot s = where_[b][1 - d];
                int np = cw(s.pos);
                bool cusp = s.pos == 1 && np == 2;
                r.corner_cusp.push_back(cusp ? 1 : 0);
                r.cusps += cusp;
                End nxt = at(Slot{s.sw, np});
                b = nxt.branch;
                d = nxt.end;
            }
            regions_.push_back(std::move(r));
        }
    // region_at_ was indexed by dart direction; dart d has side L for d=0, R for d=1
    // which matches Side's numbering, so no remap is needed.

    for (auto& m : marks_) {
        if (m.branch < 0 || m.branch >= p_) throw malformed("puncture mark names branch " + bname(m.branch));
        const Region& r = regions_[region_of(m)];
        m = *std::min_element(r.boundary.begin(), r.boundary.end());
    }
    std::sort(marks_.begin(), marks_.end());
    for (const auto& m : marks_) regions_[region_of(m)].punctures++;
}

Role TrainTrack::role(int b) const {
    int n = (where_[b][0].pos == 0) + (where_[b][1].pos == 0);
    return n == 2 ? Role::Large : (n == 1 ? Role::Mixed : Role::Small);
}

std::vector<Role> TrainTrack::roles() const {
    std::vector<Role> r(p_);
    for (int b = 0; b < p_; ++b) r[b] = role(b);
    return r;
}

bool TrainTrack::connected() const {
    int s = switch_count();
    if (s == 0) return true;
    std::vector<int> seen(s, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int count = 1;
    while (!st.empty()) {
        int i = st.back();
        st.pop_back();
        for (int pos = 0; pos < 3; ++pos) {
            End e = at(Slot{i, pos});
            int j = where_[e.branch][1 - e.end].sw;
            if (!seen[j]) { seen[j] = 1; ++count; st.push_back(j); }
        }
    }
    return count == s;
}

std::vector<Region> complementary_regions(const TrainTrack& t) { return t.regions(); }
std::vector<Role> branch_roles(const TrainTrack& t) { return t.roles(); }

ValidationReport validate(const TrainTrack& t) {
    ValidationReport rep;
    rep.connected = t.connected();
    if (!rep.connected) rep.violations.push_back("track is not connected");
    int V = t.switch_count(), E = t.branches(), F = int(t.regions().size());
    if (2 * E != 3 * V) rep.violations.push_back("branch/switch count is not trivalent");
    rep.genus_of_graph = (2 - V + E - F) / 2;
    rep.marked_punctures = int(t.marks().size());
    bool maximal = true;
    for (size_t i = 0; i < t.regions().size(); ++i) {
        const Region& r = t.regions()[i];
        rep.index_sum_twice += 2 * (1 - r.punctures) - r.cusps;
        std::string where = "region " + std::to_string(i) + " (along branch " +
                            std::to_string(r.boundary[0].branch + 1) + ")";
        if (!r.punctured() && r.cusps <= 2)
            rep.violations.push_back(where + ": unpunctured disc with " + std::to_string(r.cusps) + " cusps");
        if (r.punctures == 1 && r.cusps == 0)
            rep.violations.push_back(where + ": once-punctured disc without cusps");
        bool tri = !r.punctured() && r.cusps == 3;
        bool mono = r.punctures == 1 && r.cusps == 1;
        maximal = maximal && (tri || mono);
    }
    if (rep.index_sum_twice != 2 * t.surface().euler())
        rep.violations.push_back("index sum " + to_string(rep.index_sum()) + " differs from Euler characteristic " +
                                 std::to_string(t.surface().euler()));
    if (rep.genus_of_graph != t.surface().genus)
        rep.violations.push_back("ribbon graph has genus " + std::to_string(rep.genus_of_graph) + ", expected " +
                                 std::to_string(t.surface().genus));
    if (rep.marked_punctures != t.surface().punctures)
        rep.violations.push_back(std::to_string(rep.marked_punctures) + " puncture marks for " +
                                 std::to_string(t.surface().punctures) + " punctures");
    if (t.surface().complexity() < 2) rep.violations.push_back("surface complexity below 2");
    if (t.surface().euler() >= 0) rep.violations.push_back("surface Euler characteristic is not negative");
    rep.maximal = maximal && rep.ok();
    return rep;
}

EmbeddedCurve closed_trainpath(const TrainTrack& t, const std::vector<int>& cycle) {
    if (cycle.empty()) throw Error("not-a-trainpath", "empty cycle");
    std::set<int> distinct(cycle.begin(), cycle.end());
    for (int b : cycle)
        if (b < 0 || b >= t.branches()) throw Error("not-a-trainpath", "cycle names branch " + bname(b));
    if (distinct.size() != cycle.size()) throw Error("not-embedded", "cycle uses a branch twice");
    int n = int(cycle.size());
    std::string why = "no consistent direction";
    for (int first_dir = 1; first_dir >= 0; --first_dir) {
        EmbeddedCurve c;
        c.cycle = cycle;
        int dep_end = first_dir ? 0 : 1;  // end of cycle[0] we leave from
        int cur_dep = dep_end;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            int b = cycle[i];
            c.forward.push_back(cur_dep == 0 ? 1 : 0);
            Slot s = t.slot(End{b, 1 - cur_dep});
            int nb = cycle[(i + 1) % n];
            int next_end = -1;
            for (int e = 0; e < 2; ++e) {
                if (nb == b && e == 1 - cur_dep) continue;
                Slot q = t.slot(End{nb, e});
                if (q.sw != s.sw) continue;
                if ((s.pos == 0) != (q.pos == 0)) { next_end = e; break; }
                why = "passes between the two side-B ends of switch " + std::to_string(t.switches()[s.sw].id);
            }
            if (next_end < 0) { ok = false; break; }
            c.switches.push_back(s.sw);
            int third = 3 - s.pos - t.slot(End{nb, next_end}).pos;
            c.off_ends.push_back(t.at(Slot{s.sw, third}));
            if (i == n - 1 && next_end != dep_end) ok = false;
            cur_dep = next_end;
        }
        if (!ok) continue;
        std::set<int> off;
        for (auto e : c.off_ends) off.insert(e.branch);
        for (int b : cycle)
            if (off.count(b)) throw Error("not-embedded", "cycle meets itself at a switch");
        c.off_branches.assign(off.begin(), off.end());
        if (c.off_branches.size() < 2) throw Error("degenerate-curve", "fewer than two incident branches");
        return c;
    }
    throw Error("not-a-trainpath", "cycle is not a closed trainpath: " + why);
}

namespace {

std::optional<TrackIso> try_map(const TrainTrack& f, const TrainTrack& g, int start_to) {
    int s = f.switch_count(), p = f.branches();
    TrackIso iso;
    iso.branch.assign(p, -1);
    iso.flip.assign(p, 0);
    iso.sw.assign(s, -1);
    std::vector<int> used_b(p, 0), used_s(s, 0);
    std::queue<int> q;
    iso.sw[0] = start_to;
    used_s[start_to] = 1;
    q.push(0);
    while (!q.empty()) {
        int i = q.front();
        q.pop();
        int j = iso.sw[i];
        for (int pos = 0; pos < 3; ++pos) {
            End e1 = f.at(Slot{i, pos}), e2 = g.at(Slot{j, pos});
            int fl = e1.end != e2.end;
            if (iso.branch[e1.branch] >= 0) {
                if (iso.branch[e1.branch] != e2.branch || iso.flip[e1.branch] != fl) return std::nullopt;
            } else {
                if (used_b[e2.branch]) return std::nullopt;
                iso.branch[e1.branch] = e2.branch;
                iso.flip[e1.branch] = fl;
                used_b[e2.branch] = 1;
            }
            Slot o1 = f.slot(End{e1.branch, 1 - e1.end});
            Slot o2 = g.slot(End{e2.branch, 1 - e2.end});
            if (o1.pos != o2.pos) return std::nullopt;
            if (iso.sw[o1.sw] >= 0) {
                if (iso.sw[o1.sw] != o2.sw) return std::nullopt;
            } else {
                if (used_s[o2.sw]) return std::nullopt;
                iso.sw[o1.sw] = o2.sw;
                used_s[o2.sw] = 1;
                q.push(o1.sw);
            }
        }
    }
    for (int i = 0; i < s; ++i)
        if (iso.sw[i] < 0) return std::nullopt;
    for (size_t r = 0; r < f.regions().size(); ++r) {
        const Region& reg = f.regions()[r];
        BranchSide a = reg.boundary[0];
        BranchSide img{iso.branch[a.branch], iso.flip[a.branch] ? flip(a.side) : a.side};
        if (g.regions()[g.region_of(img)].punctures != reg.punctures) return std::nullopt;
    }
    return iso;
}

}  // namespace

std::vector<TrackIso> isomorphisms(const TrainTrack& from, const TrainTrack& to, bool first_only) {
    std::vector<TrackIso> out;
    if (!(from.surface() == to.surface()) || from.branches() != to.branches() ||
        from.switch_count() != to.switch_count() || from.switch_count() == 0)
        return out;
    std::vector<int> order;
    int id0 = from.switches()[0].id;
    for (int j = 0; j < to.switch_count(); ++j)
        if (to.switches()[j].id == id0) order.push_back(j);
    for (int j = 0; j < to.switch_count(); ++j)
        if (to.switches()[j].id != id0) order.push_back(j);
    for (int j : order) {
        auto r = try_map(from, to, j);
        if (r) {
            out.push_back(*r);
            if (first_only) break;
        }
    }
    return out;
}

std::optional<TrackIso> isomorphism(const TrainTrack& from, const TrainTrack& to) {
    auto v = isomorphisms(from, to, true);
    if (v.empty()) return std::nullopt;
    return v[0];
}

std::optional<TrackIso> isomorphism_with_branches(const TrainTrack& from, const TrainTrack& to,
                                                  const std::vector<int>& branch) {
    if (int(branch.size()) != from.branches() || from.switch_count() != to.switch_count()) return std::nullopt;
    End a = from.switches()[0].a;
    if (branch[a.branch] < 0 || branch[a.branch] >= to.branches()) return std::nullopt;
    for (int e = 0; e < 2; ++e) {
        Slot s = to.slot(End{branch[a.branch], e});
        if (s.pos != 0) continue;
        auto r = try_map(from, to, s.sw);
        if (r && r->branch == branch) return r;
    }
    return std::nullopt;
}

TrainTrack apply_iso(const TrainTrack& from, const TrainTrack& to, const TrackIso& iso) {
    auto m = [&](End e) { return End{iso.branch[e.branch], e.end ^ iso.flip[e.branch]}; };
    std::vector<Switch> sws;
    for (int i = 0; i < from.switch_count(); ++i) {
        const Switch& w = from.switches()[i];
        sws.push_back(Switch{to.switches()[iso.sw[i]].id, m(w.a), {m(w.b[0]), m(w.b[1])}});
    }
    std::vector<BranchSide> marks;
    for (auto bs : from.marks())
        marks.push_back(BranchSide{iso.branch[bs.branch], iso.flip[bs.branch] ? flip(bs.side) : bs.side});
    return TrainTrack(from.surface(), from.branches(), std::move(sws), std::move(marks));
}

TrackIso compose(const TrackIso& first, const TrackIso& second) {
    TrackIso r;
    for (size_t b = 0; b < first.branch.size(); ++b) {
        r.branch.push_back(second.branch[first.branch[b]]);
        r.flip.push_back(first.flip[b] ^ second.flip[first.branch[b]]);
    }
    for (size_t i = 0; i < first.sw.size(); ++i) r.sw.push_back(second.sw[first.sw[i]]);
    return r;
}

TrackIso identity_iso(const TrainTrack& t) {
    TrackIso r;
    r.branch.resize(t.branches());
    std::iota(r.branch.begin(), r.branch.end(), 0);
    r.flip.assign(t.branches(), 0);
    r.sw.resize(t.switch_count());
    std::iota(r.sw.begin(), r.sw.end(), 0);
    return r;
}

bool is_identity(const TrackIso& iso) {
    for (size_t b = 0; b < iso.branch.size(); ++b)
        if (iso.branch[b] != int(b) || iso.flip[b]) return false;
    for (size_t i = 0; i < iso.sw.size(); ++i)
        if (iso.sw[i] != int(i)) return false;
    return true;
}

int iso_order(const TrackIso& iso) {
    TrackIso cur = iso;
    for (int k = 1; k <= 1000000; ++k) {
        if (is_identity(cur)) return k;
        cur = compose(cur, iso);
    }
    throw Error("internal", "isomorphism order overflow");
}

TrainTrack mirror(const TrainTrack& t) {
    std::vector<Switch> sws = t.switches();
    for (auto& w : sws) std::swap(w.b[0], w.b[1]);
    std::vector<BranchSide> marks;
    for (auto bs : t.marks()) marks.push_back(BranchSide{bs.branch, flip(bs.side)});
    return TrainTrack(t.surface(), t.branches(), std::move(sws), std::move(marks));
}

}  // namespace ttk

namespace ttk {

namespace {

std::vector<int> relabel_from(const TrainTrack& t, int start) {
    int s = t.switch_count(), p = t.branches();
    std::vector<int> sw_new(s, -1), order;
    std::vector<int> b_new(p, -1), flip(p, 0);
    std::vector<int> q{start};
    sw_new[start] = 0;
    int nb = 0;
    for (size_t qi = 0; qi < q.size(); ++qi) {
        int i = q[qi];
        order.push_back(i);
        const Switch& w = t.switches()[i];
        for (End e : {w.a, w.b[0], w.b[1]}) {
            if (b_new[e.branch] < 0) {
                b_new[e.branch] = nb++;
                flip[e.branch] = e.end;
            }
            int other = t.slot(End{e.branch, 1 - e.end}).sw;
            if (sw_new[other] < 0) {
                sw_new[other] = int(q.size());
                q.push_back(other);
            }
        }
    }
    if (int(order.size()) != s) return {};
    std::vector<Switch> sws;
    for (int k = 0; k < s; ++k) {
        const Switch& w = t.switches()[order[k]];
        Switch n;
        n.id = k + 1;
        n.a = End{b_new[w.a.branch], w.a.end ^ flip[w.a.branch]};
        for (int j = 0; j < 2; ++j) n.b[j] = End{b_new[w.b[j].branch], w.b[j].end ^ flip[w.b[j].branch]};
        sws.push_back(n);
    }
    std::vector<BranchSide> marks;
    for (auto m : t.marks())
        marks.push_back(BranchSide{b_new[m.branch], flip[m.branch] ? (m.side == Side::L ? Side::R : Side::L) : m.side});
    TrainTrack r(t.surface(), p, std::move(sws), std::move(marks));
    std::vector<int> out;
    for (int k = 0; k < s; ++k) {
        const Switch& w = r.switches()[k];
        out.push_back(2 * w.a.branch + w.a.end);
        for (int j = 0; j < 2; ++j) out.push_back(2 * w.b[j].branch + w.b[j].end);
    }
    out.push_back(-1);
    for (auto m : r.marks()) out.push_back(2 * m.branch + int(m.side));
    return out;
}

}  // namespace

std::string canonical_form(const TrainTrack& t, int root) {
    std::vector<int> best;
    for (int i = 0; i < t.switch_count(); ++i) {
        if (root >= 0 && i != root) continue;
        auto c = relabel_from(t, i);
        if (best.empty() || c < best) best = std::move(c);
    }
    std::string s;
    for (int x : best) s += std::to_string(x) + ",";
    return s;
}

}  // namespace ttk
