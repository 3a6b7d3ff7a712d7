#pragma once

#include "ttk/base.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ttk {

struct SurfaceSig {
    int genus = 0;
    int punctures = 0;
    int euler() const { return 2 - 2 * genus - punctures; }
    int complexity() const { return 3 * genus - 3 + punctures; }
    bool operator==(const SurfaceSig&) const = default;
};

// Branches are 0-based internally; files and CLI output use 1-based numbers.
struct End {
    int branch = 0;
    int end = 0;  // 0 or 1
    bool operator==(const End&) const = default;
    auto operator<=>(const End&) const = default;
};

enum class Side { L = 0, R = 1 };
inline Side flip(Side s) { return s == Side::L ? Side::R : Side::L; }

// b[0] is the left end of side B, b[1] the right one, looking from side A.
struct Switch {
    int id = 0;
    End a;
    std::array<End, 2> b;
    bool operator==(const Switch&) const = default;
};

// Region anchor: the side of a branch, taken relative to its 0 -> 1 direction.
struct BranchSide {
    int branch = 0;
    Side side = Side::L;
    bool operator==(const BranchSide&) const = default;
    auto operator<=>(const BranchSide&) const = default;
};

struct Region {
    std::vector<BranchSide> boundary;  // cyclic, region on the left when walked
    std::vector<int> corner_cusp;      // corner after boundary[i] is a cusp (0/1)
    int cusps = 0;
    int punctures = 0;
    bool punctured() const { return punctures > 0; }
};

enum class Role { Small = 0, Mixed = 1, Large = 2 };

struct Slot {
    int sw = -1;   // index into switches()
    int pos = -1;  // 0 = A, 1 = B left, 2 = B right
};

class TrainTrack {
public:
    TrainTrack() = default;
    // Throws malformed on structural problems. Marks are re-anchored to a
    // canonical branch side of their region.
    TrainTrack(SurfaceSig surf, int p, std::vector<Switch> sws, std::vector<BranchSide> marks);

    const SurfaceSig& surface() const { return surf_; }
    int branches() const { return p_; }
    int switch_count() const { return int(sw_.size()); }
    const std::vector<Switch>& switches() const { return sw_; }
    const std::vector<BranchSide>& marks() const { return marks_; }
    const std::vector<Region>& regions() const { return regions_; }

    Slot slot(End e) const { return where_[e.branch][e.end]; }
    End at(Slot s) const;
    // Region index on the given side of a branch.
    int region_of(BranchSide bs) const { return region_at_[bs.branch][int(bs.side)]; }

    Role role(int b) const;
    bool large_end(End e) const { return slot(e).pos == 0; }
    std::vector<Role> roles() const;
    bool connected() const;

    bool operator==(const TrainTrack& o) const {
        return surf_ == o.surf_ && p_ == o.p_ && sw_ == o.sw_ && marks_ == o.marks_;
    }

private:
    void build();
    SurfaceSig surf_;
    int p_ = 0;
    std::vector<Switch> sw_;
    std::vector<BranchSide> marks_;
    std::vector<std::array<Slot, 2>> where_;
    std::vector<Region> regions_;
    std::vector<std::array<int, 2>> region_at_;
};

struct ValidationReport {
    bool generic = true;
    bool connected = true;
    int index_sum_twice = 0;  // 2 * sum over regions of (chi_R - cusps/2)
    int genus_of_graph = 0;
    int marked_punctures = 0;
    std::vector<std::string> violations;
    bool maximal = false;
    bool ok() const { return violations.empty(); }
    Rational index_sum() const {
        Rational r(index_sum_twice, 2);
        r.canonicalize();
        return r;
    }
};

ValidationReport validate(const TrainTrack& t);
std::vector<Region> complementary_regions(const TrainTrack& t);
std::vector<Role> branch_roles(const TrainTrack& t);

struct EmbeddedCurve {
    std::vector<int> cycle;       // branches in travel order
    std::vector<int> forward;     // 1 if cycle[i] is traversed from end 0 to end 1
    std::vector<int> switches;    // switch index entered after cycle[i]
    std::vector<End> off_ends;    // the third half-branch at each switch of the cycle
    std::vector<int> off_branches;  // sorted distinct branches of off_ends
};

EmbeddedCurve closed_trainpath(const TrainTrack& t, const std::vector<int>& cycle);

// Maps branches of `from` to branches of `to`; applying it to `from` gives `to`.
struct TrackIso {
    std::vector<int> branch;
    std::vector<int> flip;    // 1 if end labels swap
    std::vector<int> sw;      // switch index in from -> switch index in to
    bool operator==(const TrackIso&) const = default;
};

std::vector<TrackIso> isomorphisms(const TrainTrack& from, const TrainTrack& to, bool first_only = false);
std::optional<TrackIso> isomorphism(const TrainTrack& from, const TrainTrack& to);
// The orientation-preserving isomorphism with the given branch map, if any.
std::optional<TrackIso> isomorphism_with_branches(const TrainTrack& from, const TrainTrack& to,
                                                  const std::vector<int>& branch);
TrainTrack apply_iso(const TrainTrack& from, const TrainTrack& to, const TrackIso& iso);
TrackIso compose(const TrackIso& first, const TrackIso& second);  // second after first
TrackIso identity_iso(const TrainTrack& t);
bool is_identity(const TrackIso& iso);
int iso_order(const TrackIso& iso);

// Reverses every side-B order (the mirror image).
TrainTrack mirror(const TrainTrack& t);

// A string equal for two tracks exactly when they are isomorphic by an
// orientation-preserving map. With root >= 0 only maps fixing that switch
// index count, which is used to search for loops supported away from it.
std::string canonical_form(const TrainTrack& t, int root = -1);

}  // namespace ttk
