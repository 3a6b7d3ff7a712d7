#pragma once

#include "ttk/measures.hpp"

namespace ttk {

enum class MoveKind { SplitRight, SplitLeft, Shift };

struct Move {
    MoveKind kind = MoveKind::SplitRight;
    int branch = 0;
    bool operator==(const Move&) const = default;
};

// Local data of one applied move, enough to rebuild its elementary matrix.
// For a split, losers lists the losing branches with multiplicity.
// For a shift along m, old weight of m = new m - new y + new x_other.
struct StepInfo {
    Move move;
    std::vector<int> losers;
    int shift_y = -1, shift_other = -1;
};

// Figure-B labels of a large branch e running from switch s0 (end 0) to s1 (end 1):
// d, a are the left and right side-B ends at s0 (seen from e), b, c those at s1.
// A right split makes a and c winners, the diagonal then carries mu(a) - mu(b).
struct SplitLabels {
    End a, b, c, d;
};
SplitLabels split_labels(const TrainTrack& t, int e);

struct MoveResult {
    TrainTrack track;
    StepInfo info;
};

MoveResult split(const TrainTrack& t, int e, Side side);
MoveResult shift(const TrainTrack& t, int m);
MoveResult apply_move(const TrainTrack& t, const Move& mv);
TrainTrack collapse(const TrainTrack& t, const Move& step);

IntMatrix elementary_matrix(int p, const StepInfo& info);
// Old weights from new ones, one move at a time (stepwise transport).
RVec pull_back(const StepInfo& info, const RVec& v);

struct LambdaSplit {
    Side side;
    TrainTrack track;
    RVec weights;  // the measure on the new track
    StepInfo info;
};
LambdaSplit lambda_split(const TrainTrack& t, const RVec& mu, int e);

class SplitSequence {
public:
    SplitSequence() = default;
    SplitSequence(TrackRef start, std::vector<Move> moves);

    const TrackRef& start() const { return tracks_.front(); }
    const TrackRef& end() const { return tracks_.back(); }
    const TrackRef& track(int i) const { return tracks_[i]; }
    const std::vector<Move>& moves() const { return moves_; }
    const std::vector<StepInfo>& steps() const { return steps_; }
    int size() const { return int(moves_.size()); }

    SplitSequence prefix(int n) const;
    SplitSequence slice(int from, int to) const;  // moves [from, to)
    SplitSequence then(const std::vector<Move>& more) const;

private:
    std::vector<Move> moves_;
    std::vector<TrackRef> tracks_;
    std::vector<StepInfo> steps_;
};

// Product A_1 ... A_n; rows index branches of the start, columns of the end.
IntMatrix carrying_matrix(const SplitSequence& seq);
IntMatrix carrying_matrix(const SplitSequence& seq, int from, int to);
// Independent oracle: pushes each basis vector through the moves one at a time.
IntMatrix carrying_matrix_stepwise(const SplitSequence& seq);
bool is_tight(const SplitSequence& seq);
bool is_tight(const IntMatrix& m);
// beta = min over entries A(b,s) / (column sum s); every carried measure has
// min weight / total weight >= beta on the start track.
Rational min_weight_bound(const IntMatrix& m);
Rational min_weight_bound(const SplitSequence& seq);

// Renumbers moves along an isomorphism of the start track (branch b -> map[b]).
std::vector<Move> renumber(const std::vector<Move>& moves, const std::vector<int>& map);

// Handedness of a curve whose merges all come from one side and whose
// diverges all leave to the other: +1 when merges come from the right,
// -1 when they come from the left, 0 when the curve is not of this kind.
int twist_type(const TrainTrack& t, const EmbeddedCurve& c);

// Splits along the large branches of a twist-ready curve, always keeping the
// curve a trainpath, until every merge has passed every diverge once.
std::vector<Move> twist_moves(const TrainTrack& t, const std::vector<int>& cycle);

}  // namespace ttk
