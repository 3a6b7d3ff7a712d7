#pragma once

#include "ttk/geodesics.hpp"

#include <map>

namespace ttk {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Parses a `ttk 1` file. Non-trivalent switches raise kind "nongeneric".
TrainTrack parse_track(const std::string& text);
TrainTrack load_track(const std::string& path);
std::string serialize_track(const TrainTrack& t);

struct SeqFile {
    std::string track_file;
    std::vector<Move> moves;
    std::optional<std::vector<int>> iso;  // 0-based, end -> start
};
SeqFile parse_sequence(const std::string& text);
std::string serialize_sequence(const SeqFile& s);

struct LoadedSequence {
    SplitSequence seq;
    std::optional<PeriodicSequence> loop;  // present when an iso line is given
};
LoadedSequence load_sequence(const std::string& path);

struct MeasureFile {
    bool tangential = false;
    RVec weights;
};
MeasureFile parse_measure(const std::string& text);
std::string serialize_measure(const MeasureFile& m);

// Branch lists in files are 1-based.
std::vector<int> parse_branch_list(const std::vector<std::string>& tokens, int p, const std::string& where);

// True when the branch set forms a subtrack: at every switch it holds
// nothing, or the side-A branch together with at least one side-B branch.
std::string subtrack_violation(const TrainTrack& t, const std::vector<int>& branches);

struct Bundle {
    std::string dir;
    TrackRef track;
    std::map<std::string, std::vector<int>> subtracks;
    std::map<std::string, PeriodicSequence> loops;
    std::map<std::string, std::vector<int>> curves;
    std::map<std::string, std::string> values;  // free key/value metadata
};
Bundle load_bundle(const std::string& dir);

// Curve list for systole runs, one per line:
//   curve <name> <time-index> <translate> <branch> <branch> ...
// time indices count moves from the start of the loop; branches are 1-based
// numbers on the track at that index.
std::vector<CurveSpec> parse_curves(const std::string& text);

std::string certificate_record(const PACertificate& c);

}  // namespace ttk
