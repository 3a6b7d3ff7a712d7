#include "ttk/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace ttk {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write " + path);
    out << text;
}

namespace {

struct Line {
    int no;
    std::vector<std::string> tok;
};

std::vector<Line> lines_of(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string s;
    int no = 0;
    while (std::getline(in, s)) {
        ++no;
        auto h = s.find('#');
        if (h != std::string::npos) s.resize(h);
        std::istringstream ls(s);
        Line l{no, {}};
        std::string t;
        while (ls >> t) l.tok.push_back(t);
        if (!l.tok.empty()) out.push_back(std::move(l));
    }
    return out;
}

Error syntax(int line, const std::string& msg) {
    return Error("syntax", "line " + std::to_string(line) + ": " + msg);
}

long parse_int(const std::string& s, int line) {
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) throw syntax(line, "expected an integer, got '" + s + "'");
    try {
        return std::stol(s);
    } catch (...) {
        throw syntax(line, "integer out of range: '" + s + "'");
    }
}

End parse_end(std::string s, int p, int line) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    auto dot = s.find('.');
    if (dot == std::string::npos) throw syntax(line, "expected <branch>.<end>, got '" + s + "'");
    long b = parse_int(s.substr(0, dot), line), e = parse_int(s.substr(dot + 1), line);
    if (b < 1 || b > p) throw syntax(line, "branch " + std::to_string(b) + " outside 1.." + std::to_string(p));
    if (e != 0 && e != 1) throw syntax(line, "branch end must be 0 or 1");
    return End{int(b - 1), int(e)};
}

std::string end_str(End e) { return "(" + std::to_string(e.branch + 1) + "." + std::to_string(e.end) + ")"; }

}  // namespace

TrainTrack parse_track(const std::string& text) {
    auto ls = lines_of(text);
    if (ls.size() < 3 || ls[0].tok != std::vector<std::string>{"ttk", "1"})
        throw syntax(ls.empty() ? 1 : ls[0].no, "missing 'ttk 1' header");
    if (ls[1].tok.size() != 3 || ls[1].tok[0] != "surface") throw syntax(ls[1].no, "expected 'surface <g> <m>'");
    SurfaceSig surf{int(parse_int(ls[1].tok[1], ls[1].no)), int(parse_int(ls[1].tok[2], ls[1].no))};
    if (ls[2].tok.size() != 2 || ls[2].tok[0] != "branches") throw syntax(ls[2].no, "expected 'branches <p>'");
    int p = int(parse_int(ls[2].tok[1], ls[2].no));
    if (p < 1) throw syntax(ls[2].no, "branch count must be positive");
    std::vector<Switch> sws;
    std::vector<BranchSide> marks;
    for (size_t i = 3; i < ls.size(); ++i) {
        const auto& l = ls[i];
        if (l.tok[0] == "sw") {
            if (l.tok.size() < 4 || l.tok[2] != "A") throw syntax(l.no, "expected 'sw <id> A (b.e) B (b.e) (b.e)'");
            size_t k = 3;
            std::vector<End> a, b;
            while (k < l.tok.size() && l.tok[k] != "B") a.push_back(parse_end(l.tok[k++], p, l.no));
            if (k == l.tok.size()) throw syntax(l.no, "switch without side B");
            ++k;
            while (k < l.tok.size()) b.push_back(parse_end(l.tok[k++], p, l.no));
            if (a.size() != 1 || b.size() != 2)
                throw Error("nongeneric", "line " + std::to_string(l.no) + ": switch with sides of size " +
                                              std::to_string(a.size()) + " and " + std::to_string(b.size()));
            sws.push_back(Switch{int(parse_int(l.tok[1], l.no)), a[0], {b[0], b[1]}});
        } else if (l.tok[0] == "punct") {
            if (l.tok.size() != 3 || (l.tok[2] != "L" && l.tok[2] != "R")) throw syntax(l.no, "expected 'punct <b>.<e> L|R'");
            End e = parse_end(l.tok[1], p, l.no);
            Side s = l.tok[2] == "L" ? Side::L : Side::R;
            // the side is read looking along the branch away from the named end
            marks.push_back(BranchSide{e.branch, e.end == 0 ? s : flip(s)});
        } else {
            throw syntax(l.no, "unknown record '" + l.tok[0] + "'");
        }
    }
    return TrainTrack(surf, p, std::move(sws), std::move(marks));
}

TrainTrack load_track(const std::string& path) { return parse_track(read_file(path)); }

std::string serialize_track(const TrainTrack& t) {
    std::ostringstream o;
    o << "ttk 1\nsurface " << t.surface().genus << " " << t.surface().punctures << "\nbranches " << t.branches() << "\n";
    for (const auto& s : t.switches())
        o << "sw " << s.id << " A " << end_str(s.a) << " B " << end_str(s.b[0]) << " " << end_str(s.b[1]) << "\n";
    for (const auto& m : t.marks()) o << "punct " << m.branch + 1 << ".0 " << (m.side == Side::L ? "L" : "R") << "\n";
    return o.str();
}

SeqFile parse_sequence(const std::string& text) {
    auto ls = lines_of(text);
    if (ls.empty() || ls[0].tok != std::vector<std::string>{"seq", "v1"}) throw syntax(ls.empty() ? 1 : ls[0].no, "missing 'seq v1' header");
    if (ls.size() < 2 || ls[1].tok.size() != 2 || ls[1].tok[0] != "track") throw syntax(ls.size() < 2 ? ls[0].no : ls[1].no, "expected 'track <file>'");
    SeqFile s;
    s.track_file = ls[1].tok[1];
    for (size_t i = 2; i < ls.size(); ++i) {
        const auto& l = ls[i];
        if (s.iso) throw syntax(l.no, "nothing may follow the iso line");
        if (l.tok[0] == "split") {
            if (l.tok.size() != 3 || (l.tok[2] != "L" && l.tok[2] != "R")) throw syntax(l.no, "expected 'split <b> L|R'");
            long b = parse_int(l.tok[1], l.no);
            if (b < 1) throw syntax(l.no, "branch numbers start at 1");
            s.moves.push_back(Move{l.tok[2] == "R" ? MoveKind::SplitRight : MoveKind::SplitLeft, int(b - 1)});
        } else if (l.tok[0] == "shift") {
            if (l.tok.size() != 2) throw syntax(l.no, "expected 'shift <b>'");
            long b = parse_int(l.tok[1], l.no);
            if (b < 1) throw syntax(l.no, "branch numbers start at 1");
            s.moves.push_back(Move{MoveKind::Shift, int(b - 1)});
        } else if (l.tok[0] == "iso") {
            std::vector<int> m;
            for (size_t k = 1; k < l.tok.size(); ++k) m.push_back(int(parse_int(l.tok[k], l.no) - 1));
            s.iso = m;
        } else {
            throw syntax(l.no, "unknown move '" + l.tok[0] + "'");
        }
    }
    return s;
}

std::string serialize_sequence(const SeqFile& s) {
    std::ostringstream o;
    o << "seq v1\ntrack " << s.track_file << "\n";
    for (const auto& m : s.moves) {
        if (m.kind == MoveKind::Shift)
            o << "shift " << m.branch + 1 << "\n";
        else
            o << "split " << m.branch + 1 << (m.kind == MoveKind::SplitRight ? " R" : " L") << "\n";
    }
    if (s.iso) {
        o << "iso";
        for (int b : *s.iso) o << " " << b + 1;
        o << "\n";
    }
    return o.str();
}

LoadedSequence load_sequence(const std::string& path) {
    SeqFile f = parse_sequence(read_file(path));
    fs::path tp = fs::path(path).parent_path() / f.track_file;
    TrackRef t = share(load_track(tp.string()));
    for (const auto& m : f.moves)
        if (m.branch >= t->branches()) throw Error("syntax", "move names branch " + std::to_string(m.branch + 1) + " beyond the track");
    LoadedSequence out{SplitSequence(t, f.moves), std::nullopt};
    if (f.iso) {
        if (int(f.iso->size()) != t->branches()) throw Error("syntax", "iso line needs one entry per branch");
        out.loop = close_with(out.seq, *f.iso);
    }
    return out;
}

MeasureFile parse_measure(const std::string& text) {
    auto ls = lines_of(text);
    std::vector<std::string> tok;
    for (const auto& l : ls) tok.insert(tok.end(), l.tok.begin(), l.tok.end());
    if (tok.size() < 2 || (tok[0] != "tm" && tok[0] != "tg")) throw syntax(1, "expected 'tm <p> ...' or 'tg <p> ...'");
    MeasureFile m;
    m.tangential = tok[0] == "tg";
    long p = parse_int(tok[1], 1);
    if (long(tok.size()) != p + 2) throw syntax(1, "expected " + std::to_string(p) + " weights");
    for (size_t i = 2; i < tok.size(); ++i) m.weights.push_back(parse_rational(tok[i]));
    return m;
}

std::string serialize_measure(const MeasureFile& m) {
    std::ostringstream o;
    o << (m.tangential ? "tg " : "tm ") << m.weights.size();
    for (const auto& w : m.weights) o << " " << w.get_str();
    o << "\n";
    return o.str();
}

std::vector<int> parse_branch_list(const std::vector<std::string>& tokens, int p, const std::string& where) {
    std::vector<int> out;
    for (const auto& t : tokens) {
        long b;
        try {
            b = parse_int(t, 0);
        } catch (const Error&) {
            throw Error("syntax", where + ": bad branch number '" + t + "'");
        }
        if (b < 1 || b > p) throw Error("syntax", where + ": branch " + t + " is not in the track");
        out.push_back(int(b - 1));
    }
    return out;
}

std::string subtrack_violation(const TrainTrack& t, const std::vector<int>& branches) {
    std::set<int> in(branches.begin(), branches.end());
    for (const auto& s : t.switches()) {
        bool a = in.count(s.a.branch), b0 = in.count(s.b[0].branch), b1 = in.count(s.b[1].branch);
        if (!a && !b0 && !b1) continue;
        if (a && (b0 || b1)) continue;
        return "not a subtrack at switch " + std::to_string(s.id);
    }
    return {};
}

Bundle load_bundle(const std::string& dir) {
    fs::path root(dir);
    fs::path file = root / "bundle.txt";
    auto ls = lines_of(read_file(file.string()));
    if (ls.empty() || ls[0].tok != std::vector<std::string>{"bundle", "1"}) throw syntax(1, "missing 'bundle 1' header");
    Bundle b;
    b.dir = dir;
    std::vector<std::pair<std::string, std::string>> loops;
    for (size_t i = 1; i < ls.size(); ++i) {
        const auto& l = ls[i];
        std::string where = file.string() + ":" + std::to_string(l.no);
        if (l.tok[0] == "track" && l.tok.size() == 2) {
            b.track = share(load_track((root / l.tok[1]).string()));
            auto rep = validate(*b.track);
            if (!rep.ok()) throw Error("semantic", where + ": track fails validation: " + rep.violations[0]);
            continue;
        }
        if (l.tok[0] == "value" && l.tok.size() == 3) {
            b.values[l.tok[1]] = l.tok[2];
            continue;
        }
        if (!b.track) throw Error("semantic", where + ": track must come first");
        int p = b.track->branches();
        if (l.tok[0] == "subtrack" && l.tok.size() >= 3) {
            auto br = parse_branch_list({l.tok.begin() + 2, l.tok.end()}, p, where);
            auto why = subtrack_violation(*b.track, br);
            if (!why.empty()) throw Error("semantic", where + ": " + l.tok[1] + " is " + why);
            b.subtracks[l.tok[1]] = br;
        } else if (l.tok[0] == "curve" && l.tok.size() >= 3) {
            auto br = parse_branch_list({l.tok.begin() + 2, l.tok.end()}, p, where);
            closed_trainpath(*b.track, br);
            b.curves[l.tok[1]] = br;
        } else if (l.tok[0] == "loop" && l.tok.size() == 3) {
            auto ld = load_sequence((root / l.tok[2]).string());
            if (!ld.loop) throw Error("semantic", where + ": loop " + l.tok[1] + " has no iso line");
            if (!(*ld.seq.start() == *b.track)) throw Error("semantic", where + ": loop " + l.tok[1] + " starts elsewhere");
            b.loops[l.tok[1]] = *ld.loop;
        } else {
            throw syntax(l.no, "unknown bundle record '" + l.tok[0] + "'");
        }
    }
    if (!b.track) throw Error("semantic", file.string() + ": no track");
    return b;
}

std::vector<CurveSpec> parse_curves(const std::string& text) {
    std::vector<CurveSpec> out;
    for (const auto& l : lines_of(text)) {
        if (l.tok[0] != "curve" || l.tok.size() < 5) throw syntax(l.no, "expected 'curve <name> <time> <translate> <branches>'");
        CurveSpec c;
        c.name = l.tok[1];
        c.time_index = int(parse_int(l.tok[2], l.no));
        c.translate = int(parse_int(l.tok[3], l.no));
        for (size_t i = 4; i < l.tok.size(); ++i) c.cycle.push_back(int(parse_int(l.tok[i], l.no)) - 1);
        out.push_back(c);
    }
    return out;
}

std::string certificate_record(const PACertificate& c) {
    std::ostringstream o;
    int p = c.C.rows();
    o << "p " << p << "\n";
    o << "sigma";
    for (int b : c.sigma) o << " " << b + 1;
    o << "\norder " << c.order << "\n";
    o << "C";
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) o << " " << c.C(i, j).get_str();
    o << "\npositivity_power " << (c.positivity_power ? std::to_string(*c.positivity_power) : "none") << "\n";
    o << "alpha " << c.alpha.lo.get_str() << " " << c.alpha.hi.get_str() << "\n";
    if (c.lambda_plus) {
        o << "lambda_plus";
        for (const auto& w : c.lambda_plus->weights()) o << " " << w.get_str();
        o << "\n";
    }
    if (c.lambda_minus) {
        o << "lambda_minus";
        for (const auto& w : c.lambda_minus->weights()) o << " " << w.get_str();
        o << "\n";
    }
    return o.str();
}

}  // namespace ttk
