#include "CLI11.hpp"
#include "ttk/families.hpp"
#include "ttk/generators.hpp"
#include "ttk/io.hpp"

#include <cstdlib>
#include <iostream>

using namespace ttk;

namespace {

// exit codes
constexpr int OK = 0, USAGE = 1, FAILED = 2;

bool color() {
    const char* c = std::getenv("TTK_COLOR");
    return c && std::string(c) == "1";
}

std::string status(bool good, const std::string& word) {
    if (!color()) return word;
    return std::string(good ? "\033[32m" : "\033[31m") + word + "\033[0m";
}

void field(const std::string& key, const std::string& value) {
    std::cout << key;
    for (size_t i = key.size(); i < 18; ++i) std::cout << ' ';
    std::cout << value << "\n";
}

std::string one_based(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i] + 1);
    return s;
}

std::string vec(const RVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
    return s;
}

std::string dec(const Rational& q) {
    std::ostringstream o;
    o.precision(15);
    o << q.get_d();
    return o.str();
}

void print_matrix(const IntMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) std::cout << (j ? " " : "") << m(i, j).get_str();
        std::cout << "\n";
    }
}

PeriodicSequence as_loop(const LoadedSequence& ld) {
    if (ld.loop) return *ld.loop;
    auto ps = close_sequence(ld.seq);
    if (!ps) throw Error("not-closed", "the end track is not isomorphic to the start");
    return *ps;
}

int cmd_validate(const std::string& path) {
    TrainTrack t = load_track(path);
    auto r = validate(t);
    field("surface", std::to_string(t.surface().genus) + " " + std::to_string(t.surface().punctures));
    field("branches", std::to_string(t.branches()));
    field("switches", std::to_string(t.switch_count()));
    field("generic", r.generic ? "yes" : "no");
    field("connected", r.connected ? "yes" : "no");
    field("regions", std::to_string(t.regions().size()));
    field("index_sum", r.index_sum().get_str());
    field("euler", std::to_string(t.surface().euler()));
    field("maximal", r.maximal ? "yes" : "no");
    for (const auto& v : r.violations) field("violation", v);
    field("status", status(r.ok(), r.ok() ? "valid" : "invalid"));
    return r.ok() ? OK : FAILED;
}

int cmd_run(const std::string& path) {
    auto ld = load_sequence(path);
    field("moves", std::to_string(ld.seq.size()));
    auto iso = isomorphism(*ld.seq.end(), *ld.seq.start());
    field("closes", iso ? "yes" : "no");
    if (iso) field("iso", one_based(iso->branch));
    std::cout << serialize_track(*ld.seq.end());
    return OK;
}

int cmd_matrix(const std::string& path) {
    auto ld = load_sequence(path);
    print_matrix(carrying_matrix(ld.seq));
    return OK;
}

int cmd_tight(const std::string& path) {
    auto ld = load_sequence(path);
    IntMatrix A = carrying_matrix(ld.seq);
    bool tight = is_tight(A);
    field("tight", status(tight, tight ? "yes" : "no"));
    field("min_entry", A.min_entry().get_str());
    if (tight) {
        Rational beta = min_weight_bound(A);
        field("min_weight_bound", beta.get_str() + "  (" + dec(beta) + ")");
    }
    return tight ? OK : FAILED;
}

int cmd_pa(const std::string& path, const std::string& tol) {
    auto ld = load_sequence(path);
    PeriodicSequence ps = as_loop(ld);
    PACertificate cert;
    try {
        cert = certify_pa(ps, parse_rational(tol));
    } catch (const Error& e) {
        if (e.kind() == "usage" || e.kind() == "syntax") throw;
        field("status", status(false, "not certified"));
        field("reason", e.kind() + ": " + e.what());
        return FAILED;
    }
    std::cout << certificate_record(cert);
    auto rep = invariant_check(cert);
    for (const auto& v : rep.violations) field("violation", v);
    field("alpha", dec(cert.alpha.lo));
    field("status", status(rep.ok(), rep.ok() ? "certified" : "not certified"));
    return rep.ok() ? OK : FAILED;
}

int cmd_roof(const std::string& seq_path, const std::string& measure_path) {
    auto ld = load_sequence(seq_path);
    MeasureFile m = parse_measure(read_file(measure_path));
    if (m.tangential) throw Error("usage", "roof needs a transverse measure (tm)");
    TransverseMeasure mu(ld.seq.end(), m.weights);  // checks the switch conditions
    RoofProfile r = roof_profile(ld.seq, mu.weights());
    std::cout << "index a ratio\n";
    for (size_t i = 0; i < r.a.size(); ++i)
        std::cout << i << " " << r.a[i].get_str() << " " << (i < r.ratios.size() ? r.ratios[i].get_str() : "-") << "\n";
    return OK;
}

int cmd_systole(const std::string& path, const std::string& curves_path, int grid) {
    auto ld = load_sequence(path);
    PeriodicSequence ps = as_loop(ld);
    PACertificate cert = certify_pa(ps, default_tol());
    auto curves = parse_curves(read_file(curves_path));
    SystoleProfile sp = systole_profile(cert, ps, curves, grid);
    std::cout << "curve time translate i_plus i_minus\n";
    for (const auto& c : sp.curves)
        std::cout << c.spec.name << " " << c.spec.time_index << " " << c.spec.translate << " " << c.i_plus.get_str() << " "
                  << c.i_minus.get_str() << "\n";
    field("period_log", dec(sp.period.lo));
    field("supmin_lo", sp.sup_min.lo.get_str());
    field("supmin_hi", sp.sup_min.hi.get_str());
    field("supmin", dec(sp.sup_min.hi));
    return OK;
}

std::pair<int, int> parse_range(const std::string& r) {
    auto dots = r.find("..");
    if (dots == std::string::npos) throw Error("usage", "range must look like a..b");
    try {
        return {std::stoi(r.substr(0, dots)), std::stoi(r.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Error("usage", "range must look like a..b");
    }
}

int cmd_family(const std::string& kind, const std::string& dir, const std::string& range, const std::string& out, int grid) {
    auto [a, b] = parse_range(range);
    Bundle bundle = load_bundle(dir);
    std::vector<FamilyRow> rows;
    try {
        rows = kind == "zeta" ? zeta_family(bundle, a, b, grid) : twist_family(bundle, a, b, grid);
    } catch (const Error& e) {
        if (e.kind() != "not-primitive" && e.kind() != "not-expanding" && e.kind() != "no-convergence") throw;
        field("status", status(false, "not certified"));
        field("reason", e.kind() + ": " + e.what());
        return FAILED;
    }
    std::string csv = family_csv(rows);
    if (out.empty()) {
        std::cout << csv;
    } else {
        write_file(out, csv);
        field("rows", std::to_string(rows.size()));
        field("written", out);
    }
    for (const auto& r : rows)
        for (const auto& [k, v] : r.extra) std::cerr << "param " << r.param << " " << k << " " << dec(v) << "\n";
    return OK;
}

// roof bound over random lambda-split walks
int cmd_sample(const std::string& path, int trials, int length, unsigned long seed) {
    TrackRef t = share(load_track(path));
    Rng rng(seed);
    long ratios = 0, outside = 0;
    Rational lo = 2, hi = 1;
    for (int i = 0; i < trials; ++i) {
        auto tr = lambda_trajectory(t, rng, length);
        for (const auto& r : roof_profile(tr.seq, tr.mu_end).ratios) {
            ++ratios;
            if (r < 1 || r > 2) ++outside;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
    }
    field("trajectories", std::to_string(trials));
    field("ratios", std::to_string(ratios));
    field("min_ratio", dec(lo));
    field("max_ratio", dec(hi));
    field("outside_[1,2]", std::to_string(outside));
    return outside == 0 ? OK : FAILED;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact train-track calculus and pseudo-Anosov certificates"};
    app.require_subcommand(1);
    std::string a1, a2, tol = "1/1000000000000", curves, fixture, range, out;
    int grid = 256, trials = 1000, length = 50;
    unsigned long seed = 1;

    auto* validate_cmd = app.add_subcommand("validate", "check a track file");
    validate_cmd->add_option("track", a1)->required();
    auto* run_cmd = app.add_subcommand("run", "replay a sequence and print the end track");
    run_cmd->add_option("seq", a1)->required();
    auto* matrix_cmd = app.add_subcommand("matrix", "print the carrying matrix of a sequence");
    matrix_cmd->add_option("seq", a1)->required();
    auto* tight_cmd = app.add_subcommand("tight", "tightness and the minimal weight bound");
    tight_cmd->add_option("seq", a1)->required();
    auto* pa_cmd = app.add_subcommand("pa", "certify a loop as pseudo-Anosov");
    pa_cmd->add_option("seq", a1)->required();
    pa_cmd->add_option("--tol", tol, "width of the dilatation interval");
    auto* roof_cmd = app.add_subcommand("roof", "roof profile of a measure on the end track");
    roof_cmd->add_option("seq", a1)->required();
    roof_cmd->add_option("measure", a2)->required();
    auto* sys_cmd = app.add_subcommand("systole", "length bounds for curves along the closed orbit");
    sys_cmd->add_option("seq", a1)->required();
    sys_cmd->add_option("--curves", curves)->required();
    sys_cmd->add_option("--grid", grid);
    auto* fam_cmd = app.add_subcommand("family", "tabulate the twist or zeta family");
    fam_cmd->add_option("kind", a1)->required()->check(CLI::IsMember({"twist", "zeta"}));
    fam_cmd->add_option("--fixture", fixture, "bundle directory (default fixtures/<kind>)");
    fam_cmd->add_option("--range", range)->required();
    fam_cmd->add_option("--out", out);
    fam_cmd->add_option("--grid", grid);
    auto* sample_cmd = app.add_subcommand("sample", "roof ratios along random lambda-split walks");
    sample_cmd->add_option("track", a1)->required();
    sample_cmd->add_option("--trials", trials);
    sample_cmd->add_option("--length", length);
    sample_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? OK : USAGE;
    }

    try {
        if (*validate_cmd) return cmd_validate(a1);
        if (*run_cmd) return cmd_run(a1);
        if (*matrix_cmd) return cmd_matrix(a1);
        if (*tight_cmd) return cmd_tight(a1);
        if (*pa_cmd) return cmd_pa(a1, tol);
        if (*roof_cmd) return cmd_roof(a1, a2);
        if (*sys_cmd) return cmd_systole(a1, curves, grid);
        if (*fam_cmd) return cmd_family(a1, fixture.empty() ? "fixtures/" + a1 : fixture, range, out, grid);
        if (*sample_cmd) return cmd_sample(a1, trials, length, seed);
    } catch (const Error& e) {
        std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
        return USAGE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return USAGE;
    }
    return USAGE;
}
