#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ttk/families.hpp"
#include "ttk/io.hpp"

namespace py = pybind11;
using namespace ttk;

namespace {

// Rationals cross the boundary as strings such as "3/4"; fractions.Fraction
// accepts them directly.
std::vector<std::string> qs(const RVec& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

RVec rv(const std::vector<std::string>& v) {
    RVec out;
    for (const auto& s : v) out.push_back(parse_rational(s));
    return out;
}

std::vector<std::vector<std::string>> matrix_rows(const IntMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).get_str());
    return out;
}

Move to_move(const std::string& kind, int b) {
    if (kind == "R") return Move{MoveKind::SplitRight, b};
    if (kind == "L") return Move{MoveKind::SplitLeft, b};
    if (kind == "S") return Move{MoveKind::Shift, b};
    throw Error("usage", "move kind must be R, L or S");
}

std::vector<Move> to_moves(const std::vector<std::pair<std::string, int>>& ms) {
    std::vector<Move> out;
    for (const auto& [k, b] : ms) out.push_back(to_move(k, b));
    return out;
}

py::dict row_dict(const FamilyRow& r) {
    static const char* names[] = {"param", "alpha_lo", "alpha_hi", "period_log_lo", "period_log_hi", "supmin_lo", "supmin_hi"};
    auto f = family_csv_fields(r);
    py::dict d;
    for (size_t i = 0; i < f.size(); ++i) d[names[i]] = f[i];
    for (const auto& [k, v] : r.extra) d[k.c_str()] = v.get_str();
    return d;
}

struct PyTrack {
    TrackRef t;
};

}  // namespace

PYBIND11_MODULE(_ttk, m) {
    m.doc() = "Exact train-track calculus: splits, carrying matrices, pseudo-Anosov certificates";

    static py::exception<Error> exc(m, "TTKError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc((e.kind() + ": " + e.what()).c_str());
        }
    });

    py::class_<PyTrack>(m, "Track")
        .def_static("parse", [](const std::string& s) { return PyTrack{share(parse_track(s))}; })
        .def_static("load", [](const std::string& path) { return PyTrack{share(load_track(path))}; })
        .def("serialize", [](const PyTrack& t) { return serialize_track(*t.t); })
        .def_property_readonly("branches", [](const PyTrack& t) { return t.t->branches(); })
        .def_property_readonly("switch_count", [](const PyTrack& t) { return t.t->switch_count(); })
        .def_property_readonly("surface", [](const PyTrack& t) {
            return std::make_pair(t.t->surface().genus, t.t->surface().punctures);
        })
        .def("switches", [](const PyTrack& t) {
            std::vector<std::tuple<int, std::pair<int, int>, std::pair<int, int>, std::pair<int, int>>> out;
            for (const auto& s : t.t->switches())
                out.emplace_back(s.id, std::make_pair(s.a.branch, s.a.end), std::make_pair(s.b[0].branch, s.b[0].end),
                                 std::make_pair(s.b[1].branch, s.b[1].end));
            return out;
        })
        .def("roles", [](const PyTrack& t) {
            std::vector<std::string> out;
            for (auto r : t.t->roles()) out.push_back(r == Role::Large ? "large" : r == Role::Mixed ? "mixed" : "small");
            return out;
        })
        .def("regions", [](const PyTrack& t) {
            std::vector<std::tuple<std::vector<std::pair<int, std::string>>, int, int>> out;
            for (const auto& r : t.t->regions()) {
                std::vector<std::pair<int, std::string>> bd;
                for (auto bs : r.boundary) bd.emplace_back(bs.branch, bs.side == Side::L ? "L" : "R");
                out.emplace_back(bd, r.cusps, r.punctures);
            }
            return out;
        })
        .def("validate", [](const PyTrack& t) {
            auto r = validate(*t.t);
            py::dict d;
            d["maximal"] = r.maximal;
            d["index_sum"] = r.index_sum().get_str();
            d["violations"] = r.violations;
            return d;
        })
        .def("is_recurrent", [](const PyTrack& t) {
            auto r = is_recurrent(t.t);
            return std::make_pair(r.ok, r.witness ? qs(r.witness->weights()) : std::vector<std::string>{});
        })
        .def("is_transversely_recurrent", [](const PyTrack& t) {
            auto r = is_transversely_recurrent_proxy(t.t);
            return std::make_pair(r.ok, r.witness ? qs(r.witness->weights()) : std::vector<std::string>{});
        })
        .def("split", [](const PyTrack& t, int e, const std::string& side) {
            return PyTrack{share(split(*t.t, e, side == "R" ? Side::R : Side::L).track)};
        })
        .def("switch_kernel", [](const PyTrack& t) {
            std::vector<std::vector<std::string>> out;
            for (const auto& v : switch_kernel(*t.t)) out.push_back(qs(v));
            return out;
        })
        .def("collapse", [](const PyTrack& t, int e, const std::string& side) {
            return PyTrack{share(collapse(*t.t, to_move(side, e)))};
        })
        .def("shift", [](const PyTrack& t, int b) { return PyTrack{share(shift(*t.t, b).track)}; })
        .def("curve", [](const PyTrack& t, const std::vector<int>& cyc) {
            auto c = closed_trainpath(*t.t, cyc);
            return std::make_pair(c.off_branches, c.forward);
        })
        .def("twist_type", [](const PyTrack& t, const std::vector<int>& cyc) {
            return twist_type(*t.t, closed_trainpath(*t.t, cyc));
        })
        .def("twist_moves", [](const PyTrack& t, const std::vector<int>& cyc) {
            std::vector<std::pair<std::string, int>> out;
            for (auto mv : twist_moves(*t.t, cyc))
                out.emplace_back(mv.kind == MoveKind::SplitRight ? "R" : mv.kind == MoveKind::SplitLeft ? "L" : "S", mv.branch);
            return out;
        })
        .def("canonical", [](const PyTrack& t, int root) { return canonical_form(*t.t, root); },
             py::arg("root") = -1)
        .def("isomorphism", [](const PyTrack& a, const PyTrack& b) {
            auto iso = isomorphism(*a.t, *b.t);
            return iso ? std::optional<std::vector<int>>(iso->branch) : std::nullopt;
        })
        .def("isomorphisms", [](const PyTrack& a, const PyTrack& b) {
            std::vector<std::vector<int>> out;
            for (const auto& iso : isomorphisms(*a.t, *b.t)) out.push_back(iso.branch);
            return out;
        })
        .def("__eq__", [](const PyTrack& a, const PyTrack& b) { return *a.t == *b.t; });

    m.def("carrying_matrix", [](const PyTrack& t, const std::vector<std::pair<std::string, int>>& moves) {
        return matrix_rows(carrying_matrix(SplitSequence(t.t, to_moves(moves))));
    });
    m.def("end_track", [](const PyTrack& t, const std::vector<std::pair<std::string, int>>& moves) {
        return PyTrack{SplitSequence(t.t, to_moves(moves)).end()};
    });
    m.def("lambda_split", [](const PyTrack& t, const std::vector<std::string>& mu, int e) {
        auto r = lambda_split(*t.t, rv(mu), e);
        return std::make_tuple(std::string(r.side == Side::R ? "R" : "L"), PyTrack{share(r.track)}, qs(r.weights));
    });
    m.def("certify", [](const PyTrack& t, const std::vector<std::pair<std::string, int>>& moves, const std::string& tol) {
        SplitSequence seq(t.t, to_moves(moves));
        auto ps = close_sequence(seq);
        if (!ps) throw Error("not-closed", "the sequence does not return to its start");
        auto c = certify_pa(*ps, parse_rational(tol));
        py::dict d;
        d["alpha_lo"] = c.alpha.lo.get_str();
        d["alpha_hi"] = c.alpha.hi.get_str();
        d["alpha"] = c.alpha.lo.get_d();
        d["positivity_power"] = c.positivity_power ? *c.positivity_power : -1;
        d["sigma"] = c.sigma;
        d["order"] = c.order;
        d["lambda_plus"] = qs(c.lambda_plus->weights());
        d["lambda_minus"] = qs(c.lambda_minus->weights());
        return d;
    }, py::arg("track"), py::arg("moves"), py::arg("tol") = "1/1000000000000");
    m.def("zeta_table", [](const std::string& dir, int k0, int k1, int grid) {
        std::vector<py::dict> rows;
        for (const auto& r : zeta_family(load_bundle(dir), k0, k1, grid)) rows.push_back(row_dict(r));
        return rows;
    }, py::arg("dir"), py::arg("k0"), py::arg("k1"), py::arg("grid") = 256);
    m.def("twist_table", [](const std::string& dir, int u0, int u1, int grid) {
        std::vector<py::dict> rows;
        for (const auto& r : twist_family(load_bundle(dir), u0, u1, grid)) rows.push_back(row_dict(r));
        return rows;
    }, py::arg("dir"), py::arg("u0"), py::arg("u1"), py::arg("grid") = 256);
}
