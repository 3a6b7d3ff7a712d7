#include "ttk/families.hpp"

#include <set>
#include <sstream>

namespace ttk {

namespace {

const Rational& log_tol() {
    static const Rational t(Integer(1), Integer("1000000000000000000000000"));
    return t;
}

const PeriodicSequence& need_loop(const Bundle& b, const std::string& name) {
    auto it = b.loops.find(name);
    if (it == b.loops.end()) throw Error("fixture-incoherence", "bundle has no loop '" + name + "'");
    return it->second;
}

const std::vector<int>& need(const std::map<std::string, std::vector<int>>& m, const std::string& name) {
    auto it = m.find(name);
    if (it == m.end()) throw Error("fixture-incoherence", "bundle has no record '" + name + "'");
    return it->second;
}

std::vector<int> inverse(const std::vector<int>& h) {
    std::vector<int> inv(h.size());
    for (size_t j = 0; j < h.size(); ++j) inv[h[j]] = int(j);
    return inv;
}

// a chain of loops run one after the other, with the index and composite iso
// at every junction
struct Chain {
    PeriodicSequence ps;
    std::vector<int> junction;             // split index where each piece starts, plus the end
    std::vector<std::vector<int>> prefix;  // iso of the track at each junction onto the start
};

Chain chain(const std::vector<const PeriodicSequence*>& parts) {
    Chain c;
    c.ps = *parts.front();
    c.junction = {0, c.ps.seq.size()};
    c.prefix = {identity_iso(*c.ps.seq.start()).branch, c.ps.iso.branch};
    for (size_t i = 1; i < parts.size(); ++i) {
        c.ps = concatenate(c.ps, *parts[i]);
        c.junction.push_back(c.ps.seq.size());
        c.prefix.push_back(c.ps.iso.branch);
    }
    return c;
}

// the curve given on the start track, written on the track at junction j
std::vector<int> moved_cycle(const Chain& c, size_t j, const std::vector<int>& cycle) {
    auto inv = inverse(c.prefix[j]);
    std::vector<int> out;
    for (int b : cycle) out.push_back(inv[b]);
    return out;
}

bool block_positive(const IntMatrix& C, const std::vector<int>& block) {
    for (int i : block)
        for (int j : block)
            if (C(i, j) <= 0) return false;
    return true;
}

void check_fixes(const PeriodicSequence& ps, const std::vector<int>& inside, const std::string& name) {
    std::set<int> in(inside.begin(), inside.end());
    for (int b = 0; b < int(ps.iso.branch.size()); ++b)
        if (!in.count(b) && ps.iso.branch[b] != b)
            throw Error("fixture-incoherence", name + " moves branch " + std::to_string(b + 1) + " outside its subtrack");
}

FamilyRow base_row(int param, const PACertificate& cert) {
    FamilyRow r;
    r.param = param;
    r.alpha = cert.alpha;
    r.period_log = log_interval(cert.alpha, log_tol());
    return r;
}

// decimal with `digits` places, rounded down (or up); keeps the CSV readable
// without losing the enclosure
std::string decimal(const Rational& q, int digits, bool up) {
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rational x = q * scale;
    Integer n;
    if (up) mpz_cdiv_q(n.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    else mpz_fdiv_q(n.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    bool neg = n < 0;
    if (neg) n = -n;
    std::string s = n.get_str();
    if (int(s.size()) <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

}  // namespace

std::vector<FamilyRow> zeta_family(const Bundle& b, int k0, int k1, int grid_steps) {
    if (k0 < 1 || k1 < k0) throw Error("usage", "zeta family needs 1 <= k0 <= k1");
    const auto& surf = b.track->surface();
    if (3 * surf.genus - 3 + surf.punctures < 4)
        throw Error("fixture-incoherence", "surface complexity is below 4");
    int p = b.track->branches();
    const auto& s0 = need(b.subtracks, "sigma0");
    const auto& s1 = need(b.subtracks, "sigma1");
    const auto& s2 = need(b.subtracks, "sigma2");
    std::set<int> a1(s1.begin(), s1.end()), a2(s2.begin(), s2.end()), a0(s0.begin(), s0.end());
    for (int e = 0; e < p; ++e) {
        if (!a1.count(e) && !a2.count(e))
            throw Error("fixture-incoherence", "branch " + std::to_string(e + 1) + " lies in neither sigma1 nor sigma2");
        if ((a1.count(e) && a2.count(e)) != bool(a0.count(e)))
            throw Error("fixture-incoherence", "sigma1 and sigma2 do not overlap in sigma0 at branch " + std::to_string(e + 1));
    }
    const auto& g1 = need(b.curves, "gamma1");
    const auto& g2 = need(b.curves, "gamma2");
    const PeriodicSequence& f0 = need_loop(b, "phi0");
    const PeriodicSequence& f1 = need_loop(b, "phi1");
    const PeriodicSequence& f2 = need_loop(b, "phi2");
    for (auto [ps, sub, name] : {std::tuple{&f0, &s0, "phi0"}, {&f1, &s1, "phi1"}, {&f2, &s2, "phi2"}}) {
        check_fixes(*ps, *sub, name);
        if (!block_positive(period_matrix(*ps), *sub))
            throw Error("fixture-incoherence", std::string(name) + " is not positive on its subtrack");
    }

    std::vector<FamilyRow> rows;
    for (int k = k0; k <= k1; ++k) {
        std::vector<const PeriodicSequence*> parts{&f1};
        for (int i = 0; i < 2 * k; ++i) parts.push_back(&f0);
        parts.push_back(&f2);
        for (int i = 0; i < 2 * k; ++i) parts.push_back(&f0);
        Chain c = chain(parts);

        IntMatrix sq = period_matrix(concatenate(c.ps, c.ps));
        if (sq.min_entry() <= 0)
            throw Error("not-primitive", "zeta(" + std::to_string(k) + ")^2 has a zero entry");
        PACertificate cert = certify_pa(c.ps, default_tol());

        // decomposition points: start, after phi1, after the first phi0 run,
        // after phi2, end
        std::vector<size_t> pieces{0, 1, size_t(1 + 2 * k), size_t(2 + 2 * k), parts.size()};
        std::vector<CurveSpec> curves;
        for (size_t j : pieces)
            for (auto [name, cyc] : {std::pair{"gamma1", &g1}, {"gamma2", &g2}})
                for (int tr = -1; tr <= 1; ++tr)
                    curves.push_back(CurveSpec{name, c.junction[j], moved_cycle(c, j, *cyc), tr});
        SystoleProfile sp = systole_profile(cert, c.ps, curves, grid_steps);

        FamilyRow r = base_row(k, cert);
        r.sup_min = sp.sup_min;
        r.extra["splits"] = c.ps.seq.size();
        r.extra["square_min_entry"] = Rational(sq.min_entry());
        r.extra["positivity_power"] = *cert.positivity_power;
        rows.push_back(r);
    }
    return rows;
}

std::vector<FamilyRow> twist_family(const Bundle& b, int u0, int u1, int grid_steps) {
    if (u0 < 0 || u1 < u0) throw Error("usage", "twist family needs 0 <= u0 <= u1");
    const PeriodicSequence& phi = need_loop(b, "phi");
    const PeriodicSequence& psi = need_loop(b, "psi");
    const auto& alpha = need(b.curves, "alpha");
    const TrainTrack& tau = *b.track;
    EmbeddedCurve ac = closed_trainpath(tau, alpha);
    std::set<int> on(alpha.begin(), alpha.end());
    for (const auto& mv : psi.seq.moves())
        if (!on.count(mv.branch) || mv.kind == MoveKind::Shift)
            throw Error("fixture-incoherence", "twist move at branch " + std::to_string(mv.branch + 1) + " is not a split on alpha");
    if (!is_identity(psi.iso)) {
        for (int e : alpha)
            if (!on.count(psi.iso.branch[e])) throw Error("fixture-incoherence", "twist does not preserve alpha");
    }

    // every measure carried after phi^2, normalized on tau, meets alpha at most K
    PeriodicSequence pre = concatenate(phi, phi);
    IntMatrix A = carrying_matrix(pre.seq);
    int p = A.rows();
    Rational K;
    for (int j = 0; j < p; ++j) {
        Rational off, tot;
        for (auto e : ac.off_ends) off += A(e.branch, j);
        for (int i = 0; i < p; ++i) tot += A(i, j);
        Rational q = off / 2 / tot;
        if (j == 0 || q > K) K = q;
    }

    std::vector<FamilyRow> rows;
    for (int u = u0; u <= u1; ++u) {
        std::vector<const PeriodicSequence*> parts{&phi, &phi};
        for (int i = 0; i < u; ++i) parts.push_back(&psi);
        Chain c = chain(parts);
        PACertificate cert = certify_pa(c.ps, default_tol());
        const RVec& lp = cert.lambda_plus->weights();
        Rational i_alpha = curve_intersection_plus(tau, lp, ac);

        // alpha at the middle of the twisting stretch; e^t there is the roof value
        int mid = c.junction[2] + (c.ps.seq.size() - c.junction[2]) / 2;
        auto mus = transport_forward(c.ps.seq, lp);
        Rational w0, wm;
        for (const auto& x : mus[0]) w0 += x;
        for (const auto& x : mus[mid]) wm += x;
        Rational a = w0 / wm;
        // alpha as it sits on the track where the twisting starts
        CurveTerm at = curve_terms(cert, c.ps, {CurveSpec{"alpha", c.junction[2], moved_cycle(c, 2, alpha), 0}})[0];
        Rational len = 2 * (a * at.i_plus + at.i_minus / a);

        std::vector<CurveSpec> curves;
        for (size_t j : {size_t(0), size_t(2)})
            for (int tr = -1; tr <= 1; ++tr) curves.push_back(CurveSpec{"alpha", c.junction[j], moved_cycle(c, j, alpha), tr});
        SystoleProfile sp = systole_profile(cert, c.ps, curves, grid_steps);

        FamilyRow r = base_row(u, cert);
        r.sup_min = sp.sup_min;
        r.extra["splits"] = c.ps.seq.size();
        r.extra["i_alpha"] = i_alpha;
        r.extra["i_alpha_bound"] = K;
        r.extra["mid_index"] = mid;
        r.extra["alpha_length_mid"] = len;
        rows.push_back(r);
    }
    return rows;
}

std::vector<std::string> family_csv_fields(const FamilyRow& r) {
    const int d = 20;
    return {std::to_string(r.param),          decimal(r.alpha.lo, d, false),      decimal(r.alpha.hi, d, true),
            decimal(r.period_log.lo, d, false), decimal(r.period_log.hi, d, true), decimal(r.sup_min.lo, d, false),
            decimal(r.sup_min.hi, d, true)};
}

std::string family_csv(const std::vector<FamilyRow>& rows) {
    std::ostringstream o;
    o << "param,alpha_lo,alpha_hi,period_log_lo,period_log_hi,supmin_lo,supmin_hi\n";
    for (const auto& r : rows) {
        auto f = family_csv_fields(r);
        for (size_t i = 0; i < f.size(); ++i) o << (i ? "," : "") << f[i];
        o << "\n";
    }
    return o.str();
}

}  // namespace ttk
