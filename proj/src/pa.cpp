#include "ttk/pa.hpp"

#include <cstdint>
#include <numeric>

namespace ttk {

Rational default_tol() { return Rational(Integer(1), Integer("1000000000000")); }

std::optional<PeriodicSequence> close_sequence(const SplitSequence& seq) {
    auto iso = isomorphism(*seq.end(), *seq.start());
    if (!iso) return std::nullopt;
    return PeriodicSequence{seq, *iso, iso_order(*iso)};
}

PeriodicSequence close_with(const SplitSequence& seq, const std::vector<int>& branch_map) {
    auto iso = isomorphism_with_branches(*seq.end(), *seq.start(), branch_map);
    if (!iso) throw Error("bad-iso", "declared isomorphism does not identify the end with the start");
    return PeriodicSequence{seq, *iso, iso_order(*iso)};
}

PeriodicSequence concatenate(const PeriodicSequence& a, const PeriodicSequence& b) {
    if (!(*a.seq.start() == *b.seq.start())) throw Error("fixture-incoherence", "loops start on different tracks");
    int p = a.seq.start()->branches();
    // branch j of a's end is branch a.iso.branch[j] of the start; invert it
    std::vector<int> inv(p);
    for (int j = 0; j < p; ++j) inv[a.iso.branch[j]] = j;
    SplitSequence s = a.seq.then(renumber(b.seq.moves(), inv));
    auto x = isomorphism_with_branches(*s.end(), *b.seq.end(), a.iso.branch);
    if (!x) throw Error("fixture-incoherence", "transported loop does not match its original");
    TrackIso iso = compose(*x, b.iso);
    return PeriodicSequence{s, iso, iso_order(iso)};
}

PeriodicSequence power(const PeriodicSequence& a, int n) {
    if (n < 1) throw Error("usage", "loop power must be positive");
    PeriodicSequence r = a;
    for (int i = 1; i < n; ++i) r = concatenate(r, a);
    return r;
}

IntMatrix period_matrix(const PeriodicSequence& ps) {
    IntMatrix A = carrying_matrix(ps.seq);
    int p = A.rows();
    IntMatrix C(p, p);
    for (int j = 0; j < p; ++j)
        for (int i = 0; i < p; ++i) C(i, ps.iso.branch[j]) = A(i, j);
    return C;
}

std::optional<int> positivity_power(const IntMatrix& C) {
    int p = C.rows();
    std::vector<std::vector<char>> base(p, std::vector<char>(p)), cur;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) base[i][j] = C(i, j) > 0;
    cur = base;
    int limit = (p - 1) * (p - 1) + 1;
    for (int n = 1; n <= limit; ++n) {
        bool all = true;
        for (int i = 0; i < p && all; ++i)
            for (int j = 0; j < p; ++j)
                if (!cur[i][j]) { all = false; break; }
        if (all) return n;
        std::vector<std::vector<char>> nxt(p, std::vector<char>(p));
        for (int i = 0; i < p; ++i)
            for (int k = 0; k < p; ++k)
                if (cur[i][k])
                    for (int j = 0; j < p; ++j) nxt[i][j] |= base[k][j];
        cur.swap(nxt);
    }
    return std::nullopt;
}

Interval cw_range(const IntMatrix& C, const RVec& v) {
    RVec cv = C.apply(v);
    Interval r;
    for (size_t b = 0; b < v.size(); ++b) {
        if (v[b] <= 0) throw Error("not-positive", "Collatz-Wielandt ratio needs a positive vector");
        Rational q = cv[b] / v[b];
        if (b == 0 || q < r.lo) r.lo = q;
        if (b == 0 || q > r.hi) r.hi = q;
    }
    return r;
}

namespace {

using ZVec = std::vector<Integer>;

ZVec mul(const IntMatrix& C, const ZVec& v) {
    ZVec out(C.rows());
    for (int i = 0; i < C.rows(); ++i)
        for (int j = 0; j < C.cols(); ++j)
            if (C(i, j) != 0) out[i] += C(i, j) * v[j];
    return out;
}

Interval ratios(const ZVec& cv, const ZVec& v) {
    Interval r;
    for (size_t b = 0; b < v.size(); ++b) {
        if (v[b] <= 0) throw Error("not-primitive", "power iteration reached a zero weight");
        Rational q(cv[b], v[b]);
        q.canonicalize();
        if (b == 0 || q < r.lo) r.lo = q;
        if (b == 0 || q > r.hi) r.hi = q;
    }
    return r;
}

// keeps `keep` significant bits in the smallest entry (eigenvectors can
// spread over many orders of magnitude); adding 1 keeps every entry positive
void trim(ZVec& v, size_t keep) {
    size_t bits = SIZE_MAX;
    for (const auto& x : v) bits = std::min(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    if (bits <= keep + 64) return;
    mp_bitcnt_t sh = bits - keep;
    for (auto& x : v) {
        mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), sh);
        x += 1;
    }
}

RVec to_rvec(const ZVec& v) {
    RVec r;
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

}  // namespace

namespace {

RVec rebuild(const ZVec& v, const std::vector<RVec>& kernel) {
    int p = int(v.size());
    RVec out(p);
    for (const auto& b : kernel) {
        int f = -1;
        for (int i = 0; i < p; ++i)
            if (b[i] == 1) {
                f = i;
                bool lone = true;
                for (const auto& o : kernel)
                    if (&o != &b && o[i] != 0) lone = false;
                if (lone) break;
                f = -1;
            }
        for (int i = 0; i < p; ++i) out[i] += Rational(v[f]) * b[i];
    }
    return out;
}

}  // namespace

PFResult perron_frobenius(const IntMatrix& C, const Rational& tol, int max_iter, const std::vector<RVec>* kernel) {
    int p = C.rows();
    IntMatrix Ct = C.transpose();
    ZVec v(p, Integer(1)), w(p, Integer(1));
    // rounding noise is relative, so a large eigenvalue needs more bits to
    // reach an absolute tolerance
    Integer big = 1;
    for (int i = 0; i < p; ++i) {
        Integer r;
        for (int j = 0; j < p; ++j) r += C(i, j);
        big = std::max(big, r);
    }
    Rational inv_tol = 1 / tol;
    size_t keep = 192 + mpz_sizeinbase(big.get_mpz_t(), 2) +
                  mpz_sizeinbase(Integer(inv_tol.get_num() / inv_tol.get_den() + 1).get_mpz_t(), 2);
    PFResult res;
    Interval run;
    for (int it = 0; it < max_iter; ++it) {
        ZVec cv = mul(C, v), cw = mul(Ct, w);
        Interval rv = ratios(cv, v), rw = ratios(cw, w);
        if (it == 0) {
            run = rv;
        } else {
            if (rv.lo > run.lo) run.lo = rv.lo;
            if (rv.hi < run.hi) run.hi = rv.hi;
        }
        res.history.push_back(run);
        Interval hull{std::min(rv.lo, rw.lo), std::max(rv.hi, rw.hi)};
        RVec exact;
        if (hull.width() <= tol && kernel) {
            exact = rebuild(v, *kernel);
            bool pos = true;
            for (const auto& x : exact) pos = pos && x > 0;
            if (pos) {
                Interval re = cw_range(C, exact);
                hull = Interval{std::min(hull.lo, re.lo), std::max(hull.hi, re.hi)};
            } else {
                hull.hi = hull.lo + 2 * tol;  // not there yet
            }
        }
        if (hull.width() <= tol) {
            res.alpha = hull;
            res.right = kernel ? exact : to_rvec(v);
            res.left = to_rvec(w);
            return res;
        }
        v = std::move(cv);
        w = std::move(cw);
        trim(v, keep);
        trim(w, keep);
    }
    throw Error("no-convergence", "power iteration did not reach the tolerance");
}

Interval root_interval(const Interval& x, int n, const Rational& tol) {
    if (n == 1) return x;
    if (x.lo <= 0) throw Error("domain", "root of a non-positive bound");
    // dyadic grid 2^-k with 2^-k <= tol/4; integer n-th roots on the grid are exact
    unsigned long k = 2;
    while (Rational(1, Integer(1) << k) > tol / 4) ++k;
    Integer scale = Integer(1) << (k * n);
    Integer denom = Integer(1) << k;
    auto root = [&](const Rational& v, bool up) {
        Rational sv = v * scale;
        Integer m, r;
        if (up) mpz_cdiv_q(m.get_mpz_t(), sv.get_num_mpz_t(), sv.get_den_mpz_t());
        else mpz_fdiv_q(m.get_mpz_t(), sv.get_num_mpz_t(), sv.get_den_mpz_t());
        bool exact = mpz_root(r.get_mpz_t(), m.get_mpz_t(), n) != 0;
        if (up && !exact) r += 1;
        Rational q(r, denom);
        q.canonicalize();
        return q;
    };
    return Interval{root(x.lo, false), root(x.hi, true)};
}

PACertificate certify_pa(const PeriodicSequence& ps, const Rational& tol) {
    PACertificate cert;
    cert.C = period_matrix(ps);
    cert.sigma = ps.iso.branch;
    cert.order = ps.order;
    int p = cert.C.rows();
    if (cert.C.min_entry() < 0) throw Error("not-primitive", "period matrix has negative entries");
    cert.positivity_power = positivity_power(cert.C);
    if (!cert.positivity_power) throw Error("not-primitive", "no power of the period matrix is positive");
    std::vector<RVec> kernel = switch_kernel(*ps.seq.start());
    PFResult pf = perron_frobenius(cert.C, tol, 100000, &kernel);
    cert.alpha = pf.alpha;
    cert.history = pf.history;
    if (cert.alpha.lo <= 1) throw Error("not-expanding", "dilatation bound does not exceed 1");
    Rational tot = std::accumulate(pf.right.begin(), pf.right.end(), Rational(0));
    RVec lp = pf.right;
    for (auto& x : lp) x /= tot;
    Rational pr;
    for (int b = 0; b < p; ++b) pr += lp[b] * pf.left[b];
    RVec lm = pf.left;
    for (auto& x : lm) x /= pr;
    const TrackRef& t = ps.seq.start();
    cert.lambda_plus.emplace(t, std::move(lp));
    cert.lambda_minus.emplace(t, std::move(lm));
    return cert;
}

Interval certify_via_power(const PeriodicSequence& ps, const Rational& tol) {
    IntMatrix C = period_matrix(ps);
    IntMatrix M = C;
    for (int i = 1; i < ps.order; ++i) M = M * C;
    PFResult pf = perron_frobenius(M, tol);
    return root_interval(pf.alpha, ps.order, tol);
}

InvariantReport invariant_check(const IntMatrix& C, const Interval& alpha, const RVec& right, const RVec& left) {
    InvariantReport rep;
    auto check = [&](const IntMatrix& M, const RVec& v, const char* name) {
        for (size_t b = 0; b < v.size(); ++b)
            if (v[b] <= 0) {
                rep.violations.push_back(std::string(name) + " is not positive on branch " + std::to_string(b + 1));
                return;
            }
        Interval r = cw_range(M, v);
        if (r.lo < alpha.lo) rep.violations.push_back(std::string(name) + ": ratio below the lower bound");
        if (r.hi > alpha.hi) rep.violations.push_back(std::string(name) + ": ratio above the upper bound");
    };
    check(C, right, "lambda_plus");
    check(C.transpose(), left, "lambda_minus");
    if (alpha.lo > alpha.hi) rep.violations.push_back("empty dilatation interval");
    return rep;
}

InvariantReport invariant_check(const PACertificate& cert) {
    if (!cert.lambda_plus || !cert.lambda_minus) return InvariantReport{{"certificate has no eigenvectors"}};
    return invariant_check(cert.C, cert.alpha, cert.lambda_plus->weights(), cert.lambda_minus->weights());
}

}  // namespace ttk
