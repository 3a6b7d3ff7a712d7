#include "ttk/base.hpp"

#include <algorithm>

namespace ttk {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw Error("syntax", "empty number");
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    auto slash = s.find('/');
    auto digits = [&](size_t a, size_t b) {
        if (a >= b) return false;
        for (size_t i = a; i < b; ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    bool ok = slash == std::string::npos ? digits(start, s.size())
                                         : digits(start, slash) && digits(slash + 1, s.size());
    if (!ok) throw Error("syntax", "bad rational '" + s + "'");
    Rational q(s[0] == '+' ? s.substr(1) : s);
    if (q.get_den() == 0) throw Error("syntax", "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (c_ != o.r_) throw Error("dimension", "matrix product dimension mismatch");
    IntMatrix m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Integer& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
        }
    return m;
}

RVec IntMatrix::apply(const RVec& v) const {
    if (int(v.size()) != c_) throw Error("dimension", "vector length mismatch");
    RVec out(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

RVec IntMatrix::apply_transpose(const RVec& v) const {
    if (int(v.size()) != r_) throw Error("dimension", "vector length mismatch");
    RVec out(c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if ((*this)(i, j) != 0) out[j] += (*this)(i, j) * v[i];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Integer IntMatrix::min_entry() const {
    if (a_.empty()) return 0;
    return *std::min_element(a_.begin(), a_.end());
}

bool IntMatrix::all_at_least(long v) const {
    return std::all_of(a_.begin(), a_.end(), [v](const Integer& x) { return x >= v; });
}

// Bareiss elimination
Integer IntMatrix::determinant() const {
    if (r_ != c_) throw Error("dimension", "determinant of non-square matrix");
    int n = r_;
    if (n == 0) return 1;
    std::vector<Integer> m = a_;
    auto at = [&](int i, int j) -> Integer& { return m[size_t(i) * n + j]; };
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = t;
            }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

}  // namespace ttk
