#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ttk {

using Integer = mpz_class;
using Rational = mpq_class;
using RVec = std::vector<Rational>;

// Every failure the library reports derives from Error; `kind` is a short
// machine-readable tag used by the CLI and tests.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline Error malformed(const std::string& m) { return Error("malformed", m); }

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}
    static IntMatrix identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Integer& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Integer& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    RVec apply(const RVec& v) const;
    RVec apply_transpose(const RVec& v) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const = default;

    Integer min_entry() const;
    bool all_at_least(long v) const;
    Integer determinant() const;  // exact, via fraction-free elimination

private:
    int r_ = 0, c_ = 0;
    std::vector<Integer> a_;
};

}  // namespace ttk
