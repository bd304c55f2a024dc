#pragma once

#include "gtr/rational.hpp"

#include <optional>
#include <vector>

namespace gtr {

/// Dense matrix over Rational.
class RatMat {
  public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols)) {}

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return a_[i][j]; }
    const Rational& operator()(int i, int j) const { return a_[i][j]; }

    friend RatMat operator*(const RatMat& x, const RatMat& y);
    friend RatMat operator+(const RatMat& x, const RatMat& y);
    friend RatMat operator-(const RatMat& x, const RatMat& y);
    RatMat& operator*=(const Rational& c);
    friend bool operator==(const RatMat& x, const RatMat& y) { return x.a_ == y.a_; }

    bool is_zero() const;
    Rational trace() const;

    /// In-place reduced row echelon form; returns rank.
    int rref();
    int rank() const;

    /// Columns form a basis of the kernel.
    RatMat nullspace() const;

    std::optional<RatMat> inverse() const;

    /// Solve A x = b (single column); nullopt when inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

    /// Characteristic polynomial coefficients c_0 + c_1 t + ... + c_n t^n
    /// (monic, c_n = 1) via the Faddeev-LeVerrier recursion.
    std::vector<Rational> charpoly() const;

  private:
    int rows_, cols_;
    std::vector<std::vector<Rational>> a_;
};

/// All rational roots of a rational-coefficient polynomial, with multiplicity,
/// via the rational root theorem plus deflation. Returns (roots, fully_split):
/// fully_split is false when a nonconstant factor without rational roots remains.
std::pair<std::vector<std::pair<Rational, int>>, bool>
rational_roots(const std::vector<Rational>& coeffs);

} // namespace gtr
