#include "gtr/ratmat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gtr {

RatMat operator*(const RatMat& x, const RatMat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("RatMat: size mismatch in product");
    RatMat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            if (x.a_[i][k].is_zero()) continue;
            for (int j = 0; j < y.cols_; ++j) {
                if (y.a_[k][j].is_zero()) continue;
                r.a_[i][j] += x.a_[i][k] * y.a_[k][j];
            }
        }
    return r;
}

RatMat operator+(const RatMat& x, const RatMat& y) {
    RatMat r = x;
    for (int i = 0; i < x.rows_; ++i)
        for (int j = 0; j < x.cols_; ++j) r.a_[i][j] += y.a_[i][j];
    return r;
}

RatMat operator-(const RatMat& x, const RatMat& y) {
    RatMat r = x;
    for (int i = 0; i < x.rows_; ++i)
        for (int j = 0; j < x.cols_; ++j) r.a_[i][j] -= y.a_[i][j];
    return r;
}

RatMat& RatMat::operator*=(const Rational& c) {
    for (auto& row : a_)
        for (auto& v : row) v *= c;
    return *this;
}

bool RatMat::is_zero() const {
    for (auto& row : a_)
        for (auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

Rational RatMat::trace() const {
    Rational t;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += a_[i][i];
    return t;
}

int RatMat::rref() {
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int piv = -1;
        for (int k = row; k < rows_; ++k)
            if (!a_[k][col].is_zero()) {
                piv = k;
                break;
            }
        if (piv < 0) continue;
        std::swap(a_[piv], a_[row]);
        Rational inv = Rational(1) / a_[row][col];
        for (int j = col; j < cols_; ++j) a_[row][j] *= inv;
        for (int k = 0; k < rows_; ++k) {
            if (k == row || a_[k][col].is_zero()) continue;
            Rational f = a_[k][col];
            for (int j = col; j < cols_; ++j) a_[k][j] -= f * a_[row][j];
        }
        ++row;
    }
    return row;
}

int RatMat::rank() const {
    RatMat m = *this;
    return m.rref();
}

RatMat RatMat::nullspace() const {
    RatMat m = *this;
    m.rref();
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols_, false);
    {
        int row = 0;
        for (int col = 0; col < cols_ && row < rows_; ++col)
            if (!m.a_[row][col].is_zero()) {
                pivot_col.push_back(col);
                is_pivot[col] = true;
                ++row;
            }
    }
    int nfree = cols_ - static_cast<int>(pivot_col.size());
    RatMat ker(cols_, nfree);
    int out = 0;
    for (int col = 0; col < cols_; ++col) {
        if (is_pivot[col]) continue;
        ker(col, out) = Rational(1);
        for (size_t p = 0; p < pivot_col.size(); ++p) ker(pivot_col[p], out) = -m.a_[p][col];
        ++out;
    }
    return ker;
}

std::optional<RatMat> RatMat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    int n = rows_;
    RatMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a_[i][j];
        aug(i, n + i) = Rational(1);
    }
    if (aug.rref() < n) return std::nullopt;
    // guard against a pivot landing in the augmented half
    for (int i = 0; i < n; ++i)
        if (aug(i, i) != Rational(1)) return std::nullopt;
    RatMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::optional<std::vector<Rational>> RatMat::solve(const std::vector<Rational>& b) const {
    RatMat aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug(i, j) = a_[i][j];
        aug(i, cols_) = b[i];
    }
    aug.rref();
    std::vector<Rational> x(cols_);
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        if (aug(row, col).is_zero()) continue;
        x[col] = aug(row, cols_);
        ++row;
    }
    // consistency: remaining rows must be zero = zero
    for (int k = row; k < rows_; ++k)
        if (!aug(k, cols_).is_zero()) return std::nullopt;
    // full check (free columns were set to zero)
    std::vector<Rational> bx(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) bx[i] += a_[i][j] * x[j];
    for (int i = 0; i < rows_; ++i)
        if (bx[i] != b[i]) return std::nullopt;
    return x;
}

std::vector<Rational> RatMat::charpoly() const {
    if (rows_ != cols_) throw std::invalid_argument("charpoly: square matrix required");
    int n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    RatMat M = *this;
    c[n - 1] = -M.trace();
    for (int k = 2; k <= n; ++k) {
        RatMat shifted = M;
        for (int i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
        M = (*this) * shifted;
        c[n - k] = -(M.trace() / Rational(k));
    }
    return c;
}

namespace {

std::vector<BigInt> divisors(BigInt v) {
    if (v < 0) v = -v;
    std::vector<BigInt> ds;
    for (BigInt d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            ds.push_back(d);
            ds.push_back(v / d);
        }
    }
    return ds;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
    Rational v;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

// synthetic division by (t - r); assumes r is a root
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r) {
    int n = static_cast<int>(c.size()) - 1;
    std::vector<Rational> q(n);
    Rational carry;
    for (int k = n; k >= 1; --k) {
        q[k - 1] = c[k] + carry;
        carry = q[k - 1] * r;
    }
    return q;
}

} // namespace

std::pair<std::vector<std::pair<Rational, int>>, bool>
rational_roots(const std::vector<Rational>& coeffs) {
    std::vector<Rational> c = coeffs;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    std::map<Rational, int> found;
    if (c.empty()) return {{}, false}; // zero polynomial: every value is a root
    // strip t^k factor
    size_t low = 0;
    while (low < c.size() && c[low].is_zero()) ++low;
    if (low > 0) {
        found[Rational(0)] += static_cast<int>(low);
        c.erase(c.begin(), c.begin() + static_cast<long>(low));
    }
    while (c.size() > 1) {
        // scale to integer coefficients
        BigInt den = 1;
        for (auto& v : c) den = den / boost::multiprecision::gcd(den, v.den()) * v.den();
        std::vector<BigInt> ic;
        for (auto& v : c) ic.push_back(v.num() * (den / v.den()));
        bool hit = false;
        for (const BigInt& p : divisors(ic.front())) {
            for (const BigInt& q : divisors(ic.back())) {
                for (int s : {1, -1}) {
                    Rational cand(s * p, q);
                    if (eval_poly(c, cand).is_zero()) {
                        found[cand] += 1;
                        c = deflate(c, cand);
                        hit = true;
                        break;
                    }
                }
                if (hit) break;
            }
            if (hit) break;
        }
        if (!hit) break;
    }
    std::vector<std::pair<Rational, int>> out(found.begin(), found.end());
    return {out, c.size() <= 1};
}

} // namespace gtr
