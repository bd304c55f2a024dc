#pragma once

#include "gtr/rational.hpp"

#include <map>
#include <vector>

namespace gtr {

/// Exponent vector, one slot per variable (variables are indexed by positive roots).
using Exp = std::vector<int>;

inline int total_degree(const Exp& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

/// Sparse multivariate polynomial over Rational. No zero coefficients stored.
class MultiPoly {
  public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_[Exp(nvars, 0)] = c;
        return p;
    }
    static MultiPoly variable(int nvars, int i, const Rational& c = Rational(1)) {
        MultiPoly p(nvars);
        if (!c.is_zero()) {
            Exp e(nvars, 0);
            e[i] = 1;
            p.terms_[e] = c;
        }
        return p;
    }
    static MultiPoly monomial(Exp e, const Rational& c) {
        MultiPoly p(static_cast<int>(e.size()));
        if (!c.is_zero()) p.terms_[std::move(e)] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, Rational>& terms() const { return terms_; }

    int degree() const {
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    void add_term(const Exp& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_ ? a.nvars_ : b.nvars_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Exp e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string str(const std::vector<std::string>& varnames) const;

  private:
    int nvars_;
    std::map<Exp, Rational> terms_;
};

inline std::string MultiPoly::str(const std::vector<std::string>& varnames) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += varnames[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += c.str();
        else if (c.is_one())
            out += mono;
        else
            out += c.str() + "*" + mono;
    }
    return out;
}

} // namespace gtr
