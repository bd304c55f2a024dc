#pragma once

#include "gtr/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gtr {

/// Weight as its values on the simple coroots: (lambda(h_1), ..., lambda(h_r)).
using WeightVec = std::vector<Rational>;

/// Root in simple-root coordinates m = (m_1, ..., m_r).
using RootVec = std::vector<int>;

/// Root-system combinatorics for a simple type at small rank.
/// Positive roots are ordered by height, then by descending lexicographic m,
/// so the simple roots come out as alpha_1, ..., alpha_r.
class RootSystem {
  public:
    static RootSystem build(char type, int rank);

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string type_name() const { return std::string(1, type_) + std::to_string(rank_); }

    /// cartan(i, j) = <alpha_i, alpha_j^vee> = alpha_i(h_j).
    int cartan(int i, int j) const { return cartan_[i][j]; }

    int num_positive() const { return static_cast<int>(pos_roots_.size()); }
    const std::vector<RootVec>& positive_roots() const { return pos_roots_; }
    const RootVec& root(int idx) const { return pos_roots_[idx]; }
    int height(int idx) const { return heights_[idx]; }
    int theta_index() const { return theta_index_; }
    const RootVec& theta() const { return pos_roots_[theta_index_]; }
    int theta_height() const { return heights_[theta_index_]; }

    /// Index of a positive root, or -1.
    int index_of(const RootVec& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : it->second;
    }
    bool is_positive_root(const RootVec& m) const { return index_.count(m) > 0; }
    bool is_root(const RootVec& m) const;

    /// Squared length (alpha, alpha), normalized so long roots have length 2.
    const Rational& norm2(int idx) const { return norm2_[idx]; }
    Rational norm2_simple(int i) const { return norm2_[simple_index_[i]]; }
    int simple_index(int i) const { return simple_index_[i]; }

    /// Coroot expansion h_alpha = sum_i c_i h_i (integer coefficients).
    const std::vector<Rational>& coroot(int idx) const { return coroots_[idx]; }

    /// <alpha, beta^vee> = alpha(h_beta) for positive roots given by index.
    Rational pairing(int alpha_idx, int beta_idx) const;
    /// alpha(h_i) for a simple coroot.
    int simple_pairing_value(const RootVec& alpha, int i) const;
    /// mu(h_beta) for an arbitrary weight.
    Rational weight_on_coroot(const WeightVec& mu, int beta_idx) const;

    /// rho(h_i) = 1 for every simple i.
    WeightVec weyl_vector() const { return WeightVec(rank_, Rational(1)); }

    /// Symmetric bilinear form (mu, nu) on h^*, arguments in coroot coordinates.
    Rational bilinear(const WeightVec& mu, const WeightVec& nu) const;

    /// Plain reflection s_i(mu) = mu - mu(h_i) alpha_i, in coroot coordinates.
    WeightVec simple_reflection(int i, const WeightVec& mu) const;
    /// Word w = s_{i1} ... s_{ik} applied to mu (letters 0-based, leftmost outermost).
    WeightVec weyl_act(const std::vector<int>& word, const WeightVec& mu) const;

  private:
    char type_ = 'A';
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<RootVec> pos_roots_;
    std::vector<int> heights_;
    std::vector<int> simple_index_;
    int theta_index_ = -1;
    std::map<RootVec, int> index_;
    std::vector<Rational> norm2_;
    std::vector<Rational> d_; // d_i = (alpha_i, alpha_i)/2
    std::vector<std::vector<Rational>> coroots_;
};

/// Parse "A2", "g2", ... into (type, rank). Throws std::invalid_argument.
std::pair<char, int> parse_type(const std::string& s);

} // namespace gtr
