#include "gtr/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gtr {

namespace {

// Dynkin diagram edges per Bourbaki numbering, as (i, j, aij, aji) with
// aij = <alpha_i, alpha_j^vee>, 0-based nodes.
struct Edge {
    int i, j, aij, aji;
};

std::vector<Edge> dynkin_edges(char type, int rank) {
    std::vector<Edge> edges;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) edges.push_back({i, i + 1, -1, -1});
    };
    switch (type) {
        case 'A':
            if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
            chain(rank);
            break;
        case 'B':
            if (rank < 2) throw std::invalid_argument("type B needs rank >= 2");
            chain(rank - 1);
            edges.push_back({rank - 2, rank - 1, -2, -1}); // alpha_r short
            break;
        case 'C':
            if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
            chain(rank - 1);
            edges.push_back({rank - 2, rank - 1, -1, -2}); // alpha_r long
            break;
        case 'D':
            if (rank < 4) throw std::invalid_argument("type D needs rank >= 4");
            chain(rank - 1);
            edges.push_back({rank - 3, rank - 1, -1, -1});
            break;
        case 'E':
            if (rank != 6) throw std::invalid_argument("type E supported only at rank 6");
            // Bourbaki: chain 1-3-4-5-6, node 2 attached to 4.
            edges.push_back({0, 2, -1, -1});
            edges.push_back({2, 3, -1, -1});
            edges.push_back({3, 4, -1, -1});
            edges.push_back({4, 5, -1, -1});
            edges.push_back({1, 3, -1, -1});
            break;
        case 'F':
            if (rank != 4) throw std::invalid_argument("type F needs rank 4");
            edges.push_back({0, 1, -1, -1});
            edges.push_back({1, 2, -2, -1}); // alpha_3, alpha_4 short
            edges.push_back({2, 3, -1, -1});
            break;
        case 'G':
            if (rank != 2) throw std::invalid_argument("type G needs rank 2");
            edges.push_back({0, 1, -1, -3}); // alpha_1 short
            break;
        default: throw std::invalid_argument(std::string("unknown type ") + type);
    }
    return edges;
}

// Order: height ascending, then lexicographically descending on m,
// which lists the simple roots as alpha_1, ..., alpha_r.
bool root_order(const std::pair<int, RootVec>& a, const std::pair<int, RootVec>& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
}

} // namespace

std::pair<char, int> parse_type(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad type: " + s);
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (t < 'A' || t > 'G') throw std::invalid_argument("bad type letter: " + s);
    int rank = 0;
    for (size_t k = 1; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw std::invalid_argument("bad rank in: " + s);
        rank = rank * 10 + (s[k] - '0');
    }
    return {t, rank};
}

RootSystem RootSystem::build(char type, int rank) {
    constexpr int kMaxRank = 6;
    if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank out of range (1..6)");

    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    rs.cartan_.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) rs.cartan_[i][i] = 2;
    for (const auto& e : dynkin_edges(type, rank)) {
        rs.cartan_[e.i][e.j] = e.aij;
        rs.cartan_[e.j][e.i] = e.aji;
    }

    // Positive roots: grow height-by-height with root strings.
    std::map<RootVec, int> seen; // root -> height
    std::vector<RootVec> frontier;
    for (int i = 0; i < rank; ++i) {
        RootVec m(rank, 0);
        m[i] = 1;
        seen[m] = 1;
        frontier.push_back(m);
    }
    auto pair_with_simple = [&](const RootVec& m, int i) {
        int v = 0;
        for (int j = 0; j < rank; ++j) v += m[j] * rs.cartan_[j][i];
        return v;
    };
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const auto& m : frontier) {
            for (int i = 0; i < rank; ++i) {
                // p = max { k : m - k alpha_i is a root }; the down-chain stays positive,
                // so membership in `seen` decides it.
                int p = 0;
                RootVec down = m;
                while (true) {
                    down[i] -= 1;
                    if (seen.count(down))
                        ++p;
                    else
                        break;
                }
                // the alpha_i-string through m: m + alpha_i is a root iff p - <m, alpha_i^vee> > 0
                if (p - pair_with_simple(m, i) > 0) {
                    RootVec up = m;
                    up[i] += 1;
                    if (!seen.count(up)) {
                        seen[up] = seen.at(m) + 1;
                        next.push_back(up);
                    }
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::pair<int, RootVec>> ordered;
    for (auto& [m, h] : seen) ordered.push_back({h, m});
    std::sort(ordered.begin(), ordered.end(), root_order);

    rs.simple_index_.assign(rank, -1);
    for (auto& [h, m] : ordered) {
        int idx = static_cast<int>(rs.pos_roots_.size());
        rs.pos_roots_.push_back(m);
        rs.heights_.push_back(h);
        rs.index_[m] = idx;
        if (h == 1) {
            for (int i = 0; i < rank; ++i)
                if (m[i] == 1) rs.simple_index_[i] = idx;
        }
    }
    rs.theta_index_ = static_cast<int>(rs.pos_roots_.size()) - 1;

    // theta is the unique root dominating all others componentwise
    for (const auto& m : rs.pos_roots_)
        for (int i = 0; i < rank; ++i)
            if (m[i] > rs.theta()[i])
                throw std::logic_error("maximal root is not dominant; root generation broken");

    // Symmetrize the Cartan matrix: d_i A_ji = d_j A_ij, then rescale so long roots
    // have squared length 2.
    rs.d_.assign(rank, Rational(0));
    rs.d_[0] = Rational(1);
    std::vector<int> todo{0};
    while (!todo.empty()) {
        int i = todo.back();
        todo.pop_back();
        for (int j = 0; j < rank; ++j) {
            if (j == i || rs.cartan_[i][j] == 0 || !rs.d_[j].is_zero()) continue;
            rs.d_[j] = rs.d_[i] * Rational(rs.cartan_[j][i]) / Rational(rs.cartan_[i][j]);
            todo.push_back(j);
        }
    }
    auto form_simple = [&](int i, int j) { return Rational(rs.cartan_[i][j]) * rs.d_[j]; };
    auto norm2_of = [&](const RootVec& m) {
        Rational v;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (m[i] && m[j]) v += Rational(m[i] * m[j]) * form_simple(i, j);
        return v;
    };
    Rational maxlen;
    for (const auto& m : rs.pos_roots_) maxlen = std::max(maxlen, norm2_of(m));
    Rational scale = Rational(2) / maxlen;
    for (auto& d : rs.d_) d *= scale;
    for (const auto& m : rs.pos_roots_) rs.norm2_.push_back(norm2_of(m));

    // h_alpha = sum_i m_i d_i / d_alpha h_i with d_alpha = (alpha, alpha)/2
    for (int idx = 0; idx < rs.num_positive(); ++idx) {
        const auto& m = rs.pos_roots_[idx];
        Rational dalpha = rs.norm2_[idx] / Rational(2);
        std::vector<Rational> c(rank);
        for (int i = 0; i < rank; ++i) c[i] = Rational(m[i]) * rs.d_[i] / dalpha;
        rs.coroots_.push_back(std::move(c));
    }
    return rs;
}

bool RootSystem::is_root(const RootVec& m) const {
    if (index_.count(m)) return true;
    RootVec n = m;
    for (auto& v : n) v = -v;
    return index_.count(n) > 0;
}

int RootSystem::simple_pairing_value(const RootVec& alpha, int i) const {
    int v = 0;
    for (int j = 0; j < rank_; ++j) v += alpha[j] * cartan_[j][i];
    return v;
}

Rational RootSystem::pairing(int alpha_idx, int beta_idx) const {
    Rational v;
    const auto& cb = coroots_[beta_idx];
    const auto& m = pos_roots_[alpha_idx];
    for (int i = 0; i < rank_; ++i) {
        if (cb[i].is_zero()) continue;
        int ai = 0;
        for (int j = 0; j < rank_; ++j) ai += m[j] * cartan_[j][i];
        v += Rational(ai) * cb[i];
    }
    return v;
}

Rational RootSystem::weight_on_coroot(const WeightVec& mu, int beta_idx) const {
    Rational v;
    const auto& cb = coroots_[beta_idx];
    for (int i = 0; i < rank_; ++i) v += mu[i] * cb[i];
    return v;
}

Rational RootSystem::bilinear(const WeightVec& mu, const WeightVec& nu) const {
    // Write nu = sum_j n_j alpha_j by solving nu(h_i) = sum_j n_j <alpha_j, alpha_i^vee>,
    // then (mu, nu) = sum_j n_j d_j mu(h_j).
    int r = rank_;
    std::vector<std::vector<Rational>> aug(r, std::vector<Rational>(r + 1));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) aug[i][j] = Rational(cartan_[j][i]);
        aug[i][r] = nu[i];
    }
    for (int col = 0, row = 0; col < r && row < r; ++col) {
        int piv = -1;
        for (int k = row; k < r; ++k)
            if (!aug[k][col].is_zero()) {
                piv = k;
                break;
            }
        if (piv < 0) throw std::logic_error("Cartan matrix singular");
        std::swap(aug[piv], aug[row]);
        Rational inv = Rational(1) / aug[row][col];
        for (int j = col; j <= r; ++j) aug[row][j] *= inv;
        for (int k = 0; k < r; ++k) {
            if (k == row || aug[k][col].is_zero()) continue;
            Rational f = aug[k][col];
            for (int j = col; j <= r; ++j) aug[k][j] -= f * aug[row][j];
        }
        ++row;
    }
    Rational v;
    for (int j = 0; j < r; ++j) v += aug[j][r] * d_[j] * mu[j];
    return v;
}

WeightVec RootSystem::simple_reflection(int i, const WeightVec& mu) const {
    WeightVec out = mu;
    for (int j = 0; j < rank_; ++j) out[j] -= mu[i] * Rational(cartan_[i][j]);
    return out;
}

WeightVec RootSystem::weyl_act(const std::vector<int>& word, const WeightVec& mu) const {
    WeightVec out = mu;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = simple_reflection(*it, out);
    return out;
}

} // namespace gtr
