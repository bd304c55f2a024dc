#include "gtr/series.hpp"

#include <mutex>

namespace gtr {

namespace {

// Defining recurrence: sum_{k=0..n} binom(n+1,k) B_k = 0, B_0 = 1.
std::vector<Rational>& bernoulli_table(unsigned upto) {
    static std::vector<Rational> table{Rational(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    for (unsigned n = static_cast<unsigned>(table.size()); n <= upto; ++n) {
        Rational acc;
        for (unsigned k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * table[k];
        table.push_back(-acc / Rational(BigInt(n + 1)));
    }
    return table;
}

} // namespace

Rational bernoulli(unsigned n) { return bernoulli_table(n)[n]; }

std::vector<Rational> series_coeffs(SeriesId id, unsigned N) {
    std::vector<Rational> c(N + 1);
    const auto& B = bernoulli_table(N);
    for (unsigned n = 0; n <= N; ++n) c[n] = B[n] / Rational(factorial(n));
    switch (id) {
        case SeriesId::B: break;
        case SeriesId::A:
            if (N >= 1) c[1] += Rational(1);
            break;
        case SeriesId::C: c[0] -= Rational(1); break;
    }
    return c;
}

} // namespace gtr
