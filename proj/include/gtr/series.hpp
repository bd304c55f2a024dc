#pragma once

#include "gtr/rational.hpp"

#include <vector>

namespace gtr {

/// The three analytic series evaluated on nilpotent arguments:
///   A(t) = t e^t / (e^t - 1),  B(t) = t / (e^t - 1),  C(t) = (t - e^t + 1) / (e^t - 1).
/// A = B + t and C = B - 1 hold coefficient-wise.
enum class SeriesId { A, B, C };

/// Bernoulli number B_n with the convention B_1 = -1/2, so B(t) = sum B_n t^n / n!.
Rational bernoulli(unsigned n);

/// Taylor coefficients c_0..c_N of the chosen series.
std::vector<Rational> series_coeffs(SeriesId id, unsigned N);

} // namespace gtr
