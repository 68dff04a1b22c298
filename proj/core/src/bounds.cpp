#include "maxdeg/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "maxdeg/errors.hpp"

namespace maxdeg {

namespace {

long long choose2(long long t) { return t * (t - 1) / 2; }

long long isqrt(long long x) {
    if (x < 0) throw std::invalid_argument("isqrt of a negative number");
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

} // namespace

long long bound_f_delta(long long delta) {
    if (delta < 0) throw std::invalid_argument("maximum degree must be non-negative");
    if (delta <= 1) return 0;
    // smallest t with delta <= C(t+2, 2), seeded by the quadratic root
    long long t = (isqrt(8 * delta + 1) - 3) / 2;
    if (t < 0) t = 0;
    while (choose2(t + 2) < delta) ++t;
    while (t > 0 && choose2(t + 1) >= delta) --t;
    return t;
}

long long bound_f_n(long long n) {
    if (n < 4) throw std::invalid_argument("order bound needs n >= 4");
    // smallest t >= 1 with n <= C(t+2, 2) + 2
    long long t = (isqrt(8 * n - 15) - 3) / 2;
    if (t < 1) t = 1;
    while (choose2(t + 2) + 2 < n) ++t;
    while (t > 1 && choose2(t + 1) + 2 >= n) --t;
    return t;
}

long long g_exact(long long delta, long long k) {
    if (delta < 0) throw std::invalid_argument("maximum degree must be non-negative");
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (delta == 0) return 0;
    if (delta == 1) return (k - 1) / 2;
    if (delta == 2) return k - 1;
    if (k == 2) return bound_f_delta(delta);
    throw unknown_value_error("g(" + std::to_string(delta) + ", " + std::to_string(k) +
                              ") is an open problem");
}

long long h_exact(long long delta, long long k) {
    if (delta < 0) throw std::invalid_argument("maximum degree must be non-negative");
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (delta == 0) return k - 1;
    if (delta == 1) return k / 2 + 2 * ((k - 1) / 2);
    if (delta == 2) return k % 2 == 1 ? 2 * k - 2 : 2 * k - 3;
    throw unknown_value_error("h(" + std::to_string(delta) + ", " + std::to_string(k) +
                              ") is an open problem");
}

long long lemma_bound(long long k, long long delta) {
    if (k < 2 || delta < 0) throw std::invalid_argument("need k >= 2 and delta >= 0");
    return (k - 1) * delta;
}

double sparse_bound(long long n, double c, double beta, long long k) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (!(c > 0.0)) throw std::invalid_argument("edge-density coefficient must be positive");
    if (beta < 0.0 || beta >= 1.0) throw std::invalid_argument("beta must be in [0, 1)");
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    return (static_cast<double>(k) - 1.0 + 2.0 * c) *
           std::pow(static_cast<double>(n), (1.0 + beta) / 2.0);
}

long long g_lower_even(long long delta, long long k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be even and at least 2");
    if (delta < 1) throw std::invalid_argument("maximum degree must be at least 1");
    return bound_f_delta(delta) * (k / 2) + k / 2 - 1;
}

long long h_ramsey_cap(long long k) {
    switch (k) {
        case 2: return 2 - 1;
        case 3: return 6 - 1;
        case 4: return 18 - 1;
        default: break;
    }
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    throw unknown_value_error("R(" + std::to_string(k) + ", " + std::to_string(k) +
                              ") is unknown; no cap available");
}

} // namespace maxdeg
