#ifndef MAXDEG_BOUNDS_HPP
#define MAXDEG_BOUNDS_HPP

namespace maxdeg {

/// Closed-form bounds and exact values. Everything integer-valued is
/// evaluated by exact integer search over binomials; the equivalent
/// square-root ceiling formulas exist only as a cross-check in tests, so
/// range boundaries never depend on floating-point rounding.
///
/// Quantities whose exact value is an open problem throw
/// unknown_value_error, which is distinct from invalid input.

/// Smallest t >= 0 with delta <= C(t+2, 2); equals
/// ceil((-3 + sqrt(8*delta+1)) / 2) for delta >= 1 and 0 for delta <= 1.
/// Upper bound on f(G) over graphs with max degree delta.
long long bound_f_delta(long long delta);

/// Smallest t >= 1 with n <= C(t+2, 2) + 2; equals
/// ceil((-3 + sqrt(8n-15)) / 2). Upper bound on f(G) over graphs on n
/// vertices. Requires n >= 4.
long long bound_f_n(long long n);

/// Exact max of f_k over graphs with max degree <= delta. Known for
/// delta <= 2 (0, floor((k-1)/2), k-1) and for k = 2 (bound_f_delta);
/// anything else throws unknown_value_error.
long long g_exact(long long delta, long long k);

/// Exact largest order of a non-k-feasible graph with max degree
/// <= delta. Known for delta <= 2: k-1, floor(k/2) + 2*floor((k-1)/2),
/// and 2k-2 (odd k) / 2k-3 (even k). Otherwise unknown_value_error.
long long h_exact(long long delta, long long k);

/// (k-1) * delta, the greedy peeling bound on f_k.
long long lemma_bound(long long k, long long delta);

/// (k - 1 + 2c) * n^((1+beta)/2): bound on f_k for graphs with at most
/// c * n^(1+beta) edges. Requires 0 <= beta < 1 and c > 0.
double sparse_bound(long long n, double c, double beta, long long k);

/// Lower bound g(delta, k) >= g(delta, 2) * k/2 + k/2 - 1 for even k,
/// from the star-multiset construction (prop44_family).
long long g_lower_even(long long delta, long long k);

/// R(k,k) - 1 upper bound on non-k-feasible orders, limited to the
/// known diagonal Ramsey numbers R(2,2)=2, R(3,3)=6, R(4,4)=18;
/// k >= 5 throws unknown_value_error.
long long h_ramsey_cap(long long k);

} // namespace maxdeg

#endif // MAXDEG_BOUNDS_HPP
