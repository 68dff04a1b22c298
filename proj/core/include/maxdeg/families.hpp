#ifndef MAXDEG_FAMILIES_HPP
#define MAXDEG_FAMILIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxdeg/graph.hpp"

namespace maxdeg {

/// Generators for the extremal families behind every sharp bound in the
/// library, each paired with the value it is claimed to attain so the
/// verification harness can confirm it. Vertex-id layout inside each
/// family is fixed (components in the documented order, centers before
/// leaves, path order along paths), which keeps emitted files byte-stable.

enum class ClaimKind {
    exact_f2,        // f(G) equals value
    exact_fk,        // f_k(G) equals value
    lower_bound_fk,  // f_k(G) >= value
    not_feasible,    // no induced H with >= k vertices at its max degree
};

struct FamilyClaim {
    ClaimKind kind = ClaimKind::exact_f2;
    int k = 2;
    long long value = 0;
};

struct FamilyInstance {
    std::string family;
    std::vector<std::pair<std::string, long long>> params;
    Graph graph;
    FamilyClaim claim;
};

/// a_j = C(j+1, 2) + 1: the smallest maximum degree that forces j
/// deletions (a_1 = 2, a_2 = 4, a_3 = 7, ...).
long long sharp_star_degree(int j);

/// Order of the extremal caterpillar: (t^3 + 6t^2 + 17t + 18) / 6.
long long caterpillar_order(int t);

/// Union of stars K_{1,a_1}, ..., K_{1,a_{t-1}}, K_{1,delta} where t is
/// determined by C(t+1,2)+1 <= delta <= C(t+2,2). Claims f = t, matching
/// the degree-based bound exactly. Requires delta >= 2.
FamilyInstance star_union_delta(int delta);

/// The n-vertex extremal graph for the order-based bound: a dominating
/// vertex of degree n-1 plus t-1 vertices with degrees a_q + 1 wired
/// into a common pool, with an isolated vertex appended at the top of
/// each parameter range. Claims f = t where C(t+1,2)+3 <= n <= C(t+2,2)+2.
/// Requires n >= 4.
FamilyInstance extremal_gn(int n);

/// Caterpillar T_t: a path on 2t+3 vertices whose even-position vertices
/// carry a_j - 2 extra leaves. Claims f = t+1 on caterpillar_order(t)
/// vertices. Requires t >= 0.
FamilyInstance caterpillar_T(int t);

/// floor((k-1)/2) disjoint edges plus m isolated vertices; claims
/// f_k = floor((k-1)/2). Requires k >= 3; m defaults to k, which is
/// large enough for the claim to be attained.
FamilyInstance g1_extremal(int k, std::optional<int> m = std::nullopt);

/// (k-1) disjoint cherries K_{1,2}; claims f_k = k-1. Requires k >= 2.
FamilyInstance g2_extremal(int k);

/// k-1 copies of K_{1,delta} plus k/2 copies of each smaller sharp star;
/// claims f_k >= bound(delta) * k/2 + k/2 - 1. Requires even k >= 2 and
/// delta >= 2.
FamilyInstance prop44_family(int delta, int k);

/// floor(k/2) isolated vertices plus floor((k-1)/2) disjoint edges;
/// claims non-k-feasibility at the largest possible order for max
/// degree <= 1.
FamilyInstance h1_extremal(int k);

/// Largest non-k-feasible graph of max degree <= 2: (k-1)/2 disjoint
/// P_4 for odd k; (k-2)/2 disjoint P_4 plus an isolated vertex for even
/// k (2k-3 vertices: k-2 of degree 1, k-2 of degree 2, one of degree 0).
FamilyInstance h2_extremal(int k);

/// Name+parameter dispatch used by the command line. Known ids:
/// stars-delta, gn, tree-t, g1-extremal, g2-extremal, prop44,
/// h1-extremal, h2-extremal. Throws std::invalid_argument on unknown
/// ids, missing parameters or out-of-range values.
struct FamilyParams {
    std::optional<long long> delta, n, t, k, m;
};

FamilyInstance make_family(const std::string& id, const FamilyParams& p);

std::vector<std::string> family_names();

} // namespace maxdeg

#endif // MAXDEG_FAMILIES_HPP
