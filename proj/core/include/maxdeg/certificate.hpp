#ifndef MAXDEG_CERTIFICATE_HPP
#define MAXDEG_CERTIFICATE_HPP

#include <vector>

#include "maxdeg/graph.hpp"

namespace maxdeg {

/// A checkable answer to "delete these vertices and k vertices share the
/// maximum degree of what is left (or fewer than k vertices are left)".
/// All ids are ids of the graph the certificate was issued for, so a
/// certificate stays meaningful independently of any internal relabeling
/// the producing algorithm performed.
struct Certificate {
    int k = 2;
    std::vector<int> deleted;       // sorted original ids
    int result_max_degree = 0;      // max degree of H = G - deleted
    std::vector<int> realizing;     // all vertices of H at that degree
    bool small_h = false;           // |H| < k
};

/// Recomputes H = g - deleted and fills the result fields honestly.
/// Does not judge validity; pair with verify_certificate.
Certificate make_certificate(const Graph& g, int k, std::vector<int> deleted);

/// Independent validation: rebuilds H from scratch and accepts iff
/// (|H| < k) == small_h and, when small_h is false, result_max_degree is
/// the true max degree of H, realizing is exactly the set of vertices
/// attaining it, and there are at least k of them. Returns false on any
/// mismatch, including malformed deleted sets.
bool verify_certificate(const Graph& g, const Certificate& cert);

} // namespace maxdeg

#endif // MAXDEG_CERTIFICATE_HPP
