#include "maxdeg/certificate.hpp"

#include <algorithm>

namespace maxdeg {

Certificate make_certificate(const Graph& g, int k, std::vector<int> deleted) {
    std::sort(deleted.begin(), deleted.end());
    deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
    Certificate cert;
    cert.k = k;
    cert.deleted = std::move(deleted);
    InducedSubgraph h = delete_vertices(g, cert.deleted);
    cert.small_h = h.graph.vertex_count() < k;
    cert.result_max_degree = h.graph.max_degree();
    for (int v = 0; v < h.graph.vertex_count(); ++v)
        if (h.graph.degree(v) == cert.result_max_degree)
            cert.realizing.push_back(h.original_ids[static_cast<std::size_t>(v)]);
    if (h.graph.vertex_count() == 0) cert.realizing.clear();
    return cert;
}

bool verify_certificate(const Graph& g, const Certificate& cert) {
    const int n = g.vertex_count();
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    for (int v : cert.deleted) {
        if (v < 0 || v >= n) return false;
        if (gone[static_cast<std::size_t>(v)]) return false;   // duplicate entry
        gone[static_cast<std::size_t>(v)] = 1;
    }
    const int h_size = n - static_cast<int>(cert.deleted.size());
    if ((h_size < cert.k) != cert.small_h) return false;
    if (cert.small_h) return true;

    // recompute degrees inside H from scratch
    int max_deg = 0;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (gone[static_cast<std::size_t>(v)]) continue;
        int d = 0;
        for (int w : g.neighbors(v))
            if (!gone[static_cast<std::size_t>(w)]) ++d;
        deg[static_cast<std::size_t>(v)] = d;
        max_deg = std::max(max_deg, d);
    }
    if (max_deg != cert.result_max_degree) return false;

    std::vector<int> at_max;
    for (int v = 0; v < n; ++v)
        if (!gone[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == max_deg)
            at_max.push_back(v);
    if (static_cast<int>(at_max.size()) < cert.k) return false;

    std::vector<int> claimed = cert.realizing;
    std::sort(claimed.begin(), claimed.end());
    return claimed == at_max;
}

} // namespace maxdeg
