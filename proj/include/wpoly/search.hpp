#ifndef WPOLY_SEARCH_HPP
#define WPOLY_SEARCH_HPP

#include "wpoly/realroots.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wpoly {

/// Closed integer interval [lo, hi].
struct IntRange {
    int lo = 1;
    int hi = 1;

    bool contains(int v) const { return lo <= v && v <= hi; }
};

/// Parses "a" or "a:b" (both bounds >= 1, a <= b).
IntRange parse_range(const std::string& text);

struct SearchResult {
    int m = 0;
    int n = 0;
    int degree = 0;
    int nonreal_count = 0;
    RootReport report;
};

struct ScanOptions {
    bool only_failures = false;
    bool want_approx = false;
    unsigned jobs = 0; ///< 0 means std::thread::hardware_concurrency()
};

/// The (m, n) cells a scan visits: the grid, minus (m, n) with m < n whenever
/// (n, m) is also in the grid (W(P_{m,n}) = W(P_{n,m})). Ordered by m, then n.
std::vector<std::pair<int, int>> scan_cells(IntRange m_range, IntRange n_range);

/// Certifies W(P_{m,n}) for every cell. One task per cell; output order is
/// the cell order regardless of the worker count.
std::vector<SearchResult> scan(IntRange m_range, IntRange n_range, const ScanOptions& options = {});

enum class MinimalityOrder {
    by_sum,    ///< minimise m + n
    by_degree, ///< minimise min(m, n), then m + n
};

/// Every failing cell in [1, limit_m] x [1, limit_n] attaining the minimum key.
std::vector<SearchResult> minimal_counterexamples(int limit_m, int limit_n, MinimalityOrder order, unsigned jobs = 0);

} // namespace wpoly

#endif
