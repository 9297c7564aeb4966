#include "wpoly/search.hpp"

#include "wpoly/closed_form.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <stdexcept>
#include <thread>

namespace wpoly {

namespace {

int parse_bound(std::string_view s, const std::string& whole)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1)
        throw std::invalid_argument("bad range '" + whole + "': expected a or a:b with positive integers");
    return v;
}

unsigned resolve_jobs(unsigned jobs)
{
    if (jobs == 0)
        jobs = std::thread::hardware_concurrency();
    return std::max(1u, jobs);
}

SearchResult certify(int m, int n, bool want_approx)
{
    SearchResult r;
    r.m = m;
    r.n = n;
    r.report = analyze(w_pmn(m, n), want_approx);
    r.degree = r.report.degree;
    r.nonreal_count = r.report.nonreal_with_multiplicity;
    return r;
}

} // namespace

IntRange parse_range(const std::string& text)
{
    const auto colon = text.find(':');
    IntRange r;
    if (colon == std::string::npos) {
        r.lo = r.hi = parse_bound(text, text);
    } else {
        r.lo = parse_bound(std::string_view(text).substr(0, colon), text);
        r.hi = parse_bound(std::string_view(text).substr(colon + 1), text);
    }
    if (r.lo > r.hi)
        throw std::invalid_argument("bad range '" + text + "': lower bound exceeds upper bound");
    return r;
}

std::vector<std::pair<int, int>> scan_cells(IntRange m_range, IntRange n_range)
{
    if (m_range.lo < 1 || n_range.lo < 1 || m_range.lo > m_range.hi || n_range.lo > n_range.hi)
        throw std::invalid_argument("scan: ranges must be non-empty with bounds >= 1");
    std::vector<std::pair<int, int>> cells;
    for (int m = m_range.lo; m <= m_range.hi; ++m)
        for (int n = n_range.lo; n <= n_range.hi; ++n)
            if (m >= n || !(m_range.contains(n) && n_range.contains(m)))
                cells.emplace_back(m, n);
    return cells;
}

std::vector<SearchResult> scan(IntRange m_range, IntRange n_range, const ScanOptions& options)
{
    const auto cells = scan_cells(m_range, n_range);
    std::vector<SearchResult> results(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++)
            results[i] = certify(cells[i].first, cells[i].second, options.want_approx);
    };
    const unsigned jobs = std::min<unsigned>(resolve_jobs(options.jobs), static_cast<unsigned>(cells.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    if (options.only_failures)
        std::erase_if(results, [](const SearchResult& r) { return r.nonreal_count == 0; });
    return results;
}

std::vector<SearchResult> minimal_counterexamples(int limit_m, int limit_n, MinimalityOrder order, unsigned jobs)
{
    ScanOptions options;
    options.only_failures = true;
    options.jobs = jobs;
    auto failures = scan({1, limit_m}, {1, limit_n}, options);
    auto key = [order](const SearchResult& r) {
        return order == MinimalityOrder::by_sum ? std::pair{r.m + r.n, 0} : std::pair{std::min(r.m, r.n), r.m + r.n};
    };
    if (failures.empty())
        return failures;
    const auto best = key(*std::min_element(failures.begin(), failures.end(),
                                            [&](const auto& a, const auto& b) { return key(a) < key(b); }));
    std::erase_if(failures, [&](const SearchResult& r) { return key(r) != best; });
    return failures;
}

} // namespace wpoly
