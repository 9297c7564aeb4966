#ifndef WPOLY_REPRODUCTION_HPP
#define WPOLY_REPRODUCTION_HPP

#include <string>
#include <vector>

namespace wpoly {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct BatteryOptions {
    /// Skip the ~5.2M-extension enumeration of P_{36,6}.
    bool quick = false;
    /// Test hook: perturbs one expected coefficient so the battery must fail.
    bool corrupt_expected = false;
};

/// Fixed battery reproducing the counterexample results: the P_{2,2}
/// example, the chains/P_{m,n} identity, the binomial formula, the explicit
/// W(P_{36,6}), exact non-real counts for (36,6) and (11,11), the
/// approximate (11,11) pair, and Eulerian real-rootedness.
std::vector<CheckResult> run_reproduction_battery(const BatteryOptions& options = {});

} // namespace wpoly

#endif
