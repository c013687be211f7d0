#ifndef FFDYCK_SELFCHECK_HPP
#define FFDYCK_SELFCHECK_HPP

#include <functional>
#include <string>
#include <vector>

#include "ffdyck/exactmath.hpp"

namespace ffdyck {

enum class CheckLevel { quick, full };

/// The closed-form counters under test. Swappable so a deliberately broken
/// counter can be shown to trip the suite.
struct Counters {
    std::function<BigInt(int m, int n)> count_u;
    std::function<BigInt(int m, int n)> count_d;

    static Counters standard();
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelfcheckReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    /// One "PASS name" / "FAIL name: detail" line per check, then a summary.
    std::string to_text(bool with_timings) const;
};

/// Cross-module invariant suite. Quick caps n at 2; full runs the acceptance
/// ranges.
SelfcheckReport run_selfcheck(CheckLevel level, const Counters& counters = Counters::standard());

} // namespace ffdyck

#endif
