#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fenceopt/rect.hpp"

namespace fenceopt {

enum class Profile { Quick, Full };

struct VerifyOptions {
    Profile profile{Profile::Quick};
    std::uint64_t seed{7};
};

// Override points for fault-injection tests: a check that verifies the
// analytic formula against an independent oracle reads l_star through
// this hook, so a deliberately wrong formula must be caught.
struct AnalyticHooks {
    std::function<double(const Rect&, double)> l_star_fn;  // empty = library l_star
};

struct CheckResult {
    std::string name;
    bool pass{false};
    double margin{0.0};  // slack left before the check would fail; negative = failed
    std::string detail;
    double ms{0.0};
};

// Runs the named verification checks in a fixed order. Deterministic for
// a fixed seed and profile, apart from the timing fields.
std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          const AnalyticHooks& hooks = {});

std::string profile_name(Profile p);

} // namespace fenceopt
