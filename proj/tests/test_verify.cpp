#include <array>
#include <string>
#include <vector>

#include "doctest.h"
#include "fenceopt/bounds.hpp"
#include "fenceopt/verify.hpp"

using namespace fenceopt;

TEST_SUITE("verify") {

TEST_CASE("quick campaign passes every check in a fixed order") {
    const std::vector<CheckResult> res = run_verification({Profile::Quick, 7});
    const std::array<const char*, 13> names = {
        "theorem1-half-area",  "regime-continuity",     "symmetry",
        "fact-ratios",         "oracle-bracketing",     "case-bound-soundness",
        "complement-identity", "partition-lemma",       "optimizer-convergence",
        "gradient-validation", "reflection-properties", "determinism-digest",
        "dominance",
    };
    REQUIRE(res.size() == names.size());
    for (std::size_t i = 0; i < res.size(); ++i) {
        CAPTURE(res[i].name);
        CAPTURE(res[i].detail);
        CHECK(res[i].name == names[i]);
        CHECK(res[i].pass);
        CHECK(res[i].margin >= 0.0);
        CHECK(res[i].margin <= 1.0 + 1e-12);
        CHECK_FALSE(res[i].detail.empty());
    }
}

TEST_CASE("campaigns replay exactly apart from timings") {
    const VerifyOptions opt{Profile::Quick, 123};
    const auto a = run_verification(opt);
    const auto b = run_verification(opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].margin == b[i].margin);
        CHECK(a[i].detail == b[i].detail);
    }
}

TEST_CASE("a different seed still passes") {
    for (const auto& r : run_verification({Profile::Quick, 20260819})) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("fault injection flags exactly the analytic checks") {
    auto failing = [](double factor) {
        AnalyticHooks hooks;
        hooks.l_star_fn = [factor](const Rect& r, double a) { return factor * l_star(r, a); };
        std::vector<std::string> bad;
        for (const auto& r : run_verification({Profile::Quick, 7}, hooks))
            if (!r.pass) bad.push_back(r.name);
        return bad;
    };
    // an undershooting formula loses to the constructed fences and the
    // optimizer; an overshooting one additionally trips the grid oracle
    const std::vector<std::string> low{"theorem1-half-area", "regime-continuity",
                                       "optimizer-convergence", "dominance"};
    CHECK(failing(0.99) == low);
    const std::vector<std::string> high{"theorem1-half-area", "regime-continuity",
                                        "oracle-bracketing", "dominance"};
    CHECK(failing(1.01) == high);
}

TEST_CASE("profile names") {
    CHECK(profile_name(Profile::Quick) == "quick");
    CHECK(profile_name(Profile::Full) == "full");
}

} // TEST_SUITE
