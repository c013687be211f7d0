#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffdyck/enumeration.hpp"
#include "ffdyck/selfcheck.hpp"

#include <algorithm>

using namespace ffdyck;

namespace {

// count_u with mu_1 bumped by one.
BigInt mutated_count_u(int m, int n)
{
    auto weights = mu_sequence(m);
    weights[0] += 1;
    return count_u_weighted(n, weights);
}

const CheckResult* find_check(const SelfcheckReport& r, const std::string& name)
{
    auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const CheckResult& c) { return c.name == name; });
    return it == r.checks.end() ? nullptr : &*it;
}

} // namespace

TEST_CASE("quick level passes")
{
    const auto report = run_selfcheck(CheckLevel::quick);
    CHECK(report.passed());
    CHECK(report.checks.size() > 20);
    for (const auto& c : report.checks)
        CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
}

TEST_CASE("full level passes")
{
    const auto report = run_selfcheck(CheckLevel::full);
    CHECK(report.passed());
    CHECK(report.checks.size() > run_selfcheck(CheckLevel::quick).checks.size());
}

TEST_CASE("a perturbed mu_1 is caught and the failing check is named")
{
    Counters bad = Counters::standard();
    bad.count_u = mutated_count_u;
    const auto report = run_selfcheck(CheckLevel::quick, bad);
    CHECK_FALSE(report.passed());
    const CheckResult* c = find_check(report, "count_u vs brute m=2 n=1");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->passed);
    CHECK(report.to_text(false).find("FAIL count_u vs brute m=2 n=1") != std::string::npos);
}

TEST_CASE("report text")
{
    const auto report = run_selfcheck(CheckLevel::quick);
    const std::string text = report.to_text(false);
    CHECK(text.find("PASS ") == 0);
    CHECK(text.find("FAIL") == std::string::npos);
}
