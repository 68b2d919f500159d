#include <doctest.h>

#include "ptower/checks.hpp"

using namespace ptower;

namespace {

const CheckResult* find(const VerifyReport& r, const std::string& name) {
    for (const auto& c : r.checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("verify suite passes for p = 5 at defaults") {
    RunConfig cfg;
    cfg.p = 5;
    const VerifyReport report = run_verify_suite(cfg);
    CHECK(report.all_pass);
    for (const auto& c : report.checks) CHECK_FALSE(c.skipped);

    const auto* residual = find(report, "expansion-residual");
    REQUIRE(residual != nullptr);
    CHECK(residual->valuation >= 37);

    const auto* t1 = find(report, "uniformizer-theorem-1");
    const auto* t2 = find(report, "uniformizer-theorem-2");
    REQUIRE(t1 != nullptr);
    REQUIRE(t2 != nullptr);
    CHECK(t1->valuation == 1);
    CHECK(t2->valuation == 1);
}

TEST_CASE("verify suite surfaces precision exhaustion at p = 7, N = 2") {
    RunConfig cfg;
    cfg.p = 7;
    cfg.precision = 2;
    CHECK_THROWS_AS(run_verify_suite(cfg), PrecisionError);
}

TEST_CASE("heavy norm checks are gated for p = 11") {
    RunConfig cfg;
    cfg.p = 11;
    const VerifyReport report = run_verify_suite(cfg);
    CHECK(report.all_pass);  // over the checks that ran

    const auto* cong = find(report, "case-congruences");
    REQUIRE(cong != nullptr);
    CHECK_FALSE(cong->skipped);
    CHECK(cong->pass);

    const auto* residual = find(report, "expansion-residual");
    REQUIRE(residual != nullptr);
    CHECK_FALSE(residual->skipped);
    CHECK(residual->pass);

    for (const char* name : {"proof-mirror", "uniformizer-theorem-1", "uniformizer-theorem-2"}) {
        const auto* c = find(report, name);
        REQUIRE(c != nullptr);
        CHECK(c->skipped);
        CHECK(c->note.find("--heavy") != std::string::npos);
    }

    // K_{1,1} has degree 110 <= 400, so the quotient check still runs
    const auto* viv = find(report, "viviani");
    REQUIRE(viv != nullptr);
    CHECK_FALSE(viv->skipped);
    CHECK(viv->pass);
}

TEST_CASE("mercio check appears only at p = 3") {
    RunConfig cfg;
    cfg.p = 3;
    const VerifyReport r3 = run_verify_suite(cfg);
    CHECK(find(r3, "mercio-expansion") != nullptr);
    CHECK(r3.all_pass);

    cfg.p = 7;
    const VerifyReport r7 = run_verify_suite(cfg);
    CHECK(find(r7, "mercio-expansion") == nullptr);
    CHECK(r7.all_pass);
}

TEST_CASE("config validation") {
    RunConfig cfg;
    cfg.p = 4;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.p = 3;
    cfg.precision = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}
