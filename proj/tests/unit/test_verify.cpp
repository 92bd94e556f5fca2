#include <chordenum/verify.hpp>

#include <algorithm>
#include <doctest.h>
#include <json.hpp>

using namespace chordenum;

namespace {

const Check* find(const VerifyReport& r, std::string_view name, int n)
{
    auto it = std::find_if(r.checks.begin(), r.checks.end(),
                           [&](const Check& c) { return c.name == name && c.n == n; });
    return it == r.checks.end() ? nullptr : &*it;
}

} // namespace

TEST_CASE("report at L = 12 passes and notes the reference inconsistencies")
{
    const auto r = run_verify(12);
    CHECK(r.ok());
    CHECK(r.count(CheckStatus::Fail) == 0);
    for (int n = 1; n <= 12; ++n) {
        const auto* c = find(r, "triple_agreement", n);
        REQUIRE(c != nullptr);
        CHECK(c->status == CheckStatus::Pass);
    }
    const auto* delta = find(r, "surface_points", 4);
    REQUIRE(delta != nullptr);
    CHECK(delta->status == CheckStatus::Noted);
    CHECK(delta->category == CheckCategory::InternalInconsistency);
    CHECK(std::stoll(delta->actual) - std::stoll(delta->expected) == 26);

    const auto* typo5 = find(r, "poli.N_S_table_vs_chain", 5);
    const auto* typo7 = find(r, "poli.N_S_table_vs_chain", 7);
    REQUIRE(typo5 != nullptr);
    REQUIRE(typo7 != nullptr);
    CHECK(typo5->expected == "1100");
    CHECK(typo5->actual == "1110");
    CHECK(typo7->expected == "5544");
    CHECK(typo7->actual == "5944");
}

TEST_CASE("other temperaments pass with only the coloured reference checks")
{
    for (int L : {1, 2, 7, 15, 30, 64}) {
        CAPTURE(L);
        const auto r = run_verify(L);
        CHECK(r.ok());
        CHECK(std::none_of(r.checks.begin(), r.checks.end(),
                           [](const Check& c) {
                               return c.category == CheckCategory::Published && c.name.rfind("colored_", 0) != 0;
                           }));
    }
}

TEST_CASE("prime temperament has no repeating chords")
{
    const auto r = run_verify(7);
    for (int n = 2; n < 7; ++n) {
        const auto* c = find(r, "repeating_total", n);
        REQUIRE(c != nullptr);
        CHECK(c->actual == "0");
    }
}

TEST_CASE("report serialisation")
{
    const auto r = run_verify(12);
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["meta"]["ok"] == true);
    CHECK(j["meta"]["fail"] == 0);
    CHECK(j["checks"].size() == r.checks.size());
    const auto csv = report_to_csv(r);
    CHECK(csv.rfind("check,category,n,expected,actual,status\n", 0) == 0);
}
