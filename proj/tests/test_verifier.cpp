#include <doctest.h>

#include <json.hpp>

#include "ccalc/errors.hpp"
#include "ccalc/verifier.hpp"
#include "oracles.hpp"

using namespace ccalc;

namespace {
Certificate cert_for(int n, int k, CertMode mode, int dim = 4) {
    return stickiness_certificate({StageSpec::make(n, dim), k, mode});
}

std::string json_without_timing(const Certificate& c) {
    auto j = nlohmann::json::parse(certificate_to_json(c));
    j.erase("timing_ms");
    return j.dump();
}
} // namespace

TEST_SUITE_BEGIN("verifier");

TEST_CASE("meridian weights") {
    CHECK(verify_meridian_weight(StageSpec::make(0)) == std::pair<int, int>{1, 1});
    CHECK(verify_meridian_weight(StageSpec::make(1)) == std::pair<int, int>{2, 2});
    CHECK(verify_meridian_weight(StageSpec::make(2)) == std::pair<int, int>{4, 4});
}

TEST_CASE("lie cross-check") {
    CHECK(cross_check_lie(parse_expr("[x1,x2]").bracket()));
    CHECK(cross_check_lie(parse_expr("[[x1,x2],x3]").bracket()));
    CHECK(cross_check_lie(parse_expr("[[x1,x2],[x3,x4]]").bracket()));
    CHECK_THROWS_AS(cross_check_lie(parse_expr("[x1,x1]").bracket()), std::invalid_argument);
}

TEST_CASE("default mode splits at stage 2") {
    CHECK(default_mode(StageSpec::make(0)) == CertMode::Full);
    CHECK(default_mode(StageSpec::make(1)) == CertMode::Full);
    CHECK(default_mode(StageSpec::make(2)) == CertMode::Multilinear);
    CHECK(default_mode(StageSpec::make(3)) == CertMode::Multilinear);
}

TEST_CASE("stage 1, k = 5, full: certified with all witnesses") {
    Certificate c = cert_for(1, 5, CertMode::Full);
    CHECK(c.conclusion == Conclusion::StickyCertified);
    CHECK(c.stage_n == 1);
    CHECK(c.l == 2);
    CHECK(c.N == 4);
    CHECK(c.k_exceeds_N);
    CHECK(c.lowest_degree_found == 4);
    CHECK(c.leaf_order_coeff == 1);
    CHECK(c.lie_cross_check == CrossCheck::Pass);
    CHECK(c.diagnostics.empty());
}

TEST_CASE("stage 1, k = 4: inconclusive, k too small") {
    Certificate c = cert_for(1, 4, CertMode::Full);
    CHECK(c.conclusion == Conclusion::InconclusiveKTooSmall);
    CHECK_FALSE(c.k_exceeds_N);
    CHECK_FALSE(c.lowest_degree_found.has_value());
    CHECK(c.lie_cross_check == CrossCheck::Skipped);
}

TEST_CASE("stage 0, k = 3, full: the unspun warm-up certifies") {
    Certificate c = cert_for(0, 3, CertMode::Full);
    CHECK(c.conclusion == Conclusion::StickyCertified);
    CHECK(c.N == 2);
    CHECK(c.lowest_degree_found == 2);
    CHECK(c.leaf_order_coeff == 1);
}

TEST_CASE("stage 2, k = 9, full: degree-8 witnesses under the default budget") {
    Certificate c = cert_for(2, 9, CertMode::Full);
    CHECK(c.conclusion == Conclusion::StickyCertified);
    CHECK(c.lowest_degree_found == 8);
    CHECK(c.leaf_order_coeff == 1);
    CHECK(c.lie_cross_check == CrossCheck::Pass);
}

TEST_CASE("certification is monotone in k past N") {
    for (int k : {6, 7, 12, 40}) {
        Certificate c = cert_for(1, k, CertMode::Both);
        CHECK(c.conclusion == Conclusion::StickyCertified);
        CHECK(c.leaf_order_coeff == 1);
    }
}

TEST_CASE("stage 2, k = 9, multilinear") {
    Certificate c = cert_for(2, 9, CertMode::Multilinear);
    CHECK(c.conclusion == Conclusion::StickyCertified);
    CHECK(c.leaf_order_coeff == 1);
    CHECK_FALSE(c.lowest_degree_found.has_value());
    CHECK(c.lie_cross_check == CrossCheck::Skipped);
    // multilinear mode records the membership-by-construction assumption
    bool noted = false;
    for (const auto& a : c.assumptions)
        if (a.find("gamma_N") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("both mode runs the full witnesses and the scan together") {
    Certificate c = cert_for(1, 5, CertMode::Both);
    CHECK(c.conclusion == Conclusion::StickyCertified);
    CHECK(c.lowest_degree_found == 4);
    CHECK(c.lie_cross_check == CrossCheck::Pass);
    CHECK(c.leaf_order_coeff == 1);
}

TEST_CASE("threshold behavior around k = N for small stages") {
    for (int n = 0; n <= 1; ++n) {
        StageSpec spec = StageSpec::make(n);
        int N = spec.generator_count();
        for (int k = 2; k <= N; ++k) {
            Certificate c = stickiness_certificate({spec, k, default_mode(spec)});
            CHECK(c.conclusion == Conclusion::InconclusiveKTooSmall);
        }
        for (int k = N + 1; k <= N + 4; ++k) {
            Certificate c = stickiness_certificate({spec, k, default_mode(spec)});
            CHECK(c.conclusion == Conclusion::StickyCertified);
        }
    }
}

TEST_CASE("request validation") {
    CHECK_THROWS_AS(cert_for(1, 1, CertMode::Full), std::invalid_argument);
    CHECK_THROWS_AS(cert_for(1, 0, CertMode::Full), std::invalid_argument);
}

TEST_CASE("budget errors propagate") {
    oracles::BudgetGuard guard(100);
    CHECK_THROWS_AS(cert_for(2, 9, CertMode::Full), BudgetError);
}

TEST_CASE("certificates are deterministic apart from timings") {
    Certificate a = cert_for(1, 5, CertMode::Both);
    Certificate b = cert_for(1, 5, CertMode::Both);
    CHECK(json_without_timing(a) == json_without_timing(b));

    Certificate c = cert_for(2, 9, CertMode::Multilinear);
    Certificate d = cert_for(2, 9, CertMode::Multilinear);
    CHECK(json_without_timing(c) == json_without_timing(d));
}

TEST_CASE("json carries the schema fields in order") {
    Certificate c = cert_for(1, 5, CertMode::Full, 5);
    auto j = nlohmann::ordered_json::parse(certificate_to_json(c));
    const char* expected[] = {"stage_n", "l", "N", "k", "ambient_dimension", "mode",
                              "k_exceeds_N", "lowest_degree_found", "leaf_order_coeff",
                              "lie_cross_check", "assumptions", "conclusion", "budgets",
                              "timing_ms", "diagnostics"};
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        REQUIRE(i < std::size(expected));
        CHECK(it.key() == expected[i]);
    }
    CHECK(i == std::size(expected));
    CHECK(j["ambient_dimension"] == 5);
    CHECK(j["leaf_order_coeff"] == "1");
    CHECK(j["budgets"]["monomial_cap"] == monomial_budget());
    CHECK(j["conclusion"] == "STICKY_CERTIFIED");
}

TEST_CASE("text report carries the same content") {
    Certificate c = cert_for(1, 5, CertMode::Full);
    std::string text = certificate_to_text(c);
    CHECK(text.find("STICKY_CERTIFIED") != std::string::npos);
    CHECK(text.find("lowest_degree_found") != std::string::npos);
    CHECK(text.find("leaf_order_coeff") != std::string::npos);
}

TEST_SUITE_END();
