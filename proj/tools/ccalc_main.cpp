// ccalc: commutator calculus for free groups. Magnus expansions in truncated
// non-commutative integer series, lower-central-series queries, iterated
// doubling constructions, and stickiness certificates, as text or JSON.

#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccalc/bing.hpp"
#include "ccalc/errors.hpp"
#include "ccalc/expr.hpp"
#include "ccalc/lie_hall.hpp"
#include "ccalc/magnus.hpp"
#include "ccalc/ncpoly.hpp"
#include "ccalc/verifier.hpp"
#include "ccalc/word.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ccalc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitFail = 3;

constexpr std::size_t kMinBudget = 10'000;

struct Options {
    std::string format = "text";
    std::size_t budget = 0; // 0 = leave default
    long long seed = 20240808;
};

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json series_json(const Series& s) {
    ordered_json terms = ordered_json::array();
    for (const Term& t : s.terms()) {
        ordered_json entry;
        entry["monomial"] = t.mono.vars();
        entry["coeff"] = to_decimal(t.coeff);
        terms.push_back(entry);
    }
    return terms;
}

int run_expand(const std::string& input, int deg, const Options& opt) {
    ParsedInput parsed = parse_expr(input);
    Series s = magnus_expand(parsed.as_word(), deg);
    if (opt.format == "json") {
        ordered_json j;
        j["input"] = input;
        j["truncation_degree"] = deg;
        j["terms"] = series_json(s);
        emit(j);
    } else {
        std::cout << series_to_text(s, parsed.alphabet) << "\n";
    }
    return kExitOk;
}

int run_member(const std::string& input, int k, const Options& opt) {
    ParsedInput parsed = parse_expr(input);
    bool member = in_gamma(parsed.as_word(), k);
    if (opt.format == "json") {
        ordered_json j;
        j["input"] = input;
        j["k"] = k;
        j["in_gamma"] = member;
        emit(j);
    } else {
        std::cout << (member ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int run_weight(const std::string& input, int k_max, const Options& opt) {
    ParsedInput parsed = parse_expr(input);
    WeightResult w = lcs_weight(parsed.as_word(), k_max);
    if (opt.format == "json") {
        ordered_json j;
        j["input"] = input;
        j["k_max"] = k_max;
        j["value"] = w.value;
        j["at_least"] = w.at_least;
        emit(j);
    } else {
        std::cout << w.to_text() << "\n";
    }
    return kExitOk;
}

int run_coeff(const std::string& input, std::vector<std::int32_t> target, const Options& opt) {
    ParsedInput parsed = parse_expr(input);
    if (target.empty()) {
        if (!parsed.is_bracket())
            throw std::invalid_argument("--target is required for word inputs");
        for (const Generator& g : parsed.bracket().leaves()) target.push_back(g.index);
    }
    BigInt c = multilinear_coefficient(parsed.as_word(), target);
    if (opt.format == "json") {
        ordered_json j;
        j["input"] = input;
        j["target"] = target;
        j["coeff"] = to_decimal(c);
        emit(j);
    } else {
        std::cout << to_decimal(c) << "\n";
    }
    return kExitOk;
}

int run_bing(int stage, int dim, const std::string& side, const Options& opt) {
    StageSpec spec = StageSpec::make(stage, dim);
    if (opt.format == "json") {
        ordered_json j;
        j["stage_n"] = spec.n;
        j["l"] = spec.spheres_per_side();
        j["N"] = spec.generator_count();
        j["ambient_dimension"] = spec.ambient_dimension;
        if (side.empty()) {
            j["m_A"] = serialize_expr(bing_meridian(spec, Side::A));
            j["m_B"] = serialize_expr(bing_meridian(spec, Side::B));
            j["commutator"] = serialize_expr(clifford_commutator(spec));
        } else {
            j["side"] = side;
            j["meridian"] = serialize_expr(
                bing_meridian(spec, side == "A" ? Side::A : Side::B));
        }
        emit(j);
    } else {
        if (side.empty()) {
            std::cout << "m_A = " << serialize_expr(bing_meridian(spec, Side::A)) << "\n";
            std::cout << "m_B = " << serialize_expr(bing_meridian(spec, Side::B)) << "\n";
            std::cout << "[m_A,m_B] = " << serialize_expr(clifford_commutator(spec)) << "\n";
        } else {
            std::cout << serialize_expr(
                             bing_meridian(spec, side == "A" ? Side::A : Side::B))
                      << "\n";
        }
    }
    return kExitOk;
}

int run_verify(int stage, int k, const std::string& mode_name, int dim, const Options& opt) {
    StageSpec spec = StageSpec::make(stage, dim);
    CertMode mode = default_mode(spec);
    if (mode_name == "full")
        mode = CertMode::Full;
    else if (mode_name == "multilinear")
        mode = CertMode::Multilinear;
    else if (mode_name == "both")
        mode = CertMode::Both;
    Certificate cert = stickiness_certificate({spec, k, mode});
    if (opt.format == "json")
        std::cout << certificate_to_json(cert) << "\n";
    else
        std::cout << certificate_to_text(cert);
    return cert.conclusion == Conclusion::Fail ? kExitFail : kExitOk;
}

int run_witt(int n_gens, int k, const Options& opt) {
    BigInt rank = witt_rank(n_gens, k);
    if (opt.format == "json") {
        ordered_json j;
        j["n_gens"] = n_gens;
        j["k"] = k;
        j["rank"] = to_decimal(rank);
        emit(j);
    } else {
        std::cout << to_decimal(rank) << "\n";
    }
    return kExitOk;
}

int run_lyndon(int n_gens, int k, const Options& opt) {
    std::vector<BracketExpr> basis = lyndon_basis(n_gens, k);
    if (opt.format == "json") {
        ordered_json j;
        j["n_gens"] = n_gens;
        j["k"] = k;
        j["count"] = basis.size();
        ordered_json items = ordered_json::array();
        for (const BracketExpr& e : basis) items.push_back(serialize_expr(e));
        j["basis"] = items;
        emit(j);
    } else {
        for (const BracketExpr& e : basis) std::cout << serialize_expr(e) << "\n";
    }
    return kExitOk;
}

// ---- selftest ----------------------------------------------------------

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

Word random_word(std::mt19937_64& rng, const Alphabet& alpha, int length) {
    std::vector<Letter> ls;
    while (static_cast<int>(ls.size()) < length) {
        const Generator& g = alpha.at(static_cast<std::int32_t>(rng() % alpha.size()) + 1);
        auto sign = static_cast<std::int8_t>(rng() % 2 == 0 ? 1 : -1);
        if (!ls.empty() && ls.back().gen == g && ls.back().sign == -sign) continue;
        ls.push_back({g, sign});
    }
    return reduce(ls);
}

Series random_series(std::mt19937_64& rng, int n_vars, int deg, int max_terms) {
    std::vector<Term> terms;
    int count = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
    for (int t = 0; t < count; ++t) {
        std::vector<std::int32_t> vars;
        int d = static_cast<int>(rng() % static_cast<unsigned>(deg + 1));
        for (int i = 0; i < d; ++i)
            vars.push_back(static_cast<std::int32_t>(rng() % static_cast<unsigned>(n_vars)) + 1);
        long long c = static_cast<long long>(rng() % 9) - 4;
        terms.push_back(Term{Monomial(std::move(vars)), BigInt(c == 0 ? 1 : c)});
    }
    return Series::from_terms(deg, std::move(terms));
}

SuiteResult suite_word_laws(std::mt19937_64& rng) {
    SuiteResult r{"word-laws", true, ""};
    Alphabet a = Alphabet::side_free(4);
    for (int i = 0; i < 2000 && r.passed; ++i) {
        Word u = random_word(rng, a, static_cast<int>(rng() % 13));
        Word v = random_word(rng, a, static_cast<int>(rng() % 13));
        Word w = random_word(rng, a, static_cast<int>(rng() % 13));
        if (reduce(u.letters()) != u) r = {r.name, false, "reduction not idempotent"};
        if (multiply(multiply(u, v), w) != multiply(u, multiply(v, w)))
            r = {r.name, false, "associativity failed"};
        if (!multiply(u, invert(u)).is_identity()) r = {r.name, false, "inverse law failed"};
    }
    if (r.passed) r.detail = "2000 random triples";
    return r;
}

SuiteResult suite_ring_laws(std::mt19937_64& rng) {
    SuiteResult r{"ring-laws", true, ""};
    for (int i = 0; i < 120 && r.passed; ++i) {
        int d = static_cast<int>(rng() % 5);
        Series a = random_series(rng, 3, d, 6);
        Series b = random_series(rng, 3, d, 6);
        Series c = random_series(rng, 3, d, 6);
        if (series_mul(series_mul(a, b), c) != series_mul(a, series_mul(b, c)))
            r = {r.name, false, "associativity failed"};
        if (series_mul(a, series_add(b, c)) != series_add(series_mul(a, b), series_mul(a, c)))
            r = {r.name, false, "distributivity failed"};
        if (series_mul(a, b) != series_mul_reference(a, b))
            r = {r.name, false, "kernel disagrees with reference"};
    }
    if (r.passed) r.detail = "120 random triples";
    return r;
}

SuiteResult suite_magnus_homomorphism(std::mt19937_64& rng) {
    SuiteResult r{"magnus-homomorphism", true, ""};
    for (int i = 0; i < 200 && r.passed; ++i) {
        int n = 1 + static_cast<int>(rng() % 4);
        Alphabet a = Alphabet::side_free(n);
        int d = static_cast<int>(rng() % 7);
        Word u = random_word(rng, a, static_cast<int>(rng() % 17));
        Word v = random_word(rng, a, static_cast<int>(rng() % 17));
        if (magnus_expand(multiply(u, v), d) !=
            series_mul(magnus_expand(u, d), magnus_expand(v, d)))
            r = {r.name, false, "homomorphism law failed"};
        if (!series_mul(magnus_expand(u, d), magnus_expand(invert(u), d)).is_one())
            r = {r.name, false, "inverse law failed"};
    }
    if (r.passed) r.detail = "200 random pairs";
    return r;
}

SuiteResult suite_lie_magnus(std::mt19937_64&) {
    SuiteResult r{"lie-magnus-agreement", true, ""};
    // balanced and one-sided shapes with distinct leaves, up to 6 leaves
    std::vector<BracketExpr> trees;
    for (int n = 0; n <= 2; ++n) {
        trees.push_back(bing_meridian(StageSpec::make(n), Side::A));
        trees.push_back(clifford_commutator(StageSpec::make(n)));
    }
    Alphabet a = Alphabet::side_free(6);
    BracketExpr cat = BracketExpr::leaf(a.at(1));
    for (std::int32_t i = 2; i <= 6; ++i) {
        cat = BracketExpr::bracket(std::move(cat), BracketExpr::leaf(a.at(i)));
        trees.push_back(cat.clone());
    }
    BracketExpr tac = BracketExpr::leaf(a.at(6));
    for (std::int32_t i = 5; i >= 1; --i)
        tac = BracketExpr::bracket(BracketExpr::leaf(a.at(i)), std::move(tac));
    trees.push_back(std::move(tac));

    int checked = 0;
    for (const BracketExpr& e : trees) {
        if (e.leaf_count() > 6) continue;
        if (!cross_check_lie(e)) {
            r = {r.name, false, "disagreement on " + serialize_expr(e)};
            break;
        }
        ++checked;
    }
    if (r.passed) r.detail = std::to_string(checked) + " trees";
    return r;
}

SuiteResult suite_witt_lyndon(std::mt19937_64&) {
    SuiteResult r{"witt-lyndon", true, ""};
    for (int n = 1; n <= 3 && r.passed; ++n) {
        for (int k = 1; k <= 6 && r.passed; ++k) {
            if (BigInt(lyndon_basis(n, k).size()) != witt_rank(n, k))
                r = {r.name, false, "count mismatch at n=" + std::to_string(n) +
                                        " k=" + std::to_string(k)};
        }
    }
    for (int n = 1; n <= 4 && r.passed; ++n) {
        for (int k = 1; k <= 8 && r.passed; ++k) {
            BigInt sum = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) sum += d * witt_rank(n, d);
            if (sum != boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(k)))
                r = {r.name, false, "necklace identity failed"};
        }
    }
    if (r.passed) r.detail = "counts to (3,6), necklace to (4,8)";
    return r;
}

SuiteResult suite_dp_agreement(std::mt19937_64& rng) {
    SuiteResult r{"dp-full-agreement", true, ""};
    Alphabet a = Alphabet::side_free(4);
    for (int i = 0; i < 80 && r.passed; ++i) {
        Word w = random_word(rng, a, static_cast<int>(rng() % 13));
        std::vector<std::int32_t> target{1, 2, 3, 4};
        for (std::size_t j = target.size(); j > 1; --j)
            std::swap(target[j - 1], target[rng() % j]);
        target.resize(1 + rng() % 4);
        if (multilinear_coefficient(w, target) !=
            magnus_expand(w, static_cast<int>(target.size())).coefficient(Monomial(target)))
            r = {r.name, false, "scan disagrees with expansion"};
    }
    if (r.passed) r.detail = "80 random words";
    return r;
}

SuiteResult suite_threshold(std::mt19937_64&) {
    SuiteResult r{"certificate-threshold", true, ""};
    for (int n = 0; n <= 1 && r.passed; ++n) {
        StageSpec spec = StageSpec::make(n);
        int N = spec.generator_count();
        for (int k = 2; k <= N + 3 && r.passed; ++k) {
            Conclusion got =
                stickiness_certificate({spec, k, default_mode(spec)}).conclusion;
            Conclusion want = k <= N ? Conclusion::InconclusiveKTooSmall
                                     : Conclusion::StickyCertified;
            if (got != want)
                r = {r.name, false, "wrong conclusion at n=" + std::to_string(n) +
                                        " k=" + std::to_string(k)};
        }
    }
    if (r.passed) r.detail = "stages 0..1, k around N";
    return r;
}

int run_selftest(const Options& opt) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(opt.seed));
    std::vector<SuiteResult> results;
    results.push_back(suite_word_laws(rng));
    results.push_back(suite_ring_laws(rng));
    results.push_back(suite_magnus_homomorphism(rng));
    results.push_back(suite_lie_magnus(rng));
    results.push_back(suite_witt_lyndon(rng));
    results.push_back(suite_dp_agreement(rng));
    results.push_back(suite_threshold(rng));

    bool all = true;
    for (const SuiteResult& r : results) all = all && r.passed;

    if (opt.format == "json") {
        ordered_json j;
        j["seed"] = opt.seed;
        ordered_json suites = ordered_json::array();
        for (const SuiteResult& r : results) {
            ordered_json s;
            s["name"] = r.name;
            s["passed"] = r.passed;
            s["detail"] = r.detail;
            suites.push_back(s);
        }
        j["suites"] = suites;
        j["all_passed"] = all;
        emit(j);
    } else {
        for (const SuiteResult& r : results)
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name
                      << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
        std::cout << (all ? "all suites passed" : "selftest FAILED") << "\n";
    }
    return all ? kExitOk : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"commutator calculus for free groups: Magnus expansions, "
                 "lower-central-series queries, Bing-style doubling constructions, "
                 "and stickiness certificates"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--budget", opt.budget,
                   "monomial budget (min 10000; default 10000000)")
        ->envname("CC_BUDGET");
    app.add_option("--seed", opt.seed, "random seed for property commands")
        ->capture_default_str();

    std::string expr_text;
    int deg = 0, k = 0, stage = 0, dim = 4, n_gens = 0;
    std::string side, mode_name;
    std::vector<std::int32_t> target;

    CLI::App* expand = app.add_subcommand("expand", "Magnus expansion of a word or bracket");
    expand->add_option("expr", expr_text, "expression")->required();
    expand->add_option("--deg", deg, "truncation degree")->required()
        ->check(CLI::NonNegativeNumber);

    CLI::App* member = app.add_subcommand("member", "lower-central-series membership");
    member->add_option("expr", expr_text, "expression")->required();
    member->add_option("--k", k, "series class")->required()->check(CLI::PositiveNumber);

    CLI::App* weight = app.add_subcommand("weight", "lower-central-series weight");
    weight->add_option("expr", expr_text, "expression")->required();
    weight->add_option("--k", k, "weight cutoff k_max")->required()
        ->check(CLI::PositiveNumber);

    CLI::App* coeff = app.add_subcommand("coeff", "multilinear Magnus coefficient");
    coeff->add_option("expr", expr_text, "expression")->required();
    coeff->add_option("--target", target,
                      "comma-separated distinct variable indices (default: leaf order)")
        ->delimiter(',');

    CLI::App* bing = app.add_subcommand("bing", "print stage meridian expressions");
    bing->add_option("--stage", stage, "doubling iterations")->required()
        ->check(CLI::NonNegativeNumber);
    bing->add_option("--side", side, "one side only")->check(CLI::IsMember({"A", "B"}));
    bing->add_option("--dim", dim, "ambient dimension (metadata)")->check(CLI::Range(4, 64));

    CLI::App* verify = app.add_subcommand("verify", "stickiness certificate");
    verify->add_option("--stage", stage, "doubling iterations")->required()
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--k", k, "quotient class")->required();
    verify->add_option("--mode", mode_name, "full | multilinear | both")
        ->check(CLI::IsMember({"full", "multilinear", "both"}));
    verify->add_option("--dim", dim, "ambient dimension (metadata)")->check(CLI::Range(4, 64));

    CLI::App* witt = app.add_subcommand("witt", "rank of gamma_k/gamma_{k+1} of F_n");
    witt->add_option("--n-gens", n_gens, "free rank")->required()
        ->check(CLI::PositiveNumber);
    witt->add_option("--k", k, "degree")->required()->check(CLI::PositiveNumber);

    CLI::App* lyndon = app.add_subcommand("lyndon", "Lyndon-word standard bracketings");
    lyndon->add_option("--n-gens", n_gens, "alphabet size")->required()
        ->check(CLI::PositiveNumber);
    lyndon->add_option("--k", k, "word length")->required()->check(CLI::PositiveNumber);

    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suites");

    for (CLI::App* sub : {expand, member, weight, coeff, bing, verify, witt, lyndon, selftest})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exits 0
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (opt.budget != 0) {
            if (opt.budget < kMinBudget) {
                std::cerr << "usage error: --budget must be >= " << kMinBudget << "\n";
                return kExitUsage;
            }
            set_monomial_budget(opt.budget);
        }
        if (expand->parsed()) return run_expand(expr_text, deg, opt);
        if (member->parsed()) return run_member(expr_text, k, opt);
        if (weight->parsed()) return run_weight(expr_text, k, opt);
        if (coeff->parsed()) return run_coeff(expr_text, target, opt);
        if (bing->parsed()) return run_bing(stage, dim, side, opt);
        if (verify->parsed()) return run_verify(stage, k, mode_name, dim, opt);
        if (witt->parsed()) return run_witt(n_gens, k, opt);
        if (lyndon->parsed()) return run_lyndon(n_gens, k, opt);
        if (selftest->parsed()) return run_selftest(opt);
        std::cerr << "usage error: no subcommand\n";
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
