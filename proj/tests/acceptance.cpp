// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Criteria cover the certificate workloads end to end through the CLI, the
// algebraic law suites at fixed seeds, and byte-level determinism.

#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccalc/bing.hpp"
#include "ccalc/expr.hpp"
#include "ccalc/lie_hall.hpp"
#include "ccalc/magnus.hpp"
#include "ccalc/ncpoly.hpp"
#include "ccalc/verifier.hpp"

using json = nlohmann::json;
using namespace ccalc;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    double ms = 0;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + " " + CCALC_BIN + " " + args + " 2>/dev/null";
    auto t0 = Clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.ms = ms_since(t0);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string strip_timing(const std::string& text) {
    json j = json::parse(text);
    j.erase("timing_ms");
    return j.dump();
}

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt_ms(double ms) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.0f ms", ms);
    return buf;
}

// 1. Stage-1 certificate through the CLI, full witnesses, under a second.
void criterion_1() {
    RunResult r = run_cli("verify --stage 1 --k 5 --mode both --format json");
    bool ok = r.exit_code == 0 && r.ms < 1000.0;
    std::string detail;
    if (r.exit_code != 0) {
        detail = "exit code " + std::to_string(r.exit_code);
    } else {
        json j = json::parse(r.out, nullptr, false);
        ok = ok && !j.is_discarded() && j["conclusion"] == "STICKY_CERTIFIED" &&
             j["lowest_degree_found"] == 4 && j["leaf_order_coeff"] == "1" &&
             j["lie_cross_check"] == "pass";
        detail = "stage 1, k=5, both: " +
                 std::string(ok ? "all witnesses present" : "witnesses wrong") + ", " +
                 fmt_ms(r.ms);
    }
    report(1, ok, detail);
}

// 2. Stage-2 certificate via the multilinear scan, then the full degree<=7
//    vanishing check under the default budget.
void criterion_2() {
    RunResult r = run_cli("verify --stage 2 --k 9 --mode multilinear --format json");
    bool scan_ok = r.exit_code == 0 && r.ms < 5000.0;
    if (scan_ok) {
        json j = json::parse(r.out, nullptr, false);
        scan_ok = !j.is_discarded() && j["conclusion"] == "STICKY_CERTIFIED" &&
                  j["leaf_order_coeff"] == "1";
    }

    Word w = flatten(clifford_commutator(StageSpec::make(2)));
    auto t0 = Clock::now();
    bool vanish = in_gamma(w, 8); // degrees 1..7 all vanish
    double vanish_ms = ms_since(t0);
    bool vanish_ok = vanish && vanish_ms < 120000.0;

    // full mode at stage 2 also fits the default budget
    RunResult full = run_cli("verify --stage 2 --k 9 --mode full --format json");
    bool full_ok = full.exit_code == 0 && full.ms < 120000.0;
    if (full_ok) {
        json j = json::parse(full.out, nullptr, false);
        full_ok = !j.is_discarded() && j["conclusion"] == "STICKY_CERTIFIED" &&
                  j["lowest_degree_found"] == 8 && j["lie_cross_check"] == "pass";
    }

    report(2, scan_ok && vanish_ok && full_ok,
           "scan certificate " + fmt_ms(r.ms) + ", degree<=7 vanishing " +
               fmt_ms(vanish_ms) + ", full-mode certificate " + fmt_ms(full.ms) +
               (vanish ? "" : " (vanishing FAILED)"));
}

// 3. Conclusions flip exactly at k = N for stages 0..2.
void criterion_3() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string bad;
    for (int n = 0; n <= 2 && ok; ++n) {
        StageSpec spec = StageSpec::make(n);
        const int N = spec.generator_count();
        Word w = flatten(clifford_commutator(spec));
        for (int k = 2; k <= N && ok; ++k) {
            Certificate c = stickiness_certificate({spec, k, default_mode(spec)});
            if (c.conclusion != Conclusion::InconclusiveKTooSmall || !in_gamma(w, k)) {
                ok = false;
                bad = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            }
        }
        for (int k = N + 1; k <= N + 4 && ok; ++k) {
            Certificate c = stickiness_certificate({spec, k, default_mode(spec)});
            if (c.conclusion != Conclusion::StickyCertified) {
                ok = false;
                bad = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            }
        }
    }
    report(3, ok,
           ok ? "stages 0..2, all k <= N inconclusive with membership, all k in (N, N+4] "
                "certified, " + fmt_ms(ms_since(t0))
              : "wrong conclusion at " + bad);
}

// 4. Homomorphism and inverse laws, 1000 seeded pairs.
void criterion_4() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(0xC0FFEE);
    auto random_word = [&](const Alphabet& a, int len) {
        std::vector<Letter> ls;
        while (static_cast<int>(ls.size()) < len) {
            const Generator& g = a.at(static_cast<std::int32_t>(rng() % a.size()) + 1);
            auto sign = static_cast<std::int8_t>(rng() % 2 == 0 ? 1 : -1);
            if (!ls.empty() && ls.back().gen == g && ls.back().sign == -sign) continue;
            ls.push_back({g, sign});
        }
        return reduce(ls);
    };
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + static_cast<int>(rng() % 4);
        Alphabet a = Alphabet::side_free(n);
        int d = static_cast<int>(rng() % 7);
        Word u = random_word(a, static_cast<int>(rng() % 17));
        Word v = random_word(a, static_cast<int>(rng() % 17));
        if (magnus_expand(multiply(u, v), d) !=
            series_mul(magnus_expand(u, d), magnus_expand(v, d)))
            ++failures;
        if (!series_mul(magnus_expand(u, d), magnus_expand(invert(u), d)).is_one())
            ++failures;
    }
    double ms = ms_since(t0);
    bool ok = failures == 0 && ms < 30000.0;
    report(4, ok,
           "1000 pairs, " + std::to_string(failures) + " failures, " + fmt_ms(ms));
}

// 5. Magnus/Lie agreement over every distinct-leaf tree shape to 8 leaves.
void criterion_5() {
    auto t0 = Clock::now();
    std::vector<BracketExpr> trees;
    std::vector<Alphabet> alphas;
    for (int n = 1; n <= 8; ++n) alphas.push_back(Alphabet::side_free(n));

    // every binary shape over leaves lo..hi
    auto shapes = [](auto&& self, const Alphabet& a, int lo, int hi)
        -> std::vector<BracketExpr> {
        std::vector<BracketExpr> out;
        if (lo == hi) {
            out.push_back(BracketExpr::leaf(a.at(lo)));
            return out;
        }
        for (int mid = lo; mid < hi; ++mid)
            for (const auto& l : self(self, a, lo, mid))
                for (const auto& r : self(self, a, mid + 1, hi))
                    out.push_back(BracketExpr::bracket(l.clone(), r.clone()));
        return out;
    };
    for (int n = 1; n <= 8; ++n)
        for (auto& e : shapes(shapes, alphas[static_cast<std::size_t>(n - 1)], 1, n))
            trees.push_back(std::move(e));

    std::atomic<int> disagreements{0};
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (!cross_check_lie(trees[i])) ++disagreements;
    }
    bool ok = disagreements == 0 && trees.size() == 626; // sum of Catalan numbers to C_7
    report(5, ok,
           std::to_string(trees.size()) + " tree shapes, " +
               std::to_string(disagreements.load()) + " disagreements, " +
               fmt_ms(ms_since(t0)));
}

// 6. Witt ranks against Lyndon counts, and the necklace identity.
void criterion_6() {
    bool ok = true;
    std::string bad;
    for (int n = 1; n <= 3 && ok; ++n)
        for (int k = 1; k <= 6 && ok; ++k)
            if (BigInt(lyndon_basis(n, k).size()) != witt_rank(n, k)) {
                ok = false;
                bad = "count mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
    for (int n = 1; n <= 4 && ok; ++n)
        for (int k = 1; k <= 8 && ok; ++k) {
            BigInt sum = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) sum += d * witt_rank(n, d);
            if (sum != boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(k))) {
                ok = false;
                bad = "necklace identity at (" + std::to_string(n) + "," + std::to_string(k) + ")";
            }
        }
    report(6, ok, ok ? "lyndon counts to (3,6), necklace identity to (4,8), exact" : bad);
}

// 7. Word-algebra laws on 10^4 seeded words; parse/serialize round trip on
//    every stage expression to n = 4.
void criterion_7() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(0xB16B00B5);
    Alphabet a = Alphabet::side_free(4);
    auto random_word = [&](int len) {
        std::vector<Letter> ls;
        while (static_cast<int>(ls.size()) < len) {
            const Generator& g = a.at(static_cast<std::int32_t>(rng() % a.size()) + 1);
            auto sign = static_cast<std::int8_t>(rng() % 2 == 0 ? 1 : -1);
            if (!ls.empty() && ls.back().gen == g && ls.back().sign == -sign) continue;
            ls.push_back({g, sign});
        }
        return reduce(ls);
    };
    int failures = 0;
    for (int i = 0; i < 10000; ++i) {
        Word u = random_word(static_cast<int>(rng() % 13));
        Word v = random_word(static_cast<int>(rng() % 13));
        Word w = random_word(static_cast<int>(rng() % 13));
        if (reduce(u.letters()) != u) ++failures;
        if (multiply(multiply(u, v), w) != multiply(u, multiply(v, w))) ++failures;
        if (!multiply(u, invert(u)).is_identity()) ++failures;
        if (!multiply(invert(u), u).is_identity()) ++failures;
    }
    int roundtrip_failures = 0;
    for (int n = 0; n <= 4; ++n) {
        StageSpec spec = StageSpec::make(n);
        BracketExpr exprs[] = {bing_meridian(spec, Side::A), bing_meridian(spec, Side::B),
                               clifford_commutator(spec)};
        for (const BracketExpr& e : exprs) {
            ParsedInput round = parse_expr(serialize_expr(e));
            if (!round.is_bracket() || !(round.bracket() == e)) ++roundtrip_failures;
        }
    }
    bool ok = failures == 0 && roundtrip_failures == 0;
    report(7, ok,
           "10000 word triples (" + std::to_string(failures) + " failures), stage "
           "expressions to n=4 (" + std::to_string(roundtrip_failures) +
               " round-trip failures), " + fmt_ms(ms_since(t0)));
}

// 8. Byte-identical JSON across repeated runs and thread counts.
void criterion_8() {
    const std::string cmd1 = "verify --stage 1 --k 5 --mode both --format json";
    const std::string cmd2 = "verify --stage 2 --k 9 --mode multilinear --format json";
    bool ok = true;
    std::string detail = "repeat and 1-vs-2 thread runs identical";
    for (const std::string& cmd : {cmd1, cmd2}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        RunResult c = run_cli(cmd, "OMP_NUM_THREADS=1");
        RunResult d = run_cli(cmd, "OMP_NUM_THREADS=2");
        if (a.exit_code != 0 || b.exit_code != 0 || c.exit_code != 0 || d.exit_code != 0) {
            ok = false;
            detail = "nonzero exit running: " + cmd;
            break;
        }
        std::string sa = strip_timing(a.out);
        if (sa != strip_timing(b.out) || sa != strip_timing(c.out) ||
            sa != strip_timing(d.out)) {
            ok = false;
            detail = "outputs differ for: " + cmd;
            break;
        }
    }
    report(8, ok, detail);
}

} // namespace

int main() {
    std::printf("acceptance suite (budget default %zu)\n", monomial_budget());
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures == 0) {
        std::printf("all 8 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
