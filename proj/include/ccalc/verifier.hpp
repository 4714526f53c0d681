#ifndef CCALC_VERIFIER_HPP
#define CCALC_VERIFIER_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccalc/bigint.hpp"
#include "ccalc/bing.hpp"
#include "ccalc/expr.hpp"

namespace ccalc {

enum class CertMode { Full, Multilinear, Both };
enum class Conclusion { StickyCertified, InconclusiveKTooSmall, Fail };
enum class CrossCheck { Pass, Fail, Skipped };

std::string to_string(CertMode m);
std::string to_string(Conclusion c);
std::string to_string(CrossCheck c);

struct CertificateRequest {
    StageSpec spec;
    int k = 2; // quotient class, must be >= 2
    CertMode mode = CertMode::Full;
};

// Feasibility default: the full expansion is cheap through stage 2, beyond
// that the multilinear scan is the only reasonable route.
CertMode default_mode(const StageSpec& spec);

// Verification record for one request. STICKY_CERTIFIED requires k > N
// together with the degree-N witnesses; k <= N faithfully reports that the
// argument needs k > N rather than erroring. FAIL means an expected witness
// was absent, which the underlying theorems rule out — it signals a bug, not
// a mathematical finding.
struct Certificate {
    int stage_n = 0;
    int l = 0;
    int N = 0;
    int k = 0;
    int ambient_dimension = 4;
    CertMode mode = CertMode::Full;
    bool k_exceeds_N = false;
    std::optional<int> lowest_degree_found;
    BigInt leaf_order_coeff;
    CrossCheck lie_cross_check = CrossCheck::Skipped;
    std::vector<std::string> assumptions;
    Conclusion conclusion = Conclusion::Fail;
    std::size_t monomial_cap = 0;
    std::map<std::string, double> timing_ms;
    std::string diagnostics; // empty unless conclusion is FAIL
};

// Weight of each flattened meridian; l = 2^n for both sides.
std::pair<int, int> verify_meridian_weight(const StageSpec& spec);

// True when the top homogeneous part of the Magnus image of flatten(e)
// matches lie_expand(e) term for term. Requires pairwise distinct leaves.
bool cross_check_lie(const BracketExpr& e);

Certificate stickiness_certificate(const CertificateRequest& req);

// Stable-schema report forms. JSON timing values vary run to run; everything
// else is deterministic for a fixed request.
std::string certificate_to_json(const Certificate& cert, int indent = 2);
std::string certificate_to_text(const Certificate& cert);

} // namespace ccalc

#endif
