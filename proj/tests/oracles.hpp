#ifndef CCALC_TESTS_ORACLES_HPP
#define CCALC_TESTS_ORACLES_HPP

// Test-only oracles, deliberately implemented apart from the library's
// computation paths: a direct enumeration of the Magnus expansion, the
// rotation definition of Lyndon words, and seeded random generators.

#include <map>
#include <random>
#include <vector>

#include "ccalc/expr.hpp"
#include "ccalc/magnus.hpp"
#include "ccalc/ncpoly.hpp"
#include "ccalc/word.hpp"

namespace oracles {

// Magnus expansion by brute force: every letter contributes an exponent
// e >= 0 of its variable (e <= 1 for positive letters, signed (-1)^e for
// inverse letters); enumerate all exponent vectors with total degree <= D.
inline void magnus_enum(const std::vector<ccalc::Letter>& ls, std::size_t pos, int remaining,
                        std::vector<std::int32_t>& mono, const ccalc::BigInt& coeff,
                        std::map<ccalc::Monomial, ccalc::BigInt>& acc) {
    if (pos == ls.size()) {
        acc[ccalc::Monomial(mono)] += coeff;
        return;
    }
    const ccalc::Letter& l = ls[pos];
    magnus_enum(ls, pos + 1, remaining, mono, coeff, acc); // e = 0
    const int emax = l.sign > 0 ? std::min(1, remaining) : remaining;
    const std::size_t base = mono.size();
    ccalc::BigInt c = coeff;
    for (int e = 1; e <= emax; ++e) {
        mono.push_back(l.gen.index);
        if (l.sign < 0) c = -c;
        magnus_enum(ls, pos + 1, remaining - e, mono, c, acc);
    }
    mono.resize(base);
}

inline ccalc::Series magnus_oracle(const ccalc::Word& w, int trunc_degree) {
    std::map<ccalc::Monomial, ccalc::BigInt> acc;
    std::vector<std::int32_t> mono;
    magnus_enum(w.letters(), 0, trunc_degree, mono, ccalc::BigInt(1), acc);
    std::vector<ccalc::Term> terms;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) terms.push_back(ccalc::Term{m, c});
    return ccalc::Series::from_terms(trunc_degree, std::move(terms));
}

// Lyndon test by the rotation definition: strictly smaller than every proper
// rotation.
inline bool is_lyndon_by_rotations(const std::vector<int>& w) {
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::vector<int> rot;
        rot.insert(rot.end(), w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
        if (!(w < rot)) return false;
    }
    return true;
}

// Seeded, reduced random word over the first n_gens generators of alpha.
inline ccalc::Word random_reduced_word(std::mt19937_64& rng, const ccalc::Alphabet& alpha,
                                       int length) {
    std::vector<ccalc::Letter> ls;
    while (static_cast<int>(ls.size()) < length) {
        const auto& g = alpha.at(static_cast<std::int32_t>(rng() % alpha.size()) + 1);
        auto sign = static_cast<std::int8_t>(rng() % 2 == 0 ? 1 : -1);
        if (!ls.empty() && ls.back().gen == g && ls.back().sign == -sign) continue;
        ls.push_back({g, sign});
    }
    return ccalc::reduce(ls);
}

inline ccalc::Series random_series(std::mt19937_64& rng, int n_vars, int trunc_degree,
                                   int max_terms) {
    std::vector<ccalc::Term> terms;
    const int count = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
    for (int t = 0; t < count; ++t) {
        std::vector<std::int32_t> vars;
        const int deg = static_cast<int>(rng() % static_cast<unsigned>(trunc_degree + 1));
        for (int i = 0; i < deg; ++i)
            vars.push_back(static_cast<std::int32_t>(rng() % static_cast<unsigned>(n_vars)) + 1);
        auto coeff = static_cast<long long>(rng() % 11) - 5;
        if (coeff == 0) coeff = 1;
        terms.push_back(ccalc::Term{ccalc::Monomial(std::move(vars)), ccalc::BigInt(coeff)});
    }
    return ccalc::Series::from_terms(trunc_degree, std::move(terms));
}

// Every binary tree shape over leaves lo..hi of alpha, leaves in index order.
inline std::vector<ccalc::BracketExpr> all_tree_shapes(const ccalc::Alphabet& alpha, int lo,
                                                       int hi) {
    std::vector<ccalc::BracketExpr> out;
    if (lo == hi) {
        out.push_back(ccalc::BracketExpr::leaf(alpha.at(lo)));
        return out;
    }
    for (int mid = lo; mid < hi; ++mid) {
        for (const auto& left : all_tree_shapes(alpha, lo, mid))
            for (const auto& right : all_tree_shapes(alpha, mid + 1, hi))
                out.push_back(ccalc::BracketExpr::bracket(left.clone(), right.clone()));
    }
    return out;
}

// Scoped monomial-budget override.
struct BudgetGuard {
    std::size_t saved;
    explicit BudgetGuard(std::size_t cap) : saved(ccalc::monomial_budget()) {
        ccalc::set_monomial_budget(cap);
    }
    ~BudgetGuard() { ccalc::set_monomial_budget(saved); }
};

} // namespace oracles

#endif
