#include "ccalc/magnus.hpp"

#include <stdexcept>
#include <unordered_map>

#include "series_kernels.hpp"

namespace ccalc {

Series letter_factor(std::int32_t index, bool inverse, int truncation_degree) {
    if (truncation_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
    if (index < 1) throw std::invalid_argument("variable index must be >= 1");
    std::vector<Term> terms;
    terms.push_back(Term{Monomial{}, BigInt(1)});
    const int top = inverse ? truncation_degree : std::min(1, truncation_degree);
    std::vector<std::int32_t> vars;
    for (int e = 1; e <= top; ++e) {
        vars.push_back(index);
        terms.push_back(Term{Monomial(vars), BigInt(inverse && e % 2 == 1 ? -1 : 1)});
    }
    return series_from_sorted(truncation_degree, std::move(terms));
}

namespace {
std::int32_t max_index_of(const Word& w) {
    std::int32_t mx = 0;
    for (const Letter& l : w.letters()) mx = std::max(mx, l.gen.index);
    return mx;
}
} // namespace

Series magnus_expand(const Word& w, int truncation_degree) {
    if (truncation_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
    auto packing = detail::Packing::fit(max_index_of(w), truncation_degree);
    if (packing) {
        detail::PackedSeries acc;
        acc.emplace_back(0, BigInt(1));
        for (const Letter& l : w.letters())
            acc = detail::mul_letter_factor(acc, l.gen.index, l.sign < 0, truncation_degree,
                                            *packing);
        return series_from_sorted(truncation_degree,
                                  detail::unpack_terms(std::move(acc), *packing));
    }
    // Indices or degree too large to pack; fall back to plain series products.
    Series acc = Series::one(truncation_degree);
    for (const Letter& l : w.letters())
        acc = series_mul_reference(acc, letter_factor(l.gen.index, l.sign < 0,
                                                      truncation_degree));
    return acc;
}

bool in_gamma(const Word& w, int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k == 1) return true;
    return magnus_expand(w, k - 1).is_one();
}

WeightResult lcs_weight(const Word& w, int k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    Series s = magnus_expand(w, k_max);
    auto d = min_positive_degree(s);
    if (d && *d < k_max) return WeightResult{*d, false};
    return WeightResult{k_max, true};
}

BigInt multilinear_coefficient(const Word& w, std::span<const std::int32_t> target) {
    std::unordered_map<std::int32_t, std::size_t> slot;
    slot.reserve(target.size());
    for (std::size_t j = 0; j < target.size(); ++j) {
        if (target[j] < 1) throw std::invalid_argument("variable index must be >= 1");
        if (!slot.emplace(target[j], j).second)
            throw std::invalid_argument("repeated index in multilinear target");
    }
    std::vector<BigInt> dp(target.size() + 1);
    dp[0] = 1;
    for (const Letter& l : w.letters()) {
        auto it = slot.find(l.gen.index);
        if (it == slot.end()) continue;
        std::size_t j = it->second;
        if (l.sign > 0)
            dp[j + 1] += dp[j];
        else
            dp[j + 1] -= dp[j];
    }
    return dp[target.size()];
}

} // namespace ccalc
