#ifndef CCALC_MAGNUS_HPP
#define CCALC_MAGNUS_HPP

#include <span>
#include <string>

#include "ccalc/ncpoly.hpp"
#include "ccalc/word.hpp"

namespace ccalc {

// The Magnus embedding sends a positive letter over generator i to 1 + X_i
// and its inverse to the truncated alternating geometric series
// 1 - X_i + X_i^2 - ...; the inverse factor is the exact inverse of 1 + X_i
// in the truncated ring, so the map is a homomorphism at every truncation
// degree. An element lies in gamma_k exactly when its image has no terms of
// degree 1..k-1.

// The factor series of a single letter.
Series letter_factor(std::int32_t index, bool inverse, int truncation_degree);

// Product of the letter factors of w, truncated. Constant term is always 1.
Series magnus_expand(const Word& w, int truncation_degree);

// Membership of w in the k-th lower central series term, decided at the
// minimal truncation degree k-1. gamma_1 is the whole group.
bool in_gamma(const Word& w, int k);

// Weight query result: the exact weight when it is below k_max, otherwise
// the statement "at least k_max" (the identity word always lands here).
struct WeightResult {
    int value = 0;
    bool at_least = false;

    std::string to_text() const {
        return at_least ? "at_least(" + std::to_string(value) + ")" : std::to_string(value);
    }
    friend bool operator==(const WeightResult&, const WeightResult&) = default;
};

// Lowest positive degree of the expansion at truncation k_max, i.e. the
// unique k < k_max with w in gamma_k minus gamma_{k+1}, when one exists.
WeightResult lcs_weight(const Word& w, int k_max);

// Coefficient of X_{i1}...X_{id} (pairwise distinct indices) in the full
// Magnus expansion of w, computed without building the series: a single
// left-to-right scan over states 0..d, where a letter over i_{j+1} advances
// state j with factor equal to its sign. Only the linear term of a letter
// factor can feed a repetition-free monomial, which makes the scan exact;
// it agrees with coefficient(magnus_expand(w, d), target) whenever the full
// expansion is feasible.
BigInt multilinear_coefficient(const Word& w, std::span<const std::int32_t> target);

} // namespace ccalc

#endif
