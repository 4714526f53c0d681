#ifndef CCALC_SERIES_KERNELS_HPP
#define CCALC_SERIES_KERNELS_HPP

// Library-internal: packed-key kernels shared by the series product and the
// Magnus letter scan. Not part of the public headers.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ccalc/bigint.hpp"
#include "ccalc/ncpoly.hpp"

namespace ccalc {

// Builds a Series from terms already in canonical order with no zeros and no
// over-degree monomials.
Series series_from_sorted(int truncation_degree, std::vector<Term>&& terms);

namespace detail {

// Key layout: [8 bits degree][56 bits of index fields, MSB-first, `bits` wide
// each]. Unsigned order on keys equals the canonical monomial order: degree
// sits in the top byte, and equal degrees compare lexicographically because
// their fields are left-aligned over the same count.
struct Packing {
    int bits = 0;     // bits per index field
    int capacity = 0; // fields that fit in 56 bits

    // Fits when every monomial of degree <= trunc_degree over indices
    // 1..max_index packs into one key.
    static std::optional<Packing> fit(std::int32_t max_index, int trunc_degree);
};

std::uint64_t pack(const Monomial& m, const Packing& p);
Monomial unpack(std::uint64_t key, const Packing& p);

using PackedTerm = std::pair<std::uint64_t, BigInt>;
using PackedSeries = std::vector<PackedTerm>; // sorted by key, nonzero coeffs

PackedSeries pack_series(const Series& s, const Packing& p);
std::vector<Term> unpack_terms(PackedSeries&& ps, const Packing& p);

// acc times the Magnus factor of one letter over `index`: 1 + X for a
// positive letter, the truncated alternating geometric series for an inverse.
PackedSeries mul_letter_factor(const PackedSeries& acc, std::int32_t index, bool inverse,
                               int trunc_degree, const Packing& p);

PackedSeries mul_packed(const PackedSeries& a, const PackedSeries& b, int trunc_degree,
                        const Packing& p);

std::int32_t max_index_of(const Series& s);

} // namespace detail
} // namespace ccalc

#endif
