#ifndef CCALC_NCPOLY_HPP
#define CCALC_NCPOLY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccalc/bigint.hpp"
#include "ccalc/word.hpp"

namespace ccalc {

// A word in the series variables: generator indices in multiplication order,
// repetitions allowed. The empty sequence is the unit monomial. Canonical
// order is by degree, then lexicographically on the index sequence.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::int32_t> vars);
    static Monomial var(std::int32_t index);

    int degree() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::int32_t>& vars() const { return vars_; }

    // Concatenation (the non-commutative product).
    Monomial times(const Monomial& rhs) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.vars_ == b.vars_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<std::int32_t> vars_;
};

struct Term {
    Monomial mono;
    BigInt coeff;

    friend bool operator==(const Term& a, const Term& b) = default;
};

// Cap on distinct monomials touched while building any one series. Exceeding
// it raises BudgetError instead of exhausting memory; it never silently drops
// terms. Process-wide, read at operation start.
std::size_t monomial_budget();
void set_monomial_budget(std::size_t cap);

// Element of Z<X_1,...,X_n> truncated past `truncation_degree`. Terms are
// kept sorted in canonical monomial order with no zero coefficients and no
// monomial above the truncation degree; equality is field-wise.
class Series {
public:
    Series() = default; // zero series at truncation degree 0

    static Series zero(int truncation_degree);
    static Series one(int truncation_degree);
    // The series X_index; requires truncation_degree >= 1 (the variable must fit).
    static Series var(std::int32_t index, int truncation_degree);
    // Normalizes: sorts, combines duplicates, drops zeros. Rejects monomials
    // above the truncation degree and indices < 1.
    static Series from_terms(int truncation_degree, std::vector<Term> terms);

    int truncation_degree() const { return trunc_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // Stored coefficient or 0; rejects monomials above the truncation degree.
    BigInt coefficient(const Monomial& m) const;

    // Throws std::logic_error if a representation invariant is broken.
    void check_invariants() const;

    friend bool operator==(const Series& a, const Series& b) = default;

private:
    int trunc_ = 0;
    std::vector<Term> terms_;

    friend Series series_from_sorted(int, std::vector<Term>&&);
};

// Coefficient-wise sum; operands must share a truncation degree.
Series series_add(const Series& a, const Series& b);
Series series_neg(const Series& s);
Series series_sub(const Series& a, const Series& b);

// Non-commutative product, truncated. Dispatches to a packed-key kernel that
// runs OpenMP-parallel on large inputs; the result is bit-identical to the
// serial reference for every input.
Series series_mul(const Series& a, const Series& b);

// Plain single-threaded product on the general representation. Kept as the
// reference implementation the optimized kernels are tested against.
Series series_mul_reference(const Series& a, const Series& b);

// The sub-series of exactly-degree-d terms (0 <= d <= truncation degree).
Series homogeneous_part(const Series& s, int d);

// Smallest degree >= 1 carrying a nonzero term; nullopt if none.
std::optional<int> min_positive_degree(const Series& s);

inline BigInt coefficient(const Series& s, const Monomial& m) { return s.coefficient(m); }

// Re-truncation to new_degree <= truncation_degree.
Series truncate(const Series& s, int new_degree);

inline Series operator+(const Series& a, const Series& b) { return series_add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return series_sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

// Report form, canonical term order: "1 + X_A1*X_A2 - X_A2*X_A1". Runs of one
// variable render as powers. Indices outside the alphabet fall back to "X<i>".
std::string series_to_text(const Series& s, const Alphabet& alpha);

} // namespace ccalc

#endif
