#ifndef CCALC_WORD_HPP
#define CCALC_WORD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ccalc {

// Generators live on one of two sides, mirroring the two collections of
// spheres whose meridians they represent.
enum class Side : std::uint8_t { A, B };

inline char side_char(Side s) { return s == Side::A ? 'A' : 'B'; }

// One free-group generator. `index` is the 1-based position in the ambient
// alphabet's total order (all side-A generators before side-B, then by
// ordinal); it is what words and monomials are keyed on. `sided` records
// whether the generator was written with an explicit side tag ("xA3") or in
// bare form ("x3", always side A); it affects rendering only.
struct Generator {
    std::int32_t index = 0;
    Side side = Side::A;
    std::int32_t ordinal = 0;
    bool sided = true;

    std::string label() const;     // "xA3", "xB1", or bare "x3"
    std::string var_label() const; // series variable: "X_A3", "X_B1", or "X3"
};

// Symbolic identity is (side, ordinal); the index is its numeric embedding
// within one alphabet. Comparing by side and ordinal keeps expressions equal
// across parsing contexts that assign different index blocks.
inline bool operator==(const Generator& a, const Generator& b) {
    return a.side == b.side && a.ordinal == b.ordinal;
}
inline bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
inline bool operator<(const Generator& a, const Generator& b) {
    if (a.side != b.side) return a.side == Side::A;
    return a.ordinal < b.ordinal;
}

// A finite ordered set of generators with indices 1..size(). Side A precedes
// side B, ordinals ascend within a side. Generators from different alphabets
// must not be mixed in one computation.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Generator> generators);

    // xA1..xAl, xB1..xBl with indices 1..2l.
    static Alphabet stage(int per_side);
    // x1..xn (side A, bare labels) with indices 1..n.
    static Alphabet side_free(int count);

    int size() const { return static_cast<int>(gens_.size()); }
    const Generator& at(std::int32_t index) const; // 1-based
    std::optional<Generator> find(Side side, std::int32_t ordinal) const;
    const std::vector<Generator>& generators() const { return gens_; }

private:
    std::vector<Generator> gens_; // position i holds index i+1
};

// A signed generator occurrence. Powers are always expanded to runs of
// single letters, so the Magnus factor of every letter has the same shape.
struct Letter {
    Generator gen;
    std::int8_t sign = 1; // +1 or -1

    Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
};

inline bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == b.sign;
}
inline bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }

// A freely reduced word: no adjacent letter is followed by its inverse.
// The empty word is the group identity. Construction goes through reduce(),
// so the invariant holds for every reachable value.
class Word {
public:
    Word() = default;

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    friend Word reduce(std::span<const Letter> letters);
    friend Word invert(const Word& u);

private:
    struct reduced_tag {};
    Word(std::vector<Letter> letters, reduced_tag) : letters_(std::move(letters)) {}

    std::vector<Letter> letters_;
};

inline bool operator==(const Word& a, const Word& b) { return a.letters() == b.letters(); }
inline bool operator!=(const Word& a, const Word& b) { return !(a == b); }

// Free reduction; the result equals the input as a group element.
Word reduce(std::span<const Letter> letters);

// Reduced product u*v.
Word multiply(const Word& u, const Word& v);

// Reversed sequence with signs flipped; multiply(u, invert(u)) is the identity.
Word invert(const Word& u);

// Group commutator, convention [u,v] = u v u^-1 v^-1. The lowest Magnus term
// of [x1,x2] is then X1*X2 - X2*X1, with +1 on the leaf-order monomial; every
// sign assertion downstream depends on this choice.
Word group_commutator(const Word& u, const Word& v);

Word word_from_letter(const Generator& g, int sign = +1);

// Grammar form, e.g. "xA1*xA2^-1"; identity renders as "1".
std::string word_to_text(const Word& w);

} // namespace ccalc

#endif
