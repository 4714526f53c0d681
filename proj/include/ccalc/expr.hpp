#ifndef CCALC_EXPR_HPP
#define CCALC_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccalc/word.hpp"

namespace ccalc {

// Binary tree of group commutators with generator leaves: a node stands for
// the commutator [left, right] of its children. Move-only; use clone() for
// explicit deep copies.
class BracketExpr {
public:
    static BracketExpr leaf(Generator g);
    static BracketExpr bracket(BracketExpr left, BracketExpr right);

    bool is_leaf() const { return children_ == nullptr; }
    const Generator& generator() const; // leaf only
    const BracketExpr& left() const;    // node only
    const BracketExpr& right() const;   // node only

    int leaf_count() const;
    // Leaves read left to right.
    std::vector<Generator> leaves() const;

    BracketExpr clone() const;

    BracketExpr(BracketExpr&&) noexcept = default;
    BracketExpr& operator=(BracketExpr&&) noexcept = default;

private:
    BracketExpr() = default;

    Generator gen_{};
    struct Children;
    std::unique_ptr<Children> children_;
};

struct BracketExpr::Children {
    BracketExpr left;
    BracketExpr right;
};

// Structural equality (shape and leaf generators).
bool operator==(const BracketExpr& a, const BracketExpr& b);
inline bool operator!=(const BracketExpr& a, const BracketExpr& b) { return !(a == b); }

// leaf(g) becomes the one-letter word g; a node becomes the group commutator
// of its flattened children. A depth-n complete tree flattens to 4^n letters.
Word flatten(const BracketExpr& e);

// Inverse of parsing up to whitespace: leaf -> label, node -> "[l,r]".
std::string serialize_expr(const BracketExpr& e);

// Result of parsing one input: either a commutator expression or a plain
// word, plus the alphabet derived from the generators mentioned. Indices are
// assigned side-A block first (by ordinal), then side B, so ad-hoc inputs
// agree with stage alphabets on sided names.
struct ParsedInput {
    std::variant<BracketExpr, Word> value;
    Alphabet alphabet;

    bool is_bracket() const { return std::holds_alternative<BracketExpr>(value); }
    const BracketExpr& bracket() const { return std::get<BracketExpr>(value); }
    // The word itself, or the flattening of the bracket expression.
    Word as_word() const;
};

// Grammar (whitespace insignificant, integers signed decimal):
//   expr    := bracket | gen
//   bracket := "[" expr "," expr "]"
//   word    := term { "*" term }
//   term    := gen [ "^" integer ] | "(" word ")" [ "^" integer ]
//   gen     := letter { letter | digit }
// Generator tokens are "xA3" / "xB1", or bare "x3" (side A). Bracket syntax
// yields a BracketExpr; anything else yields a Word with powers expanded.
// Throws ParseError with the offending position.
ParsedInput parse_expr(std::string_view text);

} // namespace ccalc

#endif
