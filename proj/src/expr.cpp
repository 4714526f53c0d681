#include "ccalc/expr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "ccalc/errors.hpp"

namespace ccalc {

BracketExpr BracketExpr::leaf(Generator g) {
    BracketExpr e;
    e.gen_ = g;
    return e;
}

BracketExpr BracketExpr::bracket(BracketExpr left, BracketExpr right) {
    BracketExpr e;
    e.children_ = std::make_unique<Children>(Children{std::move(left), std::move(right)});
    return e;
}

const Generator& BracketExpr::generator() const {
    if (!is_leaf()) throw std::logic_error("generator() called on bracket node");
    return gen_;
}

const BracketExpr& BracketExpr::left() const {
    if (is_leaf()) throw std::logic_error("left() called on leaf");
    return children_->left;
}

const BracketExpr& BracketExpr::right() const {
    if (is_leaf()) throw std::logic_error("right() called on leaf");
    return children_->right;
}

int BracketExpr::leaf_count() const {
    return is_leaf() ? 1 : children_->left.leaf_count() + children_->right.leaf_count();
}

namespace {
void collect_leaves(const BracketExpr& e, std::vector<Generator>& out) {
    if (e.is_leaf()) {
        out.push_back(e.generator());
    } else {
        collect_leaves(e.left(), out);
        collect_leaves(e.right(), out);
    }
}
} // namespace

std::vector<Generator> BracketExpr::leaves() const {
    std::vector<Generator> out;
    out.reserve(static_cast<std::size_t>(leaf_count()));
    collect_leaves(*this, out);
    return out;
}

BracketExpr BracketExpr::clone() const {
    if (is_leaf()) return leaf(gen_);
    return bracket(children_->left.clone(), children_->right.clone());
}

bool operator==(const BracketExpr& a, const BracketExpr& b) {
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.generator() == b.generator();
    return a.left() == b.left() && a.right() == b.right();
}

Word flatten(const BracketExpr& e) {
    if (e.is_leaf()) return word_from_letter(e.generator());
    return group_commutator(flatten(e.left()), flatten(e.right()));
}

std::string serialize_expr(const BracketExpr& e) {
    if (e.is_leaf()) return e.generator().label();
    return "[" + serialize_expr(e.left()) + "," + serialize_expr(e.right()) + "]";
}

Word ParsedInput::as_word() const {
    if (is_bracket()) return flatten(bracket());
    return std::get<Word>(value);
}

namespace {

// Generator mention before indices are known.
struct GenRef {
    Side side = Side::A;
    std::int32_t ordinal = 0;
    bool sided = false;
};

struct ProvLetter {
    GenRef gen;
    int sign = 1;
};

// Provisional bracket tree over GenRefs.
struct ProvTree {
    GenRef leaf;
    std::unique_ptr<ProvTree> l, r;
    bool is_leaf() const { return l == nullptr; }
};

constexpr long long kMaxOrdinal = 1'000'000;
constexpr long long kMaxExpandedLetters = 10'000'000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParsedInput run() {
        skip_ws();
        if (eof()) fail("empty input");
        if (peek() == '[') {
            ProvTree tree = parse_bracket();
            expect_end();
            return finish_bracket(tree);
        }
        // A lone generator token is a bracket leaf; anything else is a word.
        std::size_t mark = pos_;
        if (is_letter(peek())) {
            GenRef g = parse_gen();
            skip_ws();
            if (eof()) {
                ProvTree tree;
                tree.leaf = g;
                return finish_bracket(tree);
            }
        }
        pos_ = mark;
        std::vector<ProvLetter> letters = parse_word();
        expect_end();
        return finish_word(letters);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::int32_t max_a_ = 0, max_b_ = 0;
    bool any_sided_ = false;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const {
        throw ParseError(msg, pos);
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    static bool is_letter(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) != 0;
    }
    static bool is_digit(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

    void expect(char c, const std::string& what) {
        skip_ws();
        if (eof() || peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
        advance();
    }

    void expect_end() {
        skip_ws();
        if (!eof()) fail("unexpected trailing input");
    }

    // gen := letter { letter | digit }, then validated against the generator
    // name forms "x<ordinal>", "xA<ordinal>", "xB<ordinal>".
    GenRef parse_gen() {
        skip_ws();
        std::size_t start = pos_;
        if (eof() || !is_letter(peek())) fail("expected generator");
        while (!eof() && (is_letter(peek()) || is_digit(peek()))) advance();
        std::string_view tok = text_.substr(start, pos_ - start);

        std::size_t i = 0;
        if (tok[i] != 'x') fail_at("unknown generator token '" + std::string(tok) + "'", start);
        ++i;
        GenRef g;
        if (i < tok.size() && (tok[i] == 'A' || tok[i] == 'B')) {
            g.side = tok[i] == 'A' ? Side::A : Side::B;
            g.sided = true;
            ++i;
        }
        if (i >= tok.size() || !std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(i),
                                            tok.end(), is_digit))
            fail_at("unknown generator token '" + std::string(tok) + "'", start);
        long long ord = 0;
        for (; i < tok.size(); ++i) {
            ord = ord * 10 + (tok[i] - '0');
            if (ord > kMaxOrdinal) fail_at("generator ordinal too large", start);
        }
        if (ord < 1) fail_at("generator ordinal must be >= 1", start);
        g.ordinal = static_cast<std::int32_t>(ord);

        if (g.side == Side::A)
            max_a_ = std::max(max_a_, g.ordinal);
        else
            max_b_ = std::max(max_b_, g.ordinal);
        any_sided_ = any_sided_ || g.sided;
        return g;
    }

    long long parse_int() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (!eof() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            advance();
        }
        if (eof() || !is_digit(peek())) fail("expected integer");
        long long v = 0;
        while (!eof() && is_digit(peek())) {
            v = v * 10 + (peek() - '0');
            if (v > kMaxExpandedLetters) fail_at("exponent too large", start);
            advance();
        }
        return neg ? -v : v;
    }

    ProvTree parse_bracket() {
        expect('[', "to open commutator");
        ProvTree l = parse_expr_node();
        expect(',', "between commutator arguments");
        ProvTree r = parse_expr_node();
        expect(']', "to close commutator");
        ProvTree t;
        t.l = std::make_unique<ProvTree>(std::move(l));
        t.r = std::make_unique<ProvTree>(std::move(r));
        return t;
    }

    ProvTree parse_expr_node() {
        skip_ws();
        if (!eof() && peek() == '[') return parse_bracket();
        ProvTree t;
        t.leaf = parse_gen();
        skip_ws();
        if (!eof() && peek() == '^') fail("power applied inside bracket context");
        return t;
    }

    std::vector<ProvLetter> parse_word() {
        std::vector<ProvLetter> out = parse_term();
        while (true) {
            skip_ws();
            if (eof() || peek() != '*') break;
            advance();
            std::vector<ProvLetter> next = parse_term();
            append_checked(out, next);
        }
        return out;
    }

    std::vector<ProvLetter> parse_term() {
        skip_ws();
        if (eof()) fail("expected term");
        if (peek() == '(') {
            advance();
            std::vector<ProvLetter> inner = parse_word();
            expect(')', "to close group");
            return apply_power(std::move(inner), maybe_power());
        }
        GenRef g = parse_gen();
        std::vector<ProvLetter> one{{g, +1}};
        return apply_power(std::move(one), maybe_power());
    }

    long long maybe_power() {
        skip_ws();
        if (!eof() && peek() == '^') {
            advance();
            return parse_int();
        }
        return 1;
    }

    std::vector<ProvLetter> apply_power(std::vector<ProvLetter> base, long long exp) {
        if (exp == 1) return base;
        std::vector<ProvLetter> unit = std::move(base);
        if (exp < 0) {
            std::reverse(unit.begin(), unit.end());
            for (auto& l : unit) l.sign = -l.sign;
        }
        unsigned long long reps = exp < 0 ? static_cast<unsigned long long>(-exp)
                                          : static_cast<unsigned long long>(exp);
        if (reps * unit.size() > kMaxExpandedLetters) fail("power expansion too large");
        std::vector<ProvLetter> out;
        out.reserve(static_cast<std::size_t>(reps) * unit.size());
        for (unsigned long long i = 0; i < reps; ++i)
            append_checked(out, unit);
        return out;
    }

    void append_checked(std::vector<ProvLetter>& out, const std::vector<ProvLetter>& more) {
        if (out.size() + more.size() > kMaxExpandedLetters) fail("word too long");
        out.insert(out.end(), more.begin(), more.end());
    }

    // Alphabet covering every mentioned ordinal: A1..maxA then B1..maxB. Bare
    // rendering is kept only when no mention carried a side tag.
    Alphabet build_alphabet() const {
        bool sided = any_sided_ || max_b_ > 0;
        std::vector<Generator> gens;
        gens.reserve(static_cast<std::size_t>(max_a_) + static_cast<std::size_t>(max_b_));
        for (std::int32_t i = 1; i <= max_a_; ++i)
            gens.push_back({i, Side::A, i, sided});
        for (std::int32_t i = 1; i <= max_b_; ++i)
            gens.push_back({max_a_ + i, Side::B, i, sided});
        return Alphabet(std::move(gens));
    }

    Generator resolve(const GenRef& g, const Alphabet& alpha) const {
        auto found = alpha.find(g.side, g.ordinal);
        if (!found) throw std::logic_error("parser alphabet is missing a mentioned generator");
        return *found;
    }

    BracketExpr resolve_tree(const ProvTree& t, const Alphabet& alpha) const {
        if (t.is_leaf()) return BracketExpr::leaf(resolve(t.leaf, alpha));
        return BracketExpr::bracket(resolve_tree(*t.l, alpha), resolve_tree(*t.r, alpha));
    }

    ParsedInput finish_bracket(const ProvTree& tree) {
        Alphabet alpha = build_alphabet();
        return ParsedInput{resolve_tree(tree, alpha), alpha};
    }

    ParsedInput finish_word(const std::vector<ProvLetter>& letters) {
        Alphabet alpha = build_alphabet();
        std::vector<Letter> ls;
        ls.reserve(letters.size());
        for (const auto& pl : letters)
            ls.push_back({resolve(pl.gen, alpha), static_cast<std::int8_t>(pl.sign)});
        return ParsedInput{reduce(ls), alpha};
    }
};

} // namespace

ParsedInput parse_expr(std::string_view text) { return Parser(text).run(); }

} // namespace ccalc
