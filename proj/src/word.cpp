#include "ccalc/word.hpp"

#include <stdexcept>

namespace ccalc {

std::string Generator::label() const {
    std::string out = "x";
    if (sided) out += side_char(side);
    out += std::to_string(ordinal);
    return out;
}

std::string Generator::var_label() const {
    std::string out = "X";
    if (sided) {
        out += '_';
        out += side_char(side);
    }
    out += std::to_string(ordinal);
    return out;
}

Alphabet::Alphabet(std::vector<Generator> generators) : gens_(std::move(generators)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].index != static_cast<std::int32_t>(i) + 1)
            throw std::invalid_argument("alphabet indices must be 1..size in order");
    }
}

Alphabet Alphabet::stage(int per_side) {
    if (per_side < 0) throw std::invalid_argument("per_side must be >= 0");
    std::vector<Generator> gens;
    gens.reserve(2 * static_cast<std::size_t>(per_side));
    for (int i = 1; i <= per_side; ++i)
        gens.push_back({i, Side::A, i, true});
    for (int i = 1; i <= per_side; ++i)
        gens.push_back({per_side + i, Side::B, i, true});
    return Alphabet(std::move(gens));
}

Alphabet Alphabet::side_free(int count) {
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    std::vector<Generator> gens;
    gens.reserve(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i)
        gens.push_back({i, Side::A, i, false});
    return Alphabet(std::move(gens));
}

const Generator& Alphabet::at(std::int32_t index) const {
    if (index < 1 || index > size())
        throw std::out_of_range("generator index out of range");
    return gens_[static_cast<std::size_t>(index) - 1];
}

std::optional<Generator> Alphabet::find(Side side, std::int32_t ordinal) const {
    for (const auto& g : gens_)
        if (g.side == side && g.ordinal == ordinal) return g;
    return std::nullopt;
}

Word reduce(std::span<const Letter> letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return Word(std::move(out), Word::reduced_tag{});
}

Word multiply(const Word& u, const Word& v) {
    std::vector<Letter> cat;
    cat.reserve(u.length() + v.length());
    cat.insert(cat.end(), u.letters().begin(), u.letters().end());
    cat.insert(cat.end(), v.letters().begin(), v.letters().end());
    return reduce(cat);
}

Word invert(const Word& u) {
    std::vector<Letter> out;
    out.reserve(u.length());
    for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
        out.push_back(it->inverse());
    // the reverse of a reduced word is reduced
    return Word(std::move(out), Word::reduced_tag{});
}

Word group_commutator(const Word& u, const Word& v) {
    return multiply(multiply(u, v), multiply(invert(u), invert(v)));
}

Word word_from_letter(const Generator& g, int sign) {
    Letter l{g, static_cast<std::int8_t>(sign < 0 ? -1 : 1)};
    return reduce(std::span<const Letter>(&l, 1));
}

std::string word_to_text(const Word& w) {
    if (w.is_identity()) return "1";
    std::string out;
    std::size_t i = 0;
    const auto& ls = w.letters();
    while (i < ls.size()) {
        // collapse runs of the same letter into a power
        std::size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        long long exp = static_cast<long long>(j - i) * ls[i].sign;
        if (!out.empty()) out += '*';
        out += ls[i].gen.label();
        if (exp != 1) out += "^" + std::to_string(exp);
        i = j;
    }
    return out;
}

} // namespace ccalc
