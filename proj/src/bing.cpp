#include "ccalc/bing.hpp"

#include <stdexcept>

namespace ccalc {

StageSpec StageSpec::make(int n, int ambient_dimension) {
    if (n < 0) throw std::invalid_argument("stage must be >= 0");
    if (n > 20) throw std::invalid_argument("stage too large (max 20)");
    if (ambient_dimension < 4) throw std::invalid_argument("ambient dimension must be >= 4");
    return StageSpec{n, ambient_dimension};
}

Alphabet stage_alphabet(const StageSpec& spec) {
    return Alphabet::stage(spec.spheres_per_side());
}

namespace {
BracketExpr complete_tree(const Alphabet& alpha, Side side, int lo, int hi) {
    if (lo == hi) {
        auto g = alpha.find(side, lo);
        if (!g) throw std::logic_error("stage alphabet is missing an ordinal");
        return BracketExpr::leaf(*g);
    }
    int mid = lo + (hi - lo) / 2;
    return BracketExpr::bracket(complete_tree(alpha, side, lo, mid),
                                complete_tree(alpha, side, mid + 1, hi));
}
} // namespace

BracketExpr bing_meridian(const StageSpec& spec, Side side) {
    Alphabet alpha = stage_alphabet(spec);
    return complete_tree(alpha, side, 1, spec.spheres_per_side());
}

BracketExpr clifford_commutator(const StageSpec& spec) {
    return BracketExpr::bracket(bing_meridian(spec, Side::A), bing_meridian(spec, Side::B));
}

} // namespace ccalc
