#ifndef CCALC_BING_HPP
#define CCALC_BING_HPP

#include "ccalc/expr.hpp"
#include "ccalc/word.hpp"

namespace ccalc {

// Stage of the doubling construction: n iterations give l = 2^n spheres per
// side and N = 2l meridian generators in total. The ambient dimension is
// carried for reports only and never changes any symbolic output.
struct StageSpec {
    int n = 0;
    int ambient_dimension = 4;

    static StageSpec make(int n, int ambient_dimension = 4);

    int spheres_per_side() const { return 1 << n; } // l
    int generator_count() const { return 2 << n; }  // N = 2l
};

// xA1..xAl, xB1..xBl.
Alphabet stage_alphabet(const StageSpec& spec);

// Complete binary bracket tree of depth n over one side's generators in
// ordinal order; each doubling step replaces a meridian by the commutator of
// the two meridians below it. n = 0 is the single unspun meridian.
BracketExpr bing_meridian(const StageSpec& spec, Side side);

// [m_A, m_B]: the element the torus relation asserts trivial. Leaf order is
// xA1..xAl, xB1..xBl; 2^(n+1) leaves in total.
BracketExpr clifford_commutator(const StageSpec& spec);

} // namespace ccalc

#endif
