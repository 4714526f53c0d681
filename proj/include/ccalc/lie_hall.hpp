#ifndef CCALC_LIE_HALL_HPP
#define CCALC_LIE_HALL_HPP

#include <vector>

#include "ccalc/expr.hpp"
#include "ccalc/ncpoly.hpp"

namespace ccalc {

// Free-Lie-algebra side of the double computation: the associative expansion
// of a bracket tree is computed directly (leaf -> X_g, node -> LR - RL) and
// must match, term for term, the top homogeneous part of the Magnus image of
// the flattened word. Everything here shares the ncpoly carrier but none of
// the Magnus code path.

// Associative expansion, homogeneous of degree = leaf count; the truncation
// degree of the result equals that degree.
Series lie_expand(const BracketExpr& e);

// Coefficient in lie_expand(e) of the monomial reading e's leaves left to
// right. Requires pairwise distinct leaves; +1 for every such tree.
BigInt leaf_order_coefficient(const BracketExpr& e);

// Moebius function by trial factorization.
int mobius(long long n);

// Rank of gamma_k/gamma_{k+1} of the free group on n_gens generators:
// (1/k) * sum over d | k of mobius(d) * n_gens^(k/d).
BigInt witt_rank(int n_gens, int k);

// Standard bracketings of all Lyndon words of length k over the n_gens-letter
// ordered alphabet (side-free x1..xn), sorted by the underlying word. The
// count equals witt_rank(n_gens, k).
std::vector<BracketExpr> lyndon_basis(int n_gens, int k);

} // namespace ccalc

#endif
