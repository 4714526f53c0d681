#include "ccalc/lie_hall.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ccalc {

namespace {
Series lie_expand_at(const BracketExpr& e, int truncation_degree) {
    if (e.is_leaf()) return Series::var(e.generator().index, truncation_degree);
    Series l = lie_expand_at(e.left(), truncation_degree);
    Series r = lie_expand_at(e.right(), truncation_degree);
    return series_sub(series_mul(l, r), series_mul(r, l));
}
} // namespace

Series lie_expand(const BracketExpr& e) { return lie_expand_at(e, e.leaf_count()); }

BigInt leaf_order_coefficient(const BracketExpr& e) {
    std::vector<Generator> leaves = e.leaves();
    std::set<std::int32_t> seen;
    std::vector<std::int32_t> indices;
    indices.reserve(leaves.size());
    for (const Generator& g : leaves) {
        if (!seen.insert(g.index).second)
            throw std::invalid_argument("repeated leaf in bracket expression");
        indices.push_back(g.index);
    }
    return lie_expand(e).coefficient(Monomial(std::move(indices)));
}

int mobius(long long n) {
    if (n < 1) throw std::invalid_argument("mobius argument must be >= 1");
    int prime_count = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0; // square factor
            ++prime_count;
        }
    }
    if (n > 1) ++prime_count;
    return prime_count % 2 == 0 ? 1 : -1;
}

BigInt witt_rank(int n_gens, int k) {
    if (n_gens < 1 || k < 1) throw std::invalid_argument("witt_rank requires n_gens, k >= 1");
    BigInt sum = 0;
    for (long long d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        BigInt pw = boost::multiprecision::pow(BigInt(n_gens),
                                               static_cast<unsigned>(k / d));
        sum += mobius(d) * pw;
    }
    BigInt q = sum / k;
    if (q * k != sum) throw std::logic_error("witt sum not divisible by k");
    return q;
}

namespace {

// w is Lyndon iff it is strictly smaller than every proper suffix.
bool is_lyndon(const std::vector<int>& w, std::size_t from, std::size_t to) {
    for (std::size_t s = from + 1; s < to; ++s) {
        if (!std::lexicographical_compare(w.begin() + static_cast<std::ptrdiff_t>(from),
                                          w.begin() + static_cast<std::ptrdiff_t>(to),
                                          w.begin() + static_cast<std::ptrdiff_t>(s),
                                          w.begin() + static_cast<std::ptrdiff_t>(to)))
            return false;
    }
    return true;
}

// Standard factorization w = u v with v the longest proper Lyndon suffix.
BracketExpr standard_bracketing(const std::vector<int>& w, std::size_t from, std::size_t to,
                                const Alphabet& alpha) {
    if (to - from == 1) return BracketExpr::leaf(alpha.at(w[from] + 1));
    for (std::size_t split = from + 1; split < to; ++split) {
        if (is_lyndon(w, split, to))
            return BracketExpr::bracket(standard_bracketing(w, from, split, alpha),
                                        standard_bracketing(w, split, to, alpha));
    }
    throw std::logic_error("no Lyndon suffix found; input word was not Lyndon");
}

} // namespace

std::vector<BracketExpr> lyndon_basis(int n_gens, int k) {
    if (n_gens < 1 || k < 1)
        throw std::invalid_argument("lyndon_basis requires n_gens, k >= 1");
    Alphabet alpha = Alphabet::side_free(n_gens);
    std::vector<BracketExpr> out;

    // Duval's generation of Lyndon words of length <= k in lexicographic
    // order, filtered to length exactly k.
    std::vector<int> w{0};
    while (true) {
        if (static_cast<int>(w.size()) == k)
            out.push_back(standard_bracketing(w, 0, w.size(), alpha));
        // periodic extension to length k
        std::size_t period = w.size();
        while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() % period]);
        // backtrack past maximal letters
        while (!w.empty() && w.back() == n_gens - 1) w.pop_back();
        if (w.empty()) break;
        ++w.back();
    }
    return out;
}

} // namespace ccalc
