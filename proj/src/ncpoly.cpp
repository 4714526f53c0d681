#include "ccalc/ncpoly.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccalc/errors.hpp"
#include "series_kernels.hpp"

namespace ccalc {

namespace {

std::atomic<std::size_t> g_monomial_budget{10'000'000};

// Activation floors for the parallel kernels. A product call is one region
// over dense BigInt multiplies and pays off early; a letter scan spawns one
// region per letter, so only genuinely large steps amortize the fork/join.
constexpr std::size_t kMulPairsParallelMin = 1u << 15;
constexpr std::size_t kScanParallelMin = 1u << 20;

int worker_count(std::size_t estimated_ops, std::size_t parallel_min) {
    if (estimated_ops < parallel_min) return 1;
#ifdef _OPENMP
    return std::min(omp_get_max_threads(), 8);
#else
    return 1;
#endif
}

constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << 56) - 1;

inline unsigned owner_of(std::uint64_t key, unsigned nthreads) {
    return static_cast<unsigned>((key * 0x9E3779B97F4A7C15ull) >> 56) % nthreads;
}

inline int key_degree(std::uint64_t key) { return static_cast<int>(key >> 56); }

// One more field appended on the right; the caller guarantees capacity.
inline std::uint64_t append_field(std::uint64_t key, std::int32_t index,
                                  const detail::Packing& p) {
    int deg = key_degree(key);
    key += std::uint64_t{1} << 56;
    key |= static_cast<std::uint64_t>(index) << (56 - (deg + 1) * p.bits);
    return key;
}

inline std::uint64_t concat_keys(std::uint64_t ka, std::uint64_t kb,
                                 const detail::Packing& p) {
    int da = key_degree(ka);
    int db = key_degree(kb);
    std::uint64_t fields = (ka & kFieldMask) | ((kb & kFieldMask) >> (da * p.bits));
    return (static_cast<std::uint64_t>(da + db) << 56) | fields;
}

using KeyMap = std::unordered_map<std::uint64_t, BigInt>;

inline void add_into(KeyMap& m, std::uint64_t key, const BigInt& c, bool negate,
                     std::size_t cap) {
    auto [it, inserted] = m.try_emplace(key);
    if (inserted && m.size() > cap) throw BudgetError(cap, m.size());
    if (negate)
        it->second -= c;
    else
        it->second += c;
}

detail::PackedSeries extract_sorted(KeyMap&& m) {
    detail::PackedSeries out;
    out.reserve(m.size());
    for (auto& [k, v] : m)
        if (!v.is_zero()) out.emplace_back(k, std::move(v));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

detail::PackedSeries merge_parts(std::vector<detail::PackedSeries>&& parts) {
    // Keys are disjoint across parts (each key has one owner), so a plain
    // merge suffices.
    while (parts.size() > 1) {
        std::vector<detail::PackedSeries> next;
        next.reserve(parts.size() / 2 + 1);
        for (std::size_t i = 0; i + 1 < parts.size(); i += 2) {
            detail::PackedSeries merged;
            merged.reserve(parts[i].size() + parts[i + 1].size());
            std::merge(std::make_move_iterator(parts[i].begin()),
                       std::make_move_iterator(parts[i].end()),
                       std::make_move_iterator(parts[i + 1].begin()),
                       std::make_move_iterator(parts[i + 1].end()),
                       std::back_inserter(merged),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
            next.push_back(std::move(merged));
        }
        if (parts.size() % 2 == 1) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    return parts.empty() ? detail::PackedSeries{} : std::move(parts.front());
}

// Shared thread-side bookkeeping for the ownership-partitioned scans. Each
// distinct key is counted exactly once (by its owner), so the shared counter
// reproduces the serial map size and the budget fires identically for every
// thread count.
struct BudgetTally {
    std::atomic<std::size_t>& touched;
    std::atomic<bool>& blown;
    std::size_t cap;
    std::size_t fresh = 0;

    bool on_insert() { // returns false when the budget is known blown
        if (++fresh == 1024) {
            std::size_t total = touched.fetch_add(1024, std::memory_order_relaxed) + 1024;
            fresh = 0;
            if (total > cap) blown.store(true, std::memory_order_relaxed);
        }
        return !blown.load(std::memory_order_relaxed);
    }
    void flush() { touched.fetch_add(fresh, std::memory_order_relaxed); }
};

} // namespace

std::size_t monomial_budget() { return g_monomial_budget.load(std::memory_order_relaxed); }

void set_monomial_budget(std::size_t cap) {
    g_monomial_budget.store(std::max<std::size_t>(cap, 1), std::memory_order_relaxed);
}

namespace detail {

std::optional<Packing> Packing::fit(std::int32_t max_index, int trunc_degree) {
    if (max_index < 0) return std::nullopt;
    int bits = std::bit_width(static_cast<std::uint32_t>(std::max(max_index, 1)));
    int capacity = 56 / bits;
    if (trunc_degree > capacity) return std::nullopt;
    return Packing{bits, capacity};
}

std::uint64_t pack(const Monomial& m, const Packing& p) {
    std::uint64_t key = static_cast<std::uint64_t>(m.degree()) << 56;
    int pos = 0;
    for (std::int32_t idx : m.vars()) {
        key |= static_cast<std::uint64_t>(idx) << (56 - (pos + 1) * p.bits);
        ++pos;
    }
    return key;
}

Monomial unpack(std::uint64_t key, const Packing& p) {
    int deg = key_degree(key);
    std::vector<std::int32_t> vars(static_cast<std::size_t>(deg));
    std::uint64_t field_mask = (std::uint64_t{1} << p.bits) - 1;
    for (int i = 0; i < deg; ++i)
        vars[static_cast<std::size_t>(i)] =
            static_cast<std::int32_t>((key >> (56 - (i + 1) * p.bits)) & field_mask);
    return Monomial(std::move(vars));
}

PackedSeries pack_series(const Series& s, const Packing& p) {
    PackedSeries out;
    out.reserve(s.term_count());
    for (const Term& t : s.terms())
        out.emplace_back(pack(t.mono, p), t.coeff);
    return out;
}

std::vector<Term> unpack_terms(PackedSeries&& ps, const Packing& p) {
    std::vector<Term> out;
    out.reserve(ps.size());
    for (auto& [k, c] : ps)
        out.push_back(Term{unpack(k, p), std::move(c)});
    return out;
}

std::int32_t max_index_of(const Series& s) {
    std::int32_t mx = 0;
    for (const Term& t : s.terms())
        for (std::int32_t idx : t.mono.vars()) mx = std::max(mx, idx);
    return mx;
}

// The letter kernel is a merge, not a hash: acc is sorted degree-major, so
// the terms of degree <= trunc - e form a prefix, and appending e copies of
// one index is order-preserving on that prefix. The product is therefore a
// k-way merge of e-shifted sorted streams with equal keys combined.
namespace letter_merge {

// Key of acc[i] viewed through stream e (e extra copies of `index`).
inline std::uint64_t stream_key(std::uint64_t k, int e, std::int32_t index,
                                const Packing& p) {
    for (int t = 0; t < e; ++t) k = append_field(k, index, p);
    return k;
}

struct Head {
    std::uint64_t key;
    int stream;
};
struct HeadGreater {
    bool operator()(const Head& a, const Head& b) const {
        return a.key > b.key || (a.key == b.key && a.stream > b.stream);
    }
};

// Stream prefix lengths: stream e covers acc terms of degree <= trunc - e.
std::vector<std::size_t> stream_ends(const PackedSeries& acc, int streams, int trunc) {
    std::vector<std::size_t> ends(static_cast<std::size_t>(streams));
    for (int e = 0; e < streams; ++e) {
        std::uint64_t bound = static_cast<std::uint64_t>(trunc - e + 1) << 56;
        ends[static_cast<std::size_t>(e)] = static_cast<std::size_t>(
            std::lower_bound(acc.begin(), acc.end(), bound,
                             [](const PackedTerm& t, std::uint64_t v) { return t.first < v; }) -
            acc.begin());
    }
    return ends;
}

// Merges every stream restricted to output keys in [lo_key, hi_key); appends
// to `out` and returns the number of distinct keys seen (counting those that
// cancel to zero). Aborts past `group_cap` by throwing.
std::size_t merge_range(const PackedSeries& acc, std::int32_t index, bool inverse,
                        const Packing& p, const std::vector<std::size_t>& ends,
                        std::uint64_t lo_key, std::uint64_t hi_key, std::size_t group_cap,
                        PackedSeries& out) {
    const int streams = static_cast<int>(ends.size());
    std::vector<std::size_t> pos(ends.size());
    std::priority_queue<Head, std::vector<Head>, HeadGreater> heap;
    for (int e = 0; e < streams; ++e) {
        // first element of stream e with key >= lo_key (streams are sorted)
        std::size_t lo = 0, hi = ends[static_cast<std::size_t>(e)];
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (stream_key(acc[mid].first, e, index, p) < lo_key)
                lo = mid + 1;
            else
                hi = mid;
        }
        pos[static_cast<std::size_t>(e)] = lo;
        if (lo < ends[static_cast<std::size_t>(e)]) {
            std::uint64_t k = stream_key(acc[lo].first, e, index, p);
            if (k < hi_key) heap.push({k, e});
        }
    }

    std::size_t groups = 0;
    bool open = false;         // out.back() is the group being accumulated
    std::uint64_t open_key = 0;
    while (!heap.empty()) {
        auto [key, e] = heap.top();
        heap.pop();
        std::size_t& i = pos[static_cast<std::size_t>(e)];
        const BigInt& c = acc[i].second;
        bool neg = inverse && e % 2 == 1;
        if (open && key == open_key) {
            if (neg)
                out.back().second -= c;
            else
                out.back().second += c;
        } else {
            if (open && out.back().second.is_zero()) out.pop_back();
            if (++groups > group_cap) throw BudgetError(group_cap, groups);
            out.emplace_back(key, neg ? BigInt(-c) : c);
            open = true;
            open_key = key;
        }
        ++i;
        if (i < ends[static_cast<std::size_t>(e)]) {
            std::uint64_t k = stream_key(acc[i].first, e, index, p);
            if (k < hi_key) heap.push({k, e});
        }
    }
    if (open && out.back().second.is_zero()) out.pop_back();
    return groups;
}

} // namespace letter_merge

PackedSeries mul_letter_factor(const PackedSeries& acc, std::int32_t index, bool inverse,
                               int trunc_degree, const Packing& p) {
    const std::size_t cap = monomial_budget();
    const int streams = 1 + (inverse ? trunc_degree : std::min(1, trunc_degree));
    auto ends = letter_merge::stream_ends(acc, streams, trunc_degree);
    std::size_t contributions = 0;
    for (std::size_t e : ends) contributions += e;

    const std::uint64_t kMaxKey = ~std::uint64_t{0};
    const int nthreads = worker_count(contributions, kScanParallelMin);
    if (nthreads <= 1) {
        PackedSeries out;
        out.reserve(acc.size() + acc.size() / 2 + 16);
        letter_merge::merge_range(acc, index, inverse, p, ends, 0, kMaxKey, cap, out);
        return out;
    }

    // Pivots sampled from every stream give key ranges of comparable mass;
    // each range is merged independently and the pieces concatenate sorted.
    std::vector<std::uint64_t> samples;
    for (int e = 0; e < streams; ++e) {
        std::size_t n = ends[static_cast<std::size_t>(e)];
        for (std::size_t s = 1; s <= 32 && n > 0; ++s) {
            std::size_t i = (s * n) / 33;
            if (i < n)
                samples.push_back(
                    letter_merge::stream_key(acc[i].first, e, index, p));
        }
    }
    std::sort(samples.begin(), samples.end());

    std::vector<PackedSeries> parts;
    std::vector<std::size_t> groups_of;
    std::atomic<bool> failed{false};
#pragma omp parallel num_threads(nthreads)
    {
#ifdef _OPENMP
        const unsigned team = static_cast<unsigned>(omp_get_num_threads());
        const unsigned me = static_cast<unsigned>(omp_get_thread_num());
#else
        const unsigned team = 1;
        const unsigned me = 0;
#endif
#pragma omp single
        {
            parts.resize(team);
            groups_of.assign(team, 0);
        }
        std::uint64_t lo = me == 0 ? 0
                                   : samples.empty()
                                         ? kMaxKey
                                         : samples[me * samples.size() / team];
        std::uint64_t hi = me + 1 == team
                               ? kMaxKey
                               : samples.empty()
                                     ? kMaxKey
                                     : samples[(me + 1) * samples.size() / team];
        try {
            if (lo < hi)
                groups_of[me] = letter_merge::merge_range(acc, index, inverse, p, ends, lo,
                                                          hi, cap, parts[me]);
        } catch (const BudgetError&) {
            failed.store(true, std::memory_order_relaxed);
        }
    }
    std::size_t total_groups = 0;
    for (std::size_t g : groups_of) total_groups += g;
    if (failed.load() || total_groups > cap)
        throw BudgetError(cap, std::max(total_groups, cap + 1));

    PackedSeries out;
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    out.reserve(total);
    for (auto& part : parts)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    return out;
}

PackedSeries mul_packed(const PackedSeries& a, const PackedSeries& b, int trunc_degree,
                        const Packing& p) {
    const std::size_t cap = monomial_budget();
    const int nthreads = worker_count(a.size() * b.size(), kMulPairsParallelMin);

    // b is sorted by key, so terms of degree <= d form a prefix.
    auto b_limit = [&](int degree_left) {
        std::uint64_t bound = static_cast<std::uint64_t>(degree_left + 1) << 56;
        return static_cast<std::size_t>(
            std::lower_bound(b.begin(), b.end(), bound,
                             [](const PackedTerm& t, std::uint64_t v) { return t.first < v; }) -
            b.begin());
    };

    if (nthreads <= 1) {
        KeyMap m;
        m.reserve(a.size() + b.size() + 16);
        for (const auto& [ka, ca] : a) {
            std::size_t limit = b_limit(trunc_degree - key_degree(ka));
            for (std::size_t j = 0; j < limit; ++j) {
                add_into(m, concat_keys(ka, b[j].first, p), ca * b[j].second, false, cap);
            }
        }
        return extract_sorted(std::move(m));
    }

    std::vector<PackedSeries> parts;
    std::atomic<std::size_t> touched{0};
    std::atomic<bool> blown{false};
#pragma omp parallel num_threads(nthreads)
    {
#ifdef _OPENMP
        const unsigned team = static_cast<unsigned>(omp_get_num_threads());
        const unsigned me = static_cast<unsigned>(omp_get_thread_num());
#else
        const unsigned team = 1;
        const unsigned me = 0;
#endif
#pragma omp single
        parts.resize(team);
        KeyMap local;
        local.reserve((a.size() + b.size()) / team + 64);
        BudgetTally tally{touched, blown, cap};
        bool stop = false;
        for (std::size_t i = 0; i < a.size() && !stop; ++i) {
            const auto& [ka, ca] = a[i];
            std::size_t limit = b_limit(trunc_degree - key_degree(ka));
            for (std::size_t j = 0; j < limit && !stop; ++j) {
                std::uint64_t key = concat_keys(ka, b[j].first, p);
                if (owner_of(key, team) != me) continue;
                auto [it, inserted] = local.try_emplace(key);
                if (inserted && !tally.on_insert()) stop = true;
                it->second += ca * b[j].second;
            }
        }
        tally.flush();
        if (!blown.load())
            parts[me] = extract_sorted(std::move(local));
    }
    std::size_t total = touched.load();
    if (blown.load() || total > cap) throw BudgetError(cap, total);
    return merge_parts(std::move(parts));
}

} // namespace detail

Monomial::Monomial(std::vector<std::int32_t> vars) : vars_(std::move(vars)) {
    for (std::int32_t v : vars_)
        if (v < 1) throw std::invalid_argument("variable index must be >= 1");
}

Monomial Monomial::var(std::int32_t index) { return Monomial({index}); }

Monomial Monomial::times(const Monomial& rhs) const {
    std::vector<std::int32_t> vars;
    vars.reserve(vars_.size() + rhs.vars_.size());
    vars.insert(vars.end(), vars_.begin(), vars_.end());
    vars.insert(vars.end(), rhs.vars_.begin(), rhs.vars_.end());
    return Monomial(std::move(vars));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.vars_.begin(), a.vars_.end(),
                                                  b.vars_.begin(), b.vars_.end());
}

Series series_from_sorted(int truncation_degree, std::vector<Term>&& terms) {
    Series s;
    s.trunc_ = truncation_degree;
    s.terms_ = std::move(terms);
    return s;
}

Series Series::zero(int truncation_degree) {
    if (truncation_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
    return series_from_sorted(truncation_degree, {});
}

Series Series::one(int truncation_degree) {
    if (truncation_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
    std::vector<Term> terms;
    terms.push_back(Term{Monomial{}, BigInt(1)});
    return series_from_sorted(truncation_degree, std::move(terms));
}

Series Series::var(std::int32_t index, int truncation_degree) {
    if (truncation_degree < 1)
        throw std::invalid_argument("variable does not fit: truncation degree must be >= 1");
    std::vector<Term> terms;
    terms.push_back(Term{Monomial::var(index), BigInt(1)});
    return series_from_sorted(truncation_degree, std::move(terms));
}

Series Series::from_terms(int truncation_degree, std::vector<Term> terms) {
    if (truncation_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
    for (const Term& t : terms)
        if (t.mono.degree() > truncation_degree)
            throw std::invalid_argument("monomial degree exceeds truncation degree");
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.mono < y.mono; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (Term& t : terms) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    if (out.size() > monomial_budget()) throw BudgetError(monomial_budget(), out.size());
    return series_from_sorted(truncation_degree, std::move(out));
}

bool Series::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.degree() == 0 && terms_[0].coeff == 1;
}

BigInt Series::coefficient(const Monomial& m) const {
    if (m.degree() > trunc_)
        throw std::invalid_argument("monomial degree exceeds truncation degree");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono < key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return BigInt(0);
}

void Series::check_invariants() const {
    if (trunc_ < 0) throw std::logic_error("negative truncation degree");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff.is_zero()) throw std::logic_error("stored zero coefficient");
        if (terms_[i].mono.degree() > trunc_) throw std::logic_error("over-degree monomial");
        for (std::int32_t v : terms_[i].mono.vars())
            if (v < 1) throw std::logic_error("variable index below 1");
        if (i > 0 && !(terms_[i - 1].mono < terms_[i].mono))
            throw std::logic_error("terms not in canonical order");
    }
}

namespace {
void require_same_degree(const Series& a, const Series& b) {
    if (a.truncation_degree() != b.truncation_degree())
        throw std::invalid_argument("mismatched truncation degrees");
}
} // namespace

Series series_add(const Series& a, const Series& b) {
    require_same_degree(a, b);
    std::vector<Term> out;
    out.reserve(a.term_count() + b.term_count());
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->mono < ib->mono)) {
            out.push_back(*ia++);
        } else if (ia == ea || ib->mono < ia->mono) {
            out.push_back(*ib++);
        } else {
            BigInt c = ia->coeff + ib->coeff;
            if (!c.is_zero()) out.push_back(Term{ia->mono, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    return series_from_sorted(a.truncation_degree(), std::move(out));
}

Series series_neg(const Series& s) {
    std::vector<Term> out = s.terms();
    for (Term& t : out) t.coeff = -t.coeff;
    return series_from_sorted(s.truncation_degree(), std::move(out));
}

Series series_sub(const Series& a, const Series& b) { return series_add(a, series_neg(b)); }

Series series_mul_reference(const Series& a, const Series& b) {
    require_same_degree(a, b);
    const int d = a.truncation_degree();
    const std::size_t cap = monomial_budget();
    std::map<Monomial, BigInt> acc;
    for (const Term& ta : a.terms()) {
        for (const Term& tb : b.terms()) {
            if (ta.mono.degree() + tb.mono.degree() > d) continue;
            auto [it, inserted] = acc.try_emplace(ta.mono.times(tb.mono));
            if (inserted && acc.size() > cap) throw BudgetError(cap, acc.size());
            it->second += ta.coeff * tb.coeff;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back(Term{m, std::move(c)});
    return series_from_sorted(d, std::move(out));
}

Series series_mul(const Series& a, const Series& b) {
    require_same_degree(a, b);
    const int d = a.truncation_degree();
    auto packing =
        detail::Packing::fit(std::max(detail::max_index_of(a), detail::max_index_of(b)), d);
    if (!packing) return series_mul_reference(a, b);
    auto result = detail::mul_packed(detail::pack_series(a, *packing),
                                     detail::pack_series(b, *packing), d, *packing);
    return series_from_sorted(d, detail::unpack_terms(std::move(result), *packing));
}

Series homogeneous_part(const Series& s, int d) {
    if (d < 0 || d > s.truncation_degree())
        throw std::invalid_argument("degree out of range");
    std::vector<Term> out;
    for (const Term& t : s.terms())
        if (t.mono.degree() == d) out.push_back(t);
    return series_from_sorted(s.truncation_degree(), std::move(out));
}

std::optional<int> min_positive_degree(const Series& s) {
    for (const Term& t : s.terms())
        if (t.mono.degree() >= 1) return t.mono.degree();
    return std::nullopt;
}

Series truncate(const Series& s, int new_degree) {
    if (new_degree < 0 || new_degree > s.truncation_degree())
        throw std::invalid_argument("degree out of range");
    std::vector<Term> out;
    for (const Term& t : s.terms())
        if (t.mono.degree() <= new_degree) out.push_back(t);
    return series_from_sorted(new_degree, std::move(out));
}

namespace {
std::string var_text(std::int32_t index, const Alphabet& alpha) {
    if (index >= 1 && index <= alpha.size()) return alpha.at(index).var_label();
    return "X" + std::to_string(index);
}

std::string mono_text(const Monomial& m, const Alphabet& alpha) {
    std::string out;
    const auto& vars = m.vars();
    std::size_t i = 0;
    while (i < vars.size()) {
        std::size_t j = i;
        while (j < vars.size() && vars[j] == vars[i]) ++j;
        if (!out.empty()) out += '*';
        out += var_text(vars[i], alpha);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}
} // namespace

std::string series_to_text(const Series& s, const Alphabet& alpha) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const Term& t : s.terms()) {
        bool negative = t.coeff < 0;
        BigInt mag = negative ? BigInt(-t.coeff) : t.coeff;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (t.mono.degree() == 0) {
            out += to_decimal(mag);
        } else {
            if (mag != 1) out += to_decimal(mag) + "*";
            out += mono_text(t.mono, alpha);
        }
    }
    return out;
}

} // namespace ccalc
