#include "xsep/multisets.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <numeric>

namespace xsep {

namespace {

// Per-position zero counts of a rank list.
std::vector<int> zero_counts(int n, const std::vector<std::uint32_t>& elems) {
    std::vector<int> z(static_cast<std::size_t>(n), 0);
    for (std::uint32_t e : elems)
        for (int k = 1; k <= n; ++k)
            if (((e >> (n - k)) & 1u) == 0) ++z[static_cast<std::size_t>(k - 1)];
    return z;
}

bool counts_balanced(int order, const std::vector<int>& z) {
    return std::all_of(z.begin(), z.end(), [order](int c) { return 2 * c == order; });
}

}  // namespace

BalancedMultiset::BalancedMultiset(int n, std::vector<std::uint32_t> elems)
    : n_(n), elems_(std::move(elems)) {
    if (n < 1 || n > kMaxQubits) throw ValidationError("multiset: bad qubit count");
    for (std::uint32_t e : elems_)
        if (e >= dim_of(n)) throw ValidationError("multiset: element rank out of range");
    std::sort(elems_.begin(), elems_.end());
}

bool BalancedMultiset::is_balanced() const {
    if (elems_.empty() || elems_.size() % 2 != 0) return false;
    return counts_balanced(order(), zero_counts(n_, elems_));
}

bool BalancedMultiset::is_irreducible() const {
    if (!is_balanced()) return false;
    const int m = order();
    if (m == 2) return true;
    if (m > 30) throw CostGuardError("irreducibility: order too large for sub-multiset search",
                                     std::pow(2.0, m));
    // A partition into balanced parts puts element 0 into one part, so it
    // suffices to scan proper subsets containing element 0.
    const std::uint32_t limit = std::uint32_t{1} << (m - 1);
    for (std::uint32_t bits = 1; bits + 1 < limit; ++bits) {
        const std::uint32_t subset = (bits << 1) | 1u;
        std::vector<std::uint32_t> part;
        for (int j = 0; j < m; ++j)
            if ((subset >> j) & 1u) part.push_back(elems_[static_cast<std::size_t>(j)]);
        if (part.size() % 2 != 0) continue;
        if (counts_balanced(static_cast<int>(part.size()), zero_counts(n_, part))) return false;
    }
    return true;
}

BalancedMultiset BalancedMultiset::conjugate() const {
    std::vector<std::uint32_t> out;
    out.reserve(elems_.size());
    for (std::uint32_t e : elems_) out.push_back(complement_rank(n_, e));
    return BalancedMultiset(n_, std::move(out));
}

bool BalancedMultiset::contains(std::uint32_t rank) const {
    return std::binary_search(elems_.begin(), elems_.end(), rank);
}

bool BalancedMultiset::contains_pair(std::uint32_t r1, std::uint32_t r2) const {
    if (r1 == r2)
        return std::count(elems_.begin(), elems_.end(), r1) >= 2;
    return contains(r1) && contains(r2);
}

std::string BalancedMultiset::str() const {
    std::string out = "{";
    for (std::size_t j = 0; j < elems_.size(); ++j) {
        if (j) out += ",";
        out += Index(n_, elems_[j]).str();
    }
    out += "}";
    return out;
}

std::size_t MultisetCatalog::count(int order) const {
    auto it = by_order.find(order);
    return it == by_order.end() ? 0 : it->second.size();
}

std::size_t MultisetCatalog::total() const {
    std::size_t c = 0;
    for (const auto& [o, fam] : by_order) c += fam.size();
    return c;
}

const std::vector<BalancedMultiset>& MultisetCatalog::family(int order) const {
    static const std::vector<BalancedMultiset> empty;
    auto it = by_order.find(order);
    return it == by_order.end() ? empty : it->second;
}

namespace {

// Multisets of size m over d symbols, the loose node-count estimate for the
// cost guard.
double multiset_count_estimate(std::uint32_t d, int m) {
    double v = 1.0;
    for (int j = 1; j <= m; ++j) v *= static_cast<double>(d + static_cast<std::uint32_t>(j) - 1) / j;
    return v;
}

struct DfsState {
    int n;
    int order;
    std::vector<std::uint32_t> chosen;
    std::vector<int> zeros;          // per-position zero counts so far
    std::vector<int> elem_count;     // multiplicity per rank, for conjugate-pair pruning
    std::vector<BalancedMultiset>* out;
};

void dfs(DfsState& st, std::uint32_t from) {
    const int t = static_cast<int>(st.chosen.size());
    if (t == st.order) {
        BalancedMultiset cand(st.n, st.chosen);
        if (cand.is_irreducible()) st.out->push_back(std::move(cand));
        return;
    }
    const int remaining = st.order - t;
    const int half = st.order / 2;
    for (int k = 0; k < st.n; ++k) {
        const int z = st.zeros[static_cast<std::size_t>(k)];
        if (z > half) return;               // too many zeros already
        if (half - z > remaining) return;   // cannot reach the zero quota
        if (t - z > half) return;           // too many ones already
    }
    for (std::uint32_t e = from; e < dim_of(st.n); ++e) {
        // A balanced multiset of order > 2 containing a conjugate pair splits
        // off that pair, so such branches can never be irreducible.
        if (st.order > 2 && st.elem_count[complement_rank(st.n, e)] > 0) continue;
        st.chosen.push_back(e);
        ++st.elem_count[e];
        for (int k = 1; k <= st.n; ++k)
            if (((e >> (st.n - k)) & 1u) == 0) ++st.zeros[static_cast<std::size_t>(k - 1)];
        dfs(st, e);
        for (int k = 1; k <= st.n; ++k)
            if (((e >> (st.n - k)) & 1u) == 0) --st.zeros[static_cast<std::size_t>(k - 1)];
        --st.elem_count[e];
        st.chosen.pop_back();
    }
}

}  // namespace

MultisetCatalog enumerate_irreducible(int n, int max_order) {
    if (n < 1 || n > kMaxQubits)
        throw ValidationError("enumerate: qubit count must be in [1, " +
                              std::to_string(kMaxQubits) + "], got " + std::to_string(n));
    // conjugate pairs always exist; beyond order 2 the cap is 2^{n-1}
    const int cap = std::max(2, static_cast<int>(dim_of(n) / 2));
    if (max_order < 2) throw ValidationError("enumerate: max_order must be >= 2");
    if (max_order > cap)
        throw ValidationError("enumerate: max_order exceeds the maximum irreducible order 2^{n-1} = " +
                              std::to_string(cap));
    double estimate = 0.0;
    for (int m = 2; m <= max_order; m += 2) estimate += multiset_count_estimate(dim_of(n), m);
    if (n > 6 || estimate > 2.5e8)
        throw CostGuardError("enumerate: direct search too large (estimated " +
                                 std::to_string(estimate) + " nodes; direct enumeration requires n <= 6)",
                             estimate);

    MultisetCatalog cat;
    cat.n = n;
    cat.max_order = max_order;
    cat.method = CatalogMethod::Direct;
    for (int m = 2; m <= max_order; m += 2) {
        std::vector<BalancedMultiset> fam;
        DfsState st{n, m, {}, std::vector<int>(static_cast<std::size_t>(n), 0),
                    std::vector<int>(dim_of(n), 0), &fam};
        st.chosen.reserve(static_cast<std::size_t>(m));
        dfs(st, 0);
        std::sort(fam.begin(), fam.end());
        cat.by_order[m] = std::move(fam);
    }
    return cat;
}

std::vector<BalancedMultiset> conjugate_pairs(int n) {
    std::vector<BalancedMultiset> out;
    out.reserve(dim_of(n) / 2);
    for (std::uint32_t r = 0; r < dim_of(n) / 2; ++r)
        out.emplace_back(n, std::vector<std::uint32_t>{r, complement_rank(n, r)});
    return out;
}

std::vector<BalancedMultiset> recursive_t4(int n) {
    if (n < 3) throw ValidationError("recursive order-4 family needs n >= 3");
    const std::uint64_t members = t4_count(n);
    if (members > 50'000'000ull)
        throw CostGuardError("recursive order-4 family: too many members to materialize (" +
                                 std::to_string(members) + ")",
                             static_cast<double>(members));
    std::vector<BalancedMultiset> fam;
    if (n == 3) {
        fam.emplace_back(3, std::vector<std::uint32_t>{0b000, 0b011, 0b101, 0b110});
        fam.emplace_back(3, std::vector<std::uint32_t>{0b001, 0b010, 0b100, 0b111});
        std::sort(fam.begin(), fam.end());
        return fam;
    }
    const int m = n - 1;
    const std::uint32_t hi = dim_of(m);  // value added by a leading 1
    const auto prev = recursive_t4(m);
    fam.reserve(static_cast<std::size_t>(members));
    // Six leading-bit sign patterns with two zeros and two ones.
    static constexpr std::array<std::array<std::uint32_t, 4>, 6> kPatterns{{
        {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}};
    for (const auto& t : prev) {
        const auto& e = t.elems();
        for (const auto& pat : kPatterns) {
            std::vector<std::uint32_t> lifted(4);
            for (int j = 0; j < 4; ++j)
                lifted[static_cast<std::size_t>(j)] =
                    e[static_cast<std::size_t>(j)] + (pat[static_cast<std::size_t>(j)] ? hi : 0);
            fam.emplace_back(n, std::move(lifted));
        }
    }
    // Two lifts per unordered pair of distinct conjugate pairs.
    const std::uint32_t half_prev = dim_of(m) / 2;
    for (std::uint32_t p = 0; p < half_prev; ++p) {
        for (std::uint32_t q = p + 1; q < half_prev; ++q) {
            const std::uint32_t pb = complement_rank(m, p);
            const std::uint32_t qb = complement_rank(m, q);
            fam.emplace_back(n, std::vector<std::uint32_t>{p, pb, q + hi, qb + hi});
            fam.emplace_back(n, std::vector<std::uint32_t>{p + hi, pb + hi, q, qb});
        }
    }
    std::sort(fam.begin(), fam.end());
    return fam;
}

std::uint64_t t4_count(int n) {
    if (n < 3) return 0;
    std::uint64_t c = 2;
    for (int m = 3; m < n; ++m) {
        const std::uint64_t pairs = std::uint64_t{1} << (m - 1);
        c = 6 * c + pairs * (pairs - 1);
    }
    return c;
}

double tilde_delta(const DiagVec& a, const MultisetCatalog& catalog) {
    if (a.n() != catalog.n) throw ValidationError("tilde_delta: catalog qubit count mismatch");
    if (!a.nonnegative()) throw ValidationError("tilde_delta: negative diagonal entry");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [order, fam] : catalog.by_order) {
        for (const auto& t : fam) {
            double logsum = 0.0;
            bool zero = false;
            for (std::uint32_t e : t.elems()) {
                if (a[e] == 0.0) {
                    zero = true;
                    break;
                }
                logsum += std::log(a[e]);
            }
            const double gm = zero ? 0.0 : std::exp(logsum / order);
            best = std::min(best, gm);
        }
    }
    return best;
}

double tilde_delta(const DiagVec& a) { return tilde_delta(a, cached_catalog(a.n())); }

const MultisetCatalog& cached_catalog(int n) {
    if (n < 1 || n > kMaxQubits) throw ValidationError("catalog: bad qubit count");
    static std::array<std::optional<MultisetCatalog>, kMaxQubits + 1> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) {
        if (n <= 4) {
            slot = enumerate_irreducible(n, std::max(2, static_cast<int>(dim_of(n) / 2)));
        } else if (n == 5) {
            slot = enumerate_irreducible(n, 8);
        } else if (n == 6) {
            slot = enumerate_irreducible(n, 6);
        } else {
            MultisetCatalog cat;
            cat.n = n;
            cat.method = CatalogMethod::Recursive;
            cat.by_order[2] = conjugate_pairs(n);
            cat.max_order = 2;
            if (t4_count(n) <= 50'000'000ull) {
                cat.by_order[4] = recursive_t4(n);
                cat.max_order = 4;
            }
            slot = std::move(cat);
        }
    }
    return *slot;
}

}  // namespace xsep
