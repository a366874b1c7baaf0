// Balanced multisets of n-bit indices: a multiset is balanced when every bit
// position holds as many 0s as 1s, and irreducible when no nonempty proper
// sub-multiset is balanced.  Enumeration is a depth-first search over
// nondecreasing rank sequences with per-position balance pruning; order-4
// families can also be built recursively across qubit counts.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xsep/vectors.hpp"

namespace xsep {

class BalancedMultiset {
public:
    /// Elements are sorted on construction (canonical form).
    BalancedMultiset(int n, std::vector<std::uint32_t> elems);

    int n() const { return n_; }
    int order() const { return static_cast<int>(elems_.size()); }
    const std::vector<std::uint32_t>& elems() const { return elems_; }

    bool is_balanced() const;
    /// Balanced with no nonempty proper balanced sub-multiset.
    bool is_irreducible() const;

    BalancedMultiset conjugate() const;

    bool contains(std::uint32_t rank) const;
    /// Multiset containment of {r1, r2}.
    bool contains_pair(std::uint32_t r1, std::uint32_t r2) const;

    std::string str() const;

    friend bool operator==(const BalancedMultiset& a, const BalancedMultiset& b) {
        return a.n_ == b.n_ && a.elems_ == b.elems_;
    }
    friend auto operator<=>(const BalancedMultiset& a, const BalancedMultiset& b) {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        return a.elems_ <=> b.elems_;
    }

private:
    int n_;
    std::vector<std::uint32_t> elems_;
};

enum class CatalogMethod { Direct, Recursive };

/// Families of irreducible balanced multisets keyed by order, each family
/// sorted canonically.
struct MultisetCatalog {
    int n = 0;
    int max_order = 0;
    CatalogMethod method = CatalogMethod::Direct;
    std::map<int, std::vector<BalancedMultiset>> by_order;

    std::size_t count(int order) const;
    std::size_t total() const;
    const std::vector<BalancedMultiset>& family(int order) const;
};

/// Complete catalog of irreducible balanced multisets of order <= max_order.
/// Guarded: n <= 6 and an estimated search size below ~2.5e8 nodes; violations
/// raise CostGuardError carrying the estimate.
MultisetCatalog enumerate_irreducible(int n, int max_order);

/// All conjugate pairs {i, complement(i)} (the order-2 family).
std::vector<BalancedMultiset> conjugate_pairs(int n);

/// The order-4 family built recursively from the (n-1)-qubit one: six
/// leading-bit sign patterns per order-4 member plus two lifts per pair of
/// disjoint conjugate pairs.  Requires n >= 3.
std::vector<BalancedMultiset> recursive_t4(int n);

/// Cardinality of the order-4 family by the recursion
/// #T_{n+1,4} = 6 #T_{n,4} + 2^{n-1}(2^{n-1}-1), #T_{3,4} = 2.
std::uint64_t t4_count(int n);

/// Minimum geometric mean of `a` over the catalog's multisets.  With a full
/// catalog this is the irreducible-balanced-multiset upper bound for the
/// diagonal dual functional; partial catalogs still give a valid bound.
double tilde_delta(const DiagVec& a, const MultisetCatalog& catalog);

/// tilde_delta against the cached default catalog for a.n().
double tilde_delta(const DiagVec& a);

/// Lazily built per-n catalog: full for n <= 4, orders <= 8 for n = 5,
/// orders <= 6 for n = 6, orders {2, 4} (recursive) for n >= 7.  Materializing
/// the recursive order-4 family is memory-guarded; beyond the guard only the
/// order-2 family is present.
const MultisetCatalog& cached_catalog(int n);

}  // namespace xsep
