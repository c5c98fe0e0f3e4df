#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "symex/bigcomb.hpp"
#include "symex/root_set.hpp"

namespace symex {

/// Strictly increasing 1-based positions j₁ < … < j_k into a RootSet.
class IndexSubset {
public:
    IndexSubset() = default;
    /// Throws std::invalid_argument unless indices are >= 1 and strictly increasing.
    explicit IndexSubset(std::vector<unsigned> indices);

    const std::vector<unsigned>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }
    bool contains(const IndexSubset& other) const;
    std::string to_string() const;

    friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;

private:
    std::vector<unsigned> indices_;
};

/// Lexicographic stream of the k-subsets of {1..n}, one subset in memory.
///
///     KSubsets stream(4, 2);
///     for (; !stream.done(); stream.advance()) use(stream.current());
///
/// k > n yields nothing; k == 0 yields the empty subset once.
class KSubsets {
public:
    KSubsets(unsigned n, unsigned k);

    /// Restrict to the subsets whose smallest index is `first`. The ranges for
    /// first = 1..n-k+1 partition the full stream in order.
    static KSubsets starting_with(unsigned n, unsigned k, unsigned first);

    bool done() const noexcept { return done_; }
    const std::vector<unsigned>& current() const noexcept { return current_; }
    void advance();

private:
    unsigned n_;
    unsigned k_;
    unsigned pinned_first_ = 0;
    bool done_ = false;
    std::vector<unsigned> current_;
};

/// Visits every k-subset of {1..n} in lexicographic order.
template <typename Fn>
void for_each_k_subset(unsigned n, unsigned k, Fn&& fn) {
    for (KSubsets stream(n, k); !stream.done(); stream.advance()) fn(stream.current());
}

/// Materialized k_subsets(n, k).
std::vector<IndexSubset> k_subsets(unsigned n, unsigned k);

/// Σ_{j∈J} m_j over 1-based indices.
ArbInt subset_sum(const RootSet& roots, const std::vector<unsigned>& indices);

/// One entry per s-subset of the root set, lexicographic, with its element sum.
std::vector<std::pair<IndexSubset, ArbInt>> subset_sums(const RootSet& roots, unsigned s);

/// Counts by enumeration the s-subsets of {1..n} that contain `fixed`.
ArbInt count_containing_supersets(unsigned n, const IndexSubset& fixed, unsigned s);

}  // namespace symex
