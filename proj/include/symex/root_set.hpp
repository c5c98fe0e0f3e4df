#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symex/bigcomb.hpp"

namespace symex {

/// Ordered multiset m₁…m_n of positive integers.
class RootSet {
public:
    /// Throws std::invalid_argument when empty or when some m_j < 1.
    explicit RootSet(std::vector<ArbInt> elements);
    RootSet(std::initializer_list<long long> elements);

    /// Skips validation. Only for probing behaviour outside the positive
    /// domain (zero roots); nothing computed from such a set is guaranteed.
    static RootSet unchecked(std::vector<ArbInt> elements);

    /// Parses "2,3,4".
    static RootSet parse(std::string_view csv);

    static RootSet ones(std::size_t n);
    static RootSet iota(std::size_t n);

    std::size_t size() const noexcept { return elements_.size(); }
    std::span<const ArbInt> elements() const noexcept { return elements_; }

    /// 1-based access, matching the index convention of IndexSubset.
    const ArbInt& at(unsigned index) const { return elements_.at(index - 1); }

    ArbInt accumulate() const;
    std::string to_string() const;

private:
    RootSet() = default;
    std::vector<ArbInt> elements_;
};

}  // namespace symex
