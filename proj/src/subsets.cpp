#include "symex/subsets.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace symex {

IndexSubset::IndexSubset(std::vector<unsigned> indices) : indices_(std::move(indices)) {
    for (std::size_t j = 0; j < indices_.size(); ++j) {
        if (indices_[j] < 1 || (j > 0 && indices_[j] <= indices_[j - 1])) {
            throw std::invalid_argument("subset indices must be 1-based and strictly increasing");
        }
    }
}

bool IndexSubset::contains(const IndexSubset& other) const {
    return std::includes(indices_.begin(), indices_.end(), other.indices_.begin(),
                         other.indices_.end());
}

std::string IndexSubset::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t j = 0; j < indices_.size(); ++j) {
        if (j) out << ',';
        out << indices_[j];
    }
    out << '}';
    return out.str();
}

KSubsets::KSubsets(unsigned n, unsigned k) : n_(n), k_(k) {
    if (k > n) {
        done_ = true;
        return;
    }
    current_.resize(k);
    for (unsigned j = 0; j < k; ++j) current_[j] = j + 1;
}

KSubsets KSubsets::starting_with(unsigned n, unsigned k, unsigned first) {
    KSubsets stream(n, k);
    if (k == 0 || first < 1 || first + k - 1 > n) {
        stream.done_ = true;
        return stream;
    }
    stream.pinned_first_ = first;
    for (unsigned j = 0; j < k; ++j) stream.current_[j] = first + j;
    return stream;
}

void KSubsets::advance() {
    if (done_) return;
    // Rightmost position that can still move: current_[j] < n - (k - 1 - j).
    std::size_t j = k_;
    while (j > 0) {
        --j;
        if (current_[j] < n_ - (k_ - 1 - j)) {
            if (j == 0 && pinned_first_ != 0) break;
            ++current_[j];
            for (std::size_t r = j + 1; r < k_; ++r) current_[r] = current_[r - 1] + 1;
            return;
        }
    }
    done_ = true;
}

std::vector<IndexSubset> k_subsets(unsigned n, unsigned k) {
    std::vector<IndexSubset> out;
    for_each_k_subset(n, k, [&](const std::vector<unsigned>& s) { out.emplace_back(s); });
    return out;
}

ArbInt subset_sum(const RootSet& roots, const std::vector<unsigned>& indices) {
    ArbInt sum = 0;
    for (unsigned j : indices) sum += roots.at(j);
    return sum;
}

std::vector<std::pair<IndexSubset, ArbInt>> subset_sums(const RootSet& roots, unsigned s) {
    std::vector<std::pair<IndexSubset, ArbInt>> out;
    for_each_k_subset(static_cast<unsigned>(roots.size()), s, [&](const std::vector<unsigned>& J) {
        out.emplace_back(IndexSubset(J), subset_sum(roots, J));
    });
    return out;
}

ArbInt count_containing_supersets(unsigned n, const IndexSubset& fixed, unsigned s) {
    ArbInt count = 0;
    for_each_k_subset(n, s, [&](const std::vector<unsigned>& J) {
        if (std::includes(J.begin(), J.end(), fixed.indices().begin(), fixed.indices().end())) {
            ++count;
        }
    });
    return count;
}

}  // namespace symex
