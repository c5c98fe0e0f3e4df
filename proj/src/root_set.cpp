#include "symex/root_set.hpp"

#include <sstream>
#include <stdexcept>

namespace symex {

RootSet::RootSet(std::vector<ArbInt> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw std::invalid_argument("root set must have at least one element");
    }
    for (const auto& m : elements_) {
        if (m < 1) {
            throw std::invalid_argument("root set elements must be positive, got " + m.str());
        }
    }
}

RootSet::RootSet(std::initializer_list<long long> elements)
    : RootSet(std::vector<ArbInt>(elements.begin(), elements.end())) {}

RootSet RootSet::unchecked(std::vector<ArbInt> elements) {
    RootSet r;
    r.elements_ = std::move(elements);
    return r;
}

RootSet RootSet::parse(std::string_view csv) {
    std::vector<ArbInt> values;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string_view::npos) comma = csv.size();
        std::string token(csv.substr(start, comma - start));
        while (!token.empty() && token.front() == ' ') token.erase(token.begin());
        while (!token.empty() && token.back() == ' ') token.pop_back();
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("invalid root '" + token + "' in '" + std::string(csv) +
                                        "'");
        }
        values.emplace_back(token);
        start = comma + 1;
    }
    return RootSet(std::move(values));
}

RootSet RootSet::ones(std::size_t n) { return RootSet(std::vector<ArbInt>(n, ArbInt(1))); }

RootSet RootSet::iota(std::size_t n) {
    std::vector<ArbInt> values;
    values.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) values.emplace_back(j);
    return RootSet(std::move(values));
}

ArbInt RootSet::accumulate() const {
    ArbInt sum = 0;
    for (const auto& m : elements_) sum += m;
    return sum;
}

std::string RootSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t j = 0; j < elements_.size(); ++j) {
        if (j) out << ',';
        out << elements_[j];
    }
    out << '}';
    return out.str();
}

}  // namespace symex
