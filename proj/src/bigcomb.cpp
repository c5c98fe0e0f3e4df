#include "symex/bigcomb.hpp"

#include <numeric>
#include <sstream>

namespace symex {

ExponentVector::ExponentVector(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned part : parts_) {
        if (part == 0) {
            throw InvalidExponentVector("exponent vector parts must be >= 1");
        }
        total_ += part;
    }
}

std::string ExponentVector::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j) out << ',';
        out << parts_[j];
    }
    out << ')';
    return out.str();
}

ArbInt factorial(unsigned k) {
    ArbInt result = 1;
    for (unsigned j = 2; j <= k; ++j) result *= j;
    return result;
}

ArbInt falling_factorial(const ArbInt& x, unsigned k) {
    ArbInt result = 1;
    for (unsigned j = 0; j < k; ++j) result *= x - j;
    return result;
}

ArbInt rising_factorial(const ArbInt& x, unsigned k) {
    ArbInt result = 1;
    for (unsigned j = 0; j < k; ++j) result *= x + j;
    return result;
}

ArbInt binomial_first(const ArbInt& x, unsigned k) {
    // k! always divides k consecutive integers.
    return falling_factorial(x, k) / factorial(k);
}

ArbInt binomial_second(const ArbInt& x, unsigned k) {
    if (x < 0) {
        throw DomainError("binomial_second requires a non-negative upper index");
    }
    return rising_factorial(x, k) / factorial(k);
}

std::vector<ArbInt> stirling_first_row(unsigned i) {
    // s(r+1, p) = s(r, p-1) - r·s(r, p), s(0, 0) = 1
    std::vector<ArbInt> row{1};
    for (unsigned r = 0; r < i; ++r) {
        std::vector<ArbInt> next(row.size() + 1);
        for (std::size_t p = 0; p < next.size(); ++p) {
            if (p >= 1) next[p] += row[p - 1];
            if (p < row.size()) next[p] -= row[p] * r;
        }
        row = std::move(next);
    }
    return row;
}

ArbInt stirling_first_signed(unsigned i, unsigned p) {
    if (p > i) return 0;
    return stirling_first_row(i)[p];
}

ArbInt multinomial(unsigned p, const ExponentVector& lambda) {
    if (lambda.total() != p) {
        throw InvalidExponentVector("exponent vector " + lambda.to_string() + " does not sum to " +
                                    std::to_string(p));
    }
    ArbInt den = 1;
    for (unsigned part : lambda.parts()) den *= factorial(part);
    return factorial(p) / den;
}

}  // namespace symex
