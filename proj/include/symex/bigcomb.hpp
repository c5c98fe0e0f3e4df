#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symex/errors.hpp"

namespace symex {

/// Exact signed integer used for every combinatorial quantity.
using ArbInt = boost::multiprecision::cpp_int;

/// Ordered list of positive exponents λ₁…λ_s; p is their sum.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const noexcept { return parts_; }
    std::size_t support() const noexcept { return parts_.size(); }
    unsigned total() const noexcept { return total_; }

    std::string to_string() const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    std::vector<unsigned> parts_;
    unsigned total_ = 0;
};

ArbInt factorial(unsigned k);

/// x(x-1)...(x-k+1); 1 when k == 0.
ArbInt falling_factorial(const ArbInt& x, unsigned k);

/// x(x+1)...(x+k-1); 1 when k == 0.
ArbInt rising_factorial(const ArbInt& x, unsigned k);

/// Binomial of the first kind, falling_factorial(x, k) / k!.
///
/// Defined for every integer x, so negative upper indices work
/// (C(-3, 2) = 6) and 0 <= x < k gives 0.
ArbInt binomial_first(const ArbInt& x, unsigned k);

/// Binomial of the second kind (multichoose), rising_factorial(x, k) / k!.
/// Requires x >= 0.
ArbInt binomial_second(const ArbInt& x, unsigned k);

/// Signed Stirling number of the first kind s(i, p): the coefficient of
/// N^p in falling_factorial(N, i). Zero for p > i.
ArbInt stirling_first_signed(unsigned i, unsigned p);

/// Row s(i, 0..i) of the signed Stirling triangle.
std::vector<ArbInt> stirling_first_row(unsigned i);

/// p! / (λ₁!·…·λ_s!). Throws InvalidExponentVector if Σλ != p.
ArbInt multinomial(unsigned p, const ExponentVector& lambda);

}  // namespace symex
