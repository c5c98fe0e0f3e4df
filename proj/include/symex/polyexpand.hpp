#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symex/bigcomb.hpp"
#include "symex/root_set.hpp"

namespace symex {

/// Reduced fraction with a positive denominator.
class Ratio {
public:
    Ratio() = default;
    Ratio(ArbInt num, ArbInt den = 1);

    const ArbInt& num() const noexcept { return num_; }
    const ArbInt& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }

    Ratio abs() const { return Ratio(num_ < 0 ? ArbInt(-num_) : num_, den_); }
    std::string to_string() const;

    friend Ratio operator+(const Ratio& a, const Ratio& b);
    friend Ratio operator*(const Ratio& a, const Ratio& b);
    friend bool operator==(const Ratio&, const Ratio&) = default;

private:
    ArbInt num_ = 0;
    ArbInt den_ = 1;
};

/// K_p^λ: the coefficient of Π m_{j_r}^{λ_r} in C(m_1+…+m_n, i), equal to
/// s(i, p)·multinomial(p; λ)/i! with p = Σλ. It does not depend on n.
/// Zero when p > i; throws InvalidExponentVector for an empty λ.
Ratio monomial_coefficient(unsigned i, const ExponentVector& lambda);

/// All compositions of p into s positive parts, in lexicographic order.
std::vector<ExponentVector> compositions(unsigned p, unsigned s);

/// Every composition λ of p into s parts with its coefficient K_p^λ for order i.
std::vector<std::pair<ExponentVector, Ratio>> support_layer(unsigned i, unsigned s, unsigned p);

struct LayerReport {
    /// Σ over supports s, s-subsets, powers p and compositions, of K·monomial.
    Ratio total;
    /// C(Σm_k, i)
    ArbInt expected;
    /// The s = i, p = i layer on its own.
    Ratio top_layer;
    /// e_i by definition.
    ArbInt esp;
    /// (s, contribution of all s-element supports)
    std::vector<std::pair<unsigned, Ratio>> by_support;
    bool total_matches = false;
    bool top_matches = false;
    bool ok = false;
    std::string note;
};

/// Re-assembles C(Σm_k, i) from the monomial layers and checks that the top
/// layer is e_i. Requires 1 <= i <= n (DomainError otherwise).
LayerReport verify_layer_decomposition(const RootSet& roots, unsigned i);

}  // namespace symex
