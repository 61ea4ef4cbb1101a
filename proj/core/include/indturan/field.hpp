#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace indturan {

// (p, m) with q = p^m, or nullopt.
std::optional<std::pair<unsigned, unsigned>> prime_power_decomposition(unsigned q);
unsigned smallest_prime_power_at_least(unsigned x);

// GF(q) for prime powers q <= 32. Elements are 0..q-1, read as base-p
// coefficient vectors of a polynomial reduced modulo a fixed irreducible.
class PrimePowerField {
public:
    using Element = std::uint8_t;

    // Throws NotPrimePower, or TooLarge for q > 32. The field axioms are
    // checked exhaustively before the constructor returns.
    explicit PrimePowerField(unsigned q);

    unsigned order() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }

    Element add(Element a, Element b) const { return add_[a * q_ + b]; }
    Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    // Throws PreconditionFailed for zero.
    Element inv(Element a) const;

    bool axioms_hold() const;

private:
    unsigned q_;
    unsigned p_;
    unsigned m_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    std::vector<Element> inv_;
};

}  // namespace indturan
