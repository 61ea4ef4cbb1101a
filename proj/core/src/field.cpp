#include "indturan/field.hpp"

#include <array>
#include <map>

#include "indturan/error.hpp"

namespace indturan {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Monic irreducible polynomials, coefficients from x^0 upwards.
const std::map<unsigned, std::vector<unsigned>>& irreducibles() {
    static const std::map<unsigned, std::vector<unsigned>> table{
        {4, {1, 1, 1}},       {8, {1, 1, 0, 1}},  {9, {2, 2, 1}},          {16, {1, 1, 0, 0, 1}},
        {25, {2, 4, 1}},      {27, {1, 2, 0, 1}}, {32, {1, 0, 1, 0, 0, 1}},
    };
    return table;
}

std::vector<unsigned> digits(unsigned x, unsigned p, unsigned m) {
    std::vector<unsigned> d(m);
    for (unsigned i = 0; i < m; ++i) {
        d[i] = x % p;
        x /= p;
    }
    return d;
}

unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
    unsigned x = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
    return x;
}

}  // namespace

std::optional<std::pair<unsigned, unsigned>> prime_power_decomposition(unsigned q) {
    if (q < 2) return std::nullopt;
    for (unsigned p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        if (!is_prime(p)) return std::nullopt;
        unsigned m = 0;
        while (q % p == 0) {
            q /= p;
            ++m;
        }
        if (q != 1) return std::nullopt;
        return std::make_pair(p, m);
    }
    return std::nullopt;
}

unsigned smallest_prime_power_at_least(unsigned x) {
    unsigned q = x < 2 ? 2 : x;
    while (!prime_power_decomposition(q)) ++q;
    return q;
}

PrimePowerField::PrimePowerField(unsigned q) : q_(q) {
    auto pm = prime_power_decomposition(q);
    if (!pm) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (q > 32) throw Error(ErrorCode::TooLarge, "field tables are stored for q <= 32");
    p_ = pm->first;
    m_ = pm->second;

    std::vector<unsigned> modulus;
    if (m_ > 1) modulus = irreducibles().at(q);

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);
    for (unsigned a = 0; a < q; ++a) {
        auto da = digits(a, p_, m_);
        std::vector<unsigned> dn(m_);
        for (unsigned i = 0; i < m_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<Element>(undigits(dn, p_));
        for (unsigned b = 0; b < q; ++b) {
            auto db = digits(b, p_, m_);
            std::vector<unsigned> sum(m_);
            for (unsigned i = 0; i < m_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[a * q + b] = static_cast<Element>(undigits(sum, p_));

            std::vector<unsigned> prod(2 * m_ - 1, 0);
            for (unsigned i = 0; i < m_; ++i)
                for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            // Reduce modulo the monic modulus from the top degree down.
            for (unsigned deg = 2 * m_ - 2; deg >= m_ && m_ > 1; --deg) {
                unsigned c = prod[deg];
                if (c == 0) continue;
                for (unsigned i = 0; i <= m_; ++i)
                    prod[deg - m_ + i] = (prod[deg - m_ + i] + (p_ - c) * modulus[i]) % p_;
            }
            prod.resize(m_);
            mul_[a * q + b] = static_cast<Element>(undigits(prod, p_));
        }
    }
    for (unsigned a = 1; a < q; ++a)
        for (unsigned b = 1; b < q; ++b)
            if (mul_[a * q + b] == 1) inv_[a] = static_cast<Element>(b);
    if (!axioms_hold()) throw Error(ErrorCode::ValidationFailed, "field axioms fail for q = " + std::to_string(q));
}

PrimePowerField::Element PrimePowerField::inv(Element a) const {
    if (a == 0) throw Error(ErrorCode::PreconditionFailed, "zero has no inverse");
    return inv_[a];
}

bool PrimePowerField::axioms_hold() const {
    const unsigned q = q_;
    for (unsigned a = 0; a < q; ++a) {
        const auto ea = static_cast<Element>(a);
        if (add(ea, 0) != ea || mul(ea, 1) != ea || add(ea, neg(ea)) != 0) return false;
        if (a != 0 && mul(ea, inv_[a]) != 1) return false;
        for (unsigned b = 0; b < q; ++b) {
            const auto eb = static_cast<Element>(b);
            if (add(ea, eb) != add(eb, ea) || mul(ea, eb) != mul(eb, ea)) return false;
            for (unsigned c = 0; c < q; ++c) {
                const auto ec = static_cast<Element>(c);
                if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) return false;
                if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) return false;
                if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) return false;
            }
        }
    }
    return true;
}

}  // namespace indturan
