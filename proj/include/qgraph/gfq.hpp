#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qgraph/errors.hpp"

namespace qgraph {

/// One element of F_q, identified by its index in [0, q).
/// The element with index sum(c_i * p^i) is the polynomial sum(c_i * x^i).
/// Index 0 is the additive identity, index 1 the multiplicative identity.
struct FieldElement {
    std::uint16_t index = 0;

    friend bool operator==(FieldElement a, FieldElement b) { return a.index == b.index; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.index != b.index; }
    friend bool operator<(FieldElement a, FieldElement b) { return a.index < b.index; }
};

/// Arithmetic of F_q = F_p[x]/(modulus) for a prime power q = p^e.
/// Fully table-driven; immutable after construction and safe to share
/// across threads. All operations are pure.
class FieldSpec {
public:
    static constexpr unsigned kDefaultTableBound = 256;

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned q() const { return q_; }

    /// Monic irreducible modulus, constant term first (length e + 1).
    const std::vector<std::uint16_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement{0}; }
    FieldElement one() const { return FieldElement{1}; }

    /// Range-checked element constructor.
    FieldElement element(unsigned index) const;

    FieldElement add(FieldElement a, FieldElement b) const {
        return FieldElement{add_[std::size_t(a.index) * q_ + b.index]};
    }
    FieldElement sub(FieldElement a, FieldElement b) const {
        return add(a, neg(b));
    }
    FieldElement mul(FieldElement a, FieldElement b) const {
        return FieldElement{mul_[std::size_t(a.index) * q_ + b.index]};
    }
    FieldElement neg(FieldElement a) const { return FieldElement{neg_[a.index]}; }

    /// Multiplicative inverse; throws DivisionByZero for the zero element.
    FieldElement inv(FieldElement a) const {
        if (a.index == 0)
            throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
        return FieldElement{inv_[a.index]};
    }

    // Raw tables for elimination hot loops (index arithmetic on uint16 rows).
    std::span<const std::uint16_t> raw_add() const { return add_; }
    std::span<const std::uint16_t> raw_mul() const { return mul_; }
    std::span<const std::uint16_t> raw_neg() const { return neg_; }
    std::span<const std::uint16_t> raw_inv() const { return inv_; }

private:
    FieldSpec() = default;
    friend std::shared_ptr<const FieldSpec> make_field(unsigned q, unsigned table_bound);

    unsigned p_ = 0, e_ = 0, q_ = 0;
    std::vector<std::uint16_t> modulus_;
    std::vector<std::uint16_t> add_, mul_; // q*q, row-major by left operand
    std::vector<std::uint16_t> neg_, inv_; // q entries; inv_[0] unused
};

using Field = std::shared_ptr<const FieldSpec>;

/// Builds the field of order q with deterministic tables (the modulus is the
/// lexicographically smallest monic irreducible of degree e over F_p).
/// Throws NotPrimePower if q is not a prime power, LimitExceeded if q is
/// larger than table_bound.
Field make_field(unsigned q, unsigned table_bound = FieldSpec::kDefaultTableBound);

/// Lexicographically smallest monic irreducible polynomial of degree e over
/// F_p, coefficients compared constant-term-first. Returned constant term
/// first with the leading 1 included (length e + 1). For e = 1 returns x.
std::vector<std::uint16_t> find_irreducible(unsigned p, unsigned e);

/// Trial-division irreducibility test for a monic polynomial over F_p
/// (divisors of degree up to deg/2 suffice).
bool is_irreducible(const std::vector<std::uint16_t>& poly, unsigned p);

bool is_prime(unsigned n);

/// q = p^e with p prime, or nullopt.
std::optional<std::pair<unsigned, unsigned>> prime_power_decompose(unsigned q);

enum class ArithOp { add, sub, mul, neg, inv };

/// Dispatch wrapper over the FieldSpec operations; binary ops require b.
FieldElement field_arith(const FieldSpec& spec, ArithOp op, FieldElement a,
                         std::optional<FieldElement> b = std::nullopt);

} // namespace qgraph
