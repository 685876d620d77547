#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfs/errors.hpp"

namespace qfs {

class FieldElement;

/// A finite field F_q with q = p^e.
///
/// Elements are stored packed into a single 32-bit word: for e = 1 the
/// residue in [0, p), for e > 1 the coefficient vector (a_0, ..., a_{e-1})
/// of a_0 + a_1 t + ... + a_{e-1} t^{e-1} read as the base-p integer
/// sum a_i p^i. Extension arithmetic goes through log/antilog tables, so
/// extension fields are limited to q <= 2^20.
///
/// Fields are immutable and shared through `FieldPtr`.
class Field {
public:
    static std::shared_ptr<const Field> prime(std::uint32_t p);

    /// Builds F_{p^e}. An empty `modulus` selects the default: the least
    /// monic irreducible of degree e, ordering lower coefficients as the
    /// base-p integer sum a_i p^i. A supplied modulus holds e+1 coefficients
    /// (constant term first), must be monic and irreducible.
    static std::shared_ptr<const Field> extension(std::uint32_t p, unsigned e,
                                                  std::vector<std::uint32_t> modulus = {});

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    std::uint64_t order() const { return q_; }
    /// Coefficients of the defining polynomial, constant term first. Empty for e = 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool same_as(const Field& other) const;

    // Raw arithmetic on packed values. Inputs must be canonical.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t n) const;
    std::uint32_t frob(std::uint32_t a) const;
    std::uint32_t inv_frob(std::uint32_t a) const;
    /// Image of an integer under Z -> F_p -> F_q.
    std::uint32_t from_integer(std::int64_t n) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(std::int64_t n) const;
    /// Element from its coefficient vector in the power basis of t.
    FieldElement from_coefficients(std::span<const std::int64_t> coeffs) const;
    /// The class of t. Only defined for e > 1.
    FieldElement generator() const;
    FieldElement wrap(std::uint32_t raw) const;

    /// Decimal residue for prime fields; polynomial in `t` otherwise ("t+1", "2*t^2").
    std::string format(std::uint32_t a) const;
    /// Inverse of `format`, also accepting any integer and unreduced t-polynomials.
    FieldElement parse(std::string_view text) const;

    /// Lists all packed values of the field, 0 first.
    std::vector<std::uint32_t> elements() const;

private:
    Field(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus);
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
    void build_tables();

    std::uint32_t p_;
    unsigned e_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> powers_of_p_;
    // Extension tables (empty for e = 1).
    std::vector<std::uint32_t> exp_;  // exp_[k] = g^k, k in [0, 2(q-1))
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
    std::vector<std::uint32_t> frob_;
    std::vector<std::uint32_t> inv_frob_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// A value of some `Field`. Arithmetic between elements of different fields
/// raises `UsageError`.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field* field, std::uint32_t raw) : field_(field), raw_(raw) {}

    const Field& field() const;
    std::uint32_t raw() const { return raw_; }
    bool is_zero() const { return raw_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t n) const;
    FieldElement frobenius() const;
    FieldElement inverse_frobenius() const;

    bool operator==(const FieldElement& o) const;

    std::string to_string() const;

private:
    void check_same(const FieldElement& o) const;

    const Field* field_ = nullptr;
    std::uint32_t raw_ = 0;
};

/// Residues mod p^2 for a prime p. Used to realise the Witt-vector lift of
/// the Frobenius defect over Z/p^2.
class IntegerModP2 {
public:
    IntegerModP2(std::uint32_t p, std::int64_t value);

    std::uint32_t prime() const { return p_; }
    std::uint64_t value() const { return v_; }

    IntegerModP2 operator+(const IntegerModP2& o) const;
    IntegerModP2 operator-(const IntegerModP2& o) const;
    IntegerModP2 operator*(const IntegerModP2& o) const;
    bool operator==(const IntegerModP2& o) const { return p_ == o.p_ && v_ == o.v_; }

    /// The Teichmuller representative of c in Z/p^2, i.e. the unique lift
    /// with lift^p = lift. Equals c^p mod p^2.
    static IntegerModP2 teichmuller(std::uint32_t p, std::uint32_t c);

    /// For a value divisible by p, the residue (value / p) mod p.
    std::uint32_t divide_by_p() const;

private:
    std::uint32_t p_;
    std::uint64_t p2_;
    std::uint64_t v_;
};

bool is_prime(std::uint64_t n);

/// Irreducibility over F_p of a monic polynomial (coefficients constant term first).
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p);

} // namespace qfs
