#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qfs/ffield.hpp"

namespace qfs {

inline constexpr std::size_t kMaxVars = 8;

/// Exponents (e_0, ..., e_N) of a monomial. Unused trailing slots are zero.
struct ExponentVector {
    std::array<std::uint32_t, kMaxVars> e{};

    std::uint32_t& operator[](std::size_t i) { return e[i]; }
    std::uint32_t operator[](std::size_t i) const { return e[i]; }
    bool operator==(const ExponentVector&) const = default;
};

struct ExponentHash {
    std::size_t operator()(const ExponentVector& v) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : v.e) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Weighted polynomial ring k[x_0, ..., x_N] with deg x_i = q_i, together
/// with the Calabi-Yau degree d = q_0 + ... + q_N.
class Ring {
public:
    static std::shared_ptr<const Ring> make(FieldPtr field, std::vector<std::uint32_t> weights);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    std::size_t num_vars() const { return weights_.size(); }
    const std::vector<std::uint32_t>& weights() const { return weights_; }
    std::uint64_t cy_degree() const { return degree_; }
    std::uint32_t characteristic() const { return field_->characteristic(); }

    std::uint64_t weighted_degree(const ExponentVector& v) const;

    /// Canonical order: larger weighted degree first, then lexicographic with
    /// x_0 > x_1 > ... > x_N. Returns true when `a` precedes `b`.
    bool precedes(const ExponentVector& a, const ExponentVector& b) const;

    bool same_as(const Ring& other) const;

private:
    Ring(FieldPtr field, std::vector<std::uint32_t> weights);

    FieldPtr field_;
    std::vector<std::uint32_t> weights_;
    std::uint64_t degree_;
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
    ExponentVector exponent;
    std::uint32_t coeff; // packed field value, never zero inside a Polynomial
};

/// Sparse polynomial over a `Ring`. Terms are kept in the ring's canonical
/// order with no zero coefficients, so equality is structural.
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    /// Combines like terms, drops zeros and sorts.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial monomial(RingPtr ring, const ExponentVector& exponent, std::uint32_t coeff = 1);
    static Polynomial constant(RingPtr ring, std::uint32_t coeff);

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    FieldElement coefficient(const ExponentVector& exponent) const;

    /// The common weighted degree of all terms, if homogeneous and nonzero.
    std::optional<std::uint64_t> homogeneous_degree() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(std::uint32_t c) const;
    bool operator==(const Polynomial& o) const;

    /// (sum c M)^(p^k) = sum c^(p^k) M^(p^k).
    Polynomial frobenius_power(unsigned k = 1) const;

    Polynomial partial_derivative(std::size_t var) const;

    /// Value at a point whose coordinates lie in `field` (which must contain
    /// the coefficient field; used with equal fields or with prime-field
    /// coefficients embedded into an extension).
    std::uint32_t evaluate(const Field& field, std::span<const std::uint32_t> point) const;

private:
    void check_ring(const Polynomial& o) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// Product modulo the Frobenius power ideal (x_0^bound, ..., x_N^bound):
/// terms with any exponent >= bound are discarded. bound = 0 means no truncation.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, std::uint64_t bound);

/// a^n by square-and-multiply, with the p-power part n = p^k m handled by
/// the Frobenius identity.
Polynomial poly_pow(const Polynomial& a, std::uint64_t n);
Polynomial poly_pow_truncated(const Polynomial& a, std::uint64_t n, std::uint64_t bound);

/// The Frobenius defect via the multinomial formula: the sum over
/// compositions alpha of p with every part at most p-1 of
/// (1/p) multinomial(p; alpha) prod (c_i M_i)^alpha_i.
Polynomial delta(const Polynomial& f);

/// The same quantity computed independently in Z/p^2: reduce
/// (F^p - phi(F)) / p mod p with F the Teichmuller lift of f and phi the
/// coefficient-fixing Frobenius lift x_i -> x_i^p. Prime fields only.
Polynomial delta_lift_oracle(const Polynomial& f);

/// The exact integer multinomial(p; alpha) / p reduced mod p, computed with
/// arbitrary-size arithmetic. Test reference for the residue used by `delta`.
std::uint32_t multinomial_over_p_exact(std::span<const std::uint32_t> parts, std::uint32_t p);

/// Projection onto the dual basis element of F_*((x_0...x_N)^(p-1)):
/// keeps terms whose exponents are all congruent to p-1 mod p, maps
/// c x^e to c^(1/p) x^((e - (p-1)) / p).
Polynomial u_op(const Polynomial& f);

/// u applied n times (u^n), i.e. exponents congruent to p^n - 1 mod p^n.
Polynomial u_op_iterated(const Polynomial& f, unsigned n);

/// f in (x_0^(p^n), ..., x_N^(p^n)).
bool in_frobenius_power(const Polynomial& f, unsigned n);

/// Coefficient of (x_0...x_N)^(p^n - 1). Requires f homogeneous of weighted
/// degree (p^n - 1) d (zero is accepted), where it decides membership in
/// the Frobenius power ideal.
FieldElement corner_coefficient(const Polynomial& f, unsigned n);

std::uint64_t checked_prime_power(std::uint32_t p, unsigned n);

/// Parses the polynomial input language:
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [coeff '*'?] factor ('*'? factor)* | coeff
///   factor := var ('^' uint)?
///   var    := 'x' uint | 'x' | 'y' | 'z' | 'w' | 'u'   (aliases for x0..x4)
///   coeff  := uint | '(' t-expression ')'
/// Whitespace is ignored.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

/// Canonical text form in variables x0..xN; parse_poly(format_poly(f)) == f.
std::string format_poly(const Polynomial& f);

} // namespace qfs
