#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfs/cartier.hpp"

namespace qfs {

/// Exponent matrix of a Delsarte K3 form f_A = sum_i prod_j x_j^(a_ij),
/// for weights (1,1,1,1) or (1,1,1,3). Each row satisfies
/// sum_j a_ij q_j = sum_j q_j.
class DelsarteMatrix {
public:
    using Entries = std::array<std::array<std::int64_t, 4>, 4>;

    /// Throws UsageError on negative entries, unsupported weights or a
    /// row of the wrong weighted degree.
    DelsarteMatrix(Entries a, std::array<std::uint32_t, 4> weights, std::string label = {});

    /// From an equation written as a sum of four monomials, e.g.
    /// "x0^4+x0*x1^3+x1*x2^3+x2*x3^3"; rows follow the order of the terms.
    static DelsarteMatrix from_equation(const std::string& equation, std::array<std::uint32_t, 4> weights,
                                        std::string label = {});

    const Entries& entries() const { return a_; }
    const std::array<std::uint32_t, 4>& weights() const { return q_; }
    const std::string& label() const { return label_; }

    /// f_A over F_p.
    Polynomial equation(std::uint32_t p) const;
    std::string equation_text() const;

private:
    Entries a_;
    std::array<std::uint32_t, 4> q_;
    std::string label_;
};

struct EInvariant {
    std::int64_t det = 0;
    DelsarteMatrix::Entries adjugate{};
    std::array<std::int64_t, 4> alpha{};
    std::int64_t g = 0;
    std::int64_t e_a = 0; // |det| / g
};

/// Throws DomainError when det A = 0.
EInvariant e_invariant(const DelsarteMatrix& a);

struct DelsarteFamily {
    std::string table; // "quartic" or "sextic"
    unsigned index = 0;           // position in the combined list, 0..19
    DelsarteMatrix matrix;
    std::int64_t det_abs = 0;     // tabulated |det A|
    std::int64_t e_a = 0;         // tabulated e_A
    std::vector<std::uint32_t> extra_primes; // primes where X_A stays smooth although A is not good there
};

/// The ten quartic rows followed by the ten (1,1,1,3) sextic rows.
const std::vector<DelsarteFamily>& builtin_families();

/// p is good for A when it divides no nonzero entry, nor sum q_j, nor det A.
bool is_good_prime(const DelsarteMatrix& a, std::uint32_t p);

/// p does not divide e_A, and p is good or one of the listed extra primes.
bool is_admissible(const DelsarteMatrix& a, std::uint32_t p, const std::vector<std::uint32_t>& extra_primes = {});

struct DelsarteResult {
    std::int64_t e_a = 0;
    bool supersingular = false;
    unsigned value = 0; // sigma when supersingular, otherwise the height
    unsigned order = 0; // multiplicative order of p mod e_A
};

/// sigma = least n with p^n = -1 mod e_A if one exists, otherwise the height
/// is the order of p mod e_A. Throws DomainError (naming the row) when p is
/// not admissible.
DelsarteResult delsarte_invariants(const DelsarteMatrix& a, std::uint32_t p,
                                   const std::vector<std::uint32_t>& extra_primes = {});
DelsarteResult delsarte_invariants(const DelsarteFamily& family, std::uint32_t p);

struct CrossCheckRow {
    unsigned index = 0;
    std::string equation;
    bool admissible = false;
    std::optional<DelsarteResult> formula;
    std::optional<InvariantReport> matrix;
    bool agree = true;
};

/// Runs the closed form and the matrix engine on every built-in family for
/// which p is admissible.
std::vector<CrossCheckRow> cross_check(std::uint32_t p, const ReportOptions& options = {});

} // namespace qfs
