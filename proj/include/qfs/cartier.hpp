#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qfs/linalg.hpp"
#include "qfs/polyring.hpp"

namespace qfs {

/// All monomials of weighted degree d = sum q_i, in canonical order.
class MonomialBasis {
public:
    explicit MonomialBasis(RingPtr ring);

    const Ring& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    std::size_t size() const { return monomials_.size(); }
    const std::vector<ExponentVector>& monomials() const { return monomials_; }
    const ExponentVector& operator[](std::size_t i) const { return monomials_[i]; }
    std::optional<std::size_t> index_of(const ExponentVector& e) const;

    /// Coordinates of a degree-d polynomial. Throws UsageError on any term
    /// outside the basis.
    Vector coordinates(const Polynomial& h) const;
    /// (M_1, ..., M_m) v.
    Polynomial combine(const Vector& v) const;

private:
    RingPtr ring_;
    std::vector<ExponentVector> monomials_;
    std::unordered_map<ExponentVector, std::size_t, ExponentHash> index_;
};

inline MonomialBasis basis(RingPtr ring) { return MonomialBasis(std::move(ring)); }

/// The linear-algebra data attached to a degree-d form f:
///   v_f       coefficients of f in the basis,
///   lambda_i  = u(f^(p-2) M_i), a constant,
///   T         column j holds the coordinates of u(Delta(f) f^(p-2) M_j).
/// Height and non-splitting index are read off the rows
///   R_1 = F(lambda), R_(n+1) = F(R_n) T.
struct FrobeniusBundle {
    MonomialBasis basis;
    Polynomial f;
    Polynomial delta_f;
    Vector v_f;
    Vector lambda;
    Matrix T;

    std::size_t m() const { return basis.size(); }
    const Field& field() const { return basis.ring().field(); }
};

FrobeniusBundle bundle(const Polynomial& f);

/// lambda for f: entries u(f^(p-2) M_i).
Vector lambda_vector(const MonomialBasis& b, const Polynomial& f);

/// Matrix of h -> u(defect * f^(p-2) h) on degree-d forms, where `defect`
/// plays the role of Delta(f). Used both for T and for the shifted matrices
/// of lifts (defect = Delta(f) - G(c)^p).
Matrix frobenius_matrix(const MonomialBasis& b, const Polynomial& f, const Polynomial& defect);

/// A value in {1, 2, ...} or infinity, where infinity means "not reached
/// within `cap` steps".
struct CappedIndex {
    std::optional<unsigned> value;
    unsigned cap = 0;

    bool is_finite() const { return value.has_value(); }
    std::string to_string() const;
    bool operator==(const CappedIndex&) const = default;
};

/// R_1, ..., R_n for the given lambda and matrix.
std::vector<Vector> krylov_rows(const Vector& lambda, const Matrix& t, unsigned n);

/// Default height cap. Over F_p the rows are lambda T^(n-1); if
/// lambda T^i v_f vanishes for all i < m it vanishes on the whole Krylov
/// space, so m steps decide the height. Over F_(p^e) the recursion is only
/// semilinear and m*e is a heuristic.
unsigned default_height_cap(const FrobeniusBundle& b);
bool height_cap_is_heuristic(const FrobeniusBundle& b);

/// Least n <= cap with R_n v_f != 0.
CappedIndex height(const FrobeniusBundle& b, std::optional<unsigned> cap = std::nullopt);

/// Least n <= cap with rank(R_1; ...; R_n) <= n - 1. Returns infinity
/// immediately when the height (at its default cap) is finite. Default cap
/// m + 1, which always terminates.
CappedIndex ns_index(const FrobeniusBundle& b, std::optional<unsigned> cap = std::nullopt);
/// Same, given an already computed height.
CappedIndex ns_index(const FrobeniusBundle& b, const CappedIndex& known_height, std::optional<unsigned> cap);

enum class Family { quartic_k3, weighted_sextic_k3, general_cy };
enum class SigmaNote { equals_tau, tau_or_tau_plus_1_char2_quartic, not_applicable };

std::string to_string(Family f);
std::string to_string(SigmaNote s);
Family classify_family(const Ring& ring);

/// A pair of variables (i, j) such that f vanishes on the coordinate line
/// {x_i = x_j = 0}, if one exists.
std::optional<std::pair<std::size_t, std::size_t>> coordinate_line(const Polynomial& f);

struct ReportOptions {
    std::optional<unsigned> height_cap;
    std::optional<unsigned> ns_cap;
    /// For K3 families stop the height search at 11: K3 heights lie in {1..10, inf}.
    bool k3_fast_path = true;
};

struct InvariantReport {
    Family family = Family::general_cy;
    std::size_t basis_size = 0;
    CappedIndex height;
    CappedIndex ns;
    std::optional<CappedIndex> tau; // K3 families only
    SigmaNote sigma_note = SigmaNote::not_applicable;
    std::optional<std::pair<std::size_t, std::size_t>> line;
    std::string height_method;
    std::string ns_method;
    bool heuristic_cap = false;
};

InvariantReport artin_report(const Polynomial& f, const ReportOptions& options = {});
InvariantReport artin_report(const FrobeniusBundle& b, const ReportOptions& options = {});

struct FedderResult {
    std::optional<unsigned> height; // least n with the corner coefficient nonzero
    unsigned checked_through = 0;   // all n <= checked_through were tested
};

/// Height from the Fedder-type criterion: least n with
/// f^(p-1) (f^(p(p-2)) Delta(f))^(1 + p + ... + p^(n-2)) not in m^[p^n].
/// Products are computed modulo m^[p^n]. Prime fields with p in {2, 3}
/// and n_max <= 4 only.
FedderResult fedder_height_oracle(const Polynomial& f, unsigned n_max);

/// The n x m matrix with rows R_(c,1), ..., R_(c,n) of the recursion
/// driven by T_c = T - c lambda. For c = 0 these are the ns rank rows.
Matrix g_matrix(const FrobeniusBundle& b, const Vector& c, unsigned n);

} // namespace qfs
