#pragma once

#include <optional>
#include <vector>

#include "qfs/cartier.hpp"

namespace qfs {

/// First-order data of the lift sum ([b_i] + p[c_i]) M_i of f = sum b_i M_i.
struct LiftShift {
    Vector c;
    Matrix t_c; // T - c lambda
};

/// T_c = T - c lambda. Throws UsageError unless length(c) = m.
LiftShift t_shifted(const FrobeniusBundle& b, const Vector& c);

/// The same matrix rebuilt from the shifted defect Delta(f) - G(c)^p, with
/// G(c) = sum c_i M_i. Agrees with t_shifted; kept separate as a check.
Matrix rebuild_shifted_matrix(const FrobeniusBundle& b, const Vector& c);

/// Least n <= cap with the whole row R_(c,n) zero, where R_(c,1) = F(lambda)
/// and R_(c,n+1) = F(R_(c,n)) T_c. Default cap m + 1. Only meaningful when f
/// is not quasi-F-split; a finite height raises UsageError.
CappedIndex ns_lift(const FrobeniusBundle& b, const LiftShift& shift, std::optional<unsigned> cap = std::nullopt);

struct InfiniteLift {
    std::size_t j;
    Vector c;
};

/// For the first j with lambda_j != 0, c = lambda_j^(-1) (T e_j - e_j).
/// Then T_c e_j = e_j and R_(c,n) e_j = (lambda_j)^(p^n) for all n, so the
/// lift never stops. None when lambda = 0.
std::optional<InfiniteLift> infinite_lift(const FrobeniusBundle& b);

/// Checks T_c e_j = e_j and R_(c,n) e_j != 0 for n <= cap.
bool verify_infinite_lift(const FrobeniusBundle& b, const InfiniteLift& lift, unsigned cap);

/// M_1(b, c), ..., M_n(b, c): the corner coefficient of G(c) G_j(b, 0)
/// modulo m^[p^j], where G_1(b, 0) = f^(p-2) and
/// G_j(b, 0) = f^(p-2) (f^(p(p-2)) Delta(f))^(1 + p + ... + p^(j-2)).
/// Prime fields only, n <= 4.
std::vector<FieldElement> m_values(const FrobeniusBundle& b, const Vector& c, unsigned n);

} // namespace qfs
