#include "qfs/lifts.hpp"

namespace qfs {

namespace {

void require_length(const FrobeniusBundle& b, const Vector& c) {
    if (c.size() != b.m())
        throw UsageError("c has length " + std::to_string(c.size()) + ", expected m = " + std::to_string(b.m()));
    if (!c.field().same_as(b.field())) throw UsageError("c is over a different field");
}

} // namespace

LiftShift t_shifted(const FrobeniusBundle& b, const Vector& c) {
    require_length(b, c);
    return LiftShift{c, subtract(b.T, outer(c, b.lambda))};
}

Matrix rebuild_shifted_matrix(const FrobeniusBundle& b, const Vector& c) {
    require_length(b, c);
    const Polynomial g = b.basis.combine(c);
    return frobenius_matrix(b.basis, b.f, b.delta_f - g.frobenius_power(1));
}

CappedIndex ns_lift(const FrobeniusBundle& b, const LiftShift& shift, std::optional<unsigned> cap) {
    if (height(b).is_finite()) throw UsageError("ns of a lift is only defined here when f has infinite height");
    const unsigned limit = cap.value_or(static_cast<unsigned>(b.m() + 1));
    if (limit == 0) throw UsageError("cap must be at least 1");
    Vector row = b.lambda.frobenius();
    for (unsigned n = 1; n <= limit; ++n) {
        if (n > 1) row = row_times(row.frobenius(), shift.t_c);
        if (row.is_zero()) return {n, limit};
    }
    return {std::nullopt, limit};
}

std::optional<InfiniteLift> infinite_lift(const FrobeniusBundle& b) {
    const Field& k = b.field();
    for (std::size_t j = 0; j < b.m(); ++j) {
        const std::uint32_t lj = b.lambda.raw(j);
        if (lj == 0) continue;
        const std::uint32_t inv = k.inv(lj);
        Vector c = b.T.column(j);
        c.set_raw(j, k.sub(c.raw(j), 1));
        for (std::size_t i = 0; i < c.size(); ++i) c.set_raw(i, k.mul(inv, c.raw(i)));
        return InfiniteLift{j, std::move(c)};
    }
    return std::nullopt;
}

bool verify_infinite_lift(const FrobeniusBundle& b, const InfiniteLift& lift, unsigned cap) {
    const LiftShift shift = t_shifted(b, lift.c);
    Vector ej(b.basis.ring().field_ptr(), b.m());
    ej.set_raw(lift.j, 1);
    if (!(times_column(shift.t_c, ej) == ej)) return false;
    Vector row = b.lambda.frobenius();
    for (unsigned n = 1; n <= cap; ++n) {
        if (n > 1) row = row_times(row.frobenius(), shift.t_c);
        if (row.raw(lift.j) == 0) return false;
    }
    return true;
}

std::vector<FieldElement> m_values(const FrobeniusBundle& b, const Vector& c, unsigned n) {
    require_length(b, c);
    const Field& k = b.field();
    if (k.degree() != 1) throw UsageError("m_values supports prime fields only");
    if (n > 4) throw ResourceError("m_values is capped at n = 4");
    const std::uint32_t p = k.characteristic();
    // u(a b^p) = u(a) b over F_p, so the corner coefficient of
    // G(c) f^(p-2) g g^p ... g^(p^(j-2)) is u(h_(j-1)) with h_0 = G(c) f^(p-2)
    // and h_(i+1) = u(h_i g), where g = f^(p(p-2)) Delta(f).
    const Polynomial g = poly_pow(b.f, std::uint64_t{p} * (p - 2)) * b.delta_f;
    Polynomial h = b.basis.combine(c) * poly_pow(b.f, p - 2);
    std::vector<FieldElement> out;
    for (unsigned j = 1; j <= n; ++j) {
        if (j > 1) h = u_op(h * g);
        out.push_back(u_op(h).coefficient(ExponentVector{}));
    }
    return out;
}

} // namespace qfs
