#include "qfs/cartier.hpp"

#include <algorithm>
#include <functional>

namespace qfs {

MonomialBasis::MonomialBasis(RingPtr ring) : ring_(std::move(ring)) {
    const auto& w = ring_->weights();
    const std::uint64_t d = ring_->cy_degree();
    ExponentVector cur{};
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
        if (i + 1 == w.size()) {
            if (left % w[i] == 0) {
                cur[i] = static_cast<std::uint32_t>(left / w[i]);
                monomials_.push_back(cur);
            }
            return;
        }
        for (std::uint64_t a = 0; a * w[i] <= left; ++a) {
            cur[i] = static_cast<std::uint32_t>(a);
            rec(i + 1, left - a * w[i]);
        }
        cur[i] = 0;
    };
    rec(0, d);
    std::sort(monomials_.begin(), monomials_.end(),
              [&](const ExponentVector& a, const ExponentVector& b) { return ring_->precedes(a, b); });
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialBasis::index_of(const ExponentVector& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vector MonomialBasis::coordinates(const Polynomial& h) const {
    Vector v(ring_->field_ptr(), size());
    for (const auto& t : h.terms()) {
        auto idx = index_of(t.exponent);
        if (!idx) throw UsageError("polynomial has a term outside the degree-" + std::to_string(ring_->cy_degree()) +
                                   " monomial basis");
        v.set_raw(*idx, t.coeff);
    }
    return v;
}

Polynomial MonomialBasis::combine(const Vector& v) const {
    if (v.size() != size()) throw UsageError("coefficient vector length does not match the basis");
    std::vector<Term> terms;
    for (std::size_t i = 0; i < size(); ++i)
        if (v.raw(i) != 0) terms.push_back({monomials_[i], v.raw(i)});
    return Polynomial::from_terms(ring_, std::move(terms));
}

namespace {

void require_cy_form(const Polynomial& f) {
    if (f.is_zero()) throw UsageError("the zero polynomial has no Frobenius data");
    const auto deg = f.homogeneous_degree();
    if (!deg) throw UsageError("polynomial is not weighted-homogeneous");
    if (*deg != f.ring().cy_degree())
        throw UsageError("polynomial has weighted degree " + std::to_string(*deg) + ", expected d = " +
                         std::to_string(f.ring().cy_degree()));
}

// Index into `b` of e + m - (p-1), divided by p, when every coordinate of
// e + m is congruent to p-1 mod p.
std::optional<std::size_t> corner_image(const MonomialBasis& b, const ExponentVector& e, const ExponentVector& m,
                                        std::uint32_t p) {
    ExponentVector out{};
    for (std::size_t i = 0; i < b.ring().num_vars(); ++i) {
        const std::uint64_t s = std::uint64_t{e[i]} + m[i];
        if (s % p != p - 1) return std::nullopt;
        out[i] = static_cast<std::uint32_t>((s - (p - 1)) / p);
    }
    return b.index_of(out);
}

bool all_corner(const ExponentVector& e, const ExponentVector& m, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        if (std::uint64_t{e[i]} + m[i] != p - 1) return false;
    return true;
}

} // namespace

Vector lambda_vector(const MonomialBasis& b, const Polynomial& f) {
    const Field& k = b.ring().field();
    const std::uint32_t p = k.characteristic();
    const Polynomial fp2 = poly_pow(f, p - 2);
    Vector lambda(b.ring().field_ptr(), b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (const auto& t : fp2.terms()) {
            if (all_corner(t.exponent, b[j], b.ring().num_vars(), p)) {
                lambda.set_raw(j, k.add(lambda.raw(j), k.inv_frob(t.coeff)));
            }
        }
    }
    return lambda;
}

Matrix frobenius_matrix(const MonomialBasis& b, const Polynomial& f, const Polynomial& defect) {
    const Field& k = b.ring().field();
    const std::uint32_t p = k.characteristic();
    const Polynomial product = defect * poly_pow(f, p - 2);
    Matrix t(b.ring().field_ptr(), b.size(), b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (const auto& term : product.terms()) {
            auto i = corner_image(b, term.exponent, b[j], p);
            if (!i) continue;
            t.set_raw(*i, j, k.add(t.raw(*i, j), k.inv_frob(term.coeff)));
        }
    }
    return t;
}

FrobeniusBundle bundle(const Polynomial& f) {
    require_cy_form(f);
    MonomialBasis b(f.ring_ptr());
    Polynomial d = delta(f);
    Vector v = b.coordinates(f);
    Vector lambda = lambda_vector(b, f);
    Matrix t = frobenius_matrix(b, f, d);
    return FrobeniusBundle{std::move(b), f, std::move(d), std::move(v), std::move(lambda), std::move(t)};
}

std::string CappedIndex::to_string() const {
    if (value) return std::to_string(*value);
    return "infinity (cap " + std::to_string(cap) + ")";
}

std::vector<Vector> krylov_rows(const Vector& lambda, const Matrix& t, unsigned n) {
    std::vector<Vector> rows;
    if (n == 0) return rows;
    rows.reserve(n);
    rows.push_back(lambda.frobenius());
    while (rows.size() < n) rows.push_back(row_times(rows.back().frobenius(), t));
    return rows;
}

unsigned default_height_cap(const FrobeniusBundle& b) {
    return static_cast<unsigned>(b.m() * b.field().degree());
}

bool height_cap_is_heuristic(const FrobeniusBundle& b) { return b.field().degree() > 1; }

CappedIndex height(const FrobeniusBundle& b, std::optional<unsigned> cap) {
    const unsigned limit = cap.value_or(default_height_cap(b));
    if (limit == 0) throw UsageError("height cap must be at least 1");
    Vector row = b.lambda.frobenius();
    for (unsigned n = 1; n <= limit; ++n) {
        if (n > 1) row = row_times(row.frobenius(), b.T);
        if (dot(row, b.v_f) != 0) return {n, limit};
        if (row.is_zero()) break; // all later rows vanish too
    }
    return {std::nullopt, limit};
}

CappedIndex ns_index(const FrobeniusBundle& b, const CappedIndex& known_height, std::optional<unsigned> cap) {
    const unsigned limit = cap.value_or(static_cast<unsigned>(b.m() + 1));
    if (limit == 0) throw UsageError("ns cap must be at least 1");
    if (known_height.is_finite()) return {std::nullopt, limit};
    RowSpace space(b.basis.ring().field_ptr(), b.m());
    Vector row = b.lambda.frobenius();
    for (unsigned n = 1; n <= limit; ++n) {
        if (n > 1) row = row_times(row.frobenius(), b.T);
        // rank(R_1..R_(n-1)) = n-1 here, so the rank drops exactly when R_n is dependent
        if (!space.add(row)) return {n, limit};
    }
    return {std::nullopt, limit};
}

CappedIndex ns_index(const FrobeniusBundle& b, std::optional<unsigned> cap) {
    return ns_index(b, height(b), cap);
}

std::string to_string(Family f) {
    switch (f) {
    case Family::quartic_k3: return "quartic_K3";
    case Family::weighted_sextic_k3: return "weighted_sextic_K3";
    case Family::general_cy: return "general_CY";
    }
    return "general_CY";
}

std::string to_string(SigmaNote s) {
    switch (s) {
    case SigmaNote::equals_tau: return "equals_tau";
    case SigmaNote::tau_or_tau_plus_1_char2_quartic: return "tau_or_tau_plus_1_char2_quartic";
    case SigmaNote::not_applicable: return "not_applicable";
    }
    return "not_applicable";
}

Family classify_family(const Ring& ring) {
    auto w = ring.weights();
    std::sort(w.begin(), w.end());
    if (w == std::vector<std::uint32_t>{1, 1, 1, 1}) return Family::quartic_k3;
    if (w == std::vector<std::uint32_t>{1, 1, 1, 3}) return Family::weighted_sextic_k3;
    return Family::general_cy;
}

std::optional<std::pair<std::size_t, std::size_t>> coordinate_line(const Polynomial& f) {
    const std::size_t n = f.ring().num_vars();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool vanishes = true;
            for (const auto& t : f.terms()) {
                if (t.exponent[i] == 0 && t.exponent[j] == 0) {
                    vanishes = false;
                    break;
                }
            }
            if (vanishes) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

InvariantReport artin_report(const FrobeniusBundle& b, const ReportOptions& options) {
    InvariantReport r;
    const Ring& ring = b.basis.ring();
    r.family = classify_family(ring);
    r.basis_size = b.m();
    const bool k3 = r.family != Family::general_cy;

    unsigned hcap = options.height_cap.value_or(default_height_cap(b));
    if (!options.height_cap && k3 && options.k3_fast_path) hcap = std::min(hcap, 11u);
    r.heuristic_cap = !options.height_cap && height_cap_is_heuristic(b) && !(k3 && options.k3_fast_path);
    r.height = height(b, hcap);
    r.height_method = "matrix: least n <= cap with R_n v_f != 0";
    if (r.height.is_finite()) {
        r.ns = {std::nullopt, options.ns_cap.value_or(static_cast<unsigned>(b.m() + 1))};
        r.ns_method = "implied: finite height forces ns = infinity";
    } else {
        r.ns = ns_index(b, r.height, options.ns_cap);
        r.ns_method = "matrix: least n with rank(R_1..R_n) <= n-1";
    }
    if (k3) {
        CappedIndex tau = r.ns;
        if (tau.value) tau.value = std::min(*tau.value, 10u);
        r.tau = tau;
        if (tau.is_finite()) {
            if (r.family == Family::quartic_k3 && ring.characteristic() == 2) {
                r.line = coordinate_line(b.f);
                r.sigma_note = r.line ? SigmaNote::equals_tau : SigmaNote::tau_or_tau_plus_1_char2_quartic;
            } else {
                r.sigma_note = SigmaNote::equals_tau;
            }
        }
    }
    return r;
}

InvariantReport artin_report(const Polynomial& f, const ReportOptions& options) {
    return artin_report(bundle(f), options);
}

FedderResult fedder_height_oracle(const Polynomial& f, unsigned n_max) {
    require_cy_form(f);
    const Ring& ring = f.ring();
    const std::uint32_t p = ring.characteristic();
    if (ring.field().degree() != 1) throw UsageError("the Fedder oracle supports prime fields only");
    if (p != 2 && p != 3) throw UsageError("the Fedder oracle supports p in {2, 3} only");
    if (n_max == 0) throw UsageError("n_max must be at least 1");
    if (n_max > 4) throw ResourceError("the Fedder oracle is capped at n = 4 (degree grows like (p^n - 1) d)");

    FedderResult result;
    const Polynomial delta_f = delta(f);
    for (unsigned n = 1; n <= n_max; ++n) {
        const std::uint64_t bound = checked_prime_power(p, n);
        Polynomial acc = poly_pow_truncated(f, p - 1, bound);
        if (n >= 2) {
            // g = f^(p(p-2)) Delta(f); g^(1 + p + ... + p^(n-2)) = prod_k F^k(g)
            Polynomial g = multiply_truncated(poly_pow_truncated(f, std::uint64_t{p} * (p - 2), bound), delta_f, bound);
            for (unsigned k = 0; k + 2 <= n && !acc.is_zero(); ++k) {
                acc = multiply_truncated(acc, k == 0 ? g : g.frobenius_power(k), bound);
            }
        }
        result.checked_through = n;
        if (!corner_coefficient(acc, n).is_zero()) {
            result.height = n;
            return result;
        }
    }
    return result;
}

Matrix g_matrix(const FrobeniusBundle& b, const Vector& c, unsigned n) {
    if (c.size() != b.m()) throw UsageError("c must have length m = " + std::to_string(b.m()));
    if (n == 0) throw UsageError("g_matrix needs n >= 1");
    const Matrix tc = subtract(b.T, outer(c, b.lambda));
    const auto rows = krylov_rows(b.lambda, tc, n);
    Matrix g(b.basis.ring().field_ptr(), n, b.m());
    for (unsigned i = 0; i < n; ++i) g.set_row(i, rows[i]);
    return g;
}

} // namespace qfs
