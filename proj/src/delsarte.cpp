#include "qfs/delsarte.hpp"

#include <algorithm>
#include <numeric>

namespace qfs {

namespace {

bool supported_weights(const std::array<std::uint32_t, 4>& q) {
    return q == std::array<std::uint32_t, 4>{1, 1, 1, 1} || q == std::array<std::uint32_t, 4>{1, 1, 1, 3};
}

std::int64_t det3(const DelsarteMatrix::Entries& a, std::size_t skip_row, std::size_t skip_col) {
    std::array<std::array<std::int64_t, 3>, 3> m{};
    std::size_t r = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (i == skip_row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j == skip_col) continue;
            m[r][c++] = a[i][j];
        }
        ++r;
    }
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::string row_name(const DelsarteMatrix& a) {
    return a.label().empty() ? "matrix " + a.equation_text() : a.label() + " (" + a.equation_text() + ")";
}

} // namespace

DelsarteMatrix::DelsarteMatrix(Entries a, std::array<std::uint32_t, 4> weights, std::string label)
    : a_(a), q_(weights), label_(std::move(label)) {
    if (!supported_weights(q_)) throw UsageError("Delsarte families need weights (1,1,1,1) or (1,1,1,3)");
    const std::int64_t d = std::accumulate(q_.begin(), q_.end(), std::int64_t{0});
    for (std::size_t i = 0; i < 4; ++i) {
        std::int64_t deg = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            if (a_[i][j] < 0) throw UsageError("negative exponent in row " + std::to_string(i));
            deg += a_[i][j] * q_[j];
        }
        if (deg != d)
            throw UsageError("row " + std::to_string(i) + " has weighted degree " + std::to_string(deg) +
                             ", expected " + std::to_string(d));
    }
}

DelsarteMatrix DelsarteMatrix::from_equation(const std::string& equation, std::array<std::uint32_t, 4> weights,
                                             std::string label) {
    auto ring = Ring::make(Field::prime(2), {weights.begin(), weights.end()});
    Entries a{};
    std::size_t row = 0;
    std::size_t start = 0;
    while (start <= equation.size()) {
        std::size_t end = equation.find('+', start);
        if (end == std::string::npos) end = equation.size();
        const Polynomial term = parse_poly(equation.substr(start, end - start), ring);
        if (term.size() != 1) throw UsageError("each summand of a Delsarte equation must be a single monomial");
        if (row == 4) throw UsageError("a Delsarte equation has exactly four monomials");
        for (std::size_t j = 0; j < 4; ++j) a[row][j] = term.terms()[0].exponent[j];
        ++row;
        start = end + 1;
    }
    if (row != 4) throw UsageError("a Delsarte equation has exactly four monomials");
    return DelsarteMatrix(a, weights, std::move(label));
}

Polynomial DelsarteMatrix::equation(std::uint32_t p) const {
    auto ring = Ring::make(Field::prime(p), {q_.begin(), q_.end()});
    std::vector<Term> terms;
    for (const auto& row : a_) {
        Term t{};
        for (std::size_t j = 0; j < 4; ++j) t.exponent[j] = static_cast<std::uint32_t>(row[j]);
        t.coeff = 1;
        terms.push_back(t);
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

std::string DelsarteMatrix::equation_text() const {
    std::string out;
    for (const auto& row : a_) {
        if (!out.empty()) out += "+";
        std::string mono;
        for (std::size_t j = 0; j < 4; ++j) {
            if (row[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(j);
            if (row[j] > 1) mono += "^" + std::to_string(row[j]);
        }
        out += mono;
    }
    return out;
}

EInvariant e_invariant(const DelsarteMatrix& m) {
    const auto& a = m.entries();
    EInvariant r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const std::int64_t minor = det3(a, j, i);
            r.adjugate[i][j] = ((i + j) % 2 == 0) ? minor : -minor;
        }
    for (std::size_t j = 0; j < 4; ++j) r.det += a[0][j] * r.adjugate[j][0];
    if (r.det == 0) throw DomainError("exponent matrix of " + row_name(m) + " is singular");
    const std::int64_t d = r.det < 0 ? -r.det : r.det;
    r.g = d;
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t i = 0; i < 4; ++i) r.alpha[j] += r.adjugate[i][j];
        r.g = std::gcd(r.g, r.alpha[j]);
    }
    r.e_a = d / r.g;
    return r;
}

const std::vector<DelsarteFamily>& builtin_families() {
    static const std::vector<DelsarteFamily> families = [] {
        struct Row {
            const char* eq;
            std::int64_t det_abs, e_a;
            std::vector<std::uint32_t> extra;
        };
        const std::vector<Row> quartic = {
            {"x0^4+x1^4+x2^4+x3^4", 256, 4, {}},
            {"x0^4+x1^4+x2^4+x2x3^3", 192, 12, {}},
            {"x0^4+x1^4+x2^3x3+x3^3x2", 96, 12, {}},
            {"x0^4+x1^4+x1x2^3+x2x3^3", 144, 36, {}},
            {"x0^4+x0x1^3+x2^4+x2x3^3", 144, 6, {}},
            {"x0^4+x1^3x2+x2^3x3+x3^3x1", 112, 4, {3}},
            {"x0^4+x0x1^3+x2^3x3+x3^3x2", 96, 12, {}},
            {"x0^3x1+x1^3x0+x2^3x3+x3^3x2", 64, 4, {3}},
            {"x0^4+x0x1^3+x1x2^3+x2x3^3", 108, 27, {2}},
            {"x0^3x1+x1^3x2+x2^3x3+x3^3x0", 80, 4, {3, 5}},
        };
        const std::vector<Row> sextic = {
            {"x0^6+x1^6+x2^6+x3^2", 432, 6, {}},
            {"x0^6+x1^6+x2^5x1+x3^2", 360, 30, {}},
            {"x0^6+x1^5x2+x2^5x1+x3^2", 288, 6, {5}},
            {"x0^6+x1^6+x2^3x3+x3^2", 216, 6, {}},
            {"x0^6+x1^5x0+x2^5x1+x3^2", 300, 50, {3}},
            {"x0^6+x1^5x0+x2^3x3+x3^2", 180, 15, {}},
            {"x0^6+x1^5x2+x2^3x3+x3^2", 180, 30, {}},
            {"x0^5x1+x1^5x2+x2^5x0+x3^2", 252, 6, {5}},
            {"x0^5x1+x1^5x0+x2^3x3+x3^2", 144, 6, {5}},
            {"x0^5x1+x1^5x2+x2^3x3+x3^2", 150, 25, {2, 3}},
        };
        std::vector<DelsarteFamily> out;
        auto add = [&](const std::vector<Row>& rows, const char* table, std::array<std::uint32_t, 4> w) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const unsigned index = static_cast<unsigned>(out.size());
                std::string label = std::string(table) + " family " + std::to_string(index);
                out.push_back(DelsarteFamily{table, index, DelsarteMatrix::from_equation(rows[i].eq, w, label),
                                             rows[i].det_abs, rows[i].e_a, rows[i].extra});
            }
        };
        add(quartic, "quartic", {1, 1, 1, 1});
        add(sextic, "sextic", {1, 1, 1, 3});
        return out;
    }();
    return families;
}

bool is_good_prime(const DelsarteMatrix& a, std::uint32_t p) {
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    for (const auto& row : a.entries())
        for (auto x : row)
            if (x != 0 && x % p == 0) return false;
    std::int64_t d = 0;
    for (auto q : a.weights()) d += q;
    if (d % p == 0) return false;
    const std::int64_t det = e_invariant(a).det;
    return det % static_cast<std::int64_t>(p) != 0;
}

bool is_admissible(const DelsarteMatrix& a, std::uint32_t p, const std::vector<std::uint32_t>& extra_primes) {
    const EInvariant e = e_invariant(a);
    if (e.e_a % p == 0) return false;
    return is_good_prime(a, p) || std::find(extra_primes.begin(), extra_primes.end(), p) != extra_primes.end();
}

DelsarteResult delsarte_invariants(const DelsarteMatrix& a, std::uint32_t p,
                                   const std::vector<std::uint32_t>& extra_primes) {
    if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    const EInvariant e = e_invariant(a);
    if (e.e_a % p == 0)
        throw DomainError(row_name(a) + ": p = " + std::to_string(p) + " divides e_A = " + std::to_string(e.e_a));
    if (!is_admissible(a, p, extra_primes))
        throw DomainError(row_name(a) + ": p = " + std::to_string(p) +
                          " is a bad prime for this exponent matrix and not known to give a smooth surface");
    DelsarteResult r;
    r.e_a = e.e_a;
    const std::uint64_t mod = static_cast<std::uint64_t>(e.e_a);
    std::uint64_t power = 1 % mod;
    for (unsigned n = 1;; ++n) {
        power = power * p % mod;
        if ((power + 1) % mod == 0 && !r.supersingular && r.value == 0) {
            r.supersingular = true;
            r.value = n;
        }
        if (power == 1 % mod) {
            r.order = n;
            if (!r.supersingular) r.value = n;
            return r;
        }
    }
}

DelsarteResult delsarte_invariants(const DelsarteFamily& family, std::uint32_t p) {
    return delsarte_invariants(family.matrix, p, family.extra_primes);
}

std::vector<CrossCheckRow> cross_check(std::uint32_t p, const ReportOptions& options) {
    std::vector<CrossCheckRow> out;
    for (const auto& fam : builtin_families()) {
        CrossCheckRow row;
        row.index = fam.index;
        row.equation = fam.matrix.equation_text();
        row.admissible = is_admissible(fam.matrix, p, fam.extra_primes);
        if (row.admissible) {
            row.formula = delsarte_invariants(fam, p);
            row.matrix = artin_report(fam.matrix.equation(p), options);
            const auto& f = *row.formula;
            const auto& m = *row.matrix;
            if (f.supersingular) {
                row.agree = !m.height.is_finite() && m.tau && m.tau->value && *m.tau->value == std::min(f.value, 10u);
            } else {
                row.agree = m.height.value && *m.height.value == f.value;
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace qfs
