#include "qfs/polyring.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace qfs {

namespace {

using TermMap = std::unordered_map<ExponentVector, std::uint32_t, ExponentHash>;

constexpr std::uint64_t kExponentLimit = std::numeric_limits<std::uint32_t>::max();

void accumulate(TermMap& acc, const Field& k, const ExponentVector& e, std::uint32_t c) {
    auto [it, inserted] = acc.try_emplace(e, c);
    if (!inserted) it->second = k.add(it->second, c);
}

std::vector<Term> drain(TermMap& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (const auto& [e, c] : acc)
        if (c != 0) out.push_back({e, c});
    return out;
}

// Returns false when the sum leaves the truncation box (any exponent >= bound).
bool add_exponents(const ExponentVector& a, const ExponentVector& b, std::size_t n, std::uint64_t bound,
                   ExponentVector& out) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t s = std::uint64_t{a[i]} + b[i];
        if (bound != 0 && s >= bound) return false;
        if (s > kExponentLimit) throw ResourceError("exponent overflow in polynomial product");
        out[i] = static_cast<std::uint32_t>(s);
    }
    return true;
}

} // namespace

Ring::Ring(FieldPtr field, std::vector<std::uint32_t> weights)
    : field_(std::move(field)), weights_(std::move(weights)), degree_(0) {
    for (auto w : weights_) degree_ += w;
}

std::shared_ptr<const Ring> Ring::make(FieldPtr field, std::vector<std::uint32_t> weights) {
    if (!field) throw UsageError("ring requires a field");
    if (weights.size() < 2 || weights.size() > kMaxVars)
        throw UsageError("number of variables must be between 2 and " + std::to_string(kMaxVars));
    for (auto w : weights)
        if (w == 0) throw UsageError("variable weights must be positive");
    return std::shared_ptr<const Ring>(new Ring(std::move(field), std::move(weights)));
}

std::uint64_t Ring::weighted_degree(const ExponentVector& v) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) d += std::uint64_t{weights_[i]} * v[i];
    return d;
}

bool Ring::precedes(const ExponentVector& a, const ExponentVector& b) const {
    const auto da = weighted_degree(a), db = weighted_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < weights_.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

bool Ring::same_as(const Ring& other) const {
    return this == &other || (field_->same_as(*other.field_) && weights_ == other.weights_);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial out(std::move(ring));
    const Ring& r = *out.ring_;
    const Field& k = r.field();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return r.precedes(a.exponent, b.exponent); });
    for (const auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
            out.terms_.back().coeff = k.add(out.terms_.back().coeff, t.coeff);
        } else {
            out.terms_.push_back(t);
        }
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.coeff == 0; });
    return out;
}

Polynomial Polynomial::monomial(RingPtr ring, const ExponentVector& exponent, std::uint32_t coeff) {
    return from_terms(std::move(ring), {{exponent, coeff}});
}

Polynomial Polynomial::constant(RingPtr ring, std::uint32_t coeff) {
    return from_terms(std::move(ring), {{ExponentVector{}, coeff}});
}

FieldElement Polynomial::coefficient(const ExponentVector& exponent) const {
    for (const auto& t : terms_)
        if (t.exponent == exponent) return ring_->field().wrap(t.coeff);
    return ring_->field().zero();
}

std::optional<std::uint64_t> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const auto d = ring_->weighted_degree(terms_.front().exponent);
    for (const auto& t : terms_)
        if (ring_->weighted_degree(t.exponent) != d) return std::nullopt;
    return d;
}

void Polynomial::check_ring(const Polynomial& o) const {
    if (!ring_->same_as(*o.ring_)) throw UsageError("polynomials belong to different rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> all(terms_.begin(), terms_.end());
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(ring_, std::move(all));
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff = ring_->field().neg(t.coeff);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const { return multiply_truncated(*this, o, 0); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial out(ring_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff = ring_->field().mul(t.coeff, c);
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_->same_as(*o.ring_) || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].exponent == o.terms_[i].exponent) || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

Polynomial Polynomial::frobenius_power(unsigned k) const {
    const Field& field = ring_->field();
    const std::uint64_t q = checked_prime_power(field.characteristic(), k);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term r{};
        for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
            const std::uint64_t e = std::uint64_t{t.exponent[i]} * q;
            if (e > kExponentLimit) throw ResourceError("exponent overflow in Frobenius power");
            r.exponent[i] = static_cast<std::uint32_t>(e);
        }
        r.coeff = t.coeff;
        for (unsigned j = 0; j < k; ++j) r.coeff = field.frob(r.coeff);
        out.push_back(r);
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::partial_derivative(std::size_t var) const {
    if (var >= ring_->num_vars()) throw UsageError("variable index out of range");
    const Field& k = ring_->field();
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.exponent[var] == 0) continue;
        const std::uint32_t c = k.mul(t.coeff, k.from_integer(t.exponent[var]));
        if (c == 0) continue;
        Term r = t;
        r.exponent[var] -= 1;
        r.coeff = c;
        out.push_back(r);
    }
    return from_terms(ring_, std::move(out));
}

std::uint32_t Polynomial::evaluate(const Field& field, std::span<const std::uint32_t> point) const {
    const Field& own = ring_->field();
    if (!own.same_as(field) && !(own.degree() == 1 && own.characteristic() == field.characteristic()))
        throw UsageError("evaluation field does not contain the coefficient field");
    const std::size_t n = ring_->num_vars();
    if (point.size() != n) throw UsageError("point has the wrong number of coordinates");
    std::uint32_t acc = 0;
    for (const auto& t : terms_) {
        std::uint32_t v = t.coeff;
        for (std::size_t i = 0; i < n && v != 0; ++i)
            if (t.exponent[i]) v = field.mul(v, field.pow(point[i], t.exponent[i]));
        acc = field.add(acc, v);
    }
    return acc;
}

std::uint64_t checked_prime_power(std::uint32_t p, unsigned n) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q > kExponentLimit / p) throw ResourceError("p^n exceeds the 32-bit exponent range");
        q *= p;
    }
    return q;
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, std::uint64_t bound) {
    if (!a.ring().same_as(b.ring())) throw UsageError("polynomials belong to different rings");
    const Ring& r = a.ring();
    const Field& k = r.field();
    const std::size_t n = r.num_vars();
    TermMap acc;
    acc.reserve(a.size() * b.size() / 2 + 1);
    ExponentVector e{};
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            if (!add_exponents(ta.exponent, tb.exponent, n, bound, e)) continue;
            accumulate(acc, k, e, k.mul(ta.coeff, tb.coeff));
        }
    }
    return Polynomial::from_terms(a.ring_ptr(), drain(acc));
}

namespace {

Polynomial truncate(const Polynomial& a, std::uint64_t bound) {
    if (bound == 0) return a;
    std::vector<Term> kept;
    for (const auto& t : a.terms()) {
        bool inside = true;
        for (std::size_t i = 0; i < a.ring().num_vars(); ++i)
            if (t.exponent[i] >= bound) inside = false;
        if (inside) kept.push_back(t);
    }
    return Polynomial::from_terms(a.ring_ptr(), std::move(kept));
}

} // namespace

Polynomial poly_pow_truncated(const Polynomial& a, std::uint64_t n, std::uint64_t bound) {
    const std::uint32_t p = a.ring().characteristic();
    unsigned k = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++k;
    }
    Polynomial result = Polynomial::constant(a.ring_ptr(), 1);
    if (n == 0) return truncate(result, bound); // a^0 = 1
    Polynomial base = truncate(a, bound);
    while (n) {
        if (n & 1) result = multiply_truncated(result, base, bound);
        n >>= 1;
        if (n) base = multiply_truncated(base, base, bound);
    }
    if (k == 0) return result;
    return truncate(result.frobenius_power(k), bound);
}

Polynomial poly_pow(const Polynomial& a, std::uint64_t n) { return poly_pow_truncated(a, n, 0); }

Polynomial delta(const Polynomial& f) {
    const Ring& r = f.ring();
    const Field& k = r.field();
    const std::uint32_t p = k.characteristic();
    const std::size_t n = r.num_vars();

    // inverse factorials 1/a! for a < p, as elements of F_p
    std::vector<std::uint32_t> inv_fact(p, 1);
    {
        std::uint32_t fact = 1;
        for (std::uint32_t a = 1; a < p; ++a) {
            fact = k.mul(fact, k.from_integer(a));
            inv_fact[a] = k.inv(fact);
        }
    }

    // partial[s] = sum over compositions (alpha_1..alpha_i) of s using the
    // terms seen so far, each part <= p-1, of prod (c M)^alpha / alpha!.
    std::vector<TermMap> partial(p + 1);
    partial[0].emplace(ExponentVector{}, 1);
    for (const auto& t : f.terms()) {
        std::vector<Term> powers(p); // (c M)^a / a!
        {
            std::uint32_t c_pow = 1;
            for (std::uint32_t a = 1; a < p; ++a) {
                c_pow = k.mul(c_pow, t.coeff);
                Term pw{};
                for (std::size_t i = 0; i < n; ++i) {
                    const std::uint64_t e = std::uint64_t{t.exponent[i]} * a;
                    if (e > kExponentLimit) throw ResourceError("exponent overflow in delta");
                    pw.exponent[i] = static_cast<std::uint32_t>(e);
                }
                pw.coeff = k.mul(c_pow, inv_fact[a]);
                powers[a] = pw;
            }
        }
        for (std::uint32_t s = p; s >= 1; --s) {
            const std::uint32_t max_a = std::min<std::uint32_t>(s, p - 1);
            for (std::uint32_t a = 1; a <= max_a; ++a) {
                const TermMap& src = partial[s - a];
                if (src.empty()) continue;
                std::vector<Term> shifted;
                shifted.reserve(src.size());
                ExponentVector e{};
                for (const auto& [se, sc] : src) {
                    add_exponents(se, powers[a].exponent, n, 0, e);
                    shifted.push_back({e, k.mul(sc, powers[a].coeff)});
                }
                for (const auto& st : shifted) accumulate(partial[s], k, st.exponent, st.coeff);
            }
        }
    }
    // (1/p) multinomial(p; alpha) = (p-1)! / prod alpha_i! and (p-1)! = -1 mod p.
    std::vector<Term> out = drain(partial[p]);
    for (auto& t : out) t.coeff = k.neg(t.coeff);
    return Polynomial::from_terms(f.ring_ptr(), std::move(out));
}

Polynomial delta_lift_oracle(const Polynomial& f) {
    const Ring& r = f.ring();
    const Field& k = r.field();
    if (k.degree() != 1) throw UsageError("delta_lift_oracle is unsupported for extension fields (e > 1)");
    const std::uint32_t p = k.characteristic();
    const std::size_t n = r.num_vars();
    const std::uint64_t p2 = std::uint64_t{p} * p;

    using LiftMap = std::unordered_map<ExponentVector, std::uint64_t, ExponentHash>;
    auto lift_mul = [&](const LiftMap& a, const LiftMap& b) {
        LiftMap out;
        ExponentVector e{};
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                add_exponents(ea, eb, n, 0, e);
                const auto prod = (IntegerModP2(p, static_cast<std::int64_t>(ca)) *
                                   IntegerModP2(p, static_cast<std::int64_t>(cb)))
                                      .value();
                auto [it, inserted] = out.try_emplace(e, prod);
                if (!inserted) it->second = (it->second + prod) % p2;
            }
        return out;
    };

    LiftMap lifted, phi;
    for (const auto& t : f.terms()) {
        const auto c = IntegerModP2::teichmuller(p, t.coeff).value();
        lifted.emplace(t.exponent, c);
        ExponentVector e{};
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t x = std::uint64_t{t.exponent[i]} * p;
            if (x > kExponentLimit) throw ResourceError("exponent overflow in delta_lift_oracle");
            e[i] = static_cast<std::uint32_t>(x);
        }
        phi.emplace(e, c);
    }
    // lifted^p by square-and-multiply over Z/p^2
    LiftMap power{{ExponentVector{}, 1}};
    LiftMap base = lifted;
    for (std::uint32_t m = p; m; m >>= 1) {
        if (m & 1) power = lift_mul(power, base);
        if (m > 1) base = lift_mul(base, base);
    }
    for (const auto& [e, c] : phi) {
        auto [it, inserted] = power.try_emplace(e, 0);
        it->second = (it->second + p2 - c) % p2;
    }
    std::vector<Term> out;
    for (const auto& [e, c] : power) {
        const std::uint32_t reduced = IntegerModP2(p, static_cast<std::int64_t>(c)).divide_by_p();
        if (reduced % p != 0) out.push_back({e, reduced % p});
    }
    return Polynomial::from_terms(f.ring_ptr(), std::move(out));
}

std::uint32_t multinomial_over_p_exact(std::span<const std::uint32_t> parts, std::uint32_t p) {
    using boost::multiprecision::cpp_int;
    std::uint64_t total = 0;
    for (auto a : parts) total += a;
    if (total != p) throw UsageError("parts must sum to p");
    cpp_int num = 1;
    for (std::uint32_t i = 2; i <= p; ++i) num *= i;
    for (auto a : parts)
        for (std::uint32_t i = 2; i <= a; ++i) num /= i;
    if (num % p != 0) throw DomainError("multinomial coefficient is not divisible by p");
    num /= p;
    return static_cast<std::uint32_t>(num % p);
}

Polynomial u_op(const Polynomial& f) {
    const Ring& r = f.ring();
    const Field& k = r.field();
    const std::uint32_t p = k.characteristic();
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        bool corner = true;
        Term u{};
        for (std::size_t i = 0; i < r.num_vars(); ++i) {
            if (t.exponent[i] % p != p - 1) {
                corner = false;
                break;
            }
            u.exponent[i] = (t.exponent[i] - (p - 1)) / p;
        }
        if (!corner) continue;
        u.coeff = k.inv_frob(t.coeff);
        out.push_back(u);
    }
    return Polynomial::from_terms(f.ring_ptr(), std::move(out));
}

Polynomial u_op_iterated(const Polynomial& f, unsigned n) {
    Polynomial g = f;
    for (unsigned i = 0; i < n; ++i) g = u_op(g);
    return g;
}

bool in_frobenius_power(const Polynomial& f, unsigned n) {
    const std::uint64_t q = checked_prime_power(f.ring().characteristic(), n);
    for (const auto& t : f.terms()) {
        bool hit = false;
        for (std::size_t i = 0; i < f.ring().num_vars(); ++i)
            if (t.exponent[i] >= q) hit = true;
        if (!hit) return false;
    }
    return true;
}

FieldElement corner_coefficient(const Polynomial& f, unsigned n) {
    const Ring& r = f.ring();
    const std::uint64_t q = checked_prime_power(r.characteristic(), n);
    const std::uint64_t want = (q - 1) * r.cy_degree();
    if (!f.is_zero()) {
        const auto deg = f.homogeneous_degree();
        if (!deg || *deg != want)
            throw UsageError("corner_coefficient requires a homogeneous polynomial of degree (p^n-1)d = " +
                             std::to_string(want));
    }
    ExponentVector corner{};
    for (std::size_t i = 0; i < r.num_vars(); ++i) corner[i] = static_cast<std::uint32_t>(q - 1);
    return f.coefficient(corner);
}

} // namespace qfs
