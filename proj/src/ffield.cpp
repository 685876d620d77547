#include "qfs/ffield.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace qfs {

namespace {

constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 20;

using UPoly = std::vector<std::uint32_t>; // coefficients mod p, constant term first

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // p prime: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    std::uint64_t n = p - 2;
    while (n) {
        if (n & 1) result = result * base % p;
        base = base * base % p;
        n >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

UPoly upoly_mod(UPoly a, const UPoly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = factor * m[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

UPoly upoly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return upoly_mod(std::move(r), m, p);
}

UPoly upoly_powmod(UPoly base, std::uint64_t n, const UPoly& m, std::uint32_t p) {
    UPoly result{1};
    base = upoly_mod(std::move(base), m, p);
    while (n) {
        if (n & 1) result = upoly_mulmod(result, base, m, p);
        base = upoly_mulmod(base, base, m, p);
        n >>= 1;
    }
    return result;
}

UPoly upoly_gcd(UPoly a, UPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = upoly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p) {
    UPoly g(monic.begin(), monic.end());
    trim(g);
    if (g.size() < 2) return false;
    const std::size_t e = g.size() - 1;
    if (e == 1) return true;
    // A reducible g has a factor of degree i <= e/2, which divides x^(p^i) - x.
    UPoly xp{0, 1};
    for (std::size_t i = 1; i <= e / 2; ++i) {
        xp = upoly_powmod(xp, p, g, p);
        UPoly h = xp;
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h);
        if (h.empty()) return false; // g divides x^(p^i) - x
        if (upoly_gcd(g, h, p).size() > 1) return false;
    }
    return true;
}

Field::Field(std::uint32_t p, unsigned e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < e_; ++i) {
        powers_of_p_.push_back(static_cast<std::uint32_t>(q_));
        q_ *= p_;
    }
    if (e_ > 1) build_tables();
}

std::shared_ptr<const Field> Field::prime(std::uint32_t p) {
    if (p < 2 || p > 0x7fffffffu || !is_prime(p))
        throw UsageError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return std::shared_ptr<const Field>(new Field(p, 1, {}));
}

std::shared_ptr<const Field> Field::extension(std::uint32_t p, unsigned e,
                                              std::vector<std::uint32_t> modulus) {
    if (e == 0) throw UsageError("extension degree must be at least 1");
    if (e == 1 && modulus.empty()) return prime(p);
    if (p < 2 || !is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxExtensionOrder)
            throw ResourceError("extension field of order " + std::to_string(p) + "^" + std::to_string(e) +
                                " exceeds the supported limit 2^20");
    }
    if (modulus.empty()) {
        // least monic irreducible in base-p order of the lower coefficients
        UPoly cand(e + 1, 0);
        cand[e] = 1;
        for (std::uint64_t code = 0; code < q; ++code) {
            std::uint64_t c = code;
            for (unsigned i = 0; i < e; ++i) {
                cand[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            if (is_irreducible_mod_p(cand, p)) {
                modulus = cand;
                break;
            }
        }
    } else {
        if (modulus.size() != e + 1)
            throw UsageError("modulus must have " + std::to_string(e + 1) + " coefficients");
        for (auto& c : modulus) c %= p;
        if (modulus.back() != 1) throw UsageError("modulus must be monic");
        if (!is_irreducible_mod_p(modulus, p)) throw UsageError("modulus is reducible over F_p");
    }
    if (e == 1) {
        // a degree-one modulus carries no information; normalise to the prime field
        return prime(p);
    }
    return std::shared_ptr<const Field>(new Field(p, e, std::move(modulus)));
}

bool Field::same_as(const Field& other) const {
    return this == &other || (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
    UPoly pa(e_), pb(e_);
    for (unsigned i = 0; i < e_; ++i) {
        pa[i] = a % p_;
        a /= p_;
        pb[i] = b % p_;
        b /= p_;
    }
    UPoly r = upoly_mulmod(pa, pb, modulus_, p_);
    std::uint32_t out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
    return out;
}

void Field::build_tables() {
    const std::uint64_t n = q_ - 1;
    const auto factors = prime_factors(n);
    auto slow_pow = [&](std::uint32_t a, std::uint64_t k) {
        std::uint32_t result = 1;
        while (k) {
            if (k & 1) result = slow_mul(result, a);
            a = slow_mul(a, a);
            k >>= 1;
        }
        return result;
    };
    std::uint32_t gen = 0;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
        bool primitive = true;
        for (auto r : factors) {
            if (slow_pow(cand, n / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = cand;
            break;
        }
    }
    exp_.resize(2 * n);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
        exp_[k] = cur;
        exp_[k + n] = cur;
        log_[cur] = static_cast<std::uint32_t>(k);
        cur = slow_mul(cur, gen);
    }
    frob_.assign(q_, 0);
    inv_frob_.assign(q_, 0);
    for (std::uint64_t k = 0; k < n; ++k) {
        const std::uint32_t a = exp_[k];
        const std::uint32_t fa = exp_[(k * p_) % n];
        frob_[a] = fa;
        inv_frob_[fa] = a;
    }
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0;
    for (unsigned i = 0; i < e_; ++i) {
        const std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        std::uint32_t s = da + db;
        if (s >= p_) s -= p_;
        out += s * powers_of_p_[i];
    }
    return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    std::uint32_t out = 0;
    for (unsigned i = 0; i < e_; ++i) {
        const std::uint32_t da = a % p_;
        a /= p_;
        out += (da == 0 ? 0 : p_ - da) * powers_of_p_[i];
    }
    return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw DomainError("inverse of zero");
    if (e_ == 1) return inv_mod(a, p_);
    const std::uint64_t n = q_ - 1;
    return exp_[(n - log_[a]) % n];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t n) const {
    std::uint32_t result = 1;
    while (n) {
        if (n & 1) result = mul(result, a);
        a = mul(a, a);
        n >>= 1;
    }
    return result;
}

std::uint32_t Field::frob(std::uint32_t a) const {
    return e_ == 1 ? a : frob_[a];
}

std::uint32_t Field::inv_frob(std::uint32_t a) const {
    return e_ == 1 ? a : inv_frob_[a];
}

std::uint32_t Field::from_integer(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

FieldElement Field::zero() const { return {this, 0}; }
FieldElement Field::one() const { return {this, 1}; }
FieldElement Field::element(std::int64_t n) const { return {this, from_integer(n)}; }
FieldElement Field::wrap(std::uint32_t raw) const {
    if (raw >= q_) throw UsageError("raw value " + std::to_string(raw) + " is not a canonical field element");
    return {this, raw};
}

FieldElement Field::from_coefficients(std::span<const std::int64_t> coeffs) const {
    if (e_ == 1) {
        if (coeffs.size() > 1)
            for (std::size_t i = 1; i < coeffs.size(); ++i)
                if (from_integer(coeffs[i]) != 0)
                    throw UsageError("extension coefficient used in a prime field");
        return element(coeffs.empty() ? 0 : coeffs[0]);
    }
    // Reduce sum c_i t^i modulo the defining polynomial.
    UPoly poly(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) poly[i] = from_integer(coeffs[i]);
    poly = upoly_mod(std::move(poly), modulus_, p_);
    std::uint32_t out = 0;
    for (std::size_t i = poly.size(); i-- > 0;) out = out * p_ + poly[i];
    return {this, out};
}

FieldElement Field::generator() const {
    if (e_ == 1) throw UsageError("the generator t is only defined for extension fields");
    return {this, p_};
}

std::string Field::format(std::uint32_t a) const {
    if (e_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::string out;
    for (unsigned i = e_; i-- > 0;) {
        const std::uint32_t c = (a / powers_of_p_[i]) % p_;
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += "t";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

FieldElement Field::parse(std::string_view text) const {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw UsageError("empty field element");
    std::vector<std::int64_t> coeffs;
    std::size_t pos = 0;
    auto read_uint = [&](std::int64_t& out) {
        const std::size_t start = pos;
        std::int64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = (v * 10 + (s[pos] - '0')) % (std::int64_t{1} << 40);
            ++pos;
        }
        if (pos > start) out = v;
        return pos > start;
    };
    auto fail = [&](const std::string& what) {
        throw UsageError("cannot parse field element '" + std::string(text) + "' at offset " +
                         std::to_string(pos) + ": " + what);
    };
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        std::int64_t c = 1;
        const bool has_coeff = read_uint(c);
        if (has_coeff && pos < s.size() && s[pos] == '*') ++pos;
        std::size_t power = 0;
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::int64_t k = 0;
                if (!read_uint(k)) fail("expected exponent");
                power = static_cast<std::size_t>(k);
            }
        } else if (!has_coeff) {
            fail("expected integer or 't'");
        }
        if (power > 64) fail("exponent of t too large");
        if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
        coeffs[power] += sign * (c % p_);
    }
    if (e_ == 1 && coeffs.size() > 1) {
        for (std::size_t i = 1; i < coeffs.size(); ++i)
            if (from_integer(coeffs[i]) != 0) throw UsageError("extension coefficient used when e = 1");
    }
    return from_coefficients(coeffs);
}

std::vector<std::uint32_t> Field::elements() const {
    std::vector<std::uint32_t> out(q_);
    for (std::uint64_t i = 0; i < q_; ++i) out[i] = static_cast<std::uint32_t>(i);
    return out;
}

const Field& FieldElement::field() const {
    if (!field_) throw UsageError("field element without a field");
    return *field_;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!field_ || !o.field_ || !field_->same_as(*o.field_))
        throw UsageError("arithmetic between elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->add(raw_, o.raw_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->sub(raw_, o.raw_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {field_, field_->mul(raw_, o.raw_)};
}
FieldElement FieldElement::operator-() const { return {field_, field().neg(raw_)}; }
FieldElement FieldElement::inverse() const { return {field_, field().inv(raw_)}; }
FieldElement FieldElement::pow(std::uint64_t n) const { return {field_, field().pow(raw_, n)}; }
FieldElement FieldElement::frobenius() const { return {field_, field().frob(raw_)}; }
FieldElement FieldElement::inverse_frobenius() const { return {field_, field().inv_frob(raw_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ == nullptr || o.field_ == nullptr) return field_ == o.field_ && raw_ == o.raw_;
    return field_->same_as(*o.field_) && raw_ == o.raw_;
}

std::string FieldElement::to_string() const { return field().format(raw_); }

IntegerModP2::IntegerModP2(std::uint32_t p, std::int64_t value)
    : p_(p), p2_(std::uint64_t{p} * p), v_(0) {
    std::int64_t r = static_cast<std::int64_t>(static_cast<__int128>(value) % static_cast<__int128>(p2_));
    if (r < 0) r += static_cast<std::int64_t>(p2_);
    v_ = static_cast<std::uint64_t>(r);
}

IntegerModP2 IntegerModP2::operator+(const IntegerModP2& o) const {
    IntegerModP2 r = *this;
    r.v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) + o.v_) % p2_);
    return r;
}
IntegerModP2 IntegerModP2::operator-(const IntegerModP2& o) const {
    IntegerModP2 r = *this;
    r.v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) + p2_ - o.v_) % p2_);
    return r;
}
IntegerModP2 IntegerModP2::operator*(const IntegerModP2& o) const {
    IntegerModP2 r = *this;
    r.v_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p2_);
    return r;
}

IntegerModP2 IntegerModP2::teichmuller(std::uint32_t p, std::uint32_t c) {
    IntegerModP2 base(p, c), result(p, 1);
    std::uint32_t n = p;
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::uint32_t IntegerModP2::divide_by_p() const {
    if (v_ % p_ != 0) throw DomainError("value " + std::to_string(v_) + " is not divisible by p");
    return static_cast<std::uint32_t>(v_ / p_);
}

} // namespace qfs
