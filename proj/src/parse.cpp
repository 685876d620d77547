#include <cctype>
#include <string>

#include "qfs/polyring.hpp"

namespace qfs {

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring), field_(ring->field()) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            advance();
        }
        terms.push_back(parse_term(sign));
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail(std::string("unexpected character '") + c + "'");
            advance();
            terms.push_back(parse_term(c == '-' ? -1 : 1));
        }
        return Polynomial::from_terms(ring_, std::move(terms));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void advance() { ++pos_; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("syntax error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::uint64_t parse_uint() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an unsigned integer");
        std::uint64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > 0xffffffffull) fail("integer too large");
            advance();
        }
        return v;
    }

    bool at_variable() {
        skip_ws();
        if (at_end()) return false;
        const char c = peek();
        return c == 'x' || c == 'y' || c == 'z' || c == 'w' || c == 'u';
    }

    std::size_t parse_variable() {
        const std::size_t start = pos_;
        const char c = peek();
        advance();
        std::size_t index = 0;
        switch (c) {
        case 'x':
            if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                index = static_cast<std::size_t>(parse_uint());
            } else {
                index = 0;
            }
            break;
        case 'y': index = 1; break;
        case 'z': index = 2; break;
        case 'w': index = 3; break;
        default: index = 4; break; // 'u'
        }
        if (index >= ring_->num_vars()) {
            throw UsageError("unknown variable '" + std::string(text_.substr(start, pos_ - start)) + "' at offset " +
                             std::to_string(start) + " (ring has " + std::to_string(ring_->num_vars()) +
                             " variables)");
        }
        return index;
    }

    std::uint32_t parse_coefficient() {
        skip_ws();
        if (peek() == '(') {
            const std::size_t open = pos_;
            int depth = 0;
            while (!at_end()) {
                if (peek() == '(') ++depth;
                if (peek() == ')' && --depth == 0) break;
                advance();
            }
            if (at_end()) {
                pos_ = open;
                fail("unbalanced parenthesis");
            }
            const auto inner = text_.substr(open + 1, pos_ - open - 1);
            advance();
            try {
                return field_.parse(inner).raw();
            } catch (const UsageError& e) {
                throw UsageError("coefficient at offset " + std::to_string(open) + ": " + e.what());
            }
        }
        return field_.from_integer(static_cast<std::int64_t>(parse_uint() % field_.characteristic()));
    }

    Term parse_term(int sign) {
        skip_ws();
        if (at_end()) fail("expected a term");
        Term t{};
        t.coeff = 1;
        bool has_coeff = false;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
            t.coeff = parse_coefficient();
            has_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                advance();
                if (!at_variable()) fail("expected a variable after '*'");
            }
        }
        bool any_factor = false;
        while (at_variable()) {
            const std::size_t var = parse_variable();
            std::uint64_t power = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                advance();
                power = parse_uint();
            }
            const std::uint64_t total = std::uint64_t{t.exponent[var]} + power;
            if (total > 0xffffffffull) fail("exponent too large");
            t.exponent[var] = static_cast<std::uint32_t>(total);
            any_factor = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                advance();
                if (!at_variable()) fail("expected a variable after '*'");
            }
        }
        if (!has_coeff && !any_factor) fail("expected a coefficient or a variable");
        if (sign < 0) t.coeff = field_.neg(t.coeff);
        return t;
    }

    std::string_view text_;
    const RingPtr& ring_;
    const Field& field_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

std::string format_poly(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const Field& k = f.ring().field();
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += "+";
        std::string mono;
        for (std::size_t i = 0; i < f.ring().num_vars(); ++i) {
            if (t.exponent[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i);
            if (t.exponent[i] > 1) mono += "^" + std::to_string(t.exponent[i]);
        }
        std::string coeff = k.format(t.coeff);
        if (k.degree() > 1 && coeff.find_first_not_of("0123456789") != std::string::npos) coeff = "(" + coeff + ")";
        if (mono.empty()) {
            out += coeff;
        } else if (t.coeff == 1) {
            out += mono;
        } else {
            out += coeff + "*" + mono;
        }
    }
    return out;
}

} // namespace qfs
