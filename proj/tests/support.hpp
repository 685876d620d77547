#pragma once

#include <random>

#include "qfs/cartier.hpp"

namespace qfs::test {

inline std::uint32_t random_element(const Field& k, std::mt19937_64& rng) {
    return static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint64_t>(0, k.order() - 1)(rng));
}

inline Vector random_vector(const FieldPtr& k, std::size_t n, std::mt19937_64& rng) {
    Vector v(k, n);
    for (std::size_t i = 0; i < n; ++i) v.set_raw(i, random_element(*k, rng));
    return v;
}

/// Random nonzero form of degree d in the basis of `b`.
inline Polynomial random_form(const MonomialBasis& b, std::mt19937_64& rng) {
    while (true) {
        Polynomial f = b.combine(random_vector(b.ring().field_ptr(), b.size(), rng));
        if (!f.is_zero()) return f;
    }
}

/// Random polynomial with up to `terms` terms and exponents below `max_exp`.
inline Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, unsigned terms, unsigned max_exp) {
    std::vector<Term> t;
    std::uniform_int_distribution<std::uint32_t> ex(0, max_exp - 1);
    for (unsigned i = 0; i < terms; ++i) {
        Term term{};
        for (std::size_t v = 0; v < ring->num_vars(); ++v) term.exponent[v] = ex(rng);
        term.coeff = random_element(ring->field(), rng);
        t.push_back(term);
    }
    return Polynomial::from_terms(ring, std::move(t));
}

} // namespace qfs::test
