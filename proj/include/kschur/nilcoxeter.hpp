#pragma once

// The affine nilCoxeter algebra: integer formal sums of affine Weyl group
// elements with the length-additive product
//     u(v) · u(w) = u(v w)  if  ℓ(v w) = ℓ(v) + ℓ(w),   0 otherwise,
// extended bilinearly.  Generators u_i = u(s_i) satisfy u_i² = 0 and the braid
// relations of the group presentation.
//
// Basis keys are canonical elements (affine maps), so words that differ by
// braid moves index the same basis vector automatically.

#include "kschur/weyl.hpp"

#include <map>
#include <string>

namespace kschur {

struct NilCoxeterElement {
    const CartanDatum* datum = nullptr;
    std::map<AffineWeylElement, Integer> terms;  // nonzero coefficients only

    friend bool operator==(const NilCoxeterElement& a, const NilCoxeterElement& b) {
        return a.datum->same_datum(*b.datum) && a.terms == b.terms;
    }
    friend bool operator!=(const NilCoxeterElement& a, const NilCoxeterElement& b) {
        return !(a == b);
    }
};

inline NilCoxeterElement nc_zero(const CartanDatum& d) {
    NilCoxeterElement x;
    x.datum = &d;
    return x;
}

inline NilCoxeterElement nc_basis(const AffineWeylElement& w) {
    NilCoxeterElement x;
    x.datum = w.datum;
    x.terms.emplace(w, Integer(1));
    return x;
}

namespace detail {

inline void check_same_datum(const NilCoxeterElement& a, const NilCoxeterElement& b) {
    if (!a.datum->same_datum(*b.datum))
        throw domain_error("nilCoxeter elements belong to different root systems");
}

inline void nc_accumulate(NilCoxeterElement& out, const AffineWeylElement& w, const Integer& c) {
    auto it = out.terms.find(w);
    if (it == out.terms.end()) {
        if (c != 0) out.terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) out.terms.erase(it);
}

}  // namespace detail

inline NilCoxeterElement nc_add(const NilCoxeterElement& a, const NilCoxeterElement& b) {
    detail::check_same_datum(a, b);
    NilCoxeterElement out = a;
    for (const auto& [w, c] : b.terms) detail::nc_accumulate(out, w, c);
    return out;
}

inline NilCoxeterElement nc_scale(const Integer& n, const NilCoxeterElement& a) {
    NilCoxeterElement out = nc_zero(*a.datum);
    if (n == 0) return out;
    for (const auto& [w, c] : a.terms) out.terms.emplace(w, n * c);
    return out;
}

inline bool nc_equal(const NilCoxeterElement& a, const NilCoxeterElement& b) { return a == b; }

// Basis product u(v)·u(w): fold the letters of a reduced word for w onto v,
// tracking the alcove centroid; hitting a right descent annihilates the term.
inline NilCoxeterElement nc_multiply(const NilCoxeterElement& a, const NilCoxeterElement& b) {
    detail::check_same_datum(a, b);
    const CartanDatum& d = *a.datum;
    std::vector<AffineWeylElement> gens;
    for (int i = 0; i <= d.rank; ++i) gens.push_back(simple_reflection(d, i));

    NilCoxeterElement out = nc_zero(d);
    for (const auto& [w, cw] : b.terms) {
        WeylWord word = canonical_reduced_word(w);
        for (const auto& [v, cv] : a.terms) {
            AffineWeylElement x = v;
            RVec c = alcove_centroid(x);
            bool alive = true;
            for (int letter : word) {
                if (detail::wall_separates(d, c, letter)) {
                    alive = false;
                    break;
                }
                x = multiply(x, gens[letter]);
                c = apply_diamond(gens[letter], c);
            }
            if (alive) detail::nc_accumulate(out, x, cv * cw);
        }
    }
    return out;
}

inline NilCoxeterElement operator+(const NilCoxeterElement& a, const NilCoxeterElement& b) {
    return nc_add(a, b);
}
inline NilCoxeterElement operator*(const NilCoxeterElement& a, const NilCoxeterElement& b) {
    return nc_multiply(a, b);
}

// "u(word) + u(word) + …", canonical words, terms in lexicographic word order;
// non-unit coefficients print as a prefix factor, the empty sum as "0".
inline std::string to_string(const NilCoxeterElement& a) {
    if (a.terms.empty()) return "0";
    std::vector<std::pair<WeylWord, Integer>> rows;
    for (const auto& [w, c] : a.terms) rows.emplace_back(canonical_reduced_word(w), c);
    std::sort(rows.begin(), rows.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) out += " + ";
        if (rows[i].second != 1) out += rows[i].second.str() + "*";
        out += "u(" + word_to_string(*a.datum, rows[i].first) + ")";
    }
    return out;
}

}  // namespace kschur
