#pragma once

// Expansions in the affine nil-Coxeter algebra of the distinguished element
// attached to a dominant coweight gamma: the sum of basis elements u(z_eta)
// over the finite Weyl orbit of gamma.  Three routes to the same element are
// provided: the orbit sum itself (the definition), a sum over minimal coset
// representatives, and, in family C, a sum indexed by an interval of
// symmetric cores.  Reports carry per-term structure so callers can display
// factored words, cores, and cross-checks.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kschur/cores.hpp"
#include "kschur/nilcoxeter.hpp"

namespace kschur {

struct ExpansionTerm {
    AffineWeylElement element;    // basis index of this term
    WeylWord word;                // its canonical reduced word
    Integer coeff = 1;
    AffineWeylElement coset_rep;  // v such that element * v is Grassmannian
    bool has_factored = false;    // factored pair present (core formula only)
    WeylWord plain_word;          // peel word of the core below
    WeylWord bold_word;           // relabelled word of the complementary factor
    bool has_core = false;
    SymmetricCore core;           // family C: core of element * coset_rep
};

struct ExpansionReport {
    const CartanDatum* datum = nullptr;
    Coweight gamma;       // the dominant coweight being expanded
    int j = 0;            // its fundamental index, or 0 when not fundamental
    std::string formula;  // "orbit" | "algebraic" | "combinatorial"
    NilCoxeterElement value;
    std::vector<ExpansionTerm> terms;
};

namespace detail {

inline int fundamental_index(const CartanDatum& d, const Coweight& gamma) {
    for (int j = 1; j <= d.rank; ++j)
        if (gamma == d.fundamental_coweight(j)) return j;
    return 0;
}

inline DynkinAutomorphism inverse_automorphism(const DynkinAutomorphism& tau) {
    DynkinAutomorphism inv;
    inv.node_map.assign(tau.node_map.size(), -1);
    for (std::size_t i = 0; i < tau.node_map.size(); ++i)
        inv.node_map[std::size_t(tau.node_map[i])] = int(i);
    return inv;
}

inline ExpansionTerm make_expansion_term(const CartanDatum& d, const AffineWeylElement& element,
                                         const AffineWeylElement& v) {
    ExpansionTerm t;
    t.element = element;
    t.word = canonical_reduced_word(element);
    t.coeff = 1;
    t.coset_rep = v;
    if (d.family == Family::C) {
        AffineWeylElement g = multiply(element, v);
        if (is_grassmannian(g)) {
            t.core = core_of(g);
            t.has_core = true;
        }
    }
    return t;
}

// Terms are ordered by increasing length of the Grassmannian factor
// element * coset_rep, ties broken by the canonical word of the term element.
// The key depends only on the term, so all formulas list equal expansions in
// the same order.
inline void finish_report(ExpansionReport& rep) {
    struct Key {
        long long grassmannian_length;
        WeylWord word;
        std::size_t idx;
    };
    std::vector<Key> keys;
    keys.reserve(rep.terms.size());
    for (std::size_t i = 0; i < rep.terms.size(); ++i) {
        const ExpansionTerm& t = rep.terms[i];
        keys.push_back(Key{length(multiply(t.element, t.coset_rep)), t.word, i});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (a.grassmannian_length != b.grassmannian_length)
            return a.grassmannian_length < b.grassmannian_length;
        return a.word < b.word;
    });
    std::vector<ExpansionTerm> sorted;
    sorted.reserve(rep.terms.size());
    for (const Key& k : keys) sorted.push_back(std::move(rep.terms[k.idx]));
    rep.terms = std::move(sorted);

    rep.value = nc_zero(*rep.datum);
    for (const ExpansionTerm& t : rep.terms)
        rep.value = nc_add(rep.value, nc_scale(t.coeff, nc_basis(t.element)));
}

}  // namespace detail

// Orbit formula: one term u(pseudo_translation(eta)) for every point eta of
// the finite Weyl orbit of the dominant coweight gamma.  Each orbit point is
// reached breadth-first, so the recorded coset_rep is the minimal-length v
// with eta = v * gamma.
inline ExpansionReport kschur_orbit(const CartanDatum& d, const Coweight& gamma) {
    if (!is_coweight(d, gamma))
        throw domain_error("vector " + to_string(gamma) + " is not a coweight");
    for (int i = 1; i <= d.rank; ++i)
        if (pairing(d, gamma, d.simple_root(i)) < 0)
            throw domain_error("coweight " + to_string(gamma) + " is not dominant");

    ExpansionReport rep;
    rep.datum = &d;
    rep.gamma = gamma;
    rep.j = detail::fundamental_index(d, gamma);
    rep.formula = "orbit";

    std::vector<AffineWeylElement> gens;
    for (int i = 1; i <= d.rank; ++i) gens.push_back(simple_reflection(d, i));
    std::map<RVec, bool> seen;
    std::vector<std::pair<AffineWeylElement, RVec>> queue;
    queue.emplace_back(identity_element(d), gamma);
    seen[gamma] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto [v, pt] = queue[head];
        rep.terms.push_back(detail::make_expansion_term(d, pseudo_translation(d, pt), v));
        for (int i = 1; i <= d.rank; ++i) {
            RVec pt2 = apply_star(gens[std::size_t(i - 1)], pt);
            if (seen.emplace(pt2, true).second)
                queue.emplace_back(multiply(gens[std::size_t(i - 1)], v), pt2);
        }
    }
    detail::finish_report(rep);
    return rep;
}

// Coset formula: one term u(tau(v) * z * v^{-1}) per minimal coset
// representative v of the stabilizer of Lambda_j^vee, where z is the
// pseudo-translation by Lambda_j^vee and tau its diagram automorphism.
inline ExpansionReport kschur_algebraic(const CartanDatum& d, int j) {
    if (j < 1 || j > d.rank) throw domain_error("coweight index out of range");
    AffineWeylElement z = pseudo_translation(d, d.fundamental_coweight(j));
    DynkinAutomorphism tau = automorphism_of_coweight(d, j);

    ExpansionReport rep;
    rep.datum = &d;
    rep.gamma = d.fundamental_coweight(j);
    rep.j = j;
    rep.formula = "algebraic";
    for (const AffineWeylElement& v : minimal_coset_reps(d, j)) {
        AffineWeylElement tv = apply_automorphism_element(tau, v);
        AffineWeylElement element = multiply(multiply(tv, z), inverse(v));
        rep.terms.push_back(detail::make_expansion_term(d, element, v));
    }
    detail::finish_report(rep);
    return rep;
}

// Core-interval formula (family C only): with R the core of z and S the core
// of tau(longest coset rep) * z, one term per symmetric core lambda in the
// interval [S, R].  The term element factors as w_lambda times the image
// under tau^{-1} of the complementary factor z * w_lambda^{-1}, and both
// factor words are recorded (the concatenation is checked to be reduced).
inline ExpansionReport kschur_combinatorial(const CartanDatum& d, int j) {
    if (d.family != Family::C)
        throw domain_error("the core-interval expansion is only defined for family C");
    if (j < 1 || j > d.rank) throw domain_error("coweight index out of range");
    AffineWeylElement z = pseudo_translation(d, d.fundamental_coweight(j));
    DynkinAutomorphism tau = automorphism_of_coweight(d, j);
    DynkinAutomorphism tau_inv = detail::inverse_automorphism(tau);

    SymmetricCore R = core_of(z);
    AffineWeylElement w0j = longest_coset_rep(d, j);
    SymmetricCore S = core_of(multiply(apply_automorphism_element(tau, w0j), z));

    ExpansionReport rep;
    rep.datum = &d;
    rep.gamma = d.fundamental_coweight(j);
    rep.j = j;
    rep.formula = "combinatorial";
    for (const SymmetricCore& lambda : cores_in_interval(d, S, R)) {
        AffineWeylElement w_lambda = grassmannian_of(d, lambda);
        AffineWeylElement rest = multiply(z, inverse(w_lambda));
        if (length(rest) != length(z) - length(w_lambda))
            throw domain_error("internal: complementary factor is not length-additive");
        WeylWord bold = apply_automorphism(tau_inv, canonical_reduced_word(rest));
        WeylWord plain = peel_word(d.rank, lambda);
        AffineWeylElement bold_element = element_from_word(d, bold);
        AffineWeylElement element = multiply(w_lambda, bold_element);
        if (length(element) != (long long)(plain.size() + bold.size()))
            throw domain_error("internal: factored word concatenation is not reduced");

        ExpansionTerm t = detail::make_expansion_term(d, element, inverse(bold_element));
        t.has_factored = true;
        t.plain_word = std::move(plain);
        t.bold_word = std::move(bold);
        if (!t.has_core || !(t.core == lambda))
            throw domain_error("internal: term core disagrees with its interval index");
        rep.terms.push_back(std::move(t));
    }
    detail::finish_report(rep);
    return rep;
}

// Commutation property: the expansion element must intertwine u(w) with
// u(tau(w)).  Both products are computed in the nil-Coxeter algebra and
// compared exactly.
inline bool verify_commutation(const CartanDatum& d, int j, const AffineWeylElement& w) {
    if (!w.datum->same_datum(d))
        throw domain_error("element belongs to a different root system");
    NilCoxeterElement s = kschur_orbit(d, d.fundamental_coweight(j)).value;
    DynkinAutomorphism tau = automorphism_of_coweight(d, j);
    AffineWeylElement tw = apply_automorphism_element(tau, w);
    return nc_equal(nc_multiply(s, nc_basis(w)), nc_multiply(nc_basis(tw), s));
}

// Closed form for the core of the pseudo-translation by Lambda_j^vee in
// family C of rank k: ((2k)^j, j^{2k-j}) for j < k, and (k^k) for j = k.
inline SymmetricCore expected_pseudotranslation_core(int k, int j) {
    if (k < 2) throw domain_error("rank out of range for family C");
    if (j < 1 || j > k) throw domain_error("coweight index out of range");
    std::vector<long long> parts;
    if (j < k) {
        for (int r = 0; r < j; ++r) parts.push_back(2 * k);
        for (int r = j; r < 2 * k; ++r) parts.push_back(j);
    } else {
        for (int r = 0; r < k; ++r) parts.push_back(k);
    }
    return make_symmetric_core(parts, k);
}

// Closed-form word for the pseudo-translation by Lambda_j^vee in family C,
// built from the partial products w_i = s_{i-1} ... s_1 s_0:
// (w_j w_k^{-1} w_{k+1})^j for j < k, and w_k^{-1} w_{k-1}^{-1} ... w_1^{-1}
// for j = k.
inline AffineWeylElement pseudotranslation_word_formula(const CartanDatum& d, int j) {
    if (d.family != Family::C)
        throw domain_error("the closed-form word is only defined for family C");
    if (j < 1 || j > d.rank) throw domain_error("coweight index out of range");
    auto w = [&d](int i) {
        WeylWord word;
        for (int a = i - 1; a >= 0; --a) word.push_back(a);
        return element_from_word(d, word);
    };
    int k = d.rank;
    AffineWeylElement res = identity_element(d);
    if (j < k) {
        AffineWeylElement base = multiply(multiply(w(j), inverse(w(k))), w(k + 1));
        for (int rep = 0; rep < j; ++rep) res = multiply(res, base);
    } else {
        for (int i = k; i >= 1; --i) res = multiply(res, inverse(w(i)));
    }
    return res;
}

}  // namespace kschur
