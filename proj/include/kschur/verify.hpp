#pragma once

// Self-check suites over one root-system datum: each suite re-derives a
// family of identities with randomized or exhaustive inputs and reports the
// first counterexample it finds.  Shared by the command-line `verify`
// subcommand and the test binaries.

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kschur/kschur.hpp"

namespace kschur {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;  // first counterexample, empty when passed
};

namespace detail {

inline void suite_fail(SuiteResult& r, const std::string& detail) {
    if (r.passed) {
        r.passed = false;
        r.detail = detail;
    }
}

inline RVec random_rational_vector(const CartanDatum& d, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
    RVec v = rvec_zero(d.dim);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    if (d.family == Family::A) {  // stay in the sum-zero realization
        Rational s = 0;
        for (const auto& x : v) s += x;
        for (auto& x : v) x -= s / d.dim;
    }
    return v;
}

inline WeylWord random_word(const CartanDatum& d, std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> letter(0, d.rank), len(0, max_len);
    WeylWord w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(letter(rng));
    return w;
}

inline std::vector<AffineWeylElement> ball_of_elements(const CartanDatum& d, int radius) {
    std::set<AffineWeylElement> seen;
    std::vector<AffineWeylElement> frontier{identity_element(d)}, all{identity_element(d)};
    seen.insert(all[0]);
    for (int l = 1; l <= radius; ++l) {
        std::vector<AffineWeylElement> next;
        for (const auto& w : frontier)
            for (int i = 0; i <= d.rank; ++i) {
                AffineWeylElement ws = multiply(w, simple_reflection(d, i));
                if (seen.insert(ws).second) {
                    next.push_back(ws);
                    all.push_back(ws);
                }
            }
        frontier = std::move(next);
    }
    return all;
}

}  // namespace detail

// Duality between roots and coroots, the highest root, and the positive-root
// count being what the family's closed form predicts.
inline SuiteResult suite_root_system(const CartanDatum& d) {
    SuiteResult r{"root-system", true, ""};
    for (int a = 0; a <= d.rank; ++a)
        for (int b = 0; b <= d.rank; ++b) {
            const RVec& alpha = (b == 0) ? rvec_neg(d.highest_root) : d.simple_root(b);
            const RVec& avee = (a == 0) ? rvec_neg(d.highest_coroot) : d.simple_coroot(a);
            Rational expect(d.cartan_matrix[std::size_t(a)][std::size_t(b)]);
            if (pairing(d, avee, alpha) != expect)
                detail::suite_fail(r, "Cartan entry (" + std::to_string(a) + "," +
                                          std::to_string(b) + ") mismatch");
        }
    std::size_t expect_count = 0;
    switch (d.family) {
        case Family::A: expect_count = std::size_t(d.rank) * (d.rank + 1) / 2; break;
        case Family::B:
        case Family::C: expect_count = std::size_t(d.rank) * d.rank; break;
        case Family::D: expect_count = std::size_t(d.rank) * (d.rank - 1); break;
    }
    if (positive_roots(d).size() != expect_count)
        detail::suite_fail(r, "positive root count " + std::to_string(positive_roots(d).size()) +
                                  " != " + std::to_string(expect_count));
    RVec theta = rvec_zero(d.dim);
    for (int i = 1; i <= d.rank; ++i)
        theta = rvec_add(theta, rvec_scale(Rational(d.mark(i)), d.simple_root(i)));
    if (theta != d.highest_root) detail::suite_fail(r, "marks do not rebuild the highest root");
    return r;
}

// Level actions: w applied affinely to mu + nu splits into the affine action
// on mu plus the linear action on nu.  In family C the sliding-window partial
// products w_i = s_{i-1}...s_1 s_0 act by the closed coordinate formulas.
inline SuiteResult suite_action_identities(const CartanDatum& d, unsigned seed) {
    SuiteResult r{"action-identities", true, ""};
    std::mt19937 rng(seed ^ 0x5eedu);
    for (int trial = 0; trial < 200 && r.passed; ++trial) {
        AffineWeylElement w = element_from_word(d, detail::random_word(d, rng, 8));
        RVec mu = detail::random_rational_vector(d, rng);
        RVec nu = detail::random_rational_vector(d, rng);
        if (apply_diamond(w, rvec_add(mu, nu)) !=
            rvec_add(apply_diamond(w, mu), apply_star(w, nu)))
            detail::suite_fail(r, "affine action does not split over " + to_string(mu) +
                                      " + " + to_string(nu));
    }
    if (d.family != Family::C) return r;

    int k = d.rank;
    auto w_i = [&d](int i) {
        WeylWord word;
        for (int a = i - 1; a >= 0; --a) word.push_back(a);
        return element_from_word(d, word);
    };
    for (int trial = 0; trial < 100 && r.passed; ++trial) {
        RVec v = detail::random_rational_vector(d, rng);
        for (int i = 1; i <= k + 1 && r.passed; ++i) {
            // w_i sends (a_1,...,a_k) to (a_2,...,a_i, 2-a_1, a_{i+1},...,a_k);
            // w_{k+1} wraps around to (a_2,...,a_k, a_1-2)
            RVec expect = v;
            int shift_end = std::min(i - 1, k - 1);
            for (int p = 0; p < shift_end; ++p) expect[std::size_t(p)] = v[std::size_t(p + 1)];
            if (i <= k) expect[std::size_t(i - 1)] = Rational(2) - v[0];
            else expect[std::size_t(k - 1)] = v[0] - 2;
            if (apply_diamond(w_i(i), v) != expect)
                detail::suite_fail(r, "partial product w_" + std::to_string(i) +
                                          " acts wrongly on " + to_string(v));
        }
        for (int j = 1; j < k && r.passed; ++j) {
            // w_j w_k^{-1} w_{k+1} cycles a_1 into slot j and subtracts 2
            AffineWeylElement www = multiply(multiply(w_i(j), inverse(w_i(k))), w_i(k + 1));
            RVec expect = v;
            for (int p = 0; p + 1 < j; ++p) expect[std::size_t(p)] = v[std::size_t(p + 1)];
            expect[std::size_t(j - 1)] = v[0] - 2;
            if (apply_diamond(www, v) != expect)
                detail::suite_fail(r, "three-factor product at j=" + std::to_string(j) +
                                          " acts wrongly on " + to_string(v));
        }
    }
    return r;
}

// Walk-derived length versus the hyperplane-separation count.
inline SuiteResult suite_length_oracle(const CartanDatum& d, unsigned seed, int max_len) {
    SuiteResult r{"length-oracle", true, ""};
    std::mt19937 rng(seed ^ 0x1e47u);
    for (int trial = 0; trial < 500 && r.passed; ++trial) {
        WeylWord word = detail::random_word(d, rng, std::max(max_len, 8));
        AffineWeylElement w = element_from_word(d, word);
        if (length(w) != hyperplane_separation_count(w))
            detail::suite_fail(r, "length mismatch for word " + word_to_string(d, word));
    }
    return r;
}

// Bruhat recursion versus brute-force subword search on all pairs in a ball.
inline SuiteResult suite_bruhat_oracle(const CartanDatum& d, int max_len) {
    SuiteResult r{"bruhat-oracle", true, ""};
    int radius = std::min(max_len, 5);
    std::vector<AffineWeylElement> ball = detail::ball_of_elements(d, radius);
    for (const AffineWeylElement& w : ball) {
        WeylWord word = canonical_reduced_word(w);
        std::set<AffineWeylElement> below;
        for (std::size_t mask = 0; mask < (std::size_t(1) << word.size()); ++mask) {
            WeylWord sub;
            for (std::size_t p = 0; p < word.size(); ++p)
                if (mask & (std::size_t(1) << p)) sub.push_back(word[p]);
            below.insert(element_from_word(d, sub));
        }
        for (const AffineWeylElement& v : ball) {
            if (bruhat_leq(v, w) != (below.count(v) == 1)) {
                detail::suite_fail(r, "order disagreement at v=" +
                                          word_to_string(d, canonical_reduced_word(v)) +
                                          ", w=" + word_to_string(d, word));
                return r;
            }
        }
    }
    return r;
}

// The word <-> symmetric-core correspondence is bijective on a ball (family C).
inline SuiteResult suite_core_bijection(const CartanDatum& d, int max_len) {
    SuiteResult r{"core-bijection", true, ""};
    int radius = std::min(max_len, 10);
    std::set<SymmetricCore> images;
    for (const AffineWeylElement& w : detail::ball_of_elements(d, radius)) {
        if (!is_grassmannian(w)) continue;
        SymmetricCore c = core_of(w);
        std::string word = word_to_string(d, canonical_reduced_word(w));
        if (!is_symmetric_core_parts(c.parts, d.rank))
            detail::suite_fail(r, "image of " + word + " is not a symmetric core");
        if (!images.insert(c).second) detail::suite_fail(r, "core " + to_string(c) + " repeated");
        if (grassmannian_of(d, c) != w)
            detail::suite_fail(r, "round trip failed for " + word);
        if (!r.passed) return r;
    }
    return r;
}

// Closed forms for pseudo-translations by fundamental coweights (family C):
// their cores and their factored words.
inline SuiteResult suite_pseudotranslation_closed_forms(const CartanDatum& d) {
    SuiteResult r{"pseudo-translation-closed-forms", true, ""};
    for (int j = 1; j <= d.rank && r.passed; ++j) {
        AffineWeylElement z = pseudo_translation(d, d.fundamental_coweight(j));
        if (core_of(z) != expected_pseudotranslation_core(d.rank, j))
            detail::suite_fail(r, "core of the index-" + std::to_string(j) +
                                      " pseudo-translation is " + to_string(core_of(z)));
        if (pseudotranslation_word_formula(d, j) != z)
            detail::suite_fail(r, "closed-form word disagrees at index " + std::to_string(j));
    }
    return r;
}

// All implemented expansion formulas agree, and each expansion is
// multiplicity-free, homogeneous, and straightened by its coset
// representatives.
inline SuiteResult suite_formula_equality(const CartanDatum& d) {
    SuiteResult r{"formula-equality", true, ""};
    for (int j = 1; j <= d.rank && r.passed; ++j) {
        std::vector<ExpansionReport> reps;
        reps.push_back(kschur_orbit(d, d.fundamental_coweight(j)));
        reps.push_back(kschur_algebraic(d, j));
        if (d.family == Family::C) reps.push_back(kschur_combinatorial(d, j));
        for (std::size_t m = 1; m < reps.size(); ++m)
            if (!nc_equal(reps[0].value, reps[m].value))
                detail::suite_fail(r, "formulas '" + reps[0].formula + "' and '" +
                                          reps[m].formula + "' differ at index " +
                                          std::to_string(j));
        for (const ExpansionReport& rep : reps) {
            if (rep.value.terms.size() != rep.terms.size())
                detail::suite_fail(r, rep.formula + " expansion is not multiplicity-free at " +
                                          std::to_string(j));
            long long len0 = rep.terms.empty() ? 0 : length(rep.terms.front().element);
            for (const ExpansionTerm& t : rep.terms) {
                if (t.coeff != 1)
                    detail::suite_fail(r, "coefficient " + t.coeff.str() + " at index " +
                                              std::to_string(j));
                if (length(t.element) != len0)
                    detail::suite_fail(r, rep.formula + " expansion inhomogeneous at " +
                                              std::to_string(j));
                if (!is_grassmannian(multiply(t.element, t.coset_rep)))
                    detail::suite_fail(r, "term " + word_to_string(d, t.word) +
                                              " is not straightened by its coset representative");
            }
        }
    }
    return r;
}

// The expansion element intertwines u(w) with u(tau(w)).
inline SuiteResult suite_commutation(const CartanDatum& d, unsigned seed, int max_len) {
    SuiteResult r{"commutation", true, ""};
    std::mt19937 rng(seed ^ 0xc033u);
    for (int j = 1; j <= d.rank && r.passed; ++j) {
        for (int trial = 0; trial < 100; ++trial) {
            WeylWord word = detail::random_word(d, rng, std::min(max_len, 8));
            if (!verify_commutation(d, j, element_from_word(d, word))) {
                detail::suite_fail(r, "index " + std::to_string(j) + ", word " +
                                          word_to_string(d, word));
                break;
            }
        }
    }
    return r;
}

// The derived diagram automorphisms match the known tables, and are trivial
// exactly when the fundamental coweight lies in the coroot lattice.
inline SuiteResult suite_automorphism_tables(const CartanDatum& d) {
    SuiteResult r{"automorphism-tables", true, ""};
    for (int j = 1; j <= d.rank && r.passed; ++j) {
        DynkinAutomorphism tau = automorphism_of_coweight(d, j);
        if (tau.is_identity() != in_coroot_lattice(d, d.fundamental_coweight(j)))
            detail::suite_fail(r, "triviality disagrees with lattice membership at " +
                                      std::to_string(j));
        std::vector<int> expect;
        bool have_expect = false;
        if (d.family == Family::C) {
            have_expect = true;
            for (int i = 0; i <= d.rank; ++i)
                expect.push_back(j < d.rank ? i : d.rank - i);
        } else if (d.family == Family::B) {
            have_expect = true;
            for (int i = 0; i <= d.rank; ++i) expect.push_back(i);
            if (j % 2 == 1) std::swap(expect[0], expect[1]);
        } else if (d.family == Family::D && d.rank == 4) {
            have_expect = true;
            std::vector<std::vector<int>> table = {
                {1, 0, 2, 4, 3}, {0, 1, 2, 3, 4}, {3, 4, 2, 0, 1}, {4, 3, 2, 1, 0}};
            expect = table[std::size_t(j - 1)];
        }
        if (have_expect && tau.node_map != expect)
            detail::suite_fail(r, "unexpected node map at index " + std::to_string(j));
    }
    return r;
}

inline std::vector<SuiteResult> run_verification(const CartanDatum& d, unsigned seed,
                                                 int max_len) {
    std::vector<SuiteResult> out;
    out.push_back(suite_root_system(d));
    out.push_back(suite_action_identities(d, seed));
    out.push_back(suite_length_oracle(d, seed, max_len));
    out.push_back(suite_bruhat_oracle(d, max_len));
    if (d.family == Family::C) {
        out.push_back(suite_core_bijection(d, max_len));
        out.push_back(suite_pseudotranslation_closed_forms(d));
    }
    out.push_back(suite_formula_equality(d));
    out.push_back(suite_commutation(d, seed, max_len));
    out.push_back(suite_automorphism_tables(d));
    return out;
}

}  // namespace kschur
