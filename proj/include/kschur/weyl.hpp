#pragma once

// Affine Weyl group elements as exact affine maps x ↦ L x + t, where L is an
// integer (signed-)permutation matrix and t an integer vector in the finite
// coroot lattice.  The group is W_af = W_fin ⋉ Q_fin^∨.
//
// Two actions:
//   ⋆ (star):    the linearization, x ↦ L x       (translations act trivially)
//   ⋄ (diamond): the affine action, x ↦ L x + t
//
// Composition convention: (a·b) ⋄ v = a ⋄ (b ⋄ v), i.e. the rightmost factor
// acts first.  element_from_word multiplies letters left to right, so the
// leftmost letter is the leftmost (outermost) factor.
//
// Alcoves: the fundamental alcove 𝒜_∅ is the simplex 0 < <x,α_i>, <x,θ> < 1;
// the alcove of w is 𝒜_w = w^{-1} ⋄ 𝒜_∅, tracked through its centroid.
// Appending a generator on the right reflects the alcove in the corresponding
// *fixed* fundamental wall: 𝒜_{w s_j} = s_j ⋄ 𝒜_w.

#include "kschur/cartan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace kschur {

using WeylWord = std::vector<int>;
using Coweight = RVec;

struct AffineWeylElement {
    const CartanDatum* datum = nullptr;
    std::vector<long long> linear;  // dim x dim, row-major
    std::vector<long long> trans;   // dim

    long long lin(int r, int c) const { return linear[std::size_t(r) * datum->dim + c]; }
    long long& lin(int r, int c) { return linear[std::size_t(r) * datum->dim + c]; }

    friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
        return a.datum->family == b.datum->family && a.datum->rank == b.datum->rank &&
               a.linear == b.linear && a.trans == b.trans;
    }
    friend bool operator!=(const AffineWeylElement& a, const AffineWeylElement& b) {
        return !(a == b);
    }
    friend bool operator<(const AffineWeylElement& a, const AffineWeylElement& b) {
        if (a.linear != b.linear) return a.linear < b.linear;
        return a.trans < b.trans;
    }
};

struct DynkinAutomorphism {
    std::vector<int> node_map;  // image of node i at index i, over {0..k}
    int operator()(int i) const { return node_map.at(i); }
    bool is_identity() const {
        for (std::size_t i = 0; i < node_map.size(); ++i)
            if (node_map[i] != int(i)) return false;
        return true;
    }
    friend bool operator==(const DynkinAutomorphism& a, const DynkinAutomorphism& b) {
        return a.node_map == b.node_map;
    }
};

inline AffineWeylElement identity_element(const CartanDatum& d) {
    AffineWeylElement w;
    w.datum = &d;
    w.linear.assign(std::size_t(d.dim) * d.dim, 0);
    w.trans.assign(d.dim, 0);
    for (int r = 0; r < d.dim; ++r) w.lin(r, r) = 1;
    return w;
}

namespace detail {

inline void check_same_datum(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (!a.datum->same_datum(*b.datum))
        throw domain_error("elements belong to different root systems");
}

inline long long rational_to_ll(const Rational& x, const char* what) {
    if (!is_integer(x)) throw domain_error(std::string("non-integral ") + what);
    return static_cast<long long>(boost::multiprecision::numerator(x));
}

}  // namespace detail

// Generator s_i as an element.  For i in 1..k this is the linear reflection in
// the wall of alpha_i; for i = 0 it is the affine reflection in <x, theta> = 1,
// i.e. x ↦ r_theta(x) + theta^vee.
inline AffineWeylElement simple_reflection(const CartanDatum& d, int i) {
    if (i < 0 || i > d.rank) throw domain_error("generator index out of range");
    const RVec& alpha = (i == 0) ? d.highest_root : d.simple_root(i);
    AffineWeylElement w = identity_element(d);
    for (int c = 0; c < d.dim; ++c) {
        RVec e = rvec_zero(d.dim);
        e[c] = 1;
        RVec img = reflect_in_root(e, alpha);
        for (int r = 0; r < d.dim; ++r)
            w.lin(r, c) = detail::rational_to_ll(img[r], "reflection matrix entry");
    }
    if (i == 0) {
        const RVec& tv = d.highest_coroot;
        for (int r = 0; r < d.dim; ++r)
            w.trans[r] = detail::rational_to_ll(tv[r], "affine translation entry");
    }
    return w;
}

inline AffineWeylElement multiply(const AffineWeylElement& a, const AffineWeylElement& b) {
    detail::check_same_datum(a, b);
    const int n = a.datum->dim;
    AffineWeylElement c;
    c.datum = a.datum;
    c.linear.assign(std::size_t(n) * n, 0);
    c.trans.assign(n, 0);
    for (int r = 0; r < n; ++r)
        for (int m = 0; m < n; ++m) {
            long long arm = a.lin(r, m);
            if (arm == 0) continue;
            for (int q = 0; q < n; ++q) c.lin(r, q) += arm * b.lin(m, q);
            c.trans[r] += arm * b.trans[m];
        }
    for (int r = 0; r < n; ++r) c.trans[r] += a.trans[r];
    return c;
}

inline AffineWeylElement operator*(const AffineWeylElement& a, const AffineWeylElement& b) {
    return multiply(a, b);
}

inline AffineWeylElement inverse(const AffineWeylElement& w) {
    const int n = w.datum->dim;
    AffineWeylElement v;
    v.datum = w.datum;
    v.linear.assign(std::size_t(n) * n, 0);
    v.trans.assign(n, 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) v.lin(r, c) = w.lin(c, r);  // signed perms: inverse = transpose
    for (int r = 0; r < n; ++r) {
        long long s = 0;
        for (int c = 0; c < n; ++c) s += w.lin(c, r) * w.trans[c];
        v.trans[r] = -s;
    }
    return v;
}

inline RVec apply_star(const AffineWeylElement& w, const RVec& v) {
    if (int(v.size()) != w.datum->dim) throw domain_error("vector dimension mismatch");
    RVec out = rvec_zero(w.datum->dim);
    for (int r = 0; r < w.datum->dim; ++r)
        for (int c = 0; c < w.datum->dim; ++c)
            if (w.lin(r, c) != 0) out[r] += Rational(w.lin(r, c)) * v[c];
    return out;
}

inline RVec apply_diamond(const AffineWeylElement& w, const RVec& v) {
    RVec out = apply_star(w, v);
    for (int r = 0; r < w.datum->dim; ++r) out[r] += w.trans[r];
    return out;
}

// Generator overloads.
inline RVec apply_star(const CartanDatum& d, int i, const RVec& v) {
    return apply_star(simple_reflection(d, i), v);
}
inline RVec apply_diamond(const CartanDatum& d, int i, const RVec& v) {
    return apply_diamond(simple_reflection(d, i), v);
}

inline AffineWeylElement element_from_word(const CartanDatum& d, const WeylWord& word) {
    AffineWeylElement w = identity_element(d);
    for (int letter : word) w = multiply(w, simple_reflection(d, letter));
    return w;
}

// Centroid of the alcove 𝒜_w = w^{-1} ⋄ 𝒜_∅.
inline RVec alcove_centroid(const AffineWeylElement& w) {
    return apply_diamond(inverse(w), fundamental_alcove_centroid(*w.datum));
}

// Coweight membership: <lambda, alpha_i> integral for every finite simple root.
inline bool is_coweight(const CartanDatum& d, const RVec& lambda) {
    if (int(lambda.size()) != d.dim) return false;
    for (int i = 1; i <= d.rank; ++i)
        if (!is_integer(pairing(d, lambda, d.simple_root(i)))) return false;
    if (d.family == Family::A) {
        Rational s = 0;
        for (const Rational& x : lambda) s += x;
        if (s != 0) return false;
    }
    return true;
}

// Coroot lattice membership (integer span of the simple coroots).
inline bool in_coroot_lattice(const CartanDatum& d, const RVec& gamma) {
    if (int(gamma.size()) != d.dim) return false;
    Integer sum = 0;
    for (const Rational& x : gamma) {
        if (!is_integer(x)) return false;
        sum += boost::multiprecision::numerator(x);
    }
    switch (d.family) {
        case Family::A: return sum == 0;
        case Family::B:
        case Family::D: return sum % 2 == 0;
        case Family::C:
            for (const Rational& x : gamma)
                if (boost::multiprecision::numerator(x) % 2 != 0) return false;
            return true;
    }
    return false;
}

// Pure translation x ↦ x + gamma, defined for gamma in the coroot lattice.
inline AffineWeylElement translation_element(const CartanDatum& d, const RVec& gamma) {
    if (!in_coroot_lattice(d, gamma))
        throw domain_error("translation vector " + to_string(gamma) + " is not in the coroot lattice");
    AffineWeylElement w = identity_element(d);
    for (int r = 0; r < d.dim; ++r)
        w.trans[r] = detail::rational_to_ll(gamma[r], "translation entry");
    return w;
}

namespace detail {

// Does the fundamental wall indexed by j strictly separate the point c from
// the interior of the fundamental alcove?  (Wall H_{alpha_j, 0} for j >= 1,
// H_{theta, 1} for j = 0.)  For alcove centroids this is exactly the right
// descent test.
inline bool wall_separates(const CartanDatum& d, const RVec& c, int j) {
    if (j == 0) return pairing(d, c, d.highest_root) > 1;
    return pairing(d, c, d.simple_root(j)) < 0;
}

// Greedy walk from the alcove containing the interior point c back to the
// fundamental alcove; returns the crossed wall indices in crossing order.
// The element with alcove centroid c has canonical word = reverse of this.
inline std::vector<int> walk_to_fundamental(const CartanDatum& d, RVec c) {
    std::vector<AffineWeylElement> gens;
    for (int i = 0; i <= d.rank; ++i) gens.push_back(simple_reflection(d, i));
    std::vector<int> crossed;
    for (;;) {
        int j = -1;
        for (int i = 0; i <= d.rank; ++i)
            if (wall_separates(d, c, i)) {
                j = i;
                break;
            }
        if (j < 0) break;
        c = apply_diamond(gens[j], c);
        crossed.push_back(j);
    }
    return crossed;
}

}  // namespace detail

inline bool is_right_descent(const AffineWeylElement& w, int j) {
    if (j < 0 || j > w.datum->rank) throw domain_error("generator index out of range");
    return detail::wall_separates(*w.datum, alcove_centroid(w), j);
}

inline WeylWord canonical_reduced_word(const AffineWeylElement& w) {
    std::vector<int> crossed = detail::walk_to_fundamental(*w.datum, alcove_centroid(w));
    std::reverse(crossed.begin(), crossed.end());
    return crossed;
}

inline long long length(const AffineWeylElement& w) {
    return (long long)canonical_reduced_word(w).size();
}

// Independent length computation: the number of affine hyperplanes H_{alpha,m}
// (alpha a positive finite root, m an integer) separating the fundamental
// centroid from the centroid of 𝒜_w.
inline long long hyperplane_separation_count(const AffineWeylElement& w) {
    const CartanDatum& d = *w.datum;
    RVec g = fundamental_alcove_centroid(d);
    RVec c = alcove_centroid(w);
    long long total = 0;
    for (const RVec& alpha : positive_roots(d)) {
        Rational a = pairing(d, g, alpha);
        Rational b = pairing(d, c, alpha);
        if (is_integer(a) || is_integer(b))
            throw domain_error("centroid lies on an affine hyperplane");
        Integer fa = rational_floor(a), fb = rational_floor(b);
        Integer diff = fb >= fa ? fb - fa : fa - fb;
        total += static_cast<long long>(diff);
    }
    return total;
}

inline bool is_grassmannian(const AffineWeylElement& w) {
    RVec c = alcove_centroid(w);
    for (int i = 1; i <= w.datum->rank; ++i)
        if (detail::wall_separates(*w.datum, c, i)) return false;
    return true;
}

// The unique element whose alcove is the fundamental alcove translated by
// lambda, for lambda in the coweight lattice.
inline AffineWeylElement pseudo_translation(const CartanDatum& d, const RVec& lambda) {
    if (int(lambda.size()) != d.dim) throw domain_error("coweight dimension mismatch");
    if (!is_coweight(d, lambda))
        throw domain_error("vector " + to_string(lambda) +
                           " is not a coweight: some simple root evaluates non-integrally");
    RVec target = rvec_add(fundamental_alcove_centroid(d), lambda);
    std::vector<int> crossed = detail::walk_to_fundamental(d, target);
    std::reverse(crossed.begin(), crossed.end());
    AffineWeylElement z = element_from_word(d, crossed);
    if (alcove_centroid(z) != target)
        throw domain_error("internal: pseudo-translation walk did not land on the target alcove");
    return z;
}

// Bruhat order via the descent recursion: if i is a right descent of w, then
// v <= w  iff  (v s_i if i is a descent of v, else v) <= w s_i.
// Memoized per thread on (v, w) pairs.
inline bool bruhat_leq(const AffineWeylElement& v, const AffineWeylElement& w) {
    detail::check_same_datum(v, w);
    using Key = std::pair<AffineWeylElement, AffineWeylElement>;
    thread_local std::map<Key, bool> memo;

    struct Rec {
        const CartanDatum& d;
        std::map<Key, bool>& memo;
        bool run(const AffineWeylElement& v, const AffineWeylElement& w) {
            AffineWeylElement id = identity_element(d);
            if (v == id) return true;
            if (w == id) return false;
            Key key{v, w};
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            int i = -1;
            for (int j = 0; j <= d.rank; ++j)
                if (is_right_descent(w, j)) {
                    i = j;
                    break;
                }
            AffineWeylElement si = simple_reflection(d, i);
            AffineWeylElement ws = multiply(w, si);
            bool ans = is_right_descent(v, i) ? run(multiply(v, si), ws) : run(v, ws);
            memo.emplace(key, ans);
            return ans;
        }
    } rec{*v.datum, memo};
    return rec.run(v, w);
}

// Minimal-length coset representatives W_0^j for W_0 / Stab(Lambda_j^vee):
// breadth-first traversal of the orbit of Lambda_j^vee under the finite
// generators, recording the first-reached (hence minimal) representative for
// each orbit point.  rep ⋆ Lambda_j^vee recovers the orbit point.
inline std::vector<AffineWeylElement> minimal_coset_reps(const CartanDatum& d, int j) {
    if (j < 1 || j > d.rank) throw domain_error("coweight index out of range");
    RVec start = d.fundamental_coweight(j);
    std::vector<AffineWeylElement> gens;
    for (int i = 1; i <= d.rank; ++i) gens.push_back(simple_reflection(d, i));

    std::vector<AffineWeylElement> reps;
    std::map<RVec, bool> seen;
    std::deque<std::pair<AffineWeylElement, RVec>> queue;
    queue.emplace_back(identity_element(d), start);
    seen[start] = true;
    while (!queue.empty()) {
        auto [rep, pt] = queue.front();
        queue.pop_front();
        reps.push_back(rep);
        for (int i = 1; i <= d.rank; ++i) {
            RVec pt2 = apply_star(gens[i - 1], pt);
            if (seen.emplace(pt2, true).second)
                queue.emplace_back(multiply(gens[i - 1], rep), pt2);
        }
    }
    return reps;
}

inline AffineWeylElement longest_coset_rep(const CartanDatum& d, int j) {
    std::vector<AffineWeylElement> reps = minimal_coset_reps(d, j);
    const AffineWeylElement* best = nullptr;
    long long best_len = -1;
    bool tie = false;
    for (const AffineWeylElement& r : reps) {
        long long l = length(r);
        if (l > best_len) {
            best = &r;
            best_len = l;
            tie = false;
        } else if (l == best_len) {
            tie = true;
        }
    }
    if (best == nullptr || tie)
        throw domain_error("internal: maximal-length coset representative is not unique");
    return *best;
}

inline WeylWord apply_automorphism(const DynkinAutomorphism& tau, const WeylWord& word) {
    WeylWord out;
    out.reserve(word.size());
    for (int letter : word) out.push_back(tau(letter));
    return out;
}

inline AffineWeylElement apply_automorphism_element(const DynkinAutomorphism& tau,
                                                    const AffineWeylElement& w) {
    return element_from_word(*w.datum, apply_automorphism(tau, canonical_reduced_word(w)));
}

// The diagram automorphism tau_gamma attached to gamma = Lambda_j^vee via the
// factorization t_gamma = z_gamma^{-1} tau_gamma.  Computed generator by
// generator from the commutation identity z_{s_i ⋆ gamma} · s_i = s_{tau(i)} · z:
// the left side, times z^{-1}, must be a simple reflection, and its index is
// tau(i).  tau(0) is the one leftover index.
inline DynkinAutomorphism automorphism_of_coweight(const CartanDatum& d, int j) {
    if (j < 1 || j > d.rank) throw domain_error("coweight index out of range");
    RVec gamma = d.fundamental_coweight(j);
    AffineWeylElement z = pseudo_translation(d, gamma);
    AffineWeylElement zinv = inverse(z);

    DynkinAutomorphism tau;
    tau.node_map.assign(d.rank + 1, -1);
    std::vector<bool> used(d.rank + 1, false);
    for (int i = 1; i <= d.rank; ++i) {
        AffineWeylElement si = simple_reflection(d, i);
        AffineWeylElement e =
            multiply(multiply(pseudo_translation(d, apply_star(si, gamma)), si), zinv);
        int found = -1;
        for (int m = 0; m <= d.rank; ++m)
            if (e == simple_reflection(d, m)) {
                found = m;
                break;
            }
        if (found < 0)
            throw domain_error("internal: commutation product is not a simple reflection");
        tau.node_map[i] = found;
        used[found] = true;
    }
    for (int m = 0; m <= d.rank; ++m)
        if (!used[m]) {
            if (tau.node_map[0] != -1)
                throw domain_error("internal: node map is not a bijection");
            tau.node_map[0] = m;
        }
    if (tau.node_map[0] == -1) throw domain_error("internal: node map is not a bijection");

    for (int a = 0; a <= d.rank; ++a)
        for (int b = 0; b <= d.rank; ++b)
            if (d.cartan_matrix[tau(a)][tau(b)] != d.cartan_matrix[a][b])
                throw domain_error("internal: node map is not a diagram symmetry");
    if (tau.is_identity() != in_coroot_lattice(d, gamma))
        throw domain_error("internal: automorphism triviality disagrees with lattice membership");
    return tau;
}

inline DynkinAutomorphism identity_automorphism(const CartanDatum& d) {
    DynkinAutomorphism tau;
    tau.node_map.resize(d.rank + 1);
    std::iota(tau.node_map.begin(), tau.node_map.end(), 0);
    return tau;
}

// Word rendering: digits run together while node indices fit in one digit,
// space-separated otherwise.
inline std::string word_to_string(const CartanDatum& d, const WeylWord& word) {
    std::string out;
    bool compact = d.rank <= 9;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(word[i]);
    }
    return out;
}

}  // namespace kschur
