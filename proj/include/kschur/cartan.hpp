#pragma once

// Exact root-system data for the affine families A_k^(1), B_k^(1), C_k^(1),
// D_k^(1), realized in orthonormal epsilon-coordinates.
//
// Conventions (fixed here once, used consistently in every module):
//   A_k: ambient R^{k+1} with sum-zero roots; alpha_i = e_i - e_{i+1}.
//   B_k: ambient R^k; alpha_i = e_i - e_{i+1} (i < k), alpha_k = e_k (short).
//   C_k: ambient R^k; alpha_i = e_i - e_{i+1} (i < k), alpha_k = 2 e_k (long).
//        The coroot side carries the doubled normalization
//        alpha_i^vee = 2(e_i - e_{i+1}), alpha_k^vee = 2 e_k, which pins
//        Lambda_i^vee = 2 Lambda_i (i < k) and Lambda_k^vee = Lambda_k; the
//        root/coweight pairing is then <x, y> = dot(x, y) / 2.
//   D_k: ambient R^k; alpha_i = e_i - e_{i+1} (i < k), alpha_k = e_{k-1} + e_k.
// In A, B, D the pairing is the plain dot product.
//
// The affine node 0 carries no stored vector: alpha_0 and alpha_0^vee act
// operationally as -theta and -theta^vee, which makes s_0 the affine
// reflection in the hyperplane <x, theta> = 1 in every family.

#include "kschur/numbers.hpp"

#include <cassert>
#include <set>
#include <string>
#include <vector>

namespace kschur {

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

inline Family family_from_letter(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
    }
    throw config_error(std::string("unknown family '") + c + "' (expected A, B, C or D)");
}

struct CartanDatum {
    Family family;
    int rank;  // k; affine node set is {0, ..., k}
    int dim;   // ambient dimension: k for B/C/D, k+1 for A

    // Affine Cartan matrix over nodes {0..k}: cartan_matrix[i][j] = <alpha_i^vee, alpha_j>.
    std::vector<std::vector<long long>> cartan_matrix;

    // Finite data, indexed 0-based for nodes 1..k (entry i-1 holds node i).
    std::vector<RVec> simple_roots;
    std::vector<RVec> simple_coroots;
    std::vector<RVec> fundamental_weights;
    std::vector<RVec> fundamental_coweights;
    std::vector<long long> marks;  // theta = sum marks[i-1] * alpha_i

    RVec highest_root;    // theta
    RVec highest_coroot;  // theta^vee

    const RVec& simple_root(int i) const { return simple_roots.at(i - 1); }
    const RVec& simple_coroot(int i) const { return simple_coroots.at(i - 1); }
    const RVec& fundamental_weight(int i) const { return fundamental_weights.at(i - 1); }
    const RVec& fundamental_coweight(int i) const { return fundamental_coweights.at(i - 1); }
    long long mark(int i) const { return marks.at(i - 1); }

    bool same_datum(const CartanDatum& o) const { return family == o.family && rank == o.rank; }
};

// Root/coweight pairing <x, alpha>: plain dot product, except type C where the
// doubled coroot-side normalization divides by two.
inline Rational pairing(const CartanDatum& d, const RVec& x, const RVec& root) {
    Rational s = rvec_dot(x, root);
    if (d.family == Family::C) s /= 2;
    return s;
}

// Euclidean reflection of x in the hyperplane orthogonal to the root alpha.
// Agrees with x - <x, alpha> alpha^vee under each family's pairing scale.
inline RVec reflect_in_root(const RVec& x, const RVec& alpha) {
    Rational c = 2 * rvec_dot(x, alpha) / rvec_dot(alpha, alpha);
    return rvec_sub(x, rvec_scale(c, alpha));
}

namespace detail {

inline RVec unit(int dim, int i) {  // e_{i+1} as 0-based index i
    RVec v = rvec_zero(dim);
    v[i] = 1;
    return v;
}

inline void validate_datum(const CartanDatum& d) {
    const int k = d.rank;
    // Duality: alpha_i(Lambda_j^vee) = delta_ij and Lambda_i(alpha_j^vee) = delta_ij.
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            Rational a = pairing(d, d.fundamental_coweight(j), d.simple_root(i));
            Rational b = pairing(d, d.simple_coroot(j), d.fundamental_weight(i));
            if (a != Rational(i == j ? 1 : 0) || b != Rational(i == j ? 1 : 0))
                throw config_error("internal: weight/coweight duality failed");
        }
    // theta = sum of marks * simple roots; <theta^vee, theta> = 2.
    RVec t = rvec_zero(d.dim);
    for (int i = 1; i <= k; ++i) t = rvec_add(t, rvec_scale(Rational(d.mark(i)), d.simple_root(i)));
    if (t != d.highest_root) throw config_error("internal: marks do not rebuild theta");
    if (pairing(d, d.highest_coroot, d.highest_root) != 2)
        throw config_error("internal: <theta^vee, theta> != 2");
}

}  // namespace detail

inline CartanDatum build_cartan_datum(Family family, int rank) {
    const int k = rank;
    const int min_rank = family == Family::A ? 2 : family == Family::B ? 3 : family == Family::C ? 2 : 4;
    if (k < min_rank)
        throw config_error(std::string("family ") + family_letter(family) + " requires rank >= " +
                           std::to_string(min_rank) + " (got " + std::to_string(k) + ")");

    CartanDatum d;
    d.family = family;
    d.rank = k;
    d.dim = family == Family::A ? k + 1 : k;
    const int n = d.dim;

    using detail::unit;
    d.simple_roots.resize(k);
    d.simple_coroots.resize(k);
    d.fundamental_weights.resize(k);
    d.fundamental_coweights.resize(k);
    d.marks.assign(k, 2);

    switch (family) {
        case Family::A: {
            for (int i = 1; i <= k; ++i) {
                d.simple_roots[i - 1] = rvec_sub(unit(n, i - 1), unit(n, i));
                d.simple_coroots[i - 1] = d.simple_roots[i - 1];
            }
            for (int i = 1; i <= k; ++i) {
                RVec w = rvec_zero(n);
                for (int a = 0; a < i; ++a) w[a] = 1;
                // project to the sum-zero hyperplane
                Rational shift = Rational(i) / Rational(k + 1);
                for (int a = 0; a < n; ++a) w[a] -= shift;
                d.fundamental_weights[i - 1] = w;
                d.fundamental_coweights[i - 1] = w;
            }
            d.highest_root = rvec_sub(unit(n, 0), unit(n, k));
            d.highest_coroot = d.highest_root;
            d.marks.assign(k, 1);
            break;
        }
        case Family::B: {
            for (int i = 1; i < k; ++i) {
                d.simple_roots[i - 1] = rvec_sub(unit(n, i - 1), unit(n, i));
                d.simple_coroots[i - 1] = d.simple_roots[i - 1];
            }
            d.simple_roots[k - 1] = unit(n, k - 1);                       // short
            d.simple_coroots[k - 1] = rvec_scale(2, unit(n, k - 1));
            for (int i = 1; i <= k; ++i) {
                RVec w = rvec_zero(n);
                for (int a = 0; a < i; ++a) w[a] = 1;
                d.fundamental_coweights[i - 1] = w;
                d.fundamental_weights[i - 1] = (i < k) ? w : rvec_scale(Rational(1, 2), w);
            }
            d.highest_root = rvec_add(unit(n, 0), unit(n, 1));
            d.highest_coroot = d.highest_root;
            d.marks[0] = 1;
            break;
        }
        case Family::C: {
            for (int i = 1; i < k; ++i) {
                d.simple_roots[i - 1] = rvec_sub(unit(n, i - 1), unit(n, i));
                d.simple_coroots[i - 1] = rvec_scale(2, d.simple_roots[i - 1]);
            }
            d.simple_roots[k - 1] = rvec_scale(2, unit(n, k - 1));        // long
            d.simple_coroots[k - 1] = d.simple_roots[k - 1];
            for (int i = 1; i <= k; ++i) {
                RVec w = rvec_zero(n);
                for (int a = 0; a < i; ++a) w[a] = 1;
                d.fundamental_weights[i - 1] = w;
                d.fundamental_coweights[i - 1] = (i < k) ? rvec_scale(2, w) : w;
            }
            d.highest_root = rvec_scale(2, unit(n, 0));
            d.highest_coroot = d.highest_root;
            d.marks[k - 1] = 1;
            break;
        }
        case Family::D: {
            for (int i = 1; i < k; ++i) {
                d.simple_roots[i - 1] = rvec_sub(unit(n, i - 1), unit(n, i));
                d.simple_coroots[i - 1] = d.simple_roots[i - 1];
            }
            d.simple_roots[k - 1] = rvec_add(unit(n, k - 2), unit(n, k - 1));
            d.simple_coroots[k - 1] = d.simple_roots[k - 1];
            for (int i = 1; i <= k - 2; ++i) {
                RVec w = rvec_zero(n);
                for (int a = 0; a < i; ++a) w[a] = 1;
                d.fundamental_weights[i - 1] = w;
                d.fundamental_coweights[i - 1] = w;
            }
            RVec spin_minus(n, Rational(1, 2)), spin_plus(n, Rational(1, 2));
            spin_minus[n - 1] = Rational(-1, 2);
            d.fundamental_weights[k - 2] = spin_minus;
            d.fundamental_coweights[k - 2] = spin_minus;
            d.fundamental_weights[k - 1] = spin_plus;
            d.fundamental_coweights[k - 1] = spin_plus;
            d.highest_root = rvec_add(unit(n, 0), unit(n, 1));
            d.highest_coroot = d.highest_root;
            d.marks[0] = 1;
            d.marks[k - 2] = 1;
            d.marks[k - 1] = 1;
            break;
        }
    }

    // Affine Cartan matrix from pairings, with node 0 acting as -theta / -theta^vee.
    auto coroot_of = [&](int i) -> RVec { return i == 0 ? rvec_neg(d.highest_coroot) : d.simple_coroot(i); };
    auto root_of = [&](int i) -> RVec { return i == 0 ? rvec_neg(d.highest_root) : d.simple_root(i); };
    d.cartan_matrix.assign(k + 1, std::vector<long long>(k + 1, 0));
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) {
            if (i == j) {
                d.cartan_matrix[i][j] = 2;
                continue;
            }
            Rational a = pairing(d, coroot_of(i), root_of(j));
            if (!is_integer(a)) throw config_error("internal: non-integral Cartan entry");
            d.cartan_matrix[i][j] = static_cast<long long>(boost::multiprecision::numerator(a));
        }

    detail::validate_datum(d);
    return d;
}

// All positive roots of the finite system, as a deterministic sorted list.
// Generated by closing the simple roots under the simple reflections and
// keeping the half that pairs positively with a strictly dominant vector.
inline std::vector<RVec> positive_roots(const CartanDatum& d) {
    std::set<RVec> all(d.simple_roots.begin(), d.simple_roots.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<RVec> batch(all.begin(), all.end());
        for (const RVec& r : batch)
            for (int i = 1; i <= d.rank; ++i) {
                RVec img = reflect_in_root(r, d.simple_root(i));
                if (all.insert(img).second) grew = true;
            }
    }
    RVec dominant = rvec_zero(d.dim);
    for (const RVec& w : d.fundamental_coweights) dominant = rvec_add(dominant, w);
    std::vector<RVec> pos;
    for (const RVec& r : all) {
        Rational p = pairing(d, dominant, r);
        if (p > 0) pos.push_back(r);
        else if (p == 0) throw config_error("internal: root orthogonal to dominant vector");
    }
    return pos;
}

// Barycenter of the fundamental alcove: the average of its vertices
// {0} u {Lambda_i^vee / mark_i}.
inline RVec fundamental_alcove_centroid(const CartanDatum& d) {
    RVec s = rvec_zero(d.dim);
    for (int i = 1; i <= d.rank; ++i)
        s = rvec_add(s, rvec_scale(Rational(1, d.mark(i)), d.fundamental_coweight(i)));
    return rvec_scale(Rational(1, d.rank + 1), s);
}

}  // namespace kschur
