#pragma once

// Type-C combinatorial model: symmetric 2k-cores, residues, the generator
// action, the bijection with Grassmannian elements, interval enumeration, and
// shifted-diagram rendering.
//
// Conventions: partitions are weakly decreasing positive parts; cells are
// (row, column), 1-based.  A core is SYMMETRIC when it equals its transpose
// and a 2k-CORE when no cell has hook length divisible by 2k.  The residue of
// cell (r, c) is the content c−r reduced mod 2k and folded onto {0,…,k}.
// Acting by the generator s_i adds all addable residue-i corners if any exist,
// else removes all removable residue-i corners, else fixes the shape.  Words
// act with the rightmost generator first, matching the group composition
// convention, so w∅ is the core of the Grassmannian element w.

#include "kschur/weyl.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace kschur {

struct SymmetricCore {
    std::vector<long long> parts;  // weakly decreasing, positive

    long long cell_count() const {
        long long n = 0;
        for (long long p : parts) n += p;
        return n;
    }
    long long rows() const { return (long long)parts.size(); }
    long long part(long long r) const {  // 1-based, 0 beyond the last row
        return (r >= 1 && r <= rows()) ? parts[r - 1] : 0;
    }
    bool contains_cell(long long r, long long c) const {
        return r >= 1 && c >= 1 && c <= part(r);
    }

    friend bool operator==(const SymmetricCore& a, const SymmetricCore& b) {
        return a.parts == b.parts;
    }
    friend bool operator!=(const SymmetricCore& a, const SymmetricCore& b) {
        return !(a == b);
    }
    friend bool operator<(const SymmetricCore& a, const SymmetricCore& b) {
        return a.parts < b.parts;
    }
};

inline std::vector<long long> conjugate_partition(const std::vector<long long>& parts) {
    std::vector<long long> out;
    if (parts.empty()) return out;
    out.resize(std::size_t(parts[0]), 0);
    for (long long p : parts)
        for (long long c = 0; c < p; ++c) ++out[std::size_t(c)];
    return out;
}

inline long long hook_length(const SymmetricCore& core, long long r, long long c) {
    if (!core.contains_cell(r, c)) throw domain_error("hook cell outside diagram");
    long long arm = core.part(r) - c;
    long long leg = 0;
    for (long long r2 = r + 1; r2 <= core.rows(); ++r2)
        if (core.part(r2) >= c) ++leg;
    return arm + leg + 1;
}

inline bool is_symmetric_core_parts(const std::vector<long long>& parts, int k) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i + 1 < parts.size() && parts[i + 1] > parts[i]) return false;
    }
    if (conjugate_partition(parts) != parts) return false;
    SymmetricCore c{parts};
    for (long long r = 1; r <= c.rows(); ++r)
        for (long long col = 1; col <= c.part(r); ++col)
            if (hook_length(c, r, col) % (2 * k) == 0) return false;
    return true;
}

inline SymmetricCore make_symmetric_core(const std::vector<long long>& parts, int k) {
    if (!is_symmetric_core_parts(parts, k)) {
        SymmetricCore probe{parts};
        throw domain_error("partition is not a symmetric " + std::to_string(2 * k) + "-core");
    }
    return SymmetricCore{parts};
}

// Content c−r reduced mod 2k and folded: values in (k, 2k) reflect to 2k−value.
inline int residue(int k, long long r, long long c) {
    long long m = 2 * k;
    long long x = ((c - r) % m + m) % m;
    if (x > k) x = m - x;
    return int(x);
}

namespace detail {

inline std::vector<std::pair<long long, long long>> addable_cells(const SymmetricCore& core) {
    std::vector<std::pair<long long, long long>> out;
    for (long long r = 1; r <= core.rows(); ++r)
        if (r == 1 || core.part(r - 1) > core.part(r)) out.emplace_back(r, core.part(r) + 1);
    out.emplace_back(core.rows() + 1, 1);
    return out;
}

inline std::vector<std::pair<long long, long long>> removable_cells(const SymmetricCore& core) {
    std::vector<std::pair<long long, long long>> out;
    for (long long r = 1; r <= core.rows(); ++r)
        if (core.part(r + 1) < core.part(r)) out.emplace_back(r, core.part(r));
    return out;
}

}  // namespace detail

inline SymmetricCore apply_generator_to_core(int k, int i, const SymmetricCore& core) {
    if (i < 0 || i > k) throw domain_error("generator index out of range");
    std::vector<long long> parts = core.parts;
    bool moved = false;
    for (auto [r, c] : detail::addable_cells(core))
        if (residue(k, r, c) == i) {
            if (r > (long long)parts.size()) parts.resize(std::size_t(r), 0);
            ++parts[std::size_t(r - 1)];
            moved = true;
        }
    if (!moved) {
        for (auto [r, c] : detail::removable_cells(core))
            if (residue(k, r, c) == i) {
                --parts[std::size_t(r - 1)];
                moved = true;
            }
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }
    if (!moved) return core;
    if (!is_symmetric_core_parts(parts, k))
        throw domain_error("internal: generator action left the symmetric-core family");
    return SymmetricCore{parts};
}

// Rightmost letter acts first, matching (a·b) ⋄ v = a ⋄ (b ⋄ v).
inline SymmetricCore apply_word_to_core(int k, const WeylWord& word, const SymmetricCore& core) {
    SymmetricCore out = core;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out = apply_generator_to_core(k, *it, out);
    return out;
}

namespace detail {

inline void require_type_c(const CartanDatum& d, const char* what) {
    if (d.family != Family::C)
        throw domain_error(std::string(what) + " is defined for the C family only");
}

}  // namespace detail

inline SymmetricCore core_of(const AffineWeylElement& w) {
    detail::require_type_c(*w.datum, "the core correspondence");
    if (!is_grassmannian(w))
        throw domain_error("core correspondence requires a Grassmannian element");
    return apply_word_to_core(w.datum->rank, canonical_reduced_word(w), SymmetricCore{});
}

// Word built by repeatedly acting with the smallest generator that strictly
// shrinks the core; the first letter peeled is the leftmost letter.
inline WeylWord peel_word(int k, const SymmetricCore& core) {
    WeylWord word;
    SymmetricCore cur = core;
    while (!cur.parts.empty()) {
        int chosen = -1;
        SymmetricCore next;
        for (int i = 0; i <= k; ++i) {
            SymmetricCore cand = apply_generator_to_core(k, i, cur);
            if (cand.cell_count() < cur.cell_count()) {
                chosen = i;
                next = cand;
                break;
            }
        }
        if (chosen < 0) throw domain_error("internal: nonempty core with no shrinking generator");
        word.push_back(chosen);
        cur = next;
    }
    return word;
}

inline AffineWeylElement grassmannian_of(const CartanDatum& d, const SymmetricCore& core) {
    detail::require_type_c(d, "the core correspondence");
    if (!is_symmetric_core_parts(core.parts, d.rank))
        throw domain_error("not a valid symmetric core for this rank");
    return element_from_word(d, peel_word(d.rank, core));
}

// All symmetric 2k-cores whose diagram fits inside R, enumerated through
// strictly decreasing diagonal arm sequences (the Frobenius coordinates of a
// self-conjugate shape), then filtered by the 2k-core condition.
inline std::vector<SymmetricCore> cores_contained_in(int k, const SymmetricCore& R) {
    long long d = 0;
    while (R.contains_cell(d + 1, d + 1)) ++d;
    std::vector<SymmetricCore> out;
    std::vector<long long> arms;

    auto build = [&]() {
        std::vector<long long> parts;
        for (std::size_t i = 0; i < arms.size(); ++i) {
            long long row = (long long)i + 1;
            parts.push_back(arms[i] + row);
        }
        long long depth = (long long)arms.size();
        for (long long r = depth + 1;; ++r) {
            long long len = 0;
            for (std::size_t i = 0; i < arms.size(); ++i)
                if (arms[i] + (long long)i + 1 >= r) ++len;
            if (len == 0) break;
            if (len > depth) len = depth;  // unreachable; defensive
            parts.push_back(len);
        }
        if (is_symmetric_core_parts(parts, k)) {
            SymmetricCore c{parts};
            for (long long r = 1; r <= c.rows(); ++r)
                if (c.part(r) > R.part(r))
                    throw domain_error("internal: arm-bounded shape escapes the frame");
            out.push_back(c);
        }
    };

    // arms[i] < arms[i-1] and arms[i] <= R_i - (i+1) (0-based i)
    struct Rec {
        long long d;
        const SymmetricCore& R;
        std::vector<long long>& arms;
        std::function<void()> build;
        void run(long long depth) {
            build();
            if (depth >= d) return;
            long long hi = R.part(depth + 1) - (depth + 1);
            if (!arms.empty()) hi = std::min(hi, arms.back() - 1);
            for (long long a = hi; a >= 0; --a) {
                arms.push_back(a);
                run(depth + 1);
                arms.pop_back();
            }
        }
    } rec{d, R, arms, build};
    rec.run(0);
    return out;
}

// All symmetric 2k-cores lambda with w_S <= w_lambda <= w_R in Bruhat order,
// sorted by (length of w_lambda, then lexicographic peel word).  Candidates
// come from diagram containment in R; a containment-vs-Bruhat cross-check
// warns loudly on divergence but the Bruhat answer is returned.
inline std::vector<SymmetricCore> cores_in_interval(const CartanDatum& d, const SymmetricCore& S,
                                                    const SymmetricCore& R) {
    detail::require_type_c(d, "interval enumeration");
    const int k = d.rank;
    AffineWeylElement wS = grassmannian_of(d, S), wR = grassmannian_of(d, R);
    if (!bruhat_leq(wS, wR))
        throw domain_error("interval endpoints are incomparable in Bruhat order");

    std::vector<std::pair<std::pair<long long, WeylWord>, SymmetricCore>> keyed;
    std::vector<SymmetricCore> by_containment;
    for (const SymmetricCore& lam : cores_contained_in(k, R)) {
        AffineWeylElement w = grassmannian_of(d, lam);
        if (bruhat_leq(wS, w) && bruhat_leq(w, wR))
            keyed.push_back({{length(w), peel_word(k, lam)}, lam});
        bool contains_S = true;
        for (long long r = 1; r <= S.rows(); ++r)
            if (lam.part(r) < S.part(r)) contains_S = false;
        if (contains_S) by_containment.push_back(lam);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<SymmetricCore> out;
    for (auto& [key, lam] : keyed) out.push_back(lam);

    std::sort(by_containment.begin(), by_containment.end());
    std::vector<SymmetricCore> sorted_out = out;
    std::sort(sorted_out.begin(), sorted_out.end());
    if (sorted_out != by_containment)
        std::cerr << "WARNING: Bruhat interval and diagram-containment interval disagree "
                     "between the given cores; returning the Bruhat interval.\n";
    return out;
}

// ---------------------------------------------------------------------------
// Shifted-diagram rendering.  The shifted diagram keeps the cells (r, c) with
// c >= r.  Text layout: highest row first, row r indented by 2(r-1) spaces,
// entries separated by single spaces; marked cells bracketed.  LaTeX layout
// mirrors the plain-TeX young macro with \omit\hskip\squaresize indentation
// and red-bold marked entries.

namespace detail {

struct ShiftedRenderCell {
    int digit;
    bool marked;
};

inline std::vector<std::vector<ShiftedRenderCell>> shifted_grid(const SymmetricCore& lambda,
                                                                const SymmetricCore& R,
                                                                const DynkinAutomorphism* tau,
                                                                int k) {
    for (long long r = 1; r <= lambda.rows(); ++r)
        if (lambda.part(r) > R.part(r))
            throw domain_error("inner shape is not contained in the frame");
    std::vector<std::vector<ShiftedRenderCell>> rows;
    for (long long r = 1; r <= R.rows(); ++r) {
        if (R.part(r) < r) continue;  // no shifted cells in this row
        std::vector<ShiftedRenderCell> row;
        for (long long c = r; c <= R.part(r); ++c) {
            int res = residue(k, r, c);
            bool marked = !lambda.contains_cell(r, c);
            int digit = res;
            if (marked && tau != nullptr) {
                // tau is an involution in every family handled here, so the
                // inverse relabeling is tau itself; invert explicitly anyway.
                for (int m = 0; m < int(tau->node_map.size()); ++m)
                    if ((*tau)(m) == res) digit = m;
            }
            row.push_back({digit, marked});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string shifted_text(const std::vector<std::vector<ShiftedRenderCell>>& rows) {
    std::ostringstream out;
    for (std::size_t r = rows.size(); r-- > 0;) {
        out << std::string(2 * r, ' ');
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0) out << ' ';
            if (rows[r][c].marked)
                out << '[' << rows[r][c].digit << ']';
            else
                out << rows[r][c].digit;
        }
        out << '\n';
    }
    return out.str();
}

inline std::string shifted_latex(const std::vector<std::vector<ShiftedRenderCell>>& rows) {
    std::ostringstream out;
    out << "\\young{";
    for (std::size_t r = rows.size(); r-- > 0;) {
        for (std::size_t pad = 0; pad < r; ++pad) out << "\\omit\\hskip\\squaresize&";
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0) out << '&';
            if (rows[r][c].marked)
                out << "\\bf\\color{red}{" << rows[r][c].digit << "}";
            else
                out << rows[r][c].digit;
        }
        out << "\\cr";
    }
    out << "}";
    return out.str();
}

}  // namespace detail

inline std::string render_shifted(const SymmetricCore& core, int k) {
    return detail::shifted_text(detail::shifted_grid(core, core, nullptr, k));
}

inline std::string render_colored(const SymmetricCore& lambda, const SymmetricCore& R,
                                  const DynkinAutomorphism& tau, int k) {
    return detail::shifted_text(detail::shifted_grid(lambda, R, &tau, k));
}

inline std::string render_shifted_latex(const SymmetricCore& core, int k) {
    return detail::shifted_latex(detail::shifted_grid(core, core, nullptr, k));
}

inline std::string render_colored_latex(const SymmetricCore& lambda, const SymmetricCore& R,
                                        const DynkinAutomorphism& tau, int k) {
    return detail::shifted_latex(detail::shifted_grid(lambda, R, &tau, k));
}

// Shifted cells of R not in lambda, for structured output.
inline std::vector<std::pair<long long, long long>> marked_cells(const SymmetricCore& lambda,
                                                                 const SymmetricCore& R) {
    std::vector<std::pair<long long, long long>> out;
    for (long long r = 1; r <= R.rows(); ++r)
        for (long long c = r; c <= R.part(r); ++c)
            if (!lambda.contains_cell(r, c)) out.emplace_back(r, c);
    return out;
}

inline std::string to_string(const SymmetricCore& core) {
    std::string out = "(";
    for (std::size_t i = 0; i < core.parts.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(core.parts[i]);
    }
    out += ")";
    return out;
}

}  // namespace kschur
