#pragma once

// Command-line driver: expansion display, word-to-core mapping, the
// verification suites, and rank-2 alcove-walk figures.  Exit codes: 0 on
// success, 1 for usage/configuration errors, 2 for domain errors, 3 when a
// verification suite fails.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kschur/verify.hpp"

namespace kschur {
namespace cli {

struct CliConfig {
    std::string command;
    std::string family = "C";
    int rank = 0;
    int coweight = 0;
    std::string formula = "orbit";
    std::string format;
    std::string word;
    unsigned seed = 42;
    int max_len = 8;
    bool max_len_given = false;
    std::string out_path;
};

inline void emit(const CliConfig& cfg, const std::string& body) {
    if (cfg.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(cfg.out_path, std::ios::binary);
    if (!f) throw config_error("cannot open output path " + cfg.out_path);
    f << body;
}

// Words are accepted either as compact digit strings (rank at most 9) or as
// comma/space-separated integers.
inline WeylWord parse_word(const std::string& text, int rank) {
    WeylWord word;
    bool separated = text.find(',') != std::string::npos || text.find(' ') != std::string::npos;
    if (separated) {
        std::string piece;
        std::istringstream in(text);
        while (std::getline(in, piece, ',')) {
            std::istringstream fields(piece);
            std::string field;
            while (fields >> field) {
                try {
                    std::size_t used = 0;
                    int letter = std::stoi(field, &used);
                    if (used != field.size()) throw std::invalid_argument(field);
                    word.push_back(letter);
                } catch (const std::exception&) {
                    throw domain_error("bad word letter '" + field + "'");
                }
            }
        }
    } else {
        if (rank > 9 && text.size() > 1)
            throw domain_error("compact words need rank at most 9; separate letters with commas");
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw domain_error(std::string("bad word letter '") + c + "'");
            word.push_back(c - '0');
        }
    }
    for (int letter : word)
        if (letter < 0 || letter > rank)
            throw domain_error("word letter " + std::to_string(letter) +
                               " out of range 0.." + std::to_string(rank));
    return word;
}

namespace render {

inline std::string term_word(const CartanDatum& d, const ExpansionTerm& t) {
    return word_to_string(d, t.word);
}

inline std::string expansion_text(const ExpansionReport& rep) {
    const CartanDatum& d = *rep.datum;
    std::string out = "s^";
    out += family_letter(d.family);
    out += "_{z_Lambda" + std::to_string(rep.j) + "} =";
    if (rep.terms.empty()) out += " 0";
    for (std::size_t i = 0; i < rep.terms.size(); ++i) {
        out += (i == 0) ? " " : " + ";
        const ExpansionTerm& t = rep.terms[i];
        if (t.coeff != 1) out += t.coeff.str() + "*";
        out += "u(" + term_word(d, t) + ")";
    }
    out += "\n";
    return out;
}

inline nlohmann::json word_json(const WeylWord& w) {
    nlohmann::json arr = nlohmann::json::array();
    for (int letter : w) arr.push_back(letter);
    return arr;
}

inline std::string expansion_json(const ExpansionReport& rep) {
    const CartanDatum& d = *rep.datum;
    nlohmann::json doc;
    doc["family"] = std::string(1, family_letter(d.family));
    doc["rank"] = d.rank;
    doc["j"] = rep.j;
    doc["formula"] = rep.formula;
    doc["terms"] = nlohmann::json::array();
    for (const ExpansionTerm& t : rep.terms) {
        nlohmann::json term;
        term["word"] = word_json(t.word);
        term["coeff"] = static_cast<long long>(t.coeff);
        if (t.has_core) {
            nlohmann::json parts = nlohmann::json::array();
            for (long long p : t.core.parts) parts.push_back(p);
            term["core"] = parts;
        }
        if (t.has_factored)
            term["factored"] = nlohmann::json::array({word_json(t.plain_word),
                                                      word_json(t.bold_word)});
        doc["terms"].push_back(term);
    }
    return doc.dump(2) + "\n";
}

inline std::string expansion_latex(const ExpansionReport& rep) {
    const CartanDatum& d = *rep.datum;
    std::string out = "\\[ s^{";
    out += family_letter(d.family);
    out += "}_{z_{\\Lambda_{" + std::to_string(rep.j) + "}^{\\vee}}} =";
    if (rep.terms.empty()) out += " 0";
    for (std::size_t i = 0; i < rep.terms.size(); ++i) {
        out += (i == 0) ? " " : " + ";
        const ExpansionTerm& t = rep.terms[i];
        if (t.coeff != 1) out += t.coeff.str() + " \\, ";
        out += "{\\bf u}(" + term_word(d, t) + ")";
    }
    out += " \\]\n";
    if (d.family == Family::C && rep.j >= 1) {
        SymmetricCore R = core_of(pseudo_translation(d, d.fundamental_coweight(rep.j)));
        DynkinAutomorphism relabel =
            detail::inverse_automorphism(automorphism_of_coweight(d, rep.j));
        for (const ExpansionTerm& t : rep.terms) {
            if (!t.has_core) continue;
            out += "% core " + to_string(t.core) + "\n";
            out += render_colored_latex(t.core, R, relabel, d.rank) + "\n";
        }
    }
    return out;
}

inline std::string core_text(const SymmetricCore& core, int k) {
    return to_string(core) + "\n" + render_shifted(core, k);
}

inline std::string core_json(const CartanDatum& d, const WeylWord& word,
                             const SymmetricCore& core) {
    nlohmann::json doc;
    doc["family"] = std::string(1, family_letter(d.family));
    doc["rank"] = d.rank;
    doc["word"] = word_json(word);
    nlohmann::json parts = nlohmann::json::array();
    for (long long p : core.parts) parts.push_back(p);
    doc["parts"] = parts;
    doc["cells"] = core.cell_count();
    return doc.dump(2) + "\n";
}

}  // namespace render

inline int cmd_expand(const CliConfig& cfg) {
    CartanDatum d = build_cartan_datum(family_from_letter(cfg.family.at(0)), cfg.rank);
    if (cfg.coweight < 1 || cfg.coweight > d.rank)
        throw domain_error("coweight index " + std::to_string(cfg.coweight) +
                           " out of range 1.." + std::to_string(d.rank));
    ExpansionReport rep = [&] {
        if (cfg.formula == "orbit") return kschur_orbit(d, d.fundamental_coweight(cfg.coweight));
        if (cfg.formula == "algebraic") return kschur_algebraic(d, cfg.coweight);
        return kschur_combinatorial(d, cfg.coweight);
    }();
    if (cfg.format == "json") emit(cfg, render::expansion_json(rep));
    else if (cfg.format == "latex") emit(cfg, render::expansion_latex(rep));
    else emit(cfg, render::expansion_text(rep));
    return 0;
}

inline int cmd_core(const CliConfig& cfg) {
    CartanDatum d = build_cartan_datum(family_from_letter(cfg.family.at(0)), cfg.rank);
    WeylWord word = parse_word(cfg.word, d.rank);
    AffineWeylElement w = element_from_word(d, word);
    if (!is_grassmannian(w)) {
        int descent = 0;
        for (int i = 1; i <= d.rank; ++i)
            if (is_right_descent(w, i)) {
                descent = i;
                break;
            }
        throw domain_error("element is not Grassmannian: s_" + std::to_string(descent) +
                           " is a right descent (a shorter element sits in the same coset)");
    }
    SymmetricCore core = core_of(w);
    if (cfg.format == "json") emit(cfg, render::core_json(d, word, core));
    else if (cfg.format == "latex") emit(cfg, render_shifted_latex(core, d.rank) + "\n");
    else emit(cfg, render::core_text(core, d.rank));
    return 0;
}

inline int cmd_verify(const CliConfig& cfg) {
    CartanDatum d = build_cartan_datum(family_from_letter(cfg.family.at(0)), cfg.rank);
    std::vector<SuiteResult> results = run_verification(d, cfg.seed, cfg.max_len);
    std::string out;
    bool all_passed = true;
    for (const SuiteResult& r : results) {
        if (r.passed) {
            out += "PASS " + r.name + "\n";
        } else {
            all_passed = false;
            out += "FAIL " + r.name + ": " + r.detail + "\n";
        }
    }
    emit(cfg, out);
    return all_passed ? 0 : 3;
}

namespace svgdetail {

struct ChartPoint {
    double u = 0, v = 0;
};

// The drawing chart takes the first two coordinates; in the sum-zero
// realization of family A this is still an affine bijection onto the plane.
inline ChartPoint chart(const RVec& p) {
    return {static_cast<double>(p[0]), static_cast<double>(p[1])};
}

inline RVec chart_basis(const CartanDatum& d, int axis) {
    RVec e = rvec_zero(d.dim);
    e[std::size_t(axis)] = 1;
    if (d.family == Family::A) e[std::size_t(d.dim - 1)] -= 1;
    return e;
}

inline std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", x + 0.0);  // avoid "-0.000"
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

// Page transform: the fundamental-alcove centroid sits at pixel (360, 360),
// one coordinate unit is 120 pixels, and the vertical axis points up.
inline ChartPoint page(const ChartPoint& anchor, const ChartPoint& p) {
    return {360.0 + 120.0 * (p.u - anchor.u), 360.0 - 120.0 * (p.v - anchor.v)};
}

// Color of the wall {pair(x, alpha) = m}: conjugate its reflection down to a
// simple generator and use that generator's index.
inline int wall_color_index(const CartanDatum& d, const RVec& alpha, long long m) {
    AffineWeylElement refl = identity_element(d);
    for (int c = 0; c < d.dim; ++c) {
        RVec e = rvec_zero(d.dim);
        e[std::size_t(c)] = 1;
        RVec img = reflect_in_root(e, alpha);
        for (int r = 0; r < d.dim; ++r)
            refl.lin(r, c) = detail::rational_to_ll(img[r], "reflection matrix entry");
    }
    RVec coroot = rvec_scale(Rational(2) / pairing(d, alpha, alpha), alpha);
    for (int r = 0; r < d.dim; ++r)
        refl.trans[std::size_t(r)] =
            detail::rational_to_ll(Rational(m) * coroot[std::size_t(r)], "wall translation");
    for (int guard = 0; guard < 4096; ++guard) {
        for (int i = 0; i <= d.rank; ++i)
            if (refl == simple_reflection(d, i)) return i;
        long long len = length(refl);
        bool moved = false;
        for (int j = 0; j <= d.rank && !moved; ++j) {
            AffineWeylElement s = simple_reflection(d, j);
            AffineWeylElement conj = multiply(multiply(s, refl), s);
            if (length(conj) < len) {
                refl = conj;
                moved = true;
            }
        }
        if (!moved) break;
    }
    throw domain_error("wall reflection does not reduce to a simple generator");
}

inline std::string wall_color(int index) {
    switch (index) {
        case 0: return "green";
        case 1: return "red";
        case 2: return "blue";
        default: return "black";
    }
}

}  // namespace svgdetail

inline std::string render_walk_svg(const CartanDatum& d, const WeylWord& word,
                                   long long wall_bound) {
    using svgdetail::ChartPoint;
    ChartPoint anchor = svgdetail::chart(fundamental_alcove_centroid(d));
    const double span = 3.0;  // world half-width covered by the 720px page

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"720\" "
           "viewBox=\"0 0 720 720\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"720\" height=\"720\" fill=\"white\"/>\n";

    // Background wall grid, clipped to the visible world window.
    RVec bu = svgdetail::chart_basis(d, 0), bv = svgdetail::chart_basis(d, 1);
    for (const RVec& alpha : positive_roots(d)) {
        double A = static_cast<double>(pairing(d, bu, alpha));
        double B = static_cast<double>(pairing(d, bv, alpha));
        for (long long m = -wall_bound; m <= wall_bound; ++m) {
            double norm2 = A * A + B * B;
            double p0u = A * m / norm2, p0v = B * m / norm2;
            double du = -B, dv = A;
            double t0 = -1e18, t1 = 1e18;
            bool feasible = true;
            auto clip = [&](double denom, double numer) {  // denom * t <= numer
                if (std::abs(denom) < 1e-12) {
                    if (numer < 0) feasible = false;
                } else if (denom > 0) {
                    t1 = std::min(t1, numer / denom);
                } else {
                    t0 = std::max(t0, numer / denom);
                }
            };
            clip(du, anchor.u + span - p0u);
            clip(-du, p0u - (anchor.u - span));
            clip(dv, anchor.v + span - p0v);
            clip(-dv, p0v - (anchor.v - span));
            if (!feasible || t0 >= t1) continue;
            int color = svgdetail::wall_color_index(d, alpha, m);
            ChartPoint a = svgdetail::page(anchor, {p0u + t0 * du, p0v + t0 * dv});
            ChartPoint b = svgdetail::page(anchor, {p0u + t1 * du, p0v + t1 * dv});
            out += "<line x1=\"" + svgdetail::num(a.u) + "\" y1=\"" + svgdetail::num(a.v) +
                   "\" x2=\"" + svgdetail::num(b.u) + "\" y2=\"" + svgdetail::num(b.v) +
                   "\" stroke=\"" + svgdetail::wall_color(color) + "\" stroke-width=\"1\"/>\n";
        }
    }

    // Walk polyline: the alcove of each suffix of the word, shortest first.
    std::vector<ChartPoint> vertices;
    for (std::size_t m = 0; m <= word.size(); ++m) {
        WeylWord suffix(word.end() - static_cast<std::ptrdiff_t>(m), word.end());
        vertices.push_back(svgdetail::page(
            anchor, svgdetail::chart(alcove_centroid(element_from_word(d, suffix)))));
    }
    if (vertices.size() > 1) {
        out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (i > 0) out += " ";
            out += svgdetail::num(vertices[i].u) + "," + svgdetail::num(vertices[i].v);
        }
        out += "\"/>\n";
    }
    out += "<circle cx=\"" + svgdetail::num(vertices.front().u) + "\" cy=\"" +
           svgdetail::num(vertices.front().v) + "\" r=\"6\" fill=\"black\"/>\n";
    out += "</svg>\n";
    return out;
}

inline int cmd_walk(const CliConfig& cfg) {
    CartanDatum d = build_cartan_datum(family_from_letter(cfg.family.at(0)), cfg.rank);
    if (d.rank != 2) throw domain_error("alcove walks are drawn for rank 2 only");
    WeylWord word = parse_word(cfg.word, d.rank);
    long long bound = cfg.max_len_given ? cfg.max_len : 3;
    emit(cfg, render_walk_svg(d, word, bound));
    return 0;
}

inline int run(int argc, char** argv) {
    CliConfig cfg;
    CLI::App app{"expansions of fundamental-coweight pseudo-translations in the affine "
                 "nilCoxeter algebra"};
    app.require_subcommand(1);

    auto add_common = [&cfg](CLI::App* sub, bool with_format) {
        sub->add_option("--family", cfg.family, "root-system family: A, B, C, or D")
            ->required();
        sub->add_option("--rank", cfg.rank, "finite rank")->required();
        sub->add_option("--out", cfg.out_path, "write output to this path instead of stdout");
        if (with_format)
            sub->add_option("--format", cfg.format, "output format")
                ->check(CLI::IsMember({"text", "json", "latex"}));
    };

    CLI::App* expand = app.add_subcommand("expand", "expand one pseudo-translation");
    add_common(expand, true);
    expand->add_option("--coweight", cfg.coweight, "fundamental coweight index")->required();
    expand->add_option("--formula", cfg.formula, "which formula to evaluate")
        ->check(CLI::IsMember({"orbit", "algebraic", "combinatorial"}));

    CLI::App* core = app.add_subcommand("core", "map a Grassmannian word to its symmetric core");
    add_common(core, true);
    core->add_option("--word", cfg.word, "generator word");

    CLI::App* verify = app.add_subcommand("verify", "run the property suites");
    add_common(verify, false);
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--max-len", cfg.max_len, "length bound for randomized suites");

    CLI::App* walk = app.add_subcommand("walk", "draw a rank-2 alcove walk as SVG");
    add_common(walk, false);
    walk->add_option("--word", cfg.word, "generator word");
    CLI::Option* walk_bound =
        walk->add_option("--max-len", cfg.max_len, "wall grid bound (default 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    cfg.max_len_given = walk_bound->count() > 0;
    try {
        if (cfg.family.size() != 1) throw config_error("family must be a single letter");
        if (expand->parsed()) return cmd_expand(cfg);
        if (core->parsed()) return cmd_core(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        return cmd_walk(cfg);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace cli
}  // namespace kschur
