#pragma once
// Plain-text and CSV renderers for the command-line front end.

#include "hess/serialize.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace hess {

/// Terminal width of a UTF-8 string, one column per code point.
inline std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

/// Left-aligned columns separated by two spaces, trailing blanks stripped.
class TextTable {
public:
    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    std::string str() const {
        std::vector<std::size_t> width;
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (width.size() <= i) width.push_back(0);
                width[i] = std::max(width[i], display_width(r[i]));
            }
        std::string out;
        for (const auto& r : rows_) {
            std::string line;
            for (std::size_t i = 0; i < r.size(); ++i) {
                line += r[i];
                if (i + 1 < r.size()) line += std::string(width[i] - display_width(r[i]) + 2, ' ');
            }
            while (!line.empty() && line.back() == ' ') line.pop_back();
            out += line + "\n";
        }
        return out;
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline std::string csv_row(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + csv_field(cells[i]);
    return s + "\n";
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

inline std::string tuple_str(const std::vector<int>& v) { return "(" + join(v, ",") + ")"; }

inline std::string root_list(const RootSystem& rs, const std::vector<int>& roots) {
    std::vector<std::string> n;
    for (int g : roots) n.push_back(rs.name(g));
    return "{" + join(n, ", ") + "}";
}

inline std::string superscript(int k) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = k < 0 ? "⁻" : "";
    for (char c : std::to_string(k < 0 ? -k : k)) s += digits[c - '0'];
    return s;
}

/// G2 elements as r^{-k} or t r^{-k} with r = st.
inline std::string dihedral_name(const WeylGroup& W, Elem w) {
    Elem t = W.simple(1), ri = W.inverse(W.mul(W.simple(0), t));
    Elem p = W.identity();
    for (int k = 0; k < 6; ++k) {
        if (w == p) return k == 0 ? "e" : "r" + superscript(-k);
        if (w == W.mul(t, p)) return k == 0 ? "t" : "tr" + superscript(-k);
        p = W.mul(p, ri);
    }
    return W.name(w);
}

// ---- roots ----

inline std::string roots_text(const RootSystem& rs) {
    std::string out = "type " + rs.label() + ", rank " + std::to_string(rs.rank()) + ", " +
                      std::to_string(rs.num_positive()) + " positive roots\n";
    out += "Cartan matrix\n";
    TextTable c;
    for (const auto& row : rs.cartan()) {
        std::vector<std::string> cells{""};
        for (int x : row) cells.push_back(std::to_string(x));
        c.row(cells);
    }
    out += c.str();
    out += "positive roots\n";
    TextTable t;
    t.row({"", "#", "root", "coordinates", "length²"});
    for (int i = 0; i < rs.num_positive(); ++i)
        t.row({"", std::to_string(i + 1), rs.name(i), tuple_str(rs.root(i)), std::to_string(rs.norm(i))});
    return out + t.str();
}

inline std::string roots_csv(const RootSystem& rs) {
    std::string out = csv_row({"index", "name", "coordinates", "length2"});
    for (int i = 0; i < rs.num_positive(); ++i)
        out += csv_row({std::to_string(i + 1), rs.name(i), join(rs.root(i), " "), std::to_string(rs.norm(i))});
    return out;
}

// ---- weyl ----

inline std::string weyl_text(const WeylGroup& W, bool with_elements) {
    const RootSystem& rs = W.roots();
    Json j = to_json(W, false);
    std::string out = "W(" + rs.label() + "): order " + std::to_string(W.size()) + ", longest element of length " +
                      std::to_string(W.length(W.longest())) + "\n";
    out += "elements by length " + tuple_str(j["length_distribution"].get<std::vector<int>>()) + "\n";
    if (!with_elements) return out;
    TextTable t;
    t.row({"", "w", "ℓ(w)", "inversion set"});
    for (Elem w = 0; w < W.size(); ++w)
        t.row({"", W.name(w), std::to_string(W.length(w)), root_list(rs, W.inversion_set(w))});
    return out + t.str();
}

inline std::string weyl_csv(const WeylGroup& W) {
    std::string out = csv_row({"index", "word", "length", "inversions"});
    for (Elem w = 0; w < W.size(); ++w) {
        std::vector<std::string> n;
        for (int g : W.inversion_set(w)) n.push_back(W.roots().name(g));
        out += csv_row({std::to_string(w), W.name(w), std::to_string(W.length(w)), join(n, " ")});
    }
    return out;
}

// ---- ideals ----

inline std::string ideals_text(const RootSystem& rs, const std::vector<HessIdeal>& ideals) {
    std::string out = std::to_string(ideals.size()) + " Hessenberg ideals of type " + rs.label() + "\n";
    TextTable t;
    t.row({"", "ideal", "name", "size", "roots"});
    for (const auto& I : ideals) t.row({"", I.name, I.ascii, std::to_string(I.size()), root_list(rs, I.roots)});
    return out + t.str();
}

inline std::string ideals_csv(const RootSystem& rs, const std::vector<HessIdeal>& ideals) {
    std::string out = csv_row({"ideal", "name", "size", "generators", "roots"});
    for (const auto& I : ideals) {
        std::vector<std::string> g, r;
        for (int x : I.generators) g.push_back(rs.name(x));
        for (int x : I.roots) r.push_back(rs.name(x));
        out += csv_row({I.name, I.ascii, std::to_string(I.size()), join(g, " "), join(r, " ")});
    }
    return out;
}

// ---- orbits ----

inline std::string orbit_display(const std::string& label) { return label == "0" ? "{0}" : label; }

inline std::string orbit_text(const OrbitContext& ctx) {
    const RootSystem& rs = ctx.rs();
    std::vector<std::string> h;
    for (const Q& c : ctx.h) h.push_back(to_string(c));
    std::string out = "orbit " + orbit_display(ctx.label) + " (" + ctx.key + ") in " + rs.label() + "\n";
    TextTable t;
    t.row({"", "subsystem", ctx.subsystem_type.empty() ? "-" : ctx.subsystem_type});
    t.row({"", "dimension", std::to_string(ctx.orbit_dim)});
    t.row({"", "N", ctx.ch().str(ctx.N, {})});
    t.row({"", "H", "(" + join(h, ", ") + ") in simple coroots"});
    t.row({"", "diagram", join(ctx.drawn_diagram(), "")});
    t.row({"", "Levi simples", root_list(rs, ctx.levi_simples)});
    int top = *std::max_element(ctx.grade.begin(), ctx.grade.end());
    for (int i = 0; i <= top; ++i) {
        std::vector<int> roots;
        for (int g : ctx.roots_of_degree(i))
            if (i > 0 || rs.is_positive(g)) roots.push_back(g);
        t.row({"", i == 0 ? "g(0)⁺" : "g(" + std::to_string(i) + ")", root_list(rs, roots)});
    }
    return out + t.str();
}

inline std::string orbits_csv(const std::vector<OrbitContext>& ctxs) {
    std::string out = csv_row({"key", "label", "subsystem", "dim", "diagram", "N"});
    for (const auto& c : ctxs)
        out += csv_row({c.key, c.label, c.subsystem_type, std::to_string(c.orbit_dim), join(c.drawn_diagram(), ""),
                        c.ch().str(c.N, {})});
    return out;
}

// ---- fibers ----

/// One grid entry: "G/B" over the zero orbit, "∅" when empty, else the Betti vector.
inline std::string fiber_entry(const FiberPaving& p, const std::string& orbit_key) {
    if (p.empty()) return "∅";
    if (orbit_key == "0") return "G/B";
    return tuple_str(p.betti);
}

struct FiberGrid {
    std::vector<HessIdeal> ideals;
    std::vector<const FiberEngine*> orbits;
    std::vector<std::vector<FiberPaving>> pavings;  // [ideal][orbit]
};

inline std::string fibers_text(const FiberGrid& g) {
    const WeylGroup& W = g.orbits.front()->context().W();
    std::string out = "Hessenberg ideal fibers, type " + W.roots().label() + "\n";
    out += "entries: Betti numbers (b0,b2,...), b0 = number of connected components\n";
    TextTable t;
    std::vector<std::string> head{"ideal"};
    for (auto* e : g.orbits) head.push_back(orbit_display(e->context().label));
    t.row(head);
    for (std::size_t i = 0; i < g.ideals.size(); ++i) {
        std::vector<std::string> r{g.ideals[i].name};
        for (std::size_t k = 0; k < g.orbits.size(); ++k)
            r.push_back(fiber_entry(g.pavings[i][k], g.orbits[k]->context().key));
        t.row(r);
    }
    out += t.str();
    bool header = false;
    for (std::size_t i = 0; i < g.ideals.size(); ++i)
        for (std::size_t k = 0; k < g.orbits.size(); ++k) {
            const FiberPaving& p = g.pavings[i][k];
            if (p.empty() || g.orbits[k]->context().key == "0") continue;
            if (!header) out += "cells\n";
            header = true;
            out += "  " + g.ideals[i].name + " over " + orbit_display(p.orbit) + ": " + std::to_string(p.cells.size()) +
                   " cells, components " + std::to_string(p.components) + "\n";
            TextTable c;
            for (const auto& cell : p.cells) c.row({"   ", "dim " + std::to_string(cell.dim), cell.descriptor});
            out += c.str();
        }
    return out;
}

inline std::string fibers_csv(const FiberGrid& g) {
    std::string out = csv_row({"ideal", "orbit", "cells", "betti", "components"});
    for (std::size_t i = 0; i < g.ideals.size(); ++i)
        for (std::size_t k = 0; k < g.orbits.size(); ++k) {
            const FiberPaving& p = g.pavings[i][k];
            out += csv_row({g.ideals[i].ascii, g.orbits[k]->context().key, std::to_string(p.cells.size()),
                            join(p.betti, " "), std::to_string(p.components)});
        }
    return out;
}

inline Json fibers_json(const FiberGrid& g) {
    Json a = Json::array();
    for (std::size_t i = 0; i < g.ideals.size(); ++i)
        for (std::size_t k = 0; k < g.orbits.size(); ++k) a.push_back(to_json(g.pavings[i][k], g.orbits[k]->context().W()));
    return a;
}

// ---- quintuples ----

inline std::string quintuples_text(const std::vector<Quintuple>& qs, const WeylGroup& W) {
    const RootSystem& rs = W.roots();
    TextTable t;
    t.row({"orbit", "ideal", "v", "g(2) ∩ v·I", "nonempty", "dim P", "dim L", "r"});
    for (const auto& q : qs)
        t.row({orbit_display(q.orbit), q.ideal, W.name(q.v), root_list(rs, q.g2_cap), q.nonempty ? "yes" : "no",
               q.nonempty ? std::to_string(q.dim_P) : "", q.nonempty ? std::to_string(q.dim_L) : "",
               q.nonempty ? std::to_string(q.r) : ""});
    return t.str();
}

inline std::string quintuples_csv(const std::vector<Quintuple>& qs, const WeylGroup& W) {
    std::string out = csv_row({"orbit", "ideal", "v", "up_cap", "g2_cap", "nonempty", "dim_P", "dim_L", "r"});
    const RootSystem& rs = W.roots();
    for (const auto& q : qs) {
        std::vector<std::string> u, g;
        for (int x : q.up_cap) u.push_back(rs.name(x));
        for (int x : q.g2_cap) g.push_back(rs.name(x));
        out += csv_row({q.orbit, q.ideal, W.name(q.v), join(u, " "), join(g, " "), q.nonempty ? "1" : "0",
                        std::to_string(q.dim_P), std::to_string(q.dim_L), std::to_string(q.r)});
    }
    return out;
}

inline std::string classification_text(const StableClassification& sc, const FiberEngine& e) {
    const OrbitContext& ctx = e.context();
    std::string out = "orbit " + sc.orbit + ": L/(L∩B) has dimension " + std::to_string(sc.levi_dim) + ", " +
                      std::to_string(sc.subspaces.size()) + " stable subspaces U ⊂ g(2) of codimension ≤ " +
                      std::to_string(std::max(3, sc.levi_dim)) + "\n";
    out += "Levi cells, g⁻¹·N along each cell\n";
    TextTable cells;
    for (const auto& s : e.levi_cells()) cells.row({"", s.pattern, ctx.ch().str(s.expansion, e.var_names())});
    out += cells.str();
    out += "loci of {g⁻¹·N ∈ U} in each cell\n";
    TextTable t;
    std::vector<std::string> head{"", "#", "U", "codim"};
    for (const auto& s : e.levi_cells()) head.push_back(s.pattern);
    t.row(head);
    for (std::size_t i = 0; i < sc.subspaces.size(); ++i) {
        const auto& s = sc.subspaces[i];
        std::vector<std::string> r{"", std::to_string(i + 1), e.subspace_name(s), std::to_string(s.codim())};
        for (const auto& c : s.cells) r.push_back(c.zeros.describe());
        t.row(r);
    }
    out += t.str();
    out += std::to_string(sc.groups.size()) + " groups of codimension 1 to " + std::to_string(sc.levi_dim - 1) + "\n";
    for (std::size_t k = 0; k < sc.groups.size(); ++k) {
        std::vector<std::string> names;
        for (std::size_t m : sc.groups[k].members) names.push_back(e.subspace_name(sc.subspaces[m]));
        out += "  " + std::to_string(k + 1) + ". codim " + std::to_string(sc.groups[k].codim) + ": " + join(names, "; ") +
               "\n";
    }
    out += "curved loci\n";
    for (const auto& s : sc.subspaces)
        for (const auto& c : s.cells) {
            ZeroKind k = c.zeros.kind;
            if (k == ZeroKind::Empty || k == ZeroKind::Entire) continue;
            out += "  " + e.subspace_name(s) + ", " + c.shape->pattern + ": " + c.zeros.describe();
            if (!c.zeros.residual.empty()) out += " from " + join(c.zeros.residual, ", ");
            out += "\n";
        }
    return out;
}

inline std::string classification_csv(const StableClassification& sc, const FiberEngine& e) {
    std::string out = csv_row({"subspace", "removed", "codim", "cell", "locus", "dim"});
    const RootSystem& rs = e.context().rs();
    for (std::size_t i = 0; i < sc.subspaces.size(); ++i) {
        const auto& s = sc.subspaces[i];
        std::vector<std::string> rem;
        for (int g : s.removed) rem.push_back(rs.name(g));
        for (const auto& c : s.cells)
            out += csv_row({std::to_string(i + 1), join(rem, " "), std::to_string(s.codim()), c.shape->pattern,
                            c.zeros.tag(), std::to_string(c.zeros.dim)});
    }
    return out;
}

// ---- betti ----

inline std::string levi_display(const RootSystem& rs, const std::vector<int>& J) {
    std::vector<std::string> n;
    for (int j : J) n.push_back(rs.simple_names()[static_cast<std::size_t>(j)]);
    return "{" + join(n, ", ") + "}";
}

inline std::string betti_text(const BettiTable& t, const WeylGroup& W) {
    const RootSystem& rs = W.roots();
    std::string out = "I = " + t.ideal.name + ", M = I^⊥, J = " + levi_display(rs, t.levi) + "\n";
    auto cell = [&](Elem w) {
        const auto& d = t.cells[static_cast<std::size_t>(w)];
        return d ? std::to_string(*d) : std::string();
    };
    TextTable tab;
    if (rs.label() == "G2") {
        Elem tt = W.simple(1), ri = W.inverse(W.mul(W.simple(0), tt));
        std::vector<Elem> top, bottom;
        Elem p = W.identity();
        for (int k = 0; k < 6; ++k) {
            top.push_back(p);
            bottom.push_back(W.mul(tt, p));
            p = W.mul(p, ri);
        }
        for (const auto* line : {&top, &bottom}) {
            std::vector<std::string> names{"w"}, dims{"dim"};
            for (Elem w : *line) {
                names.push_back(dihedral_name(W, w));
                dims.push_back(cell(w));
            }
            tab.row(names);
            tab.row(dims);
        }
    } else {
        tab.row({"w", "dim"});
        for (Elem w = 0; w < W.size(); ++w)
            if (t.cells[static_cast<std::size_t>(w)]) tab.row({W.name(w), cell(w)});
    }
    out += tab.str();
    int nonempty = 0;
    for (const auto& d : t.cells) nonempty += d.has_value();
    out += "nonempty cells " + std::to_string(nonempty) + ", Betti numbers " + tuple_str(t.betti) + "\n";
    return out;
}

inline std::string betti_csv_header() { return csv_row({"ideal", "levi", "w", "dim"}); }

inline std::string betti_csv_rows(const BettiTable& t, const WeylGroup& W) {
    std::string out;
    std::vector<std::string> J;
    for (int j : t.levi) J.push_back(W.roots().simple_ascii()[static_cast<std::size_t>(j)]);
    for (Elem w = 0; w < W.size(); ++w) {
        const auto& d = t.cells[static_cast<std::size_t>(w)];
        out += csv_row({t.ideal.ascii, join(J, " "), W.name(w), d ? std::to_string(*d) : ""});
    }
    return out;
}

// ---- dot action ----

/// Graded character in the layout of the dot-action table, factoring (c)(1+q) when it applies.
inline std::string poincare_display(const GradedCharacter& P) {
    if (P.coeffs.size() == 2 && P.coeffs[0] == P.coeffs[1]) {
        std::string c = GradedCharacter::coeff_str(P.coeffs[0]);
        if (c.find('+') != std::string::npos) return "(" + c + ")(1+q)";
    }
    return P.str();
}

inline std::string dot_action_text(const std::vector<DotActionResult>& rs) {
    std::string out = "dot actions on H*(Hess(M, s)), M = I^⊥, type G2\n";
    TextTable t;
    t.row({"I", "P_M(q)"});
    for (const auto& r : rs) t.row({r.ideal.name, poincare_display(r.poincare)});
    out += t.str();
    out += "details\n";
    TextTable d;
    d.row({"", "I", "n", "top orbit", "IC summands", "H² remainder (1, ε₁, χ₂)"});
    for (const auto& r : rs) {
        std::vector<std::string> ic;
        for (const auto& s : r.ic) ic.push_back(s.str(orbit_display(orbit_label_of("G2", s.orbit))));
        std::vector<std::string> rem;
        for (const auto& x : r.remainder) rem.push_back(x.str());
        d.row({"", r.ideal.name, std::to_string(r.constants.n), orbit_display(orbit_label_of("G2", r.max_orbit)), join(ic, " ⊕ "),
               "(" + join(rem, ",") + ")"});
    }
    return out + d.str();
}

inline std::string dot_action_csv(const std::vector<DotActionResult>& rs) {
    std::vector<std::string> head{"ideal", "degree"};
    for (const auto& n : irrep_ascii()) head.push_back(n);
    std::string out = csv_row(head);
    for (const auto& r : rs)
        for (std::size_t i = 0; i < r.poincare.coeffs.size(); ++i) {
            std::vector<std::string> row{r.ideal.ascii, std::to_string(i)};
            for (const auto& x : r.poincare.coeffs[i]) row.push_back(x.str());
            out += csv_row(row);
        }
    return out;
}

}  // namespace hess
