#pragma once
// Vanishing loci of small polynomial systems on an affine cell.
//
// Scope: at most three variables, degree at most two per variable, solvable by
// linear elimination followed by a univariate, conic or quadric-surface test.

#include "hess/linalg.hpp"
#include "hess/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hess {

class ZeroSetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ZeroKind {
    Empty,
    Entire,         // the whole cell
    AffineUnion,    // `count` disjoint affine spaces of dimension `dim`
    PuncturedLine,  // C^x
    CrossingLines,  // two lines meeting in a point
    SmoothQuadric,  // smooth affine quadric surface
};

struct ZeroSet {
    ZeroKind kind = ZeroKind::Empty;
    int count = 0;     // number of pieces for AffineUnion
    int dim = -1;      // dimension of the locus, -1 when empty
    int ambient = 0;   // dimension of the cell
    std::vector<std::string> residual;  // equations left after elimination
    std::vector<std::string> points;    // explicit coordinates of finite loci when available

    bool empty() const { return kind == ZeroKind::Empty; }

    /// True when the locus is a disjoint union of affine spaces.
    bool is_affine_union() const {
        return kind == ZeroKind::Empty || kind == ZeroKind::Entire || kind == ZeroKind::AffineUnion;
    }

    /// Dimensions of the affine pieces; throws for loci that are not unions of cells.
    std::vector<int> piece_dims() const {
        switch (kind) {
            case ZeroKind::Empty:
                return {};
            case ZeroKind::Entire:
                return {ambient};
            case ZeroKind::AffineUnion:
                return std::vector<int>(static_cast<std::size_t>(count), dim);
            default:
                throw ZeroSetError("locus '" + describe() + "' is not a disjoint union of affine spaces");
        }
    }

    std::string describe() const {
        switch (kind) {
            case ZeroKind::Empty:
                return "∅";
            case ZeroKind::Entire:
                return "entire cell";
            case ZeroKind::AffineUnion:
                if (dim == 0) return count == 1 ? "1 point" : std::to_string(count) + " points";
                {
                    std::string piece = dim == 1 ? "ℂ" : "ℂ^" + std::to_string(dim);
                    std::string s = piece;
                    for (int i = 1; i < count; ++i) s += "⊔" + piece;
                    return s;
                }
            case ZeroKind::PuncturedLine:
                return "ℂ×";
            case ZeroKind::CrossingLines:
                return "two crossing lines";
            case ZeroKind::SmoothQuadric:
                return "smooth quadric surface";
        }
        return "?";
    }

    /// Short ASCII tag used in machine-readable output.
    std::string tag() const {
        switch (kind) {
            case ZeroKind::Empty:
                return "empty";
            case ZeroKind::Entire:
                return "entire";
            case ZeroKind::AffineUnion:
                return dim == 0 ? "points:" + std::to_string(count)
                                : "affine:" + std::to_string(count) + "x" + std::to_string(dim);
            case ZeroKind::PuncturedLine:
                return "punctured_line";
            case ZeroKind::CrossingLines:
                return "crossing_lines";
            case ZeroKind::SmoothQuadric:
                return "smooth_quadric";
        }
        return "?";
    }
};

namespace detail {

inline std::vector<std::size_t> used_vars(const QPoly& p) {
    std::vector<std::size_t> r;
    for (std::size_t v = 0; v < p.nvars(); ++v)
        if (p.uses(v)) r.push_back(v);
    return r;
}

/// Symmetric (k+1)x(k+1) matrix of a polynomial of degree <= 2 in the given variables.
inline QMatrix quadric_matrix(const QPoly& p, const std::vector<std::size_t>& vars) {
    std::size_t k = vars.size();
    QMatrix m(k + 1, QVector(k + 1, Q(0)));
    for (const auto& [mono, c] : p.terms()) {
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < k; ++i)
            for (int e = 0; e < mono[vars[i]]; ++e) pos.push_back(i);
        if (pos.size() > 2) throw ZeroSetError("quadric_matrix: degree above two");
        if (pos.empty()) {
            m[k][k] += c;
        } else if (pos.size() == 1) {
            m[pos[0]][k] += c / 2;
            m[k][pos[0]] += c / 2;
        } else if (pos[0] == pos[1]) {
            m[pos[0]][pos[0]] += c;
        } else {
            m[pos[0]][pos[1]] += c / 2;
            m[pos[1]][pos[0]] += c / 2;
        }
    }
    return m;
}

inline std::vector<std::string> univariate_points(const UPoly<Q>& sf) {
    std::vector<std::string> pts;
    UPoly<Q> rest = sf;
    for (const Q& r : rational_roots(sf)) {
        pts.push_back(to_string(r));
        UPoly<Q> q, rem;
        divmod(rest, UPoly<Q>{-r, Q(1)}, q, rem);
        rest = q;
    }
    if (rest.size() == 3) {
        // a x^2 + b x + c: (-b +- sqrt(b^2 - 4ac)) / 2a
        Q a = rest[2], b = rest[1], c = rest[0];
        Q disc = b * b - 4 * a * c;
        QuadNumber plus(-b / (2 * a), Q(1) / (2 * a), disc), minus(-b / (2 * a), Q(-1) / (2 * a), disc);
        pts.push_back(plus.str());
        pts.push_back(minus.str());
    } else if (rest.size() > 3) {
        pts.push_back("roots of degree-" + std::to_string(rest.size() - 1) + " factor");
    }
    return pts;
}

}  // namespace detail

/**
 * @brief Classify { f = 0 for all f } inside the affine cell with coordinates `cell_vars`.
 *
 * Variables outside `cell_vars` must not occur. `names` is used only for the
 * residual-equation strings.
 */
inline ZeroSet classify_zero_set(std::vector<QPoly> polys, const std::vector<std::size_t>& cell_vars,
                                 const std::vector<std::string>& names = {}) {
    ZeroSet z;
    z.ambient = static_cast<int>(cell_vars.size());
    std::set<std::size_t> remaining(cell_vars.begin(), cell_vars.end());
    for (const auto& p : polys)
        for (std::size_t v : detail::used_vars(p))
            if (!remaining.count(v)) throw ZeroSetError("polynomial uses a variable outside the cell");
    bool eliminated = false;
    while (true) {
        polys.erase(std::remove_if(polys.begin(), polys.end(), [](const QPoly& p) { return p.is_zero(); }),
                    polys.end());
        for (const auto& p : polys)
            if (p.is_constant()) {
                z.kind = ZeroKind::Empty;
                return z;
            }
        if (polys.empty()) {
            if (!eliminated) {
                z.kind = ZeroKind::Entire;
                z.dim = z.ambient;
            } else {
                z.kind = ZeroKind::AffineUnion;
                z.count = 1;
                z.dim = static_cast<int>(remaining.size());
            }
            return z;
        }
        // linear elimination: some z_j occurring only as c*z_j with c constant
        bool did = false;
        for (std::size_t pi = 0; pi < polys.size() && !did; ++pi) {
            const QPoly& p = polys[pi];
            for (auto it = remaining.rbegin(); it != remaining.rend(); ++it) {
                std::size_t j = *it;
                if (p.degree_in(j) != 1) continue;
                QPoly lin = p.coefficient_of(j, 1);
                if (!lin.is_constant() || lin.is_zero()) continue;
                QPoly sol = (Q(-1) / lin.constant_term()) * p.coefficient_of(j, 0);
                std::vector<QPoly> next;
                for (std::size_t qi = 0; qi < polys.size(); ++qi)
                    if (qi != pi) next.push_back(polys[qi].substitute(j, sol));
                polys = std::move(next);
                remaining.erase(j);
                did = eliminated = true;
                break;
            }
        }
        if (!did) break;
    }
    for (const auto& p : polys) z.residual.push_back(p.str(names) + " = 0");
    std::set<std::size_t> used;
    for (const auto& p : polys)
        for (std::size_t v : detail::used_vars(p)) used.insert(v);
    int free_dims = static_cast<int>(remaining.size() - used.size());

    bool all_univariate = std::all_of(polys.begin(), polys.end(),
                                      [](const QPoly& p) { return detail::used_vars(p).size() == 1; });
    if (all_univariate) {
        int count = 1;
        for (std::size_t v : used) {
            UPoly<Q> g;
            bool first = true;
            for (const auto& p : polys) {
                if (!p.uses(v)) continue;
                UPoly<Q> u = to_univariate(p, v);
                g = first ? monic(u) : gcd(g, u);
                first = false;
            }
            UPoly<Q> sf = squarefree_part(g);
            int n = degree(sf);
            if (n <= 0) {
                z.kind = ZeroKind::Empty;
                z.dim = -1;
                return z;
            }
            count *= n;
            if (used.size() == 1 && free_dims == 0) z.points = detail::univariate_points(sf);
        }
        z.kind = ZeroKind::AffineUnion;
        z.count = count;
        z.dim = free_dims;
        return z;
    }
    if (polys.size() == 1 && polys[0].total_degree() <= 2) {
        std::vector<std::size_t> vars(used.begin(), used.end());
        QMatrix m = detail::quadric_matrix(polys[0], vars);
        QMatrix qpart(vars.size(), QVector(vars.size()));
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = 0; j < vars.size(); ++j) qpart[i][j] = m[i][j];
        std::size_t rk = rank(m), rq = rank(qpart);
        if (vars.size() == 2) {
            auto affine = [&](int count) {
                z.kind = ZeroKind::AffineUnion;
                z.count = count;
                z.dim = 1 + free_dims;
                return z;
            };
            if (rk == 3 && rq == 1) return affine(1);  // parabola
            if (rk == 2 && rq == 1) return affine(2);  // parallel lines
            if (rk == 1) return affine(1);             // double line
            if (free_dims == 0 && rk == 3 && rq == 2) {
                z.kind = ZeroKind::PuncturedLine;
                z.dim = 1;
                return z;
            }
            if (free_dims == 0 && rk == 2 && rq == 2) {
                z.kind = ZeroKind::CrossingLines;
                z.dim = 1;
                return z;
            }
        }
        if (vars.size() == 3 && free_dims == 0 && rk == 4) {
            z.kind = ZeroKind::SmoothQuadric;
            z.dim = 2;
            return z;
        }
    }
    std::string eqs;
    for (const auto& r : z.residual) eqs += (eqs.empty() ? "" : "; ") + r;
    throw ZeroSetError("unsupported polynomial system: " + eqs);
}

}  // namespace hess
