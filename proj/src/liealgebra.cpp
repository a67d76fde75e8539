#include "mls/liealgebra.hpp"

#include <algorithm>
#include <functional>

namespace mls {

StructureConstants::StructureConstants(int dim,
                                       const std::map<std::tuple<int, int, int>, Rat>& entries)
    : dim_(dim) {
    for (const auto& [key, val] : entries) {
        auto [a, b, g] = key;
        if (a < 0 || b < 0 || g < 0 || a >= dim || b >= dim || g >= dim)
            input_error("structure constant index out of range");
        if (a == b) {
            if (val != 0) input_error("structure constants must be antisymmetric");
            continue;
        }
        if (val == 0) continue;
        if (a < b)
            c_[{a, b, g}] += val;
        else
            c_[{b, a, g}] -= val;
    }
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second == 0)
            it = c_.erase(it);
        else
            ++it;
    }
    validate();
}

Rat StructureConstants::c(int a, int b, int g) const {
    if (a == b) return Rat(0);
    auto it = c_.find(a < b ? std::tuple{a, b, g} : std::tuple{b, a, g});
    if (it == c_.end()) return Rat(0);
    return a < b ? it->second : -it->second;
}

QVector StructureConstants::bracket(int a, int b) const {
    QVector v((size_t)dim_, Rat(0));
    for (int g = 0; g < dim_; ++g) v[(size_t)g] = c(a, b, g);
    return v;
}

Rat StructureConstants::trace_ad(int a) const {
    Rat t(0);
    for (int b = 0; b < dim_; ++b) t += c(a, b, b);
    return t;
}

std::vector<Rat> StructureConstants::traces() const {
    std::vector<Rat> t;
    for (int a = 0; a < dim_; ++a) t.push_back(trace_ad(a));
    return t;
}

bool StructureConstants::is_unimodular() const {
    for (int a = 0; a < dim_; ++a)
        if (trace_ad(a) != 0) return false;
    return true;
}

StructureConstants StructureConstants::negated() const {
    std::map<std::tuple<int, int, int>, Rat> e;
    for (const auto& [k, v] : c_) e[k] = -v;
    return StructureConstants(dim_, e);
}

std::vector<std::tuple<int, int, int, Rat>> StructureConstants::entries() const {
    std::vector<std::tuple<int, int, int, Rat>> out;
    for (const auto& [k, v] : c_) out.emplace_back(std::get<0>(k), std::get<1>(k), std::get<2>(k), v);
    return out;
}

void StructureConstants::validate() const {
    for (int a = 0; a < dim_; ++a)
        for (int b = a + 1; b < dim_; ++b)
            for (int g = b; g < dim_; ++g)
                for (int n = 0; n < dim_; ++n) {
                    Rat s(0);
                    for (int m = 0; m < dim_; ++m) {
                        s += c(a, b, m) * c(m, g, n);
                        s += c(b, g, m) * c(m, a, n);
                        s += c(g, a, m) * c(m, b, n);
                    }
                    if (s != 0) math_error("structure constants violate the Jacobi identity");
                }
}

// ---------------------------------------------------------------------------

namespace {

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars());
    Polynomial g = poly_gcd(a, b);
    return poly_exact_div(a * b, g).primitive_part();
}

// flattening of rational-function vectors into exact Q-rows over a shared
// column basis of (component, monomial) pairs
struct SpanFlattener {
    explicit SpanFlattener(const std::vector<const VectorField*>& fields) {
        if (fields.empty()) return;
        int dim = fields[0]->chart.dim();
        int nsyms = fields[0]->chart.nsyms();
        dens.assign((size_t)dim, Polynomial(nsyms, Rat(1)));
        for (int j = 0; j < dim; ++j)
            for (const auto* f : fields)
                dens[(size_t)j] = poly_lcm(dens[(size_t)j], f->coeffs[(size_t)j].den());
    }

    QVector flatten(const VectorField& f) {
        int dim = f.chart.dim();
        std::vector<std::pair<int, Mono>> local;
        std::vector<Rat> vals;
        for (int j = 0; j < dim; ++j) {
            if (f.coeffs[(size_t)j].is_zero()) continue;
            Polynomial mult = poly_exact_div(dens[(size_t)j], f.coeffs[(size_t)j].den());
            Polynomial p = f.coeffs[(size_t)j].num() * mult;
            for (const auto& [m, c] : p.terms()) {
                local.emplace_back(j, m);
                vals.push_back(c);
            }
        }
        for (const auto& key : local) {
            if (!columns.count(key)) {
                int idx = (int)columns.size();
                columns.emplace(key, idx);
            }
        }
        QVector row(columns.size(), Rat(0));
        for (size_t i = 0; i < local.size(); ++i) row[(size_t)columns.at(local[i])] = vals[i];
        return row;
    }

    static QMatrix pad(std::vector<QVector> rows, size_t width) {
        for (auto& r : rows) r.resize(width, Rat(0));
        return rows;
    }

    std::vector<Polynomial> dens;
    std::map<std::pair<int, Mono>, int> columns;
};

} // namespace

std::optional<QVector> constant_coefficients(const std::vector<VectorField>& basis,
                                             const VectorField& w) {
    if (basis.empty()) return w.is_zero() ? std::optional<QVector>(QVector{}) : std::nullopt;
    std::vector<const VectorField*> all;
    for (const auto& b : basis) all.push_back(&b);
    all.push_back(&w);
    SpanFlattener fl(all);
    std::vector<QVector> rows;
    for (const auto& b : basis) rows.push_back(fl.flatten(b));
    QVector target = fl.flatten(w);
    size_t width = fl.columns.size();
    QMatrix a = SpanFlattener::pad(rows, width);
    target.resize(width, Rat(0));
    // transpose: solve A^T c = target
    QMatrix at(width, QVector(a.size(), Rat(0)));
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t c = 0; c < width; ++c) at[c][r] = a[r][c];
    return q_solve(at, target);
}

VgLieAlgebra close_and_extract(const std::vector<VectorField>& fields, int max_dim) {
    if (fields.empty()) input_error("close_and_extract needs at least one field");
    const Chart& chart = fields[0].chart;
    for (const auto& f : fields) require_same_chart(chart, f.chart, "close_and_extract");

    std::vector<VectorField> basis;
    auto consider = [&](const VectorField& w) -> bool {
        if (w.is_zero()) return false;
        if (constant_coefficients(basis, w)) return false;
        basis.push_back(w);
        if ((int)basis.size() > max_dim)
            math_error("Lie closure exceeds the dimension bound " + std::to_string(max_dim));
        return true;
    };
    for (const auto& f : fields) consider(f);
    bool grew = true;
    while (grew) {
        grew = false;
        size_t n = basis.size();
        for (size_t a = 0; a < n && !grew; ++a)
            for (size_t b = a + 1; b < n && !grew; ++b)
                grew = consider(lie_bracket(basis[a], basis[b]));
    }
    return algebra_from_basis(basis);
}

VgLieAlgebra algebra_from_basis(const std::vector<VectorField>& basis) {
    if (basis.empty()) input_error("empty basis");
    const Chart& chart = basis[0].chart;
    // independence check
    {
        std::vector<const VectorField*> all;
        for (const auto& b : basis) all.push_back(&b);
        SpanFlattener fl(all);
        std::vector<QVector> rows;
        for (const auto& b : basis) rows.push_back(fl.flatten(b));
        QMatrix m = SpanFlattener::pad(std::move(rows), fl.columns.size());
        if (q_rank(m) != (int)basis.size())
            math_error("basis fields are linearly dependent over Q");
    }
    std::map<std::tuple<int, int, int>, Rat> entries;
    int n = (int)basis.size();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            VectorField w = lie_bracket(basis[(size_t)a], basis[(size_t)b]);
            auto coeffs = constant_coefficients(basis, w);
            if (!coeffs)
                math_error("bracket [X_" + std::to_string(a + 1) + ",X_" + std::to_string(b + 1) +
                           "] leaves the Q-span: no constant structure coefficients");
            for (int g = 0; g < n; ++g)
                if ((*coeffs)[(size_t)g] != 0) entries[{a, b, g}] = (*coeffs)[(size_t)g];
        }
    }
    return VgLieAlgebra{chart, basis, StructureConstants(n, entries)};
}

AutomorphicWitness is_locally_automorphic(const VgLieAlgebra& alg) {
    AutomorphicWitness w;
    w.frame_determinant = RationalExpr(alg.chart.nsyms(), Rat(0));
    if (alg.dim() != alg.chart.dim()) {
        w.reason = "dim V = " + std::to_string(alg.dim()) + " but dim N = " +
                   std::to_string(alg.chart.dim());
        return w;
    }
    FMatrix m;
    for (const auto& f : alg.basis) m.push_back(f.coeffs);
    w.frame_determinant = f_det(m);
    if (w.frame_determinant.is_zero()) {
        w.reason = "frame determinant vanishes identically";
        return w;
    }
    w.locally_automorphic = true;
    w.reason = "frame determinant nonzero on the generic locus";
    return w;
}

std::vector<VectorField> solve_symmetries(const VgLieAlgebra& alg, int ansatz_degree) {
    const Chart& chart = alg.chart;
    int dim = chart.dim(), nsyms = chart.nsyms();

    // enumerate coordinate monomials of total degree <= ansatz_degree
    std::vector<Mono> monos;
    Mono cur((size_t)nsyms, 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == dim) {
            monos.push_back(cur);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            cur[(size_t)var] = (unsigned)k;
            rec(var + 1, left - k);
        }
        cur[(size_t)var] = 0;
    };
    rec(0, ansatz_degree);
    std::sort(monos.begin(), monos.end(), GrlexLess{});
    int M = (int)monos.size();
    int ncols = dim * M;  // unknown u_{j,m}

    SparseEliminator elim(ncols);
    for (const auto& X : alg.basis) {
        for (int i = 0; i < dim; ++i) {
            // common denominator for this (X, i) block
            Polynomial den(nsyms, Rat(1));
            for (int j = 0; j < dim; ++j) {
                den = poly_lcm(den, X.coeffs[(size_t)j].den());
                RationalExpr dji = X.coeffs[(size_t)i].derivative(j);
                den = poly_lcm(den, dji.den());
            }
            RationalExpr denr(den, Polynomial(nsyms, Rat(1)));
            std::map<Mono, std::map<int, Rat>, GrlexLess> rows;
            for (int j = 0; j < dim; ++j) {
                RationalExpr dXi = X.coeffs[(size_t)i].derivative(j);
                for (int mi = 0; mi < M; ++mi) {
                    Polynomial xm(nsyms);
                    xm.set_coeff(monos[(size_t)mi], Rat(1));
                    RationalExpr xme(xm, Polynomial(nsyms, Rat(1)));
                    RationalExpr e(nsyms, Rat(0));
                    if (i == j) {
                        // X(x^m)
                        for (int k = 0; k < dim; ++k) {
                            RationalExpr d = xme.derivative(k);
                            if (!d.is_zero()) e = e + X.coeffs[(size_t)k] * d;
                        }
                    }
                    e = e - xme * dXi;
                    if (e.is_zero()) continue;
                    RationalExpr cleared = e * denr;
                    if (!cleared.den().is_constant())
                        math_error("internal: denominator did not clear in symmetry system");
                    Polynomial p = cleared.num().scaled(1 / cleared.den().constant_value());
                    int col = j * M + mi;
                    for (const auto& [mono, coeff] : p.terms()) rows[mono][col] = coeff;
                }
            }
            for (auto& [mono, row] : rows) elim.add_row(std::move(row));
        }
    }

    std::vector<VectorField> out;
    for (const auto& v : elim.nullspace()) {
        std::vector<RationalExpr> comps;
        for (int j = 0; j < dim; ++j) {
            Polynomial p(nsyms);
            for (int mi = 0; mi < M; ++mi) {
                const Rat& u = v[(size_t)(j * M + mi)];
                if (u != 0) p.set_coeff(monos[(size_t)mi], u);
            }
            comps.push_back(RationalExpr(p, Polynomial(nsyms, Rat(1))));
        }
        out.emplace_back(chart, std::move(comps));
    }
    return out;
}

bool verify_isomorphic_sc(const StructureConstants& a, const StructureConstants& b,
                          const QMatrix& map) {
    if (a.dim() != b.dim()) input_error("dimension mismatch in isomorphism check");
    int n = a.dim();
    if ((int)map.size() != n) input_error("map has wrong dimensions");
    for (const auto& row : map)
        if ((int)row.size() != n) input_error("map has wrong dimensions");
    if (q_det(map) == 0) return false;
    for (int al = 0; al < n; ++al) {
        for (int be = al + 1; be < n; ++be) {
            for (int r = 0; r < n; ++r) {
                // phi([e_al, e_be]) component r
                Rat lhs(0);
                for (int g = 0; g < n; ++g) lhs += a.c(al, be, g) * map[(size_t)r][(size_t)g];
                // [phi e_al, phi e_be] component r
                Rat rhs(0);
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        rhs += map[(size_t)p][(size_t)al] * map[(size_t)q][(size_t)be] * b.c(p, q, r);
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
    std::vector<const VectorField*> all;
    for (const auto& f : a) all.push_back(&f);
    for (const auto& f : b) all.push_back(&f);
    if (all.empty()) return true;
    SpanFlattener fl(all);
    std::vector<QVector> ra, rb, rab;
    for (const auto& f : a) ra.push_back(fl.flatten(f));
    for (const auto& f : b) rb.push_back(fl.flatten(f));
    size_t width = fl.columns.size();
    rab = ra;
    rab.insert(rab.end(), rb.begin(), rb.end());
    int qa = q_rank(SpanFlattener::pad(std::move(ra), width));
    int qb = q_rank(SpanFlattener::pad(std::move(rb), width));
    int qab = q_rank(SpanFlattener::pad(std::move(rab), width));
    return qa == qb && qb == qab;
}

} // namespace mls
