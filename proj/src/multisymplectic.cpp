#include "mls/multisymplectic.hpp"

#include <algorithm>
#include <sstream>

namespace mls {

namespace {

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars());
    Polynomial g = poly_gcd(a, b);
    return poly_exact_div(a * b, g).primitive_part();
}

// flattens forms into exact Q-rows over shared (index tuple, monomial) columns
struct FormFlattener {
    explicit FormFlattener(const std::vector<const DiffForm*>& forms) {
        if (forms.empty()) return;
        nsyms = forms[0]->chart.nsyms();
        for (const auto* f : forms)
            for (const auto& [idx, c] : f->terms) {
                auto& d = dens.try_emplace(idx, Polynomial(nsyms, Rat(1))).first->second;
                d = poly_lcm(d, c.den());
            }
    }

    QVector flatten(const DiffForm& f) {
        std::vector<std::pair<std::vector<int>, Mono>> local;
        std::vector<Rat> vals;
        for (const auto& [idx, c] : f.terms) {
            Polynomial mult = poly_exact_div(dens.at(idx), c.den());
            Polynomial p = c.num() * mult;
            for (const auto& [m, coeff] : p.terms()) {
                local.emplace_back(idx, m);
                vals.push_back(coeff);
            }
        }
        for (const auto& key : local)
            if (!columns.count(key)) columns.emplace(key, (int)columns.size());
        QVector row(columns.size(), Rat(0));
        for (size_t i = 0; i < local.size(); ++i) row[(size_t)columns.at(local[i])] = vals[i];
        return row;
    }

    int nsyms = 0;
    std::map<std::vector<int>, Polynomial> dens;
    std::map<std::pair<std::vector<int>, Mono>, int> columns;
};

// contraction matrix: row i = components of i_{d/dx_i} omega
std::pair<FMatrix, std::vector<std::vector<int>>> contraction_matrix(const DiffForm& omega) {
    const Chart& c = omega.chart;
    int n = c.dim();
    std::vector<DiffForm> rows_forms;
    std::map<std::vector<int>, int> colidx;
    for (int i = 0; i < n; ++i) {
        rows_forms.push_back(interior(VectorField::coordinate(c, i), omega));
        for (const auto& [idx, coeff] : rows_forms.back().terms)
            if (!colidx.count(idx)) colidx.emplace(idx, (int)colidx.size());
    }
    std::vector<std::vector<int>> cols(colidx.size());
    for (const auto& [idx, j] : colidx) cols[(size_t)j] = idx;
    FMatrix m((size_t)n, FVector(colidx.size(), RationalExpr(c.nsyms(), Rat(0))));
    for (int i = 0; i < n; ++i)
        for (const auto& [idx, coeff] : rows_forms[(size_t)i].terms)
            m[(size_t)i][(size_t)colidx.at(idx)] = coeff;
    return {m, cols};
}

} // namespace

MultisymplecticForm check_multisymplectic(const DiffForm& omega) {
    const Chart& c = omega.chart;
    int n = c.dim();
    if (omega.degree < 2 || omega.degree > n)
        input_error("multisymplectic degree must lie between 2 and dim N");
    MultisymplecticForm out;
    out.form = omega;
    if (!exterior_d(omega).is_zero()) math_error("form is not closed");
    out.closed = true;

    auto [m, cols] = contraction_matrix(omega);
    if ((int)cols.size() < n || f_rank(m) < n)
        math_error("form is degenerate: contraction map has generic rank < dim N");
    out.nondegenerate = true;

    // degeneracy locus: determinant of a maximal square minor; greedily pick
    // independent columns via elimination on a working copy
    FMatrix work = m;
    std::vector<int> chosen;
    int rank = 0;
    for (int col = 0; col < (int)cols.size() && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (!work[(size_t)r][(size_t)col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(work[(size_t)rank], work[(size_t)piv]);
        for (int r = rank + 1; r < n; ++r) {
            if (work[(size_t)r][(size_t)col].is_zero()) continue;
            RationalExpr f = work[(size_t)r][(size_t)col] / work[(size_t)rank][(size_t)col];
            for (int cc = col; cc < (int)cols.size(); ++cc)
                work[(size_t)r][(size_t)cc] =
                    work[(size_t)r][(size_t)cc] - f * work[(size_t)rank][(size_t)cc];
        }
        chosen.push_back(col);
        ++rank;
    }
    FMatrix minor((size_t)n, FVector((size_t)n, RationalExpr(c.nsyms(), Rat(0))));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j)
            minor[(size_t)r][(size_t)j] = m[(size_t)r][(size_t)chosen[(size_t)j]];
    out.degeneracy_locus = f_det(minor);
    return out;
}

std::vector<DiffForm> dual_coframe(const std::vector<VectorField>& frame) {
    if (frame.empty()) input_error("empty frame");
    const Chart& c = frame[0].chart;
    int n = c.dim();
    if ((int)frame.size() != n)
        math_error("dual coframe needs exactly dim N fields (got " +
                   std::to_string(frame.size()) + ")");
    FMatrix a;
    for (const auto& f : frame) a.push_back(f.coeffs);
    auto inv = f_inverse(a);
    if (!inv) math_error("frame is singular over the function field");
    std::vector<DiffForm> etas;
    for (int al = 0; al < n; ++al) {
        DiffForm eta(c, 1);
        for (int j = 0; j < n; ++j) eta.add_term({j}, (*inv)[(size_t)j][(size_t)al]);
        etas.push_back(std::move(eta));
    }
    return etas;
}

std::vector<DiffForm> dual_coframe(const VgLieAlgebra& alg) { return dual_coframe(alg.basis); }

std::vector<DiffForm> invariant_form_space(const VgLieAlgebra& alg,
                                           const std::vector<VectorField>& symmetries, int p) {
    const Chart& c = alg.chart;
    if (p < 0 || p > c.dim()) input_error("invalid form degree");
    if ((int)symmetries.size() != c.dim())
        math_error("symmetry algebra unavailable or incomplete: need dim N = " +
                   std::to_string(c.dim()) + " independent symmetries, got " +
                   std::to_string(symmetries.size()));
    if (p == 0) return {DiffForm::scalar(c, RationalExpr(c.nsyms(), Rat(1)))};
    std::vector<DiffForm> nu = dual_coframe(symmetries);
    std::vector<DiffForm> out;
    std::vector<int> idx((size_t)p);
    for (int i = 0; i < p; ++i) idx[(size_t)i] = i;
    int r = (int)nu.size();
    while (true) {
        DiffForm w = nu[(size_t)idx[0]];
        for (int i = 1; i < p; ++i) w = wedge(w, nu[(size_t)idx[(size_t)i]]);
        for (const auto& X : alg.basis)
            if (!lie_derivative(X, w).is_zero())
                math_error("candidate invariant form fails exact invariance");
        out.push_back(std::move(w));
        int i = p - 1;
        while (i >= 0 && idx[(size_t)i] == r - (p - i)) --i;
        if (i < 0) break;
        ++idx[(size_t)i];
        for (int j = i + 1; j < p; ++j) idx[(size_t)j] = idx[(size_t)j - 1] + 1;
    }
    return out;
}

MultisymplecticForm invariant_volume(const VgLieAlgebra& alg) {
    auto w = is_locally_automorphic(alg);
    if (!w.locally_automorphic) math_error("not locally automorphic: " + w.reason);
    if (!alg.sc.is_unimodular()) {
        std::ostringstream os;
        os << "algebra is not unimodular; ad traces:";
        for (const auto& t : alg.sc.traces()) os << " " << t.get_str();
        math_error(os.str());
    }
    std::vector<DiffForm> etas = dual_coframe(alg);
    DiffForm theta = etas[0];
    for (size_t i = 1; i < etas.size(); ++i) theta = wedge(theta, etas[i]);
    for (const auto& X : alg.basis)
        if (!lie_derivative(X, theta).is_zero())
            math_error("volume form fails exact invariance");
    return check_multisymplectic(theta);
}

std::optional<QVector> constant_form_coefficients(const std::vector<DiffForm>& basis,
                                                  const DiffForm& w) {
    if (basis.empty()) return w.is_zero() ? std::optional<QVector>(QVector{}) : std::nullopt;
    std::vector<const DiffForm*> all;
    for (const auto& b : basis) all.push_back(&b);
    all.push_back(&w);
    FormFlattener fl(all);
    std::vector<QVector> rows;
    for (const auto& b : basis) rows.push_back(fl.flatten(b));
    QVector target = fl.flatten(w);
    size_t width = fl.columns.size();
    for (auto& r : rows) r.resize(width, Rat(0));
    target.resize(width, Rat(0));
    QMatrix at(width, QVector(rows.size(), Rat(0)));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < width; ++c) at[c][r] = rows[r][c];
    return q_solve(at, target);
}

DiffForm hamiltonian_form(const VectorField& x, const MultisymplecticForm& theta,
                          std::vector<DiffForm> ansatz) {
    DiffForm xi = interior(x, theta.form);
    if (!exterior_d(xi).is_zero())
        math_error("field is not locally Hamiltonian: i_X Theta is not closed");
    if (xi.is_zero()) return DiffForm(theta.chart(), theta.degree() - 2);
    if (ansatz.empty()) input_error("hamiltonian_form needs a primitive ansatz");
    std::vector<DiffForm> dans;
    for (const auto& a : ansatz) dans.push_back(exterior_d(a));
    auto coeffs = constant_form_coefficients(dans, xi);
    if (!coeffs)
        math_error("no Hamiltonian form in the ansatz span (the field may still be "
                   "Hamiltonian with a primitive outside it)");
    DiffForm out(theta.chart(), theta.degree() - 2);
    for (size_t i = 0; i < ansatz.size(); ++i) {
        if ((*coeffs)[i] == 0) continue;
        out = out + ansatz[i].scaled(RationalExpr(theta.chart().nsyms(), (*coeffs)[i]));
    }
    return out;
}

VectorField hamiltonian_field_of(const DiffForm& xi, const MultisymplecticForm& theta) {
    const Chart& c = theta.chart();
    auto [m, cols] = contraction_matrix(theta.form);
    FMatrix at(cols.size(), FVector((size_t)c.dim(), RationalExpr(c.nsyms(), Rat(0))));
    FVector b(cols.size(), RationalExpr(c.nsyms(), Rat(0)));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < c.dim(); ++i) at[j][(size_t)i] = m[(size_t)i][j];
    for (const auto& [idx, coeff] : xi.terms) {
        auto it = std::find(cols.begin(), cols.end(), idx);
        if (it == cols.end()) math_error("form is not in the image of the contraction map");
        b[(size_t)(it - cols.begin())] = coeff;
    }
    auto sol = f_solve(at, b);
    if (!sol) math_error("form is not in the image of the contraction map");
    // nondegeneracy makes the solution unique; verify exactly
    VectorField y(c, *sol);
    if (!(interior(y, theta.form) == xi))
        math_error("form is not in the image of the contraction map");
    return y;
}

DiffForm bracket_km1(const DiffForm& xi, const DiffForm& zeta, const MultisymplecticForm& theta) {
    VectorField x = hamiltonian_field_of(xi, theta);
    VectorField y = hamiltonian_field_of(zeta, theta);
    return interior(lie_bracket(y, x), theta.form);
}

DiffForm bracket_km2(const DiffForm& theta_x, const DiffForm& theta_y,
                     const MultisymplecticForm& theta) {
    VectorField x = hamiltonian_field_of(exterior_d(theta_x), theta);
    VectorField y = hamiltonian_field_of(exterior_d(theta_y), theta);
    return interior(y, interior(x, theta.form));
}

LieHamiltonAlgebra minimal_lie_hamilton_algebra(const VgLieAlgebra& alg,
                                                const MultisymplecticForm& theta) {
    LieHamiltonAlgebra out;
    for (size_t i = 0; i < alg.basis.size(); ++i) {
        DiffForm g = interior(alg.basis[i], theta.form);
        if (!exterior_d(g).is_zero())
            math_error("basis field " + std::to_string(i + 1) +
                       " is not locally Hamiltonian for this form");
        out.generators.push_back(std::move(g));
    }
    int n = (int)out.generators.size();
    std::map<std::tuple<int, int, int>, Rat> entries;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            DiffForm br = bracket_km1(out.generators[(size_t)a], out.generators[(size_t)b], theta);
            auto coeffs = constant_form_coefficients(out.generators, br);
            if (!coeffs) math_error("Lie-Hamilton bracket leaves the generator span");
            for (int g = 0; g < n; ++g)
                if ((*coeffs)[(size_t)g] != 0) entries[{a, b, g}] = (*coeffs)[(size_t)g];
        }
    }
    out.sc = StructureConstants(n, entries);
    return out;
}

} // namespace mls
