#ifndef MLS_DIFFGEO_HPP
#define MLS_DIFFGEO_HPP

#include <map>
#include <string>
#include <vector>

#include "mls/linalg.hpp"
#include "mls/ratexpr.hpp"

namespace mls {

void require_same_chart(const Chart& a, const Chart& b, const char* what);

// Vector field on a chart: one component per coordinate.
struct VectorField {
    Chart chart;
    std::vector<RationalExpr> coeffs;

    VectorField() = default;
    VectorField(Chart c, std::vector<RationalExpr> comps);
    static VectorField zero(const Chart& c);
    static VectorField coordinate(const Chart& c, int idx);  // d/dx_idx

    bool is_zero() const;
    RationalExpr apply(const RationalExpr& f) const;  // X(f), directional derivative
    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField scaled(const RationalExpr& f) const;
    bool operator==(const VectorField& o) const { return chart == o.chart && coeffs == o.coeffs; }
    std::string str() const;
};

// Differential k-form, sparse over strictly increasing index tuples.
struct DiffForm {
    Chart chart;
    int degree = 0;
    std::map<std::vector<int>, RationalExpr> terms;

    DiffForm() = default;
    DiffForm(Chart c, int deg) : chart(std::move(c)), degree(deg) {}
    static DiffForm zero(const Chart& c, int deg) { return DiffForm(c, deg); }
    static DiffForm d_coordinate(const Chart& c, int idx);  // dx_idx
    static DiffForm scalar(const Chart& c, const RationalExpr& f);

    bool is_zero() const { return terms.empty(); }
    void add_term(std::vector<int> idx, const RationalExpr& coeff);  // sorts, tracks sign
    DiffForm operator+(const DiffForm& o) const;
    DiffForm operator-(const DiffForm& o) const;
    DiffForm operator-() const;
    DiffForm scaled(const RationalExpr& f) const;
    bool operator==(const DiffForm& o) const;
    // evaluate on `degree` vector fields
    RationalExpr operator()(const std::vector<VectorField>& args) const;
    std::string str() const;
};

// General covariant tensor, sparse over arbitrary index tuples.
struct CovTensor {
    Chart chart;
    int rank = 0;
    std::map<std::vector<int>, RationalExpr> terms;

    CovTensor() = default;
    CovTensor(Chart c, int r) : chart(std::move(c)), rank(r) {}
    static CovTensor scalar(const Chart& c, const RationalExpr& f);

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& idx, const RationalExpr& coeff);
    CovTensor operator+(const CovTensor& o) const;
    CovTensor operator-(const CovTensor& o) const;
    CovTensor scaled(const RationalExpr& f) const;
    bool operator==(const CovTensor& o) const;
    RationalExpr scalar_value() const;  // rank-0 tensors
    std::string str() const;
};

// --- calculus -------------------------------------------------------------

VectorField lie_bracket(const VectorField& x, const VectorField& y);
DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_d(const DiffForm& w);
DiffForm interior(const VectorField& x, const DiffForm& w);
DiffForm lie_derivative(const VectorField& x, const DiffForm& w);
VectorField lie_derivative(const VectorField& x, const VectorField& y);
CovTensor lie_derivative(const VectorField& x, const CovTensor& t);

// antisymmetrized expansion of a form into a covariant tensor (determinant
// convention, no 1/k! factor)
CovTensor as_tensor(const DiffForm& w);
CovTensor tensor_product(const CovTensor& a, const CovTensor& b);
CovTensor contract_first(const VectorField& y, const CovTensor& t);
// applies fields left to right: the first listed field contracts slot 1 first
CovTensor contract_chain(const CovTensor& t, const std::vector<VectorField>& fields);

// --- products of the base manifold ----------------------------------------

// Copies an object into slot `slot` (1-based) of the m-fold product chart.
VectorField to_slot(const VectorField& x, int m, int slot);
DiffForm to_slot(const DiffForm& w, int m, int slot);
CovTensor to_slot(const CovTensor& t, int m, int slot);
// Diagonal prolongation: the sum of the slot copies.
VectorField diagonal_prolong(const VectorField& x, int m);
DiffForm diagonal_prolong(const DiffForm& w, int m);
CovTensor diagonal_prolong(const CovTensor& t, int m);

} // namespace mls

#endif
