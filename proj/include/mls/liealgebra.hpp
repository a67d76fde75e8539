#ifndef MLS_LIEALGEBRA_HPP
#define MLS_LIEALGEBRA_HPP

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "mls/diffgeo.hpp"

namespace mls {

// Structure constants c_{ab}^g of a finite-dimensional Lie algebra over Q.
// Construction validates antisymmetry and the Jacobi identity.
class StructureConstants {
public:
    StructureConstants() : dim_(0) {}
    // entries: (a, b, g) -> value with a < b; antisymmetric completion implied
    StructureConstants(int dim, const std::map<std::tuple<int, int, int>, Rat>& entries);

    int dim() const { return dim_; }
    Rat c(int a, int b, int g) const;
    // [e_a, e_b] expressed on the basis
    QVector bracket(int a, int b) const;
    Rat trace_ad(int a) const;  // sum_b c_{ab}^b
    std::vector<Rat> traces() const;
    bool is_unimodular() const;
    StructureConstants negated() const;
    bool operator==(const StructureConstants& o) const { return dim_ == o.dim_ && c_ == o.c_; }

    // sparse (a,b,g,value) list with a < b
    std::vector<std::tuple<int, int, int, Rat>> entries() const;

private:
    int dim_;
    std::map<std::tuple<int, int, int>, Rat> c_;  // keys with a < b only
    void validate() const;
};

// A Lie algebra of vector fields with rational structure constants.
struct VgLieAlgebra {
    Chart chart;
    std::vector<VectorField> basis;
    StructureConstants sc;

    int dim() const { return (int)basis.size(); }
};

// Expresses w as a constant-coefficient combination of the given fields;
// nullopt when w is outside their Q-span or the coefficients are non-constant.
std::optional<QVector> constant_coefficients(const std::vector<VectorField>& basis,
                                             const VectorField& w);

// Closes the given fields under brackets, extracting a basis and exact
// structure constants. Throws when the dimension exceeds max_dim or when a
// bracket cannot be expressed with constant coefficients.
VgLieAlgebra close_and_extract(const std::vector<VectorField>& fields, int max_dim);

// Builds the algebra from fields already known independent, verifying the
// brackets close with constant coefficients.
VgLieAlgebra algebra_from_basis(const std::vector<VectorField>& basis);

struct AutomorphicWitness {
    bool locally_automorphic = false;
    std::string reason;
    RationalExpr frame_determinant;  // zero expr when dims mismatch
};

AutomorphicWitness is_locally_automorphic(const VgLieAlgebra& alg);

// Lie symmetries with polynomial components of total degree <= ansatz_degree:
// the exact solution basis of L_{X_a} Y = 0 for all basis fields.
std::vector<VectorField> solve_symmetries(const VgLieAlgebra& alg, int ansatz_degree);

// Verifies that the linear map given by `map` (columns = images of basis
// vectors) is a Lie algebra isomorphism from a to b.
bool verify_isomorphic_sc(const StructureConstants& a, const StructureConstants& b,
                          const QMatrix& map);

// Q-span equality of two families of vector fields on a common chart.
bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b);

} // namespace mls

#endif
