#ifndef MLS_MULTISYMPLECTIC_HPP
#define MLS_MULTISYMPLECTIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "mls/liealgebra.hpp"

namespace mls {

// A certified multisymplectic form: closed, generically 1-nondegenerate.
struct MultisymplecticForm {
    DiffForm form;
    bool closed = false;
    bool nondegenerate = false;                // generic rank of the contraction map = dim
    std::optional<RationalExpr> degeneracy_locus;  // a maximal minor; injectivity may fail on its zero set

    int degree() const { return form.degree; }
    const Chart& chart() const { return form.chart; }
};

// Verifies closedness and generic 1-nondegeneracy. Throws error(math) when
// either fails; the message carries the failing direction.
MultisymplecticForm check_multisymplectic(const DiffForm& omega);

// Dual coframe of a frame of vector fields: eta_a(X_b) = delta_ab, exact over
// the function field. Throws when the frame matrix is singular.
std::vector<DiffForm> dual_coframe(const std::vector<VectorField>& frame);
std::vector<DiffForm> dual_coframe(const VgLieAlgebra& alg);

// All degree-p wedge products of the dual coframe of the symmetry algebra;
// each returned form is verified invariant under every basis field of alg.
std::vector<DiffForm> invariant_form_space(const VgLieAlgebra& alg,
                                           const std::vector<VectorField>& symmetries, int p);

// Invariant volume form of a locally automorphic, unimodular algebra:
// eta_1 ^ ... ^ eta_r built from the algebra's own dual coframe.
MultisymplecticForm invariant_volume(const VgLieAlgebra& alg);

// Solves d(sum c_i ansatz_i) = i_X Theta for rational constants c_i.
// Default ansatz (empty list): the dual coframe wedges of degree k-2.
DiffForm hamiltonian_form(const VectorField& x, const MultisymplecticForm& theta,
                          std::vector<DiffForm> ansatz = {});

// Recovers the unique Y with i_Y Theta = xi (exact linear solve).
VectorField hamiltonian_field_of(const DiffForm& xi, const MultisymplecticForm& theta);

// {xi, zeta} = i_{[Y,X]} Theta with i_X Theta = xi, i_Y Theta = zeta.
DiffForm bracket_km1(const DiffForm& xi, const DiffForm& zeta, const MultisymplecticForm& theta);

// {theta_X, theta_Y} = i_Y i_X Theta for Hamiltonian forms.
DiffForm bracket_km2(const DiffForm& theta_x, const DiffForm& theta_y,
                     const MultisymplecticForm& theta);

struct LieHamiltonAlgebra {
    std::vector<DiffForm> generators;  // i_{X_a} Theta
    StructureConstants sc;             // bracket_km1 constants on the generators
};

LieHamiltonAlgebra minimal_lie_hamilton_algebra(const VgLieAlgebra& alg,
                                                const MultisymplecticForm& theta);

// Expresses a form as a constant-coefficient combination of given forms.
std::optional<QVector> constant_form_coefficients(const std::vector<DiffForm>& basis,
                                                  const DiffForm& w);

} // namespace mls

#endif
