#ifndef MLS_LINALG_HPP
#define MLS_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "mls/ratexpr.hpp"

namespace mls {

using QMatrix = std::vector<std::vector<Rat>>;
using QVector = std::vector<Rat>;

// In-place reduced row echelon form; returns the rank.
int q_rref(QMatrix& m);
int q_rank(QMatrix m);
Rat q_det(const QMatrix& m);
std::optional<QMatrix> q_inverse(const QMatrix& m);
// Basis of the right nullspace of an (possibly empty) matrix with ncols columns.
std::vector<QVector> q_nullspace(const QMatrix& m, int ncols);
// One solution of A x = b, if any (free variables set to zero).
std::optional<QVector> q_solve(const QMatrix& a, const QVector& b);

// Incremental exact eliminator for large sparse homogeneous systems over Q.
// Feed rows one at a time; only independent rows are retained.
class SparseEliminator {
public:
    explicit SparseEliminator(int ncols) : ncols_(ncols) {}
    void add_row(std::map<int, Rat> row);
    int rank() const { return (int)pivots_.size(); }
    std::vector<QVector> nullspace() const;

private:
    int ncols_;
    std::map<int, std::map<int, Rat>> pivots_;  // pivot column -> row (leading coeff 1)
};

// Dense exact linear algebra over the rational-function field.
using FMatrix = std::vector<std::vector<RationalExpr>>;
using FVector = std::vector<RationalExpr>;

int f_rank(FMatrix m);
RationalExpr f_det(FMatrix m);
std::optional<FMatrix> f_inverse(const FMatrix& m);
// Solves A x = b over the function field; nullopt when inconsistent. When the
// system is underdetermined the free variables are set to zero.
std::optional<FVector> f_solve(FMatrix a, FVector b);

} // namespace mls

#endif
