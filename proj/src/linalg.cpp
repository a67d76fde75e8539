#include "mls/linalg.hpp"

#include <algorithm>

namespace mls {

int q_rref(QMatrix& m) {
    if (m.empty()) return 0;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[(size_t)r][(size_t)col] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m[(size_t)rank], m[(size_t)piv]);
        Rat lead = m[(size_t)rank][(size_t)col];
        for (int c = col; c < cols; ++c) m[(size_t)rank][(size_t)c] /= lead;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            Rat f = m[(size_t)r][(size_t)col];
            if (f == 0) continue;
            for (int c = col; c < cols; ++c)
                m[(size_t)r][(size_t)c] -= f * m[(size_t)rank][(size_t)c];
        }
        ++rank;
    }
    return rank;
}

int q_rank(QMatrix m) { return q_rref(m); }

Rat q_det(const QMatrix& m) {
    int n = (int)m.size();
    QMatrix a = m;
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[(size_t)r][(size_t)col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[(size_t)col], a[(size_t)piv]);
            det = -det;
        }
        det *= a[(size_t)col][(size_t)col];
        Rat inv = 1 / a[(size_t)col][(size_t)col];
        for (int r = col + 1; r < n; ++r) {
            Rat f = a[(size_t)r][(size_t)col] * inv;
            if (f == 0) continue;
            for (int c = col; c < n; ++c)
                a[(size_t)r][(size_t)c] -= f * a[(size_t)col][(size_t)c];
        }
    }
    return det;
}

std::optional<QMatrix> q_inverse(const QMatrix& m) {
    int n = (int)m.size();
    QMatrix aug = m;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug[(size_t)r].push_back(r == c ? Rat(1) : Rat(0));
    }
    int rank = q_rref(aug);
    if (rank < n) return std::nullopt;
    QMatrix inv((size_t)n, QVector((size_t)n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv[(size_t)r][(size_t)c] = aug[(size_t)r][(size_t)(n + c)];
    return inv;
}

std::vector<QVector> q_nullspace(const QMatrix& m, int ncols) {
    QMatrix a = m;
    int rank = a.empty() ? 0 : q_rref(a);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot((size_t)ncols, false);
    for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < ncols; ++c) {
            if (a[(size_t)r][(size_t)c] != 0) {
                pivot_col.push_back(c);
                is_pivot[(size_t)c] = true;
                break;
            }
        }
    }
    std::vector<QVector> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[(size_t)free]) continue;
        QVector v((size_t)ncols, Rat(0));
        v[(size_t)free] = 1;
        for (int r = 0; r < rank; ++r)
            v[(size_t)pivot_col[(size_t)r]] = -a[(size_t)r][(size_t)free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> q_solve(const QMatrix& a, const QVector& b) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    QMatrix aug = a;
    for (int r = 0; r < rows; ++r) aug[(size_t)r].push_back(b[(size_t)r]);
    q_rref(aug);
    QVector x((size_t)cols, Rat(0));
    for (int r = 0; r < rows; ++r) {
        int lead = -1;
        for (int c = 0; c <= cols; ++c) {
            if (aug[(size_t)r][(size_t)c] != 0) {
                lead = c;
                break;
            }
        }
        if (lead == cols) return std::nullopt;  // 0 = nonzero
        if (lead >= 0 && lead < cols) x[(size_t)lead] = aug[(size_t)r][(size_t)cols];
    }
    return x;
}

void SparseEliminator::add_row(std::map<int, Rat> row) {
    while (!row.empty()) {
        int lead = row.begin()->first;
        auto p = pivots_.find(lead);
        if (p == pivots_.end()) {
            Rat inv = 1 / row.begin()->second;
            for (auto& [c, v] : row) v *= inv;
            pivots_.emplace(lead, std::move(row));
            return;
        }
        Rat f = row.begin()->second;
        for (const auto& [c, v] : p->second) {
            auto it = row.find(c);
            if (it == row.end()) {
                row.emplace(c, -f * v);
            } else {
                it->second -= f * v;
                if (it->second == 0) row.erase(it);
            }
        }
    }
}

std::vector<QVector> SparseEliminator::nullspace() const {
    // back-substitute pivot rows into full RREF
    std::map<int, std::map<int, Rat>> rref = pivots_;
    for (auto it = rref.rbegin(); it != rref.rend(); ++it) {
        for (auto up = rref.begin(); up != rref.end() && up->first < it->first; ++up) {
            auto f = up->second.find(it->first);
            if (f == up->second.end()) continue;
            Rat factor = f->second;
            for (const auto& [c, v] : it->second) {
                auto jt = up->second.find(c);
                if (jt == up->second.end()) {
                    up->second.emplace(c, -factor * v);
                } else {
                    jt->second -= factor * v;
                    if (jt->second == 0) up->second.erase(jt);
                }
            }
        }
    }
    std::vector<QVector> basis;
    for (int free = 0; free < ncols_; ++free) {
        if (rref.count(free)) continue;
        QVector v((size_t)ncols_, Rat(0));
        v[(size_t)free] = 1;
        for (const auto& [pc, row] : rref) {
            auto it = row.find(free);
            if (it != row.end()) v[(size_t)pc] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// function-field elimination
// ---------------------------------------------------------------------------

namespace {

// cheap complexity measure for pivot selection
size_t expr_weight(const RationalExpr& e) {
    return e.num().terms().size() + e.den().terms().size();
}

} // namespace

int f_rank(FMatrix m) {
    if (m.empty()) return 0;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        size_t best = 0;
        for (int r = rank; r < rows; ++r) {
            if (!m[(size_t)r][(size_t)col].is_zero()) {
                size_t w = expr_weight(m[(size_t)r][(size_t)col]);
                if (piv < 0 || w < best) {
                    piv = r;
                    best = w;
                }
            }
        }
        if (piv < 0) continue;
        std::swap(m[(size_t)rank], m[(size_t)piv]);
        const RationalExpr lead = m[(size_t)rank][(size_t)col];
        for (int r = rank + 1; r < rows; ++r) {
            RationalExpr f = m[(size_t)r][(size_t)col];
            if (f.is_zero()) continue;
            f = f / lead;
            for (int c = col; c < cols; ++c)
                m[(size_t)r][(size_t)c] = m[(size_t)r][(size_t)c] - f * m[(size_t)rank][(size_t)c];
        }
        ++rank;
    }
    return rank;
}

RationalExpr f_det(FMatrix a) {
    int n = (int)a.size();
    if (n == 0) return RationalExpr(0, Rat(1));
    RationalExpr det(a[0][0].nsyms(), Rat(1));
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        size_t best = 0;
        for (int r = col; r < n; ++r) {
            if (!a[(size_t)r][(size_t)col].is_zero()) {
                size_t w = expr_weight(a[(size_t)r][(size_t)col]);
                if (piv < 0 || w < best) {
                    piv = r;
                    best = w;
                }
            }
        }
        if (piv < 0) return RationalExpr(det.nsyms(), Rat(0));
        if (piv != col) {
            std::swap(a[(size_t)col], a[(size_t)piv]);
            det = -det;
        }
        det = det * a[(size_t)col][(size_t)col];
        for (int r = col + 1; r < n; ++r) {
            RationalExpr f = a[(size_t)r][(size_t)col];
            if (f.is_zero()) continue;
            f = f / a[(size_t)col][(size_t)col];
            for (int c = col; c < n; ++c)
                a[(size_t)r][(size_t)c] = a[(size_t)r][(size_t)c] - f * a[(size_t)col][(size_t)c];
        }
    }
    return det;
}

std::optional<FMatrix> f_inverse(const FMatrix& m) {
    int n = (int)m.size();
    if (n == 0) return FMatrix{};
    int nsyms = m[0][0].nsyms();
    FMatrix aug = m;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            aug[(size_t)r].push_back(RationalExpr(nsyms, r == c ? Rat(1) : Rat(0)));
    int rank = 0;
    int cols = 2 * n;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        size_t best = 0;
        for (int r = rank; r < n; ++r) {
            if (!aug[(size_t)r][(size_t)col].is_zero()) {
                size_t w = expr_weight(aug[(size_t)r][(size_t)col]);
                if (piv < 0 || w < best) {
                    piv = r;
                    best = w;
                }
            }
        }
        if (piv < 0) return std::nullopt;
        std::swap(aug[(size_t)rank], aug[(size_t)piv]);
        RationalExpr lead = aug[(size_t)rank][(size_t)col];
        for (int c = col; c < cols; ++c)
            aug[(size_t)rank][(size_t)c] = aug[(size_t)rank][(size_t)c] / lead;
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            RationalExpr f = aug[(size_t)r][(size_t)col];
            if (f.is_zero()) continue;
            for (int c = col; c < cols; ++c)
                aug[(size_t)r][(size_t)c] = aug[(size_t)r][(size_t)c] - f * aug[(size_t)rank][(size_t)c];
        }
        ++rank;
    }
    if (rank < n) return std::nullopt;
    FMatrix inv((size_t)n, FVector((size_t)n, RationalExpr(nsyms, Rat(0))));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv[(size_t)r][(size_t)c] = aug[(size_t)r][(size_t)(n + c)];
    return inv;
}

std::optional<FVector> f_solve(FMatrix a, FVector b) {
    int rows = (int)a.size();
    if (rows == 0) return FVector{};
    int cols = (int)a[0].size();
    int nsyms = cols ? a[0][0].nsyms() : b[0].nsyms();
    for (int r = 0; r < rows; ++r) a[(size_t)r].push_back(b[(size_t)r]);
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        size_t best = 0;
        for (int r = rank; r < rows; ++r) {
            if (!a[(size_t)r][(size_t)col].is_zero()) {
                size_t w = expr_weight(a[(size_t)r][(size_t)col]);
                if (piv < 0 || w < best) {
                    piv = r;
                    best = w;
                }
            }
        }
        if (piv < 0) continue;
        std::swap(a[(size_t)rank], a[(size_t)piv]);
        RationalExpr lead = a[(size_t)rank][(size_t)col];
        for (int c = col; c <= cols; ++c)
            a[(size_t)rank][(size_t)c] = a[(size_t)rank][(size_t)c] / lead;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            RationalExpr f = a[(size_t)r][(size_t)col];
            if (f.is_zero()) continue;
            for (int c = col; c <= cols; ++c)
                a[(size_t)r][(size_t)c] = a[(size_t)r][(size_t)c] - f * a[(size_t)rank][(size_t)c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    // inconsistency: a zero row with nonzero rhs
    for (int r = rank; r < rows; ++r) {
        if (!a[(size_t)r][(size_t)cols].is_zero()) return std::nullopt;
    }
    FVector x((size_t)cols, RationalExpr(nsyms, Rat(0)));
    for (int r = 0; r < rank; ++r)
        x[(size_t)pivot_col[(size_t)r]] = a[(size_t)r][(size_t)cols];
    return x;
}

} // namespace mls
