#include "mls/diffgeo.hpp"

#include <algorithm>
#include <sstream>

namespace mls {

void require_same_chart(const Chart& a, const Chart& b, const char* what) {
    if (a != b) input_error(std::string("chart mismatch in ") + what);
}

namespace {

// sorts idx ascending; returns permutation sign, 0 if a repeated index
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 0; i < idx.size(); ++i) {
        for (size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    }
    return sign;
}

int perm_sign(const std::vector<int>& perm) {
    int s = 1;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) s = -s;
    return s;
}

} // namespace

// --- VectorField ------------------------------------------------------------

VectorField::VectorField(Chart c, std::vector<RationalExpr> comps)
    : chart(std::move(c)), coeffs(std::move(comps)) {
    if ((int)coeffs.size() != chart.dim())
        input_error("vector field needs one component per coordinate");
}

VectorField VectorField::zero(const Chart& c) {
    return VectorField(c, std::vector<RationalExpr>((size_t)c.dim(), RationalExpr(c.nsyms(), Rat(0))));
}

VectorField VectorField::coordinate(const Chart& c, int idx) {
    VectorField v = zero(c);
    v.coeffs[(size_t)idx] = RationalExpr(c.nsyms(), Rat(1));
    return v;
}

bool VectorField::is_zero() const {
    for (const auto& e : coeffs)
        if (!e.is_zero()) return false;
    return true;
}

RationalExpr VectorField::apply(const RationalExpr& f) const {
    RationalExpr acc(chart.nsyms(), Rat(0));
    for (int i = 0; i < chart.dim(); ++i) {
        if (coeffs[(size_t)i].is_zero()) continue;
        acc = acc + coeffs[(size_t)i] * f.derivative(i);
    }
    return acc;
}

VectorField VectorField::operator+(const VectorField& o) const {
    require_same_chart(chart, o.chart, "vector field sum");
    VectorField r = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] + o.coeffs[i];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const {
    require_same_chart(chart, o.chart, "vector field difference");
    VectorField r = *this;
    for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] - o.coeffs[i];
    return r;
}

VectorField VectorField::scaled(const RationalExpr& f) const {
    VectorField r = *this;
    for (auto& c : r.coeffs) c = c * f;
    return r;
}

std::string VectorField::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < chart.dim(); ++i) {
        if (coeffs[(size_t)i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs[(size_t)i].str(chart) << ") * d/d" << chart.coords()[(size_t)i];
    }
    if (first) os << "0";
    return os.str();
}

// --- DiffForm ----------------------------------------------------------------

DiffForm DiffForm::d_coordinate(const Chart& c, int idx) {
    DiffForm f(c, 1);
    f.terms[{idx}] = RationalExpr(c.nsyms(), Rat(1));
    return f;
}

DiffForm DiffForm::scalar(const Chart& c, const RationalExpr& f) {
    DiffForm r(c, 0);
    if (!f.is_zero()) r.terms[{}] = f;
    return r;
}

void DiffForm::add_term(std::vector<int> idx, const RationalExpr& coeff) {
    if ((int)idx.size() != degree) input_error("form term arity mismatch");
    if (coeff.is_zero()) return;
    int sign = sort_sign(idx);
    if (sign == 0) return;
    for (int i : idx)
        if (i < 0 || i >= chart.dim()) input_error("form index out of range");
    RationalExpr c = sign > 0 ? coeff : -coeff;
    auto it = terms.find(idx);
    if (it == terms.end()) {
        terms.emplace(std::move(idx), c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

DiffForm DiffForm::operator+(const DiffForm& o) const {
    require_same_chart(chart, o.chart, "form sum");
    if (degree != o.degree) input_error("form degree mismatch in sum");
    DiffForm r = *this;
    for (const auto& [idx, c] : o.terms) r.add_term(idx, c);
    return r;
}

DiffForm DiffForm::operator-(const DiffForm& o) const { return *this + (-o); }

DiffForm DiffForm::operator-() const {
    DiffForm r = *this;
    for (auto& [idx, c] : r.terms) c = -c;
    return r;
}

DiffForm DiffForm::scaled(const RationalExpr& f) const {
    DiffForm r(chart, degree);
    if (f.is_zero()) return r;
    for (const auto& [idx, c] : terms) {
        RationalExpr p = c * f;
        if (!p.is_zero()) r.terms[idx] = p;
    }
    return r;
}

bool DiffForm::operator==(const DiffForm& o) const {
    return chart == o.chart && degree == o.degree && terms == o.terms;
}

RationalExpr DiffForm::operator()(const std::vector<VectorField>& args) const {
    if ((int)args.size() != degree) input_error("form applied to wrong number of fields");
    RationalExpr acc(chart.nsyms(), Rat(0));
    if (degree == 0) return terms.count({}) ? terms.at({}) : acc;
    // sum over permutations: determinant of component picks
    std::vector<int> perm((size_t)degree);
    for (const auto& [idx, c] : terms) {
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = (int)i;
        // iterate permutations of positions
        std::vector<int> p = perm;
        std::sort(p.begin(), p.end());
        do {
            RationalExpr prod = c;
            for (int a = 0; a < degree; ++a)
                prod = prod * args[(size_t)p[(size_t)a]].coeffs[(size_t)idx[(size_t)a]];
            acc = acc + (perm_sign(p) > 0 ? prod : -prod);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return acc;
}

std::string DiffForm::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(chart) << ")";
        if (!idx.empty()) {
            os << " * ";
            for (size_t i = 0; i < idx.size(); ++i) {
                if (i) os << "^";
                os << "d" << chart.coords()[(size_t)idx[i]];
            }
        }
    }
    return os.str();
}

// --- CovTensor ----------------------------------------------------------------

CovTensor CovTensor::scalar(const Chart& c, const RationalExpr& f) {
    CovTensor t(c, 0);
    if (!f.is_zero()) t.terms[{}] = f;
    return t;
}

void CovTensor::add_term(const std::vector<int>& idx, const RationalExpr& coeff) {
    if ((int)idx.size() != rank) input_error("tensor term arity mismatch");
    if (coeff.is_zero()) return;
    auto it = terms.find(idx);
    if (it == terms.end()) {
        terms.emplace(idx, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

CovTensor CovTensor::operator+(const CovTensor& o) const {
    require_same_chart(chart, o.chart, "tensor sum");
    if (rank != o.rank) input_error("tensor rank mismatch in sum");
    CovTensor r = *this;
    for (const auto& [idx, c] : o.terms) r.add_term(idx, c);
    return r;
}

CovTensor CovTensor::operator-(const CovTensor& o) const {
    return *this + o.scaled(RationalExpr(chart.nsyms(), Rat(-1)));
}

CovTensor CovTensor::scaled(const RationalExpr& f) const {
    CovTensor r(chart, rank);
    if (f.is_zero()) return r;
    for (const auto& [idx, c] : terms) {
        RationalExpr p = c * f;
        if (!p.is_zero()) r.terms[idx] = p;
    }
    return r;
}

bool CovTensor::operator==(const CovTensor& o) const {
    return chart == o.chart && rank == o.rank && terms == o.terms;
}

RationalExpr CovTensor::scalar_value() const {
    if (rank != 0) input_error("scalar_value on tensor of positive rank");
    if (terms.empty()) return RationalExpr(chart.nsyms(), Rat(0));
    return terms.at({});
}

std::string CovTensor::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str(chart) << ")";
        if (!idx.empty()) {
            os << " * ";
            for (size_t i = 0; i < idx.size(); ++i) {
                if (i) os << "(x)";
                os << "d" << chart.coords()[(size_t)idx[i]];
            }
        }
    }
    return os.str();
}

// --- calculus ----------------------------------------------------------------

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    require_same_chart(x.chart, y.chart, "lie_bracket");
    VectorField r = VectorField::zero(x.chart);
    for (int i = 0; i < x.chart.dim(); ++i) {
        RationalExpr acc(x.chart.nsyms(), Rat(0));
        for (int j = 0; j < x.chart.dim(); ++j) {
            if (!x.coeffs[(size_t)j].is_zero())
                acc = acc + x.coeffs[(size_t)j] * y.coeffs[(size_t)i].derivative(j);
            if (!y.coeffs[(size_t)j].is_zero())
                acc = acc - y.coeffs[(size_t)j] * x.coeffs[(size_t)i].derivative(j);
        }
        r.coeffs[(size_t)i] = acc;
    }
    return r;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    require_same_chart(a.chart, b.chart, "wedge");
    DiffForm r(a.chart, a.degree + b.degree);
    if (r.degree > a.chart.dim()) return r;  // vanishes identically
    for (const auto& [ia, ca] : a.terms) {
        for (const auto& [ib, cb] : b.terms) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    }
    return r;
}

DiffForm exterior_d(const DiffForm& w) {
    DiffForm r(w.chart, w.degree + 1);
    for (const auto& [idx, c] : w.terms) {
        for (int j = 0; j < w.chart.dim(); ++j) {
            RationalExpr dj = c.derivative(j);
            if (dj.is_zero()) continue;
            std::vector<int> nidx;
            nidx.push_back(j);
            nidx.insert(nidx.end(), idx.begin(), idx.end());
            r.add_term(std::move(nidx), dj);
        }
    }
    return r;
}

DiffForm interior(const VectorField& x, const DiffForm& w) {
    require_same_chart(x.chart, w.chart, "interior product");
    if (w.degree == 0) input_error("interior product of a 0-form");
    DiffForm r(w.chart, w.degree - 1);
    for (const auto& [idx, c] : w.terms) {
        for (size_t a = 0; a < idx.size(); ++a) {
            const RationalExpr& comp = x.coeffs[(size_t)idx[a]];
            if (comp.is_zero()) continue;
            std::vector<int> rest;
            rest.reserve(idx.size() - 1);
            for (size_t b = 0; b < idx.size(); ++b)
                if (b != a) rest.push_back(idx[b]);
            RationalExpr term = c * comp;
            if (a % 2 == 1) term = -term;
            r.add_term(std::move(rest), term);
        }
    }
    return r;
}

DiffForm lie_derivative(const VectorField& x, const DiffForm& w) {
    // Cartan: L_X = i_X d + d i_X
    DiffForm a = interior(x, exterior_d(w));
    if (w.degree == 0) return a;
    return a + exterior_d(interior(x, w));
}

VectorField lie_derivative(const VectorField& x, const VectorField& y) {
    return lie_bracket(x, y);
}

CovTensor lie_derivative(const VectorField& x, const CovTensor& t) {
    require_same_chart(x.chart, t.chart, "lie_derivative");
    CovTensor r(t.chart, t.rank);
    for (const auto& [idx, c] : t.terms) {
        r.add_term(idx, x.apply(c));
        for (int a = 0; a < t.rank; ++a) {
            const RationalExpr& comp = x.coeffs[(size_t)idx[(size_t)a]];
            for (int k = 0; k < t.chart.dim(); ++k) {
                RationalExpr w = comp.derivative(k);
                if (w.is_zero()) continue;
                std::vector<int> nidx = idx;
                nidx[(size_t)a] = k;
                r.add_term(nidx, c * w);
            }
        }
    }
    return r;
}

CovTensor as_tensor(const DiffForm& w) {
    CovTensor t(w.chart, w.degree);
    for (const auto& [idx, c] : w.terms) {
        std::vector<int> p((size_t)w.degree);
        for (size_t i = 0; i < p.size(); ++i) p[i] = (int)i;
        do {
            std::vector<int> nidx((size_t)w.degree);
            for (size_t i = 0; i < p.size(); ++i) nidx[i] = idx[(size_t)p[i]];
            t.add_term(nidx, perm_sign(p) > 0 ? c : -c);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return t;
}

CovTensor tensor_product(const CovTensor& a, const CovTensor& b) {
    require_same_chart(a.chart, b.chart, "tensor_product");
    CovTensor r(a.chart, a.rank + b.rank);
    for (const auto& [ia, ca] : a.terms) {
        for (const auto& [ib, cb] : b.terms) {
            RationalExpr c = ca * cb;
            if (c.is_zero()) continue;
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(idx, c);
        }
    }
    return r;
}

CovTensor contract_first(const VectorField& y, const CovTensor& t) {
    require_same_chart(y.chart, t.chart, "contract_first");
    if (t.rank == 0) input_error("contract_first on rank-0 tensor");
    CovTensor r(t.chart, t.rank - 1);
    for (const auto& [idx, c] : t.terms) {
        const RationalExpr& comp = y.coeffs[(size_t)idx[0]];
        if (comp.is_zero()) continue;
        std::vector<int> rest(idx.begin() + 1, idx.end());
        r.add_term(rest, c * comp);
    }
    return r;
}

CovTensor contract_chain(const CovTensor& t, const std::vector<VectorField>& fields) {
    if ((int)fields.size() > t.rank) input_error("contraction chain longer than tensor rank");
    CovTensor r = t;
    for (const auto& y : fields) r = contract_first(y, r);
    return r;
}

// --- products ------------------------------------------------------------------

namespace {

// index remap for slot placement: coordinate i -> (slot-1)*dim + i, parameters
// follow the m*dim coordinate block
std::vector<int> slot_map(const Chart& base, int m, int slot) {
    std::vector<int> map((size_t)base.nsyms());
    for (int i = 0; i < base.dim(); ++i) map[(size_t)i] = (slot - 1) * base.dim() + i;
    for (int i = base.dim(); i < base.nsyms(); ++i)
        map[(size_t)i] = m * base.dim() + (i - base.dim());
    return map;
}

void check_slot(int m, int slot) {
    if (slot < 1 || slot > m) input_error("invalid product slot");
}

} // namespace

VectorField to_slot(const VectorField& x, int m, int slot) {
    check_slot(m, slot);
    Chart pc = x.chart.product(m);
    auto map = slot_map(x.chart, m, slot);
    VectorField r = VectorField::zero(pc);
    for (int i = 0; i < x.chart.dim(); ++i)
        r.coeffs[(size_t)map[(size_t)i]] = x.coeffs[(size_t)i].remap(pc.nsyms(), map);
    return r;
}

DiffForm to_slot(const DiffForm& w, int m, int slot) {
    check_slot(m, slot);
    Chart pc = w.chart.product(m);
    auto map = slot_map(w.chart, m, slot);
    DiffForm r(pc, w.degree);
    for (const auto& [idx, c] : w.terms) {
        std::vector<int> nidx;
        nidx.reserve(idx.size());
        for (int i : idx) nidx.push_back(map[(size_t)i]);
        r.add_term(std::move(nidx), c.remap(pc.nsyms(), map));
    }
    return r;
}

CovTensor to_slot(const CovTensor& t, int m, int slot) {
    check_slot(m, slot);
    Chart pc = t.chart.product(m);
    auto map = slot_map(t.chart, m, slot);
    CovTensor r(pc, t.rank);
    for (const auto& [idx, c] : t.terms) {
        std::vector<int> nidx;
        nidx.reserve(idx.size());
        for (int i : idx) nidx.push_back(map[(size_t)i]);
        r.add_term(nidx, c.remap(pc.nsyms(), map));
    }
    return r;
}

VectorField diagonal_prolong(const VectorField& x, int m) {
    VectorField r = to_slot(x, m, 1);
    for (int s = 2; s <= m; ++s) r = r + to_slot(x, m, s);
    return r;
}

DiffForm diagonal_prolong(const DiffForm& w, int m) {
    DiffForm r = to_slot(w, m, 1);
    for (int s = 2; s <= m; ++s) r = r + to_slot(w, m, s);
    return r;
}

CovTensor diagonal_prolong(const CovTensor& t, int m) {
    CovTensor r = to_slot(t, m, 1);
    for (int s = 2; s <= m; ++s) r = r + to_slot(t, m, s);
    return r;
}

} // namespace mls
