#include "mls/ratexpr.hpp"

#include <sstream>

namespace mls {

Chart::Chart(std::vector<std::string> coords, std::vector<std::string> params)
    : coords_(std::move(coords)), params_(std::move(params)) {
    for (size_t i = 0; i < coords_.size() + params_.size(); ++i) {
        const std::string& a = sym_name((int)i);
        for (size_t j = i + 1; j < coords_.size() + params_.size(); ++j) {
            if (a == sym_name((int)j)) input_error("duplicate chart symbol: " + a);
        }
    }
}

const std::string& Chart::sym_name(int i) const {
    if (i < (int)coords_.size()) return coords_[(size_t)i];
    return params_[(size_t)i - coords_.size()];
}

int Chart::index_of(const std::string& name) const {
    for (size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] == name) return (int)i;
    for (size_t i = 0; i < params_.size(); ++i)
        if (params_[i] == name) return (int)(coords_.size() + i);
    return -1;
}

void Chart::add_constraint(const RationalExpr& nonzero) {
    if (nonzero.is_zero()) input_error("chart constraint must be a nonzero expression");
    constraints_->push_back(nonzero);
}

const std::vector<RationalExpr>& Chart::constraints() const { return *constraints_; }

Chart Chart::product(int m) const {
    if (m < 1) input_error("product chart needs m >= 1");
    std::vector<std::string> names;
    for (int s = 1; s <= m; ++s) {
        for (const auto& c : coords_) {
            std::string n = c + "_" + std::to_string(s);
            if (index_of(n) >= 0) input_error("product coordinate name collides: " + n);
            names.push_back(n);
        }
    }
    Chart out(names, params_);
    // each slot inherits the base-chart constraints
    int base = nsyms();
    for (int s = 0; s < m; ++s) {
        std::vector<int> map((size_t)base);
        for (int i = 0; i < dim(); ++i) map[(size_t)i] = s * dim() + i;
        for (int i = dim(); i < base; ++i) map[(size_t)i] = m * dim() + (i - dim());
        for (const auto& c : constraints())
            out.add_constraint(c.remap(out.nsyms(), map));
    }
    return out;
}

RationalExpr::RationalExpr(int nsyms, const Rat& c)
    : num_(nsyms, c), den_(nsyms, Rat(1)) {}

RationalExpr::RationalExpr(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RationalExpr RationalExpr::variable(int nsyms, int idx) {
    return RationalExpr(Polynomial::variable(nsyms, idx), Polynomial(nsyms, Rat(1)));
}

void RationalExpr::normalize() {
    if (den_.is_zero()) math_error("division by the zero polynomial");
    if (num_.is_zero()) {
        num_ = Polynomial(num_.nvars());
        den_ = Polynomial(num_.nvars(), Rat(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = poly_exact_div(num_, g);
        den_ = poly_exact_div(den_, g);
    }
    // scale so both are integer polynomials with coprime contents and the
    // denominator has a positive leading coefficient
    Rat cn = num_.rational_content(), cd = den_.rational_content();
    Rat scale = cn / cd;  // num = cn*ppn, den = cd*ppd -> (cn/cd)*ppn/ppd
    bool num_neg = num_.leading_coeff() < 0;
    bool den_neg = den_.leading_coeff() < 0;
    num_ = num_.primitive_part();
    den_ = den_.primitive_part();
    if (num_neg != den_neg) scale = -scale;
    num_ = num_.scaled(scale.get_num());
    den_ = den_.scaled(scale.get_den());
}

RationalExpr RationalExpr::operator-() const {
    RationalExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalExpr RationalExpr::operator+(const RationalExpr& o) const {
    return RationalExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::operator-(const RationalExpr& o) const {
    return RationalExpr(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::operator*(const RationalExpr& o) const {
    return RationalExpr(num_ * o.num_, den_ * o.den_);
}

RationalExpr RationalExpr::operator/(const RationalExpr& o) const {
    if (o.is_zero()) math_error("division by zero expression");
    return RationalExpr(num_ * o.den_, den_ * o.num_);
}

RationalExpr RationalExpr::pow(int k) const {
    if (k == 0) return RationalExpr(nsyms(), Rat(1));
    if (k < 0) {
        if (is_zero()) math_error("negative power of zero");
        return RationalExpr(den_.pow((unsigned)(-k)), num_.pow((unsigned)(-k)));
    }
    return RationalExpr(num_.pow((unsigned)k), den_.pow((unsigned)k));
}

RationalExpr RationalExpr::derivative(int var) const {
    // (n/d)' = (n'd - nd')/d^2
    Polynomial n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RationalExpr(n, den_ * den_);
}

Rat RationalExpr::eval(const std::vector<Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) math_error("pole: denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

double RationalExpr::eval_double(const std::vector<double>& point) const {
    double d = den_.eval_double(point);
    if (d == 0.0) numeric_error("pole: denominator vanishes at evaluation point");
    return num_.eval_double(point) / d;
}

RationalExpr RationalExpr::remap(int new_nsyms, const std::vector<int>& map) const {
    return RationalExpr(num_.remap(new_nsyms, map), den_.remap(new_nsyms, map));
}

std::string RationalExpr::str(const Chart& chart) const {
    std::vector<std::string> names;
    for (int i = 0; i < chart.nsyms(); ++i) names.push_back(chart.sym_name(i));
    return str(names);
}

std::string RationalExpr::str(const std::vector<std::string>& names) const {
    if (den_.is_constant() && den_.constant_value() == 1) return num_.str(names);
    std::ostringstream os;
    std::string ns = num_.str(names);
    if (num_.terms().size() > 1)
        os << "(" << ns << ")";
    else
        os << ns;
    os << "/";
    // denominator needs parentheses unless it is a bare power of one symbol
    bool bare = den_.terms().size() == 1 && den_.leading_coeff() == 1;
    if (bare) {
        int nz = 0;
        for (unsigned e : den_.leading_mono())
            if (e > 0) ++nz;
        bare = nz == 1;
    }
    std::string ds = den_.str(names);
    if (bare)
        os << ds;
    else
        os << "(" << ds << ")";
    return os.str();
}

} // namespace mls
