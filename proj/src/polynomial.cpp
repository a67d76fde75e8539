#include "mls/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace mls {

Polynomial::Polynomial(int nvars, const Rat& c) : nvars_(nvars) {
    if (c != 0) terms_[Mono(nvars, 0)] = c;
}

Polynomial Polynomial::variable(int nvars, int idx) {
    Polynomial p(nvars);
    Mono m(nvars, 0);
    m[idx] = 1;
    p.terms_[m] = 1;
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0;
}

Rat Polynomial::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_.begin()->second;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return (int)mono_degree(terms_.rbegin()->first);
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, (int)m[var]);
    if (terms_.empty()) return -1;
    return d;
}

bool Polynomial::depends_on(int var) const {
    for (const auto& [m, c] : terms_)
        if (m[var] > 0) return true;
    return false;
}

void Polynomial::set_coeff(const Mono& m, const Rat& c) {
    if (c == 0)
        terms_.erase(m);
    else
        terms_[m] = c;
}

Rat Polynomial::leading_coeff() const {
    if (terms_.empty()) return Rat(0);
    return terms_.rbegin()->second;
}

Mono Polynomial::leading_mono() const {
    if (terms_.empty()) return Mono(nvars_, 0);
    return terms_.rbegin()->first;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    Mono m(nvars_, 0);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                Rat prod = ca * cb;
                if (prod != 0) r.terms_.emplace(m, std::move(prod));
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r(nvars_, Rat(1));
    Polynomial base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d = m;
        d[var] -= 1;
        r.terms_[d] = c * (int)m[var];
    }
    return r;
}

Rat Polynomial::eval(const std::vector<Rat>& point) const {
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i) {
            for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

double Polynomial::eval_double(const std::vector<double>& point) const {
    double acc = 0;
    for (const auto& [m, c] : terms_) {
        double t = c.get_d();
        for (int i = 0; i < nvars_; ++i) {
            for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::remap(int new_nvars, const std::vector<int>& map) const {
    Polynomial r(new_nvars);
    for (const auto& [m, c] : terms_) {
        Mono nm(new_nvars, 0);
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            nm[map[i]] += m[i];
        }
        r.terms_[nm] += c;
        if (r.terms_[nm] == 0) r.terms_.erase(nm);
    }
    return r;
}

Rat Polynomial::rational_content() const {
    if (terms_.empty()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rat r(num_gcd, den_lcm);
    r.canonicalize();
    if (r < 0) r = -r;
    return r;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Rat c = rational_content();
    Polynomial p = scaled(1 / c);
    if (p.leading_coeff() < 0) p = -p;
    return p;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Mono& m = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool has_var = mono_degree(m) > 0;
        if (!has_var || c != 1) {
            os << c.get_str();
            if (has_var) os << "*";
        }
        bool firstv = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << names[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd via content extraction + subresultant PRS
// ---------------------------------------------------------------------------

namespace {

int first_present_var(const Polynomial& a, const Polynomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.depends_on(i) || b.depends_on(i)) return i;
    return -1;
}

// coefficients of p viewed as univariate in `var`: index d -> coefficient
// polynomial (with var-exponent zeroed out)
std::vector<Polynomial> collect(const Polynomial& p, int var) {
    int d = std::max(0, p.degree_in(var));
    std::vector<Polynomial> out((size_t)d + 1, Polynomial(p.nvars()));
    for (const auto& [m, c] : p.terms()) {
        Mono r = m;
        unsigned k = r[var];
        r[var] = 0;
        out[k].set_coeff(r, c);
    }
    return out;
}

Polynomial assemble(const std::vector<Polynomial>& coeffs, int var, int nvars) {
    Polynomial p(nvars);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        Polynomial xk = Polynomial::variable(nvars, var).pow((unsigned)k);
        p += coeffs[k] * xk;
    }
    return p;
}

Polynomial content_in(const Polynomial& p, int var) {
    auto cs = collect(p, var);
    Polynomial g(p.nvars());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
    }
    return g;
}

// pseudo-remainder of a by b w.r.t. var: lc(b)^(da-db+1) * a = q*b + r
Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, int var) {
    int db = b.degree_in(var);
    auto bc = collect(b, var);
    Polynomial lb = bc[(size_t)db];
    Polynomial r = a;
    int da = r.degree_in(var);
    int steps = da - db + 1;
    while (!r.is_zero() && (da = r.degree_in(var)) >= db) {
        auto rc = collect(r, var);
        Polynomial lr = rc[(size_t)da];
        Polynomial shift = Polynomial::variable(a.nvars(), var).pow((unsigned)(da - db));
        r = r * lb - b * (lr * shift);
        --steps;
    }
    // normalize the pseudo-factor so the result matches lc(b)^(da0-db+1)*a mod b
    for (; steps > 0; --steps) r = r * lb;
    return r;
}

} // namespace

Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) math_error("polynomial division by zero");
    Polynomial r = a;
    Polynomial q(a.nvars());
    const Mono lb = b.leading_mono();
    const Rat lbc = b.leading_coeff();
    while (!r.is_zero()) {
        const Mono lm = r.leading_mono();
        Mono d(a.nvars(), 0);
        for (int i = 0; i < a.nvars(); ++i) {
            if (lm[i] < lb[i]) math_error("polynomial division is not exact");
            d[i] = lm[i] - lb[i];
        }
        Polynomial t(a.nvars());
        t.set_coeff(d, r.leading_coeff() / lbc);
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial poly_gcd(const Polynomial& a0, const Polynomial& b0) {
    if (a0.is_zero() && b0.is_zero()) return a0;
    if (a0.is_zero()) return b0.primitive_part();
    if (b0.is_zero()) return a0.primitive_part();
    if (a0.is_constant() || b0.is_constant()) return Polynomial(a0.nvars(), Rat(1));

    int var = first_present_var(a0, b0);
    Polynomial a = a0.primitive_part(), b = b0.primitive_part();
    if (!a.depends_on(var) || !b.depends_on(var)) {
        // var appears in only one of them: gcd divides that one's content too
        Polynomial ca = a.depends_on(var) ? content_in(a, var) : a;
        Polynomial cb = b.depends_on(var) ? content_in(b, var) : b;
        return poly_gcd(ca, cb);
    }

    Polynomial ca = content_in(a, var), cb = content_in(b, var);
    Polynomial cont_gcd = poly_gcd(ca, cb);
    Polynomial pa = poly_exact_div(a, ca), pb = poly_exact_div(b, cb);

    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);

    // subresultant PRS on the primitive parts
    Polynomial g(a.nvars(), Rat(1)), h(a.nvars(), Rat(1));
    while (true) {
        int delta = pa.degree_in(var) - pb.degree_in(var);
        Polynomial r = pseudo_rem(pa, pb, var);
        if (r.is_zero()) break;
        if (!r.depends_on(var)) {
            // nonzero remainder free of var: the primitive parts are coprime
            return cont_gcd;
        }
        Polynomial divisor = g * h.pow((unsigned)delta);
        pa = pb;
        pb = poly_exact_div(r, divisor);
        g = collect(pa, var)[(size_t)pa.degree_in(var)];
        if (delta >= 1) {
            Polynomial gd = g.pow((unsigned)delta);
            h = (delta == 1) ? gd : poly_exact_div(gd, h.pow((unsigned)(delta - 1)));
        }
    }
    Polynomial pp = poly_exact_div(pb, content_in(pb, var));
    return (cont_gcd * pp).primitive_part();
}

} // namespace mls
