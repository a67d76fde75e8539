#ifndef MLS_POLYNOMIAL_HPP
#define MLS_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "mls/error.hpp"

namespace mls {

using Rat = mpq_class;
using Int = mpz_class;

// Exponent vector; size equals the ambient variable count.
using Mono = std::vector<unsigned>;

inline unsigned mono_degree(const Mono& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

// Graded lexicographic order: first by total degree, ties by exponent vector
// (earlier variables weigh more). Map iteration then goes from smallest to
// largest; the leading term sits at rbegin().
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial over Q with a fixed variable count.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    Polynomial(int nvars, const Rat& c);                 // constant
    static Polynomial variable(int nvars, int idx);      // x_idx

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;                          // requires is_constant()
    int degree() const;                                  // total degree, -1 for zero
    int degree_in(int var) const;
    bool depends_on(int var) const;

    const std::map<Mono, Rat, GrlexLess>& terms() const { return terms_; }
    void set_coeff(const Mono& m, const Rat& c);
    Rat leading_coeff() const;                           // grlex-leading, 0 for zero poly
    Mono leading_mono() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(const Rat& c) const;
    Polynomial pow(unsigned k) const;
    Polynomial derivative(int var) const;
    Rat eval(const std::vector<Rat>& point) const;
    double eval_double(const std::vector<double>& point) const;

    // Renames/permutes variables into a wider ambient space: new exponent of
    // slot map[i] is the old exponent of i. Target size must cover all images.
    Polynomial remap(int new_nvars, const std::vector<int>& map) const;

    // Integer-content normalization used by gcd and RationalExpr.
    Rat rational_content() const;        // gcd(numerators)/lcm(denominators), > 0; 0 for zero
    Polynomial primitive_part() const;   // integer coefficients, content 1, positive leading

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<Mono, Rat, GrlexLess> terms_;
};

// gcd of multivariate polynomials over Q, returned as a primitive
// integer-coefficient polynomial with positive leading coefficient.
// gcd(0,0) = 0; gcd(c, ...) = 1 for nonzero constants c.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Exact division: returns q with a == b*q; throws if the division is not exact.
Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b);

} // namespace mls

#endif
