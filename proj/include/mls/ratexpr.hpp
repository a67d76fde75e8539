#ifndef MLS_RATEXPR_HPP
#define MLS_RATEXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mls/polynomial.hpp"

namespace mls {

class RationalExpr;

// A coordinate chart: ordered coordinate names, optional constant parameters
// (symbols that take part in coefficients but carry no d/dx slot), and
// nonvanishing constraints on the domain.
class Chart {
public:
    Chart() = default;
    Chart(std::vector<std::string> coords, std::vector<std::string> params = {});

    int dim() const { return (int)coords_.size(); }                 // coordinates only
    int nsyms() const { return (int)coords_.size() + (int)params_.size(); }
    const std::vector<std::string>& coords() const { return coords_; }
    const std::vector<std::string>& params() const { return params_; }
    const std::string& sym_name(int i) const;
    int index_of(const std::string& name) const;  // -1 if unknown; coords first, then params

    void add_constraint(const RationalExpr& nonzero);
    const std::vector<RationalExpr>& constraints() const;

    bool operator==(const Chart& o) const { return coords_ == o.coords_ && params_ == o.params_; }
    bool operator!=(const Chart& o) const { return !(*this == o); }

    // m suffixed copies of the coordinates (x -> x_1..x_m); parameters are shared.
    Chart product(int m) const;

private:
    std::vector<std::string> coords_;
    std::vector<std::string> params_;
    std::shared_ptr<std::vector<RationalExpr>> constraints_ =
        std::make_shared<std::vector<RationalExpr>>();
};

// Exact rational function over Q. Canonical form: integer numerator and
// denominator, fully reduced (polynomial gcd a unit, integer contents
// coprime), denominator leading coefficient positive. Structural equality
// is mathematical equality.
class RationalExpr {
public:
    RationalExpr() : num_(0), den_(0, Rat(1)) {}
    RationalExpr(int nsyms, const Rat& c);
    RationalExpr(Polynomial num, Polynomial den);  // normalizes
    static RationalExpr variable(int nsyms, int idx);

    int nsyms() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    RationalExpr operator-() const;
    RationalExpr operator+(const RationalExpr& o) const;
    RationalExpr operator-(const RationalExpr& o) const;
    RationalExpr operator*(const RationalExpr& o) const;
    RationalExpr operator/(const RationalExpr& o) const;  // throws on zero divisor
    RationalExpr pow(int k) const;                         // negative k inverts
    bool operator==(const RationalExpr& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalExpr& o) const { return !(*this == o); }

    RationalExpr derivative(int var) const;
    Rat eval(const std::vector<Rat>& point) const;         // throws on pole
    double eval_double(const std::vector<double>& point) const;
    RationalExpr remap(int new_nsyms, const std::vector<int>& map) const;

    std::string str(const Chart& chart) const;
    std::string str(const std::vector<std::string>& names) const;

private:
    void normalize();
    Polynomial num_, den_;
};

} // namespace mls

#endif
