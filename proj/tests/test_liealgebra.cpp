#include <doctest.h>

#include <random>

#include "mls/liealgebra.hpp"
#include "mls/parser.hpp"

using namespace mls;

namespace {

VectorField VF(const Chart& c, std::vector<std::string> comps) {
    std::vector<RationalExpr> v;
    for (const auto& s : comps) v.push_back(parse_expr(s, c));
    return VectorField(c, std::move(v));
}

struct Schwarz {
    Chart c = Chart({"x", "v", "a"});
    VectorField X1 = VF(c, {"0", "0", "2*v"});
    VectorField X2 = VF(c, {"0", "v", "2*a"});
    VectorField X3 = VF(c, {"v", "a", "3*a^2/(2*v)"});
};

struct Control {
    Chart c = Chart({"x1", "x2", "x3", "x4", "x5"});
    VectorField X1 = VF(c, {"1", "0", "0", "0", "0"});
    VectorField X2 = VF(c, {"0", "1", "x1", "x1^2", "2*x1*x2"});
    VectorField X3 = VF(c, {"0", "0", "1", "2*x1", "2*x2"});
    VectorField X4 = VF(c, {"0", "0", "0", "1", "0"});
    VectorField X5 = VF(c, {"0", "0", "0", "0", "1"});
};

} // namespace

TEST_CASE("Schwarz closure and structure constants") {
    Schwarz s;
    VgLieAlgebra alg = close_and_extract({s.X1, s.X2, s.X3}, 6);
    CHECK(alg.dim() == 3);
    CHECK(alg.sc.c(0, 1, 0) == 1);   // [X1,X2]=X1
    CHECK(alg.sc.c(0, 2, 1) == 2);   // [X1,X3]=2X2
    CHECK(alg.sc.c(1, 2, 2) == 1);   // [X2,X3]=X3
    CHECK(alg.sc.c(0, 1, 1) == 0);
    CHECK(alg.sc.c(0, 1, 2) == 0);
    CHECK(alg.sc.c(0, 2, 0) == 0);
    CHECK(alg.sc.c(0, 2, 2) == 0);
    CHECK(alg.sc.c(1, 2, 0) == 0);
    CHECK(alg.sc.c(1, 2, 1) == 0);
}

TEST_CASE("control system closure") {
    Control ct;
    VgLieAlgebra alg = close_and_extract({ct.X1, ct.X2, ct.X3, ct.X4, ct.X5}, 8);
    CHECK(alg.dim() == 5);
    auto entries = alg.sc.entries();
    CHECK(entries.size() == 3);
    CHECK(alg.sc.c(0, 1, 2) == 1);  // [X1,X2]=X3
    CHECK(alg.sc.c(0, 2, 3) == 2);  // [X1,X3]=2X4
    CHECK(alg.sc.c(1, 2, 4) == 2);  // [X2,X3]=2X5
    // closure from the two generating fields alone reaches dim 5
    VgLieAlgebra gen = close_and_extract({ct.X1, ct.X2}, 8);
    CHECK(gen.dim() == 5);
}

TEST_CASE("single field gives an abelian line") {
    Chart c({"x", "y"});
    VgLieAlgebra alg = close_and_extract({VF(c, {"1", "0"})}, 3);
    CHECK(alg.dim() == 1);
    CHECK(alg.sc.entries().empty());
}

TEST_CASE("closure dimension bound") {
    // sl2 on the line needs dim 3; bound 2 must fail
    Chart c({"x"});
    CHECK_THROWS_AS(close_and_extract({VF(c, {"1"}), VF(c, {"x^2"})}, 2), error);
    VgLieAlgebra alg = close_and_extract({VF(c, {"1"}), VF(c, {"x^2"})}, 3);
    CHECK(alg.dim() == 3);
}

TEST_CASE("unimodularity traces") {
    Schwarz s;
    VgLieAlgebra alg = close_and_extract({s.X1, s.X2, s.X3}, 6);
    CHECK(alg.sc.is_unimodular());
    for (const Rat& t : alg.sc.traces()) CHECK(t == 0);

    Control ct;
    VgLieAlgebra calg = close_and_extract({ct.X1, ct.X2, ct.X3, ct.X4, ct.X5}, 8);
    CHECK(calg.sc.is_unimodular());

    // affine algebra [e1,e2]=e2 is not unimodular
    StructureConstants aff(2, {{{0, 1, 1}, Rat(1)}});
    CHECK(!aff.is_unimodular());
    CHECK(aff.trace_ad(0) == 1);
    CHECK(aff.trace_ad(1) == 0);
}

TEST_CASE("structure constants reject Jacobi violations") {
    // random perturbations of sl2 constants
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> pos(0, 2);
    std::uniform_int_distribution<int> delta(1, 3);
    int rejected = 0, total = 0;
    for (int iter = 0; iter < 40; ++iter) {
        std::map<std::tuple<int, int, int>, Rat> e = {
            {{0, 1, 0}, Rat(1)}, {{0, 2, 1}, Rat(2)}, {{1, 2, 2}, Rat(1)}};
        e[{pos(rng), 1 + pos(rng) % 2, pos(rng)}] += Rat(delta(rng));
        bool jacobi_ok = true;
        try {
            StructureConstants sc(3, e);
        } catch (const error&) {
            jacobi_ok = false;
        }
        ++total;
        if (!jacobi_ok) ++rejected;
    }
    CHECK(rejected > total / 2);  // most random perturbations break Jacobi
}

TEST_CASE("locally automorphic witnesses") {
    Schwarz s;
    VgLieAlgebra alg = close_and_extract({s.X1, s.X2, s.X3}, 6);
    auto w = is_locally_automorphic(alg);
    CHECK(w.locally_automorphic);
    CHECK(w.frame_determinant == parse_expr("-2*v^3", s.c));

    // Riccati frame: det = -v^3 over (u,v,w)
    Chart rc({"u", "v", "w"});
    VgLieAlgebra ralg = close_and_extract({VF(rc, {"4*u^2", "4*u*v", "v^2"}),
                                           VF(rc, {"2*u", "v", "0"}),
                                           VF(rc, {"1", "0", "0"})},
                                          6);
    auto rw = is_locally_automorphic(ralg);
    CHECK(rw.locally_automorphic);
    CHECK(rw.frame_determinant == parse_expr("-v^3", rc));

    // abelian line on the plane: dimension mismatch
    Chart p2({"x", "y"});
    VgLieAlgebra ab = close_and_extract({VF(p2, {"1", "0"})}, 2);
    CHECK(!is_locally_automorphic(ab).locally_automorphic);
}

TEST_CASE("symmetries of the control system span Eq. SymCS") {
    Control ct;
    VgLieAlgebra alg = close_and_extract({ct.X1, ct.X2, ct.X3, ct.X4, ct.X5}, 8);
    auto sym = solve_symmetries(alg, 2);
    CHECK(sym.size() == 5);
    std::vector<VectorField> printed = {
        VF(ct.c, {"1", "0", "x2", "2*x3", "x2^2"}),
        VF(ct.c, {"0", "1", "0", "0", "2*x3"}),
        VF(ct.c, {"0", "0", "1", "0", "0"}),
        VF(ct.c, {"0", "0", "0", "1", "0"}),
        VF(ct.c, {"0", "0", "0", "0", "1"}),
    };
    CHECK(same_span(sym, printed));
    for (const auto& y : printed)
        for (const auto& x : alg.basis) CHECK(lie_bracket(x, y).is_zero());
    // -Y_i generates the same structure constants as X_i
    std::vector<VectorField> negs;
    for (const auto& y : printed) negs.push_back(VectorField::zero(ct.c) - y);
    VgLieAlgebra nalg = algebra_from_basis(negs);
    QMatrix id(5, QVector(5, Rat(0)));
    for (int i = 0; i < 5; ++i) id[(size_t)i][(size_t)i] = 1;
    CHECK(verify_isomorphic_sc(alg.sc, nalg.sc, id));
}

TEST_CASE("symmetries of the Schwarz system span Eq. SymSc2") {
    Schwarz s;
    VgLieAlgebra alg = close_and_extract({s.X1, s.X2, s.X3}, 6);
    auto sym = solve_symmetries(alg, 2);
    CHECK(sym.size() == 3);
    std::vector<VectorField> printed = {
        VF(s.c, {"1", "0", "0"}),
        VF(s.c, {"x", "v", "a"}),
        VF(s.c, {"x^2", "2*v*x", "2*(a*x + v^2)"}),
    };
    CHECK(same_span(sym, printed));
    for (const auto& y : sym)
        for (const auto& x : alg.basis) CHECK(lie_bracket(x, y).is_zero());
}

TEST_CASE("abelian translation symmetry in degree 0") {
    Chart c({"x"});
    VgLieAlgebra alg = close_and_extract({VF(c, {"1"})}, 2);
    auto sym = solve_symmetries(alg, 0);
    REQUIRE(sym.size() == 1);
    CHECK(sym[0] == VF(c, {"1"}));
}

TEST_CASE("isomorphism verification") {
    StructureConstants sl2(3, {{{0, 1, 0}, Rat(1)}, {{0, 2, 1}, Rat(2)}, {{1, 2, 2}, Rat(1)}});
    QMatrix id(3, QVector(3, Rat(0)));
    for (int i = 0; i < 3; ++i) id[(size_t)i][(size_t)i] = 1;
    CHECK(verify_isomorphic_sc(sl2, sl2, id));
    StructureConstants ab3(3, {});
    CHECK(!verify_isomorphic_sc(sl2, ab3, id));
    QMatrix sing(3, QVector(3, Rat(0)));
    CHECK(!verify_isomorphic_sc(sl2, sl2, sing));
}
