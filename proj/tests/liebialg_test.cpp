#include <gtest/gtest.h>

#include "hopfforge/liebialg.hpp"

using hopfforge::Rational;
using namespace hopfforge::liebialg;

namespace {

Matrix b2_twist(const Rational& theta)
{
    // θ (X⊗H - H⊗X)
    Matrix j = zero_matrix(2, 2);
    j[1][0] = theta;
    j[0][1] = -theta;
    return j;
}

Matrix scale_x(const Rational& lambda)
{
    Matrix f = zero_matrix(2, 2);
    f[0][0] = Rational(1);
    f[1][1] = lambda;
    return f;
}

// Image of the twisted double's basis in the original double: e_i ↦ e_i and
// e^c ↦ e^c + Σ_b j^{cb} e_b.
Matrix twist_basis_change(const Matrix& j)
{
    int n = static_cast<int>(j.size());
    Matrix phi = zero_matrix(2 * n, 2 * n);
    for (int i = 0; i < 2 * n; ++i)
        phi[i][i] = Rational(1);
    for (int c = 0; c < n; ++c)
        for (int b = 0; b < n; ++b)
            phi[b][n + c] = j[c][b];
    return phi;
}

std::vector<Rational> column(const Matrix& m, int c)
{
    std::vector<Rational> v;
    for (const auto& row : m)
        v.push_back(row[c]);
    return v;
}

} // namespace

TEST(Validate, Abelian)
{
    for (int n = 1; n <= 4; ++n)
        EXPECT_TRUE(validate(examples::abelian(n)).passed());
}

TEST(Validate, B2CocycleByHand)
{
    auto g = examples::b2();
    EXPECT_TRUE(validate(g).passed()) << validate(g);
    // δ([H,X]) = δ(X) = X⊗H - H⊗X, and H·δ(X) - X·δ(H) = [H,X]⊗H - H⊗[H,X]
    // is the same tensor; the stored constants must match it.
    EXPECT_EQ(g.cobracket[1][1][0], Rational(1));
    EXPECT_EQ(g.cobracket[1][0][1], Rational(-1));
    EXPECT_EQ(g.bracket[0][1][1], Rational(1));
}

TEST(Validate, BrokenCocycleNamesPair)
{
    // δ([E,F]) = δ(H) = 0 while E·δ(F) - F·δ(E) = -(E⊗F - F⊗E).
    auto rep = validate(examples::broken_cocycle_sl2());
    ASSERT_FALSE(rep.passed());
    auto f = rep.failures();
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].name, "cocycle");
    EXPECT_EQ(f[0].detail, "(E,F)");
}

TEST(Validate, EveryCobracketOnB2IsACocycle)
{
    // Λ²b2 is spanned by X∧H, on which X acts by 0 and H by 1, so the cocycle
    // identity δ(X) = H·δ(X) - X·δ(H) holds for any δ.
    auto g = examples::b2();
    g.set_cobracket(0, 1, 0, 1);
    EXPECT_TRUE(validate(g).passed());
}

TEST(Validate, BrokenJacobiNamesTriple)
{
    LieBialgebra g(3, {"A", "B", "C"});
    g.set_bracket(0, 1, 1, 1);
    g.set_bracket(1, 2, 0, 1);
    auto rep = validate(g);
    ASSERT_FALSE(rep.passed());
    EXPECT_EQ(rep.failures()[0].name, "Jacobi");
    EXPECT_EQ(rep.failures()[0].detail, "(A,B,C)");
}

TEST(Validate, Sl2Standard) { EXPECT_TRUE(validate(examples::sl2_standard()).passed()); }

TEST(Double, AbelianAndB2)
{
    auto d = build_double(examples::abelian(2));
    EXPECT_EQ(d.dim, 4);
    for (const auto& m : d.bracket)
        for (const auto& row : m)
            for (const auto& x : row)
                EXPECT_TRUE(x.is_zero());
    EXPECT_EQ(d.t[0][2], Rational(1));
    auto db = build_double(examples::b2());
    EXPECT_EQ(db.dim, 4);
    EXPECT_TRUE(check_double(db).passed()) << check_double(db);
    EXPECT_TRUE(check_double(build_double(examples::sl2_standard())).passed());
}

TEST(Double, MixedBracketOnB2)
{
    // [e_X, e^H] = Σ_k γ_X^{Hk} e_k - Σ_k c_{Xk}^H e^k = γ_X^{HX} e_X = -e_X.
    auto d = build_double(examples::b2());
    EXPECT_EQ(d.bracket[1][2], (std::vector<Rational>{0, -1, 0, 0}));
    // [e_H, e^X] = γ_H^{X.} (zero) - Σ_k c_{Hk}^X e^k = -e^X.
    EXPECT_EQ(d.bracket[0][3], (std::vector<Rational>{0, 0, 0, -1}));
}

TEST(Double, AsBialgebraRestrictsToG)
{
    for (const auto& g : {examples::b2(), examples::sl2_standard()}) {
        auto dg = double_as_bialgebra(g);
        EXPECT_TRUE(validate(dg).passed()) << validate(dg);
        Matrix incl = zero_matrix(dg.dim, g.dim);
        for (int i = 0; i < g.dim; ++i)
            incl[i][i] = Rational(1);
        EXPECT_TRUE(check_morphism(g, dg, incl).passed());
    }
    EXPECT_EQ(double_as_bialgebra(examples::sl2_standard()).dim, 6);
}

TEST(Twist, ZeroAndAbelian)
{
    auto g = examples::b2();
    EXPECT_TRUE(validate_twist(g, zero_matrix(2, 2)).passed());
    EXPECT_EQ(twist_cobracket(g, zero_matrix(2, 2)), g);
    auto a = examples::abelian(3);
    Matrix j = zero_matrix(3, 3);
    j[0][1] = Rational(2);
    j[1][0] = Rational(-2);
    j[1][2] = Rational(1, 3);
    j[2][1] = Rational(-1, 3);
    EXPECT_TRUE(validate_twist(a, j).passed());
    EXPECT_TRUE(twist_cobracket(a, j).cobracket_is_zero());
}

TEST(Twist, B2FamilyConsistency)
{
    auto g = examples::b2();
    int valid = 0;
    for (int num = -3; num <= 3; ++num) {
        Matrix j = b2_twist(Rational(num, 2));
        if (!validate_twist(g, j).passed()) {
            EXPECT_THROW(twist_cobracket(g, j), std::invalid_argument);
            continue;
        }
        ++valid;
        EXPECT_TRUE(validate(twist_cobracket(g, j)).passed());
    }
    EXPECT_GE(valid, 1);
}

TEST(Twist, NonAntisymmetricRejected)
{
    Matrix j = zero_matrix(2, 2);
    j[0][1] = Rational(1);
    EXPECT_FALSE(validate_twist(examples::b2(), j).passed());
}

TEST(Twist, DoubleUnchangedUpToBasisChange)
{
    auto g = examples::b2();
    for (int num = -2; num <= 2; ++num) {
        Matrix j = b2_twist(Rational(num));
        if (!validate_twist(g, j).passed())
            continue;
        auto d = build_double(g);
        auto dj = build_double(twist_cobracket(g, j));
        Matrix phi = twist_basis_change(j);
        int m = d.dim;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                std::vector<Rational> lhs(m);
                for (int k = 0; k < m; ++k)
                    for (int p = 0; p < m; ++p)
                        lhs[p] += dj.bracket[a][b][k] * phi[p][k];
                EXPECT_EQ(lhs, bracket(d.bracket, column(phi, a), column(phi, b)));
            }
        Matrix t = zero_matrix(m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int p = 0; p < m; ++p)
                    for (int q = 0; q < m; ++q)
                        t[p][q] += dj.t[a][b] * phi[p][a] * phi[q][b];
        EXPECT_EQ(t, d.t);
    }
}

TEST(Morphism, ScalingOnB2)
{
    auto g = examples::b2();
    for (int lambda : {1, 2, -1})
        EXPECT_TRUE(check_morphism(g, g, scale_x(lambda)).passed()) << lambda;
    Matrix f = scale_x(1);
    f[0][0] = Rational(2);
    EXPECT_FALSE(check_morphism(g, g, f).passed());
}

TEST(BialgebraFile, RoundTrip)
{
    for (const auto& g : {examples::b2(), examples::sl2_standard(), examples::abelian(3),
                          double_as_bialgebra(examples::sl2_standard())}) {
        std::string text = serialize(g);
        auto back = parse(text);
        EXPECT_EQ(back, g);
        EXPECT_EQ(serialize(back), text);
        EXPECT_EQ(hash(back), hash(g));
    }
    EXPECT_NE(hash(examples::b2()), hash(examples::abelian(2)));
}

TEST(BialgebraFile, AntisymmetricCompletion)
{
    auto j = hopfforge::Json::parse(R"({"format_version":1,"dim":2,"basis":["H","X"],
        "bracket":[{"i":1,"j":0,"coeffs":{"1":[-1,1]}}],
        "cobracket":[{"i":1,"coeffs":{"1,0":[1,1]}}]})");
    EXPECT_EQ(from_json(j), examples::b2());
}

TEST(BialgebraFile, Malformed)
{
    using hopfforge::FormatError;
    EXPECT_THROW(parse(""), FormatError);
    EXPECT_THROW(parse("[]"), FormatError);
    EXPECT_THROW(parse(R"({"format_version":1,"dim":2,"basis":["H"]})"), FormatError);
    EXPECT_THROW(parse(R"({"format_version":1,"dim":2,"bracket":[{"i":0,"j":5,"coeffs":{}}]})"), FormatError);
    EXPECT_THROW(parse(R"({"format_version":1,"dim":2,"bracket":[{"i":0,"j":1,"coeffs":{"1":[1,0]}}]})"), FormatError);
    EXPECT_THROW(parse(R"({"format_version":1,"dim":2,"cobracket":[{"i":0,"coeffs":{"01":[1,1]}}]})"), FormatError);
    EXPECT_THROW(parse(R"({"format_version":2,"dim":2})"), FormatError);
}

TEST(TwistFile, RoundTrip)
{
    Matrix j = b2_twist(Rational(3, 7));
    EXPECT_EQ(twist_from_json(twist_to_json(j), 2), j);
    EXPECT_THROW(twist_from_json(twist_to_json(j), 3), hopfforge::FormatError);
}
