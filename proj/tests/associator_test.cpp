#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>

#include "hopfforge/associator.hpp"
#include "hopfforge/infbraid.hpp"
#include "support/hand_hexagon.hpp"

using hopfforge::Rational;
using namespace hopfforge::associator;

using oracle::hand_c2;

TEST(Associator, HandExpansionOracle)
{
    Rational c = hand_c2();
    EXPECT_EQ(c, Rational(1, 24));
    auto phi = solve(2);
    EXPECT_EQ(phi.degree(1), (std::vector<Rational>{0, 0}));
    EXPECT_EQ(phi.degree(2), (std::vector<Rational>{c}));
}

TEST(Associator, GoldenLowDegrees)
{
    SolveTrace trace;
    auto phi = solve(4, {}, &trace);
    EXPECT_EQ(phi.degree(3), (std::vector<Rational>{0, 0}));
    EXPECT_EQ(phi.degree(4), (std::vector<Rational>{Rational(-1, 1440), Rational(1, 5760), Rational(-1, 1440)}));
    EXPECT_EQ(trace.free_parameters.at(2), 0);
    EXPECT_EQ(trace.free_parameters.at(3), 1);
    EXPECT_EQ(trace.free_parameters.at(4), 0);
}

TEST(Associator, VerifyPasses)
{
    auto phi = solve(4);
    auto rep = verify(phi, 4);
    EXPECT_TRUE(rep.passed()) << rep;
    EXPECT_EQ(rep.entries().size(), 16u);
}

TEST(Associator, TrivialCoefficients)
{
    EXPECT_TRUE(verify(trivial(1), 1).passed());
    auto rep = verify(trivial(2), 2);
    EXPECT_FALSE(rep.passed());
    for (const auto& f : rep.failures())
        EXPECT_EQ(f.name, "hexagon degree 2");
}

TEST(Associator, PerturbedDegreeTwoFails)
{
    auto phi = solve(4);
    phi.log_phi.by_degree[2][0] += Rational(1);
    auto series = phi.phi(4);
    auto pent = hopfforge::infbraid::check_pentagon(series, 4);
    EXPECT_FALSE(pent.passed);
    EXPECT_LE(pent.first_failing_degree, 4);
    EXPECT_FALSE(hopfforge::infbraid::check_hexagon(series, 4).passed);
}

TEST(Associator, DeterministicAndDegreeStable)
{
    auto a = solve(4), b = solve(4);
    EXPECT_EQ(serialize(a), serialize(b));
    auto low = solve(3);
    for (int d = 1; d <= 3; ++d)
        EXPECT_EQ(low.degree(d), a.degree(d));
}

TEST(Associator, RowOrderIndependent)
{
    std::vector<Relation> order{Relation::duality, Relation::hexagon, Relation::pentagon};
    auto reference = solve(4);
    std::sort(order.begin(), order.end());
    do {
        SolveOptions opt;
        opt.order = order;
        EXPECT_EQ(solve(4, opt), reference);
    } while (std::next_permutation(order.begin(), order.end()));
}

TEST(Associator, FreeParameterFamily)
{
    SolveOptions opt;
    opt.free_parameters[3] = {Rational(1)};
    auto phi = solve(4, opt);
    EXPECT_NE(phi.degree(3), solve(3).degree(3));
    EXPECT_EQ(phi.degree(2), (std::vector<Rational>{Rational(1, 24)}));
    EXPECT_TRUE(verify(phi, 4).passed());
    opt.free_parameters[3] = {Rational(1), Rational(2)};
    EXPECT_THROW(solve(4, opt), std::invalid_argument);
}

TEST(Associator, DegreeCap)
{
    EXPECT_THROW(solve(6), std::invalid_argument);
    EXPECT_THROW(solve(0), std::invalid_argument);
}

TEST(AssociatorFile, RoundTrip)
{
    auto phi = solve(4);
    std::string text = serialize(phi);
    auto back = parse(text);
    EXPECT_EQ(back, phi);
    EXPECT_EQ(serialize(back), text);
    EXPECT_EQ(hash(back), hash(phi));
    EXPECT_NE(hash(phi), hash(trivial(4)));
}

TEST(AssociatorFile, DegreeTwoHasOneEntry)
{
    auto j = to_json(solve(2));
    int nonzero = 0;
    for (const auto& block : j["coefficients"])
        for (const auto& e : block["entries"])
            if (e["num"] != 0)
                ++nonzero;
    EXPECT_EQ(nonzero, 1);
}

TEST(AssociatorFile, LargeIntegersAsStrings)
{
    auto phi = trivial(2);
    phi.log_phi.by_degree[2][0] = Rational::parse("123456789012345678901234567890/7");
    auto j = to_json(phi);
    EXPECT_TRUE(j["coefficients"][1]["entries"][0]["num"].is_string());
    EXPECT_EQ(from_json(j), phi);
}

TEST(AssociatorFile, Malformed)
{
    EXPECT_THROW(parse("{}"), hopfforge::FormatError);
    EXPECT_THROW(parse("not json"), hopfforge::FormatError);
    auto j = to_json(trivial(2));
    j["basis"] = "hall";
    EXPECT_THROW(from_json(j), hopfforge::FormatError);
    j = to_json(trivial(2));
    j["coefficients"][1]["entries"][0]["word"] = "[y,x]";
    EXPECT_THROW(from_json(j), hopfforge::FormatError);
    j = to_json(trivial(2));
    j["coefficients"][0]["entries"][0]["num"] = 1;
    EXPECT_THROW(from_json(j), hopfforge::FormatError);
    j = to_json(trivial(2));
    j["coefficients"][1]["entries"][0]["den"] = 0;
    EXPECT_THROW(from_json(j), hopfforge::FormatError);
}
