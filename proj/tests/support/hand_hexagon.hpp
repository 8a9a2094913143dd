#pragma once

#include <map>
#include <string>

#include "hopfforge/rational.hpp"

namespace oracle {

using hopfforge::Rational;

// Independent degree-2 expansion over string words. Coefficients are pairs
// (constant part, multiple of the unknown c).
struct Lin {
    Rational k, c;
};
using Poly = std::map<std::string, Lin>;

inline Poly mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            if (wa.size() + wb.size() > 2)
                continue;
            // (k1 + c1 c)(k2 + c2 c); c^2 never survives at degree <= 2 here.
            auto& e = out[wa + wb];
            e.k += ca.k * cb.k;
            e.c += ca.k * cb.c + ca.c * cb.k;
        }
    return out;
}

inline Poly lin(Rational x, Rational y)
{
    return Poly{{"x", {x, 0}}, {"y", {y, 0}}};
}

inline Poly half_exp(const Poly& a)
{
    Poly out{{"", {1, 0}}};
    for (const auto& [w, v] : a)
        out[w].k += v.k * Rational(1, 2);
    for (const auto& [w, v] : mul(a, a))
        if (w.size() == 2)
            out[w].k += v.k * Rational(1, 8);
    return out;
}

// Φ(a, b) = 1 + c(ab - ba) truncated at degree 2.
inline Poly phi_of(const Poly& a, const Poly& b)
{
    Poly out{{"", {1, 0}}};
    for (const auto& [w, v] : mul(a, b))
        out[w].c += v.k;
    for (const auto& [w, v] : mul(b, a))
        out[w].c -= v.k;
    return out;
}

/// Degree-2 associator coefficient forced by the hexagon. Sets `slope` to the
/// coefficient of c in the xy equation; a nonzero slope means the solution is unique.
inline Rational hand_c2(Rational* slope = nullptr)
{
    Poly x = lin(1, 0), y = lin(0, 1), z = lin(-1, -1);
    Poly p = half_exp(x);
    p = mul(p, phi_of(y, x));
    p = mul(p, half_exp(y));
    p = mul(p, phi_of(z, y));
    p = mul(p, half_exp(z));
    p = mul(p, phi_of(x, z));
    // The xy coefficient must vanish: k + c * slope = 0.
    const Lin& e = p.at("xy");
    if (slope)
        *slope = e.c;
    return -e.k / e.c;
}

} // namespace oracle
