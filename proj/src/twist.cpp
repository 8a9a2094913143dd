#include "hopfforge/quantizer.hpp"

namespace hopfforge::quantizer {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

using WordMap = std::function<const PBWElement&(const Word&)>;

PBWElement apply_map(const WordMap& f, const PBWElement& v, int order)
{
    return extend_linear<PBWElement>(v, order, f);
}

// Replaces factor `pos` of every key by f(word).
TensorElement apply_on_factor(const WordMap& f, int pos, const TensorElement& e, int order)
{
    TensorElement out(order);
    for (int p = 0; p <= std::min(order, e.order()); ++p)
        for (const auto& [key, c] : e.at(p)) {
            const PBWElement& img = f(key[z(pos)]);
            for (int q = 0; p + q <= order; ++q)
                for (const auto& [w, a] : img.at(q)) {
                    TensorKey k = key;
                    k[z(pos)] = w;
                    out.add(p + q, k, c * a);
                }
        }
    return out;
}

// Inverse of id + E with E raising the ħ-power, as a Neumann series.
PBWElement neumann_inverse(const WordMap& f, const PBWElement& v, int order)
{
    PBWElement result = v.truncated(order);
    PBWElement term = result;
    for (int k = 1; k <= order; ++k) {
        term = (apply_map(f, term, order) - term) * Rational(-1);
        if (term.is_zero())
            break;
        result += term;
    }
    return result;
}

TensorElement tensor_unit(int order, int k) { return TensorElement(order, TensorKey(z(k))); }

// J ⊗ 1 or 1 ⊗ J as a three-factor element.
TensorElement pad(const TensorElement& e, bool front)
{
    TensorElement out(e.order());
    for (int p = 0; p <= e.order(); ++p)
        for (const auto& [key, c] : e.at(p))
            out.add(p, front ? TensorKey{Word{}, key[0], key[1]} : TensorKey{key[0], key[1], Word{}}, c);
    return out;
}

TensorElement tensor_inverse(const HopfStructure& h, const TensorElement& x)
{
    int order = h.order();
    TensorElement one = tensor_unit(order, 2);
    TensorElement k = one - x;
    TensorElement result = one;
    TensorElement power = one;
    for (int i = 1; i <= order; ++i) {
        power = tensor_product(h, power, k);
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

class Bimodule {
public:
    Bimodule(const HopfStructure& h, const liebialg::Matrix& j)
        : order_(h.order()), m_(h.algebra_ptr(), h.bialgebra()), n_(h.algebra_ptr(), h.bialgebra(), &j),
          phi_(h.associator().phi(h.order())), left_(m_, m_, n_, phi_, order_), right_(m_, n_, n_, phi_, order_),
          delta_(m_, n_, phi_, order_, h.crossing()), nn_tau_(n_, n_, n_, phi_, order_),
          nn_delta_(n_, n_, phi_, order_, h.crossing())
    {
    }

    const PBWElement& left_action(const Word& a, const Word& b) const { return left_.collapse_inverse(a, b); }
    const PBWElement& right_action(const Word& b, const Word& c) const { return right_.collapse_inverse(b, c); }
    const PBWElement& lambda(const Word& a) const { return left_action(a, Word{}); }
    const PBWElement& rho(const Word& c) const { return right_action(Word{}, c); }
    const TensorElement& delta(const Word& u) const { return delta_.apply(u); }
    const PBWElement& nn_product(const Word& a, const Word& b) const { return nn_tau_.collapse_inverse(a, b); }
    const TensorElement& nn_coproduct(const Word& u) const { return nn_delta_.apply(u); }

    const PBWElement& lambda_inverse(const Word& a) const
    {
        return lambda_inv_.get(a, [&] {
            return neumann_inverse([&](const Word& w) -> const PBWElement& { return lambda(w); },
                                   PBWElement(order_, a), order_);
        });
    }
    const PBWElement& rho_inverse(const Word& c) const
    {
        return rho_inv_.get(c, [&] {
            return neumann_inverse([&](const Word& w) -> const PBWElement& { return rho(w); }, PBWElement(order_, c),
                                   order_);
        });
    }
    /// I = ρ⁻¹ ∘ λ.
    const PBWElement& twist_iso(const Word& a) const
    {
        return iso_.get(a, [&] {
            return apply_map([&](const Word& w) -> const PBWElement& { return rho_inverse(w); }, lambda(a), order_);
        });
    }

private:
    int order_;
    InducedModule m_;
    InducedModule n_;
    freeseries::AssocSeries phi_;
    TauMap left_;
    TauMap right_;
    FusionCoproduct delta_;
    TauMap nn_tau_;
    FusionCoproduct nn_delta_;
    MemoTable<Word, PBWElement, WordHash> lambda_inv_, rho_inv_, iso_;
};


template <class S>
void expect(std::string& detail, const S& a, const S& b, const std::string& where)
{
    if (!detail.empty())
        return;
    int v = (a - b).valuation();
    if (v >= 0)
        detail = where + " at h^" + std::to_string(v);
}

} // namespace

TwistResult quantize_twist(const liebialg::LieBialgebra& g, const liebialg::Matrix& j,
                           const associator::AssociatorCoeffs& phi, int order, int degree_cap,
                           const TwistOptions& options)
{
    if (!liebialg::validate_twist(g, j).passed())
        throw std::invalid_argument("twist fails validation");
    if (options.test_degree < 0 || options.test_degree + order > degree_cap)
        throw std::invalid_argument("twist test degree + N exceeds the degree cap");

    TwistResult res;
    res.j = j;
    res.H = build_hopf(g, phi, order, degree_cap);
    res.Hj = build_hopf(liebialg::twist_cobracket(g, j), phi, order, degree_cap);
    const HopfStructure& H = *res.H;
    const HopfStructure& Hj = *res.Hj;
    Bimodule B(H, j);

    // J = (λ⁻¹ ⊗ λ⁻¹)(Δ_B 1).
    WordMap lam_inv = [&](const Word& w) -> const PBWElement& { return B.lambda_inverse(w); };
    WordMap lam = [&](const Word& w) -> const PBWElement& { return B.lambda(w); };
    const TensorElement& delta1 = B.delta(Word{});
    res.J = apply_on_factor(lam_inv, 1, apply_on_factor(lam_inv, 0, delta1, order), order);
    for (const auto& a : H.monomials(degree_cap - order))
        res.I.emplace(a, B.twist_iso(a));

    auto tests = H.monomials(options.test_degree);
    Report& r = res.checks;
    const TensorElement& J = res.J;
    int n = g.dim;

    {
        TensorElement back = apply_on_factor(lam, 1, apply_on_factor(lam, 0, J, order), order);
        std::string d;
        expect(d, back, delta1, "J.(1 x 1) vs coproduct of 1");
        r.add("J solves J.(1 x 1) = D_B(1)", d.empty(), d);
    }
    {
        TensorElement lhs = tensor_product(H, coproduct_on(H, 0, J), pad(J, false));
        TensorElement rhs = tensor_product(H, coproduct_on(H, 1, J), pad(J, true));
        std::string d;
        expect(d, lhs, rhs, "J^{12,3} J^{1,2} vs J^{1,23} J^{2,3}");
        r.add("cocycle identity", d.empty(), d);
    }
    {
        std::string d;
        expect(d, counit_on(0, J), tensor_unit(order, 1), "(e x id)J");
        expect(d, counit_on(1, J), tensor_unit(order, 1), "(id x e)J");
        r.add("counit normalization", d.empty(), d);
    }
    {
        TensorElement one = tensor_unit(order, 2);
        int v = (J - one).valuation();
        r.add("J = 1 + O(h)", v != 0, v == 0 ? "h^0 part differs from 1 x 1" : "");
    }
    {
        TensorElement skew = J - flip(J);
        TensorElement expected(order);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                expected.add(1, TensorKey{Word{a}, Word{b}}, j[z(a)][z(b)]);
        std::string d;
        expect(d, skew.truncated(std::min(order, 1)), expected.truncated(std::min(order, 1)), "J - J^op");
        r.add("J - J^op = h j + O(h^2)", d.empty(), d);
    }
    {
        std::string d;
        for (const auto& a : tests) {
            const PBWElement& ia = B.twist_iso(a);
            PBWElement id(order, a);
            expect(d, ia.truncated(std::min(order, 1)), id.truncated(std::min(order, 1)), "I(a) vs a");
        }
        r.add("I = id + O(h^2)", d.empty(), d);
    }
    WordMap iso = [&](const Word& w) -> const PBWElement& { return B.twist_iso(w); };
    {
        std::string d;
        expect(d, apply_map(iso, H.unit(), order), Hj.unit(), "I(1)");
        for (const auto& a : tests)
            for (const auto& b : tests)
                expect(d, apply_map(iso, H.product(a, b), order), Hj.product(B.twist_iso(a), B.twist_iso(b)),
                       "I(ab) vs I(a)I(b)");
        r.add("I is an algebra morphism", d.empty(), d);
    }
    {
        TensorElement Jinv = tensor_inverse(H, J);
        std::string d;
        for (const auto& a : tests) {
            TensorElement conj = tensor_product(H, tensor_product(H, Jinv, H.coproduct(a)), J);
            TensorElement pushed = apply_on_factor(iso, 1, apply_on_factor(iso, 0, conj, order), order);
            expect(d, pushed, Hj.coproduct(B.twist_iso(a)), "(I x I)(J^-1 D(a) J) vs D_j(I(a))");
        }
        r.add("I transports the twisted coproduct", d.empty(), d);
    }
    {
        std::string d;
        for (const auto& a : tests)
            for (const auto& c : tests) {
                PBWElement left_first = extend_linear<PBWElement>(B.lambda(a), order, [&](const Word& w) -> const PBWElement& {
                    return B.right_action(w, c);
                });
                PBWElement right_first = extend_linear<PBWElement>(B.rho(c), order, [&](const Word& w) -> const PBWElement& {
                    return B.left_action(a, w);
                });
                expect(d, left_first, right_first, "(a.1).c vs a.(1.c)");
            }
        r.add("bimodule actions commute", d.empty(), d);
    }
    {
        std::string d;
        for (const auto& a : tests) {
            for (const auto& b : tests)
                expect(d, B.nn_product(a, b), Hj.product(a, b), "product");
            expect(d, B.nn_coproduct(a), Hj.coproduct(a), "coproduct");
        }
        r.add("twisted module realizes H_j", d.empty(), d);
    }
    if (options.check_postconditions && !r.passed())
        throw PostconditionError(r);
    return res;
}

} // namespace hopfforge::quantizer
