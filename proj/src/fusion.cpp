#include "hopfforge/fusion.hpp"

namespace hopfforge::quantizer {

namespace {

void strip(const Enveloping& ug, const Word& a, const Word& m, const Word& b, const Rational& c, TensorComb& out)
{
    if (m.empty()) {
        out.add(TensorKey{a, b}, c);
        return;
    }
    int x = m[0];
    Word rest = m.sub(1);
    for (const auto& [w, k] : ug.left_mult(x, a))
        strip(ug, w, rest, b, -(c * k), out);
    for (const auto& [w, k] : ug.left_mult(x, b))
        strip(ug, a, rest, w, -(c * k), out);
}

void require_arity(const TensorElement& e, std::size_t k, const char* what)
{
    for (int p = 0; p <= e.order(); ++p)
        for (const auto& [key, c] : e.at(p))
            if (key.size() != k)
                throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(k) + " tensor factors");
}

} // namespace

PBWElement reduce2(const Enveloping& ug, const TensorElement& e)
{
    require_arity(e, 2, "reduce2");
    PBWElement out(e.order());
    for (int p = 0; p <= e.order(); ++p)
        for (const auto& [key, c] : e.at(p))
            out.add(p, ug.multiply(ug.antipode0(key[0]), WordComb(key[1])), c);
    return out;
}

TensorElement strip_middle(const Enveloping& ug, const TensorElement& e)
{
    require_arity(e, 3, "strip_middle");
    TensorElement out(e.order());
    for (int p = 0; p <= e.order(); ++p)
        for (const auto& [key, c] : e.at(p))
            strip(ug, key[0], key[1], key[2], c, out.at(p));
    return out;
}

TensorElement reduce3(const Enveloping& ug, const TensorElement& e)
{
    TensorElement outer = strip_middle(ug, e);
    TensorElement out(e.order());
    for (int p = 0; p <= e.order(); ++p)
        for (const auto& [key, c] : outer.at(p))
            for (const auto& [w, k] : ug.antipode0(key[0]))
                out.add(p, TensorKey{w, key[1]}, c * k);
    return out;
}

TensorElement reduce_pairs(const Enveloping& ug, const TensorElement& e)
{
    TensorElement out(e.order());
    for (int p = 0; p <= e.order(); ++p)
        for (const auto& [key, c] : e.at(p)) {
            if (key.size() % 2 != 0)
                throw std::invalid_argument("reduce_pairs: odd number of tensor factors");
            TensorComb acc(TensorKey{}, c);
            for (std::size_t i = 0; i < key.size(); i += 2) {
                WordComb r = ug.multiply(ug.antipode0(key[i]), WordComb(key[i + 1]));
                TensorComb next;
                for (const auto& [k, a] : acc)
                    for (const auto& [w, b] : r) {
                        TensorKey nk = k;
                        nk.push_back(w);
                        next.add(nk, a * b);
                    }
                acc = std::move(next);
            }
            out.add(p, acc);
        }
    return out;
}

TensorElement transport(const Factors& f, const std::vector<std::string>& path, const freeseries::AssocSeries& phi,
                        TensorElement e)
{
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        e = uenv::apply_assoc_move(f, uenv::Grouping::parse(path[i]), uenv::Grouping::parse(path[i + 1]), phi, e);
    return e;
}

// TauMap

TauMap::TauMap(const InducedModule& left, const InducedModule& mid, const InducedModule& right,
               freeseries::AssocSeries phi, int order)
    : factors_{&left, &mid, &mid, &right}, phi_(phi.truncated(order)), order_(order), ug_(left.algebra())
{
}

const TensorElement& TauMap::apply(const Word& x, const Word& y) const
{
    return tau_.get(TensorKey{x, y}, [&] {
        TensorElement lifted(order_);
        for (const auto& [w, c] : ug_.antipode0(x))
            lifted.add(0, TensorKey{w, Word{}, Word{}, y}, c);
        lifted = transport(factors_, {"((0(12))3)", "(((01)2)3)", "((01)(23))"}, phi_, std::move(lifted));
        TensorElement out = reduce_pairs(ug_, lifted);
        TensorElement id(order_, TensorKey{x, y});
        TensorElement diff = out - id;
        int v = diff.valuation();
        if (v == 0 || v == 1)
            throw InternalCheckFailure("tau - id has an h^" + std::to_string(v) + " component");
        return out;
    });
}

TensorElement TauMap::apply(const TensorElement& e) const
{
    return extend_linear<TensorElement>(e, order_, [&](const TensorKey& k) -> const TensorElement& {
        return apply(k[0], k[1]);
    });
}

TensorElement TauMap::inverse(const TensorElement& e) const
{
    TensorElement result = e.truncated(order_);
    TensorElement term = result;
    // Each step raises the ħ-valuation by at least 2.
    for (int k = 1; 2 * k <= order_; ++k) {
        term = (apply(term) - term) * Rational(-1);
        if (term.is_zero())
            break;
        result += term;
    }
    return result;
}

const PBWElement& TauMap::collapse_inverse(const Word& x, const Word& y) const
{
    return collapse_.get(TensorKey{x, y}, [&] {
        TensorElement pre = inverse(TensorElement(order_, TensorKey{x, y}));
        return extend_linear<PBWElement>(pre, order_, [&](const TensorKey& k) {
            return PBWElement(order_, ug_.multiply_monomials(k[0], k[1]));
        });
    });
}

// FusionCoproduct

FusionCoproduct::FusionCoproduct(const InducedModule& x, const InducedModule& y, freeseries::AssocSeries phi, int order,
                                 Crossing crossing)
    : x_(x), y_(y), phi_(phi.truncated(order)), order_(order), crossing_(crossing)
{
}

const TensorElement& FusionCoproduct::apply(const Word& u) const
{
    return memo_.get(u, [&] {
        const Enveloping& ug = x_.algebra();
        TensorElement e(order_);
        for (const auto& [k, c] : ug.coproduct0(u))
            e.add(0, TensorKey{Word{}, Word{}, k[0], k[1]}, c);
        Factors f{&x_, &x_, &y_, &y_};
        e = transport(f, {"((01)(23))", "(0(1(23)))", "(0((12)3))"}, phi_, std::move(e));
        uenv::Grouping g = uenv::Grouping::parse("(0((12)3))");
        e = uenv::apply_braiding(f, g, 1, 2, crossing_ == Crossing::inverse, e);
        e = transport(f, {"(0((12)3))", "(0(1(23)))", "((01)(23))"}, phi_, std::move(e));
        return reduce_pairs(ug, e);
    });
}

} // namespace hopfforge::quantizer
