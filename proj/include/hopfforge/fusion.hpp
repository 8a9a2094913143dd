#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hopfforge/parallel.hpp"
#include "hopfforge/uenv.hpp"

namespace hopfforge::quantizer {

using uenv::Enveloping;
using uenv::Factors;
using uenv::InducedModule;
using uenv::PBWElement;
using uenv::TensorElement;

/// Thrown when a composite violates a structural expectation (for example
/// τ - id having a component below ħ²).
class InternalCheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Coinvariant class of u⊗v in F(X⊗Y), written as S₀(u)·v.
PBWElement reduce2(const Enveloping& ug, const TensorElement& e);

/// Moves the middle factor of u⊗m⊗w outward until it is 1, using
/// u⊗xv⊗w ≡ -xu⊗v⊗w - u⊗v⊗xw with x the leftmost letter of the middle
/// monomial. Returns the outer pair u'⊗w'.
TensorElement strip_middle(const Enveloping& ug, const TensorElement& e);

/// strip_middle followed by the coordinate change [S₀(x)⊗1⊗y] ↦ x⊗y.
TensorElement reduce3(const Enveloping& ug, const TensorElement& e);

/// Reduces consecutive pairs (01)(23)... of an even tensor power with reduce2.
TensorElement reduce_pairs(const Enveloping& ug, const TensorElement& e);

/// Applies the associativity moves between consecutive groupings of `path`.
TensorElement transport(const Factors& f, const std::vector<std::string>& path, const freeseries::AssocSeries& phi,
                        TensorElement e);

/// ħ-linear extension of a per-key map given as full-order series.
template <class Out, class Key, class F>
Out extend_linear(const uenv::HSeries<Key>& e, int order, F&& f)
{
    Out out(order);
    for (int p = 0; p <= std::min(order, e.order()); ++p)
        for (const auto& [k, c] : e.at(p))
            out.add(f(k), c, p);
    return out;
}

/// ħ-bilinear extension of a map on pairs of words into PBW elements.
template <class F>
PBWElement extend_bilinear(const PBWElement& a, const PBWElement& b, int order, F&& f)
{
    PBWElement out(order);
    for (int p = 0; p <= std::min(order, a.order()); ++p)
        for (int q = 0; p + q <= std::min(order, b.order()); ++q)
            for (const auto& [u, cu] : a.at(p))
                for (const auto& [v, cv] : b.at(q))
                    out.add(f(u, v), cu * cv, p + q);
    return out;
}

/// The map τ: F(L⊗Mid⊗R) → F(L⊗Mid) ⊗ F(Mid⊗R). Input coordinates x⊗y stand
/// for [S₀(x)⊗1⊗y]; the middle is split by Δ₀, the grouping ((0(12))3) is
/// carried to ((01)(23)) and each pair is reduced.
class TauMap {
public:
    TauMap(const InducedModule& left, const InducedModule& mid, const InducedModule& right,
           freeseries::AssocSeries phi, int order);

    [[nodiscard]] int order() const { return order_; }
    const TensorElement& apply(const Word& x, const Word& y) const;
    [[nodiscard]] TensorElement apply(const TensorElement& e) const;
    /// τ⁻¹ by the Neumann series in τ - id, which raises the ħ-power by at least 2.
    [[nodiscard]] TensorElement inverse(const TensorElement& e) const;
    /// m₀ ∘ τ⁻¹ on x⊗y: the ε-collapse of the middle factor, i.e. the
    /// product (or action) defined by this triple.
    const PBWElement& collapse_inverse(const Word& x, const Word& y) const;

private:
    Factors factors_;
    freeseries::AssocSeries phi_;
    int order_;
    const Enveloping& ug_;
    MemoTable<TensorKey, TensorElement, TensorKeyHash> tau_;
    MemoTable<TensorKey, PBWElement, TensorKeyHash> collapse_;
};

/// How the inner pair is crossed in the fusion coproduct.
enum class Crossing {
    inverse, ///< β⁻¹ on the inner pair: the orientation calibrated by Δ(x) = x⊗1 + 1⊗x + (ħ/2)δ(x) + O(ħ²)
    direct,  ///< β on the inner pair: gives -ħ/2 at first order; kept as a negative control
};

/// Fusion coproduct F(X⊗Y) → F(X⊗Y) ⊗ F(X⊗Y) on the class [1⊗u].
class FusionCoproduct {
public:
    FusionCoproduct(const InducedModule& x, const InducedModule& y, freeseries::AssocSeries phi, int order,
                    Crossing crossing);

    const TensorElement& apply(const Word& u) const;

private:
    const InducedModule& x_;
    const InducedModule& y_;
    freeseries::AssocSeries phi_;
    int order_;
    Crossing crossing_;
    MemoTable<Word, TensorElement, WordHash> memo_;
};

} // namespace hopfforge::quantizer
