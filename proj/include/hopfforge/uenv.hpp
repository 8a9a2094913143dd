#pragma once

#include <functional>
#include <memory>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfforge/free_series.hpp"
#include "hopfforge/lincomb.hpp"
#include "hopfforge/liebialg.hpp"

namespace hopfforge::uenv {

/// Thrown when a computation would produce a PBW monomial above the working cap.
class DegreeOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Truncated polynomial in ħ: coefficients of ħ^0..ħ^order.
struct HPoly {
    std::vector<Rational> coeffs;
    [[nodiscard]] bool is_zero() const
    {
        for (const auto& c : coeffs)
            if (!c.is_zero())
                return false;
        return true;
    }
    friend bool operator==(const HPoly&, const HPoly&) = default;
};

/// Σ_p ħ^p · (linear combination of keys), truncated mod ħ^{order+1}.
template <class Key, class Hash = typename DefaultHash<Key>::type>
class HSeries {
public:
    using Comb = LinComb<Key, Hash>;

    HSeries() : parts_(1) {}
    explicit HSeries(int order) : parts_(static_cast<std::size_t>(order + 1)) {}
    HSeries(int order, const Key& k, const Rational& c = Rational(1)) : HSeries(order) { add(0, k, c); }
    HSeries(int order, Comb classical) : HSeries(order) { parts_[0] = std::move(classical); }

    [[nodiscard]] int order() const { return static_cast<int>(parts_.size()) - 1; }
    [[nodiscard]] const Comb& at(int p) const { return parts_.at(static_cast<std::size_t>(p)); }
    Comb& at(int p) { return parts_.at(static_cast<std::size_t>(p)); }

    void add(int p, const Key& k, const Rational& c)
    {
        if (p <= order())
            parts_[static_cast<std::size_t>(p)].add(k, c);
    }
    void add(int p, const Comb& c, const Rational& scale = Rational(1))
    {
        if (p <= order())
            parts_[static_cast<std::size_t>(p)].add(c, scale);
    }
    /// Adds ħ^shift · scale · o, dropping powers above order().
    void add(const HSeries& o, const Rational& scale = Rational(1), int shift = 0)
    {
        for (int p = 0; p <= o.order() && p + shift <= order(); ++p)
            parts_[static_cast<std::size_t>(p + shift)].add(o.at(p), scale);
    }

    [[nodiscard]] bool is_zero() const
    {
        for (const auto& c : parts_)
            if (!c.empty())
                return false;
        return true;
    }
    [[nodiscard]] HSeries truncated(int order) const
    {
        HSeries out(order);
        out.add(*this);
        return out;
    }
    /// Lowest power with a nonzero part, or -1.
    [[nodiscard]] int valuation() const
    {
        for (int p = 0; p <= order(); ++p)
            if (!at(p).empty())
                return p;
        return -1;
    }
    /// Coefficient of key k as an ħ-polynomial.
    [[nodiscard]] HPoly coeff(const Key& k) const
    {
        HPoly h;
        for (const auto& part : parts_)
            h.coeffs.push_back(part.coeff(k));
        return h;
    }

    HSeries& operator+=(const HSeries& o)
    {
        add(o);
        return *this;
    }
    HSeries& operator-=(const HSeries& o)
    {
        add(o, Rational(-1));
        return *this;
    }
    HSeries& operator*=(const Rational& s)
    {
        for (auto& c : parts_)
            c *= s;
        return *this;
    }
    friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
    friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
    friend HSeries operator*(HSeries a, const Rational& s) { return a *= s; }
    friend bool operator==(const HSeries& a, const HSeries& b) { return a.parts_ == b.parts_; }

    /// Applies a linear map given on keys, power by power.
    template <class Out, class F>
    [[nodiscard]] Out map_linear(int out_order, F&& f) const
    {
        Out out(out_order);
        for (int p = 0; p <= std::min(order(), out_order); ++p)
            for (const auto& [k, c] : at(p))
                out.add(p, f(k), c);
        return out;
    }

private:
    std::vector<Comb> parts_;
};

/// Element of U(𝔤) (or U(𝔡)) with ħ-polynomial coefficients.
using PBWElement = HSeries<Word>;
/// Element of a tensor power, one PBW monomial per factor.
using TensorElement = HSeries<TensorKey>;

/// PBW normal form in the enveloping algebra of a Lie algebra given by
/// structure constants. Monomials are nondecreasing words in basis indices.
class Enveloping {
public:
    Enveloping(liebialg::Tensor3 bracket, int degree_cap);

    [[nodiscard]] int dim() const { return static_cast<int>(bracket_.size()); }
    [[nodiscard]] int degree_cap() const { return cap_; }
    [[nodiscard]] const liebialg::Tensor3& bracket() const { return bracket_; }

    /// e_a · u for a normal-ordered monomial u. Memoized.
    const WordComb& left_mult(int a, const Word& u) const;
    /// Normal form of an arbitrary word. Throws DegreeOverflow above the cap.
    [[nodiscard]] WordComb normal_form(const Word& w) const;
    /// Product of normal-ordered combinations.
    [[nodiscard]] WordComb multiply(const WordComb& a, const WordComb& b) const;
    [[nodiscard]] WordComb multiply_monomials(const Word& a, const Word& b) const;

    /// Classical Hopf structure: Δ₀, S₀, ε₀ on monomials.
    [[nodiscard]] TensorComb coproduct0(const Word& u) const;
    [[nodiscard]] WordComb antipode0(const Word& u) const;
    [[nodiscard]] static Rational counit0(const Word& u) { return u.empty() ? Rational(1) : Rational(0); }

    /// All normal-ordered monomials of degree <= d.
    [[nodiscard]] std::vector<Word> monomials(int d) const;

private:
    liebialg::Tensor3 bracket_;
    int cap_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<Word, WordComb, WordHash> memo_;

    void check_cap(std::size_t degree) const;
};

/// The 𝔡-module U(𝔤) induced from the trivial 𝔤*-module (base α·1 = 0), or the
/// twisted variant with α·1 = (id ⊗ α)(j). 𝔡-indices: 0..n-1 are e_i and
/// n..2n-1 are e^i.
class InducedModule {
public:
    InducedModule(std::shared_ptr<const Enveloping> ug, const liebialg::LieBialgebra& g,
                  const liebialg::Matrix* twist = nullptr);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] bool twisted() const { return twisted_; }
    [[nodiscard]] const Enveloping& algebra() const { return *ug_; }
    [[nodiscard]] const std::shared_ptr<const Enveloping>& algebra_ptr() const { return ug_; }

    /// ξ · u for a 𝔡-basis index ξ and monomial u. Memoized.
    const WordComb& act(int xi, const Word& u) const;
    [[nodiscard]] WordComb act(int xi, const WordComb& u) const;

private:
    std::shared_ptr<const Enveloping> ug_;
    int n_;
    bool twisted_;
    // [e^c, e_x] = Σ_k to_g[c][x][k] e_k + Σ_k to_dual[c][x][k] e^k
    liebialg::Tensor3 to_g_;
    liebialg::Tensor3 to_dual_;
    // e^c · 1
    std::vector<WordComb> base_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<Word, WordComb, WordHash> memo_;

    WordComb compute_dual(int c, const Word& u) const;
};

/// One module per tensor factor.
using Factors = std::vector<const InducedModule*>;

/// ξ acting on tensor factor `pos`.
TensorElement act_on_factor(const Factors& f, int pos, int xi, const TensorElement& e);
/// Diagonal action of ξ: Leibniz sum over factors.
TensorElement act_diagonal(const Factors& f, int xi, const TensorElement& e);

/// t^{A,B} = Σ_{i∈A, j∈B} t^{ij}, each t^{ij} = Σ_a (e_a on i)(e^a on j) + (e^a on i)(e_a on j).
/// The result is multiplied by ħ^weight.
TensorElement apply_t(const Factors& f, const std::vector<int>& a, const std::vector<int>& b, const TensorElement& e,
                      int weight = 0);

/// exp(s ħ t^{A,B}) applied to e, truncated at e.order().
TensorElement apply_exp_t(const Factors& f, const std::vector<int>& a, const std::vector<int>& b, const Rational& s,
                          const TensorElement& e);

/// Full binary parenthesization of consecutive factor positions.
class Grouping {
public:
    /// Parses strings like "((01)(23))"; leaves are single digits and must read 0,1,2,... in order.
    static Grouping parse(const std::string& text);
    /// Left comb (((01)2)3)...
    static Grouping left_comb(int leaves);

    [[nodiscard]] int leaves() const;
    [[nodiscard]] std::string str() const;
    friend bool operator==(const Grouping&, const Grouping&) = default;

    struct Node {
        int first = 0;   // first leaf
        int count = 1;   // number of leaves
        int left = -1;   // child node indices, -1 for a leaf
        int right = -1;
        friend bool operator==(const Node&, const Node&) = default;
    };
    [[nodiscard]] const std::vector<Node>& nodes() const { return nodes_; }
    [[nodiscard]] int root() const { return root_; }
    /// Node whose leaf range is exactly [first, first+count); -1 if none.
    [[nodiscard]] int find(int first, int count) const;

    /// Grouping after swapping the two children of the node covering [first, first+count).
    [[nodiscard]] Grouping braided(int first, int count) const;

private:
    std::vector<Node> nodes_;
    int root_ = -1;

    int build(const std::string& s, std::size_t& pos, int& next_leaf);
    std::string render(int node) const;
};

/// Blocks of an associativity move ((A B) C) -> (A (B C)) (forward) or back.
struct AssocMove {
    std::vector<int> a, b, c;
    bool forward = true;
};

/// Detects the single move between two groupings. Throws std::invalid_argument otherwise.
AssocMove find_assoc_move(const Grouping& source, const Grouping& target);

/// Φ(ħ t^{A,B}, ħ t^{B,C}) (forward) or its inverse (backward) applied to e.
/// `phi` is the associator as a series in the free algebra on two letters.
TensorElement apply_assoc_move(const Factors& f, const AssocMove& move, const freeseries::AssocSeries& phi,
                               const TensorElement& e);
TensorElement apply_assoc_move(const Factors& f, const Grouping& source, const Grouping& target,
                               const freeseries::AssocSeries& phi, const TensorElement& e);

/// Braiding at the node covering [first, first+count) of `g`: block swap of its
/// two children composed with exp(±ħ t/2) on them. Returns the new element and
/// updates `f` (factor modules) and `g` (grouping) in place.
TensorElement apply_braiding(Factors& f, Grouping& g, int first, int count, bool inverse, const TensorElement& e);

using TensorOp = std::function<TensorElement(const TensorElement&)>;

/// Applies a series to an element, letter k acting as `ops[k]`. Words are
/// applied right to left. Each op must raise the ħ-power by at least one, so
/// words longer than e.order() are skipped.
TensorElement apply_series(const freeseries::AssocSeries& series, const std::vector<TensorOp>& ops,
                           const TensorElement& e);

} // namespace hopfforge::uenv
