#pragma once

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfforge/rational.hpp"
#include "hopfforge/word.hpp"

namespace hopfforge {

template <class Key>
struct DefaultHash;
template <>
struct DefaultHash<Word> {
    using type = WordHash;
};
template <>
struct DefaultHash<TensorKey> {
    using type = TensorKeyHash;
};

/// Finite linear combination of keys with exact rational coefficients.
/// Never stores zero coefficients.
template <class Key, class Hash = typename DefaultHash<Key>::type>
class LinComb {
public:
    using Map = std::unordered_map<Key, Rational, Hash>;

    LinComb() = default;
    explicit LinComb(Key k, Rational c = Rational(1)) { add(std::move(k), c); }

    void add(const Key& k, const Rational& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    void add(const LinComb& o, const Rational& scale = Rational(1))
    {
        if (scale.is_zero())
            return;
        for (const auto& [k, c] : o.terms_)
            add(k, scale.is_one() ? c : c * scale);
    }

    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] Rational coeff(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    [[nodiscard]] const Map& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    /// Terms sorted by key, for deterministic output.
    [[nodiscard]] std::vector<std::pair<Key, Rational>> sorted() const
    {
        std::vector<std::pair<Key, Rational>> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    LinComb& operator+=(const LinComb& o)
    {
        add(o);
        return *this;
    }
    LinComb& operator-=(const LinComb& o)
    {
        add(o, Rational(-1));
        return *this;
    }
    LinComb& operator*=(const Rational& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

using WordComb = LinComb<Word>;
using TensorComb = LinComb<TensorKey>;

} // namespace hopfforge
