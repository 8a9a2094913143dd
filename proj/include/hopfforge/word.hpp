#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace hopfforge {

/// A finite sequence of small letter indices (< 256).
///
/// Used for free-algebra words, infinitesimal-braid words and PBW monomials.
/// Backed by std::string so short words stay inline.
class Word {
public:
    using Letter = std::uint8_t;

    Word() = default;
    Word(std::initializer_list<int> letters)
    {
        for (int l : letters)
            push_back(static_cast<Letter>(l));
    }
    explicit Word(const std::vector<int>& letters)
    {
        for (int l : letters)
            push_back(static_cast<Letter>(l));
    }

    [[nodiscard]] std::size_t size() const { return s_.size(); }
    [[nodiscard]] bool empty() const { return s_.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const { return static_cast<Letter>(s_[i]); }
    void set(std::size_t i, int letter) { s_[i] = static_cast<char>(static_cast<Letter>(letter)); }
    void push_back(int letter) { s_.push_back(static_cast<char>(static_cast<Letter>(letter))); }
    void pop_back() { s_.pop_back(); }

    [[nodiscard]] Word sub(std::size_t pos, std::size_t len = std::string::npos) const
    {
        Word w;
        w.s_ = s_.substr(pos, len);
        return w;
    }
    [[nodiscard]] Word reversed() const
    {
        Word w;
        w.s_.assign(s_.rbegin(), s_.rend());
        return w;
    }
    [[nodiscard]] bool is_nondecreasing() const
    {
        for (std::size_t i = 1; i < s_.size(); ++i)
            if ((*this)[i - 1] > (*this)[i])
                return false;
        return true;
    }
    [[nodiscard]] std::vector<int> letters() const
    {
        std::vector<int> out;
        out.reserve(size());
        for (std::size_t i = 0; i < size(); ++i)
            out.push_back((*this)[i]);
        return out;
    }

    Word& operator+=(const Word& o)
    {
        s_ += o.s_;
        return *this;
    }
    friend Word operator+(Word a, const Word& b) { return a += b; }

    friend bool operator==(const Word&, const Word&) = default;
    /// Degree-lexicographic order: shorter words first, then lexicographic.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        if (a.size() != b.size())
            return a.size() <=> b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }

    [[nodiscard]] std::size_t hash() const { return std::hash<std::string>{}(s_); }

private:
    std::string s_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

/// Key for an element of a k-fold tensor power: one monomial per factor.
using TensorKey = std::vector<Word>;

struct TensorKeyHash {
    std::size_t operator()(const TensorKey& k) const
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (const auto& w : k)
            h ^= w.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace hopfforge
