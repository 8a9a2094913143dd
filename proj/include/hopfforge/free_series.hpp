#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/lincomb.hpp"

namespace hopfforge::freeseries {

/// Truncated series in the free associative algebra on numbered generators.
/// All stored words have length <= cap.
class AssocSeries {
public:
    AssocSeries() = default;
    explicit AssocSeries(int cap) : cap_(cap) {}
    static AssocSeries one(int cap);
    static AssocSeries generator(int letter, int cap);

    [[nodiscard]] int cap() const { return cap_; }
    [[nodiscard]] const WordComb& terms() const { return terms_; }
    [[nodiscard]] Rational coeff(const Word& w) const { return terms_.coeff(w); }
    [[nodiscard]] Rational constant_term() const { return terms_.coeff(Word{}); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Smallest degree with a nonzero coefficient; -1 for the zero series.
    [[nodiscard]] int min_degree() const;
    [[nodiscard]] AssocSeries degree_part(int d) const;
    [[nodiscard]] AssocSeries truncated(int cap) const;

    void add(const Word& w, const Rational& c);
    AssocSeries& operator+=(const AssocSeries& o);
    AssocSeries& operator-=(const AssocSeries& o);
    AssocSeries& operator*=(const Rational& s);
    friend AssocSeries operator+(AssocSeries a, const AssocSeries& b) { return a += b; }
    friend AssocSeries operator-(AssocSeries a, const AssocSeries& b) { return a -= b; }
    friend AssocSeries operator*(AssocSeries a, const Rational& s) { return a *= s; }
    friend bool operator==(const AssocSeries& a, const AssocSeries& b) { return a.terms_ == b.terms_; }

private:
    int cap_ = 0;
    WordComb terms_;
};

/// Concatenation product truncated above degree `cap`.
AssocSeries multiply(const AssocSeries& a, const AssocSeries& b, int cap);
AssocSeries commutator(const AssocSeries& a, const AssocSeries& b, int cap);

/// exp of a series without constant term.
AssocSeries exp_series(const AssocSeries& a, int cap);
/// log of a series with constant term 1 (as an associative series).
AssocSeries log_series(const AssocSeries& a, int cap);
/// Multiplicative inverse of a series with constant term 1.
AssocSeries inverse_series(const AssocSeries& a, int cap);

/// Lyndon words of length `degree` over `num_generators` letters, in
/// lexicographic order (Duval's algorithm).
std::vector<Word> lyndon_words(int num_generators, int degree);
/// Standard bracketing of a Lyndon word expanded in the free algebra.
AssocSeries lyndon_bracket(const Word& lyndon);
/// "[x,[x,y]]"-style text for a Lyndon word; generator names default to x,y,z,...
std::string bracket_string(const Word& lyndon, const std::vector<std::string>& names = {});
/// Inverse of bracket_string for names x,y,z,...; returns the Lyndon word.
Word parse_bracket_string(const std::string& text, const std::vector<std::string>& names = {});

/// Element of the free Lie algebra, stored degree by degree on the Lyndon basis.
struct LieElement {
    int num_generators = 2;
    /// by_degree[d] has one coefficient per lyndon_words(num_generators, d).
    std::map<int, std::vector<Rational>> by_degree;

    [[nodiscard]] AssocSeries expand(int cap) const;
    friend bool operator==(const LieElement&, const LieElement&) = default;
};

AssocSeries exp(const LieElement& l, int cap);

struct LogResult {
    std::optional<LieElement> lie;
    /// Set when the logarithm leaves the free Lie subspace.
    std::string diagnostic;
    int failing_degree = -1;
};

/// Logarithm projected onto the Lyndon basis. Fails (with a diagnostic) when
/// some degree component is not a Lie element, i.e. when `a` is not
/// group-like. Throws std::invalid_argument if the constant term is not 1.
LogResult log(const AssocSeries& a, int num_generators, int cap);

/// Evaluates the series with generator g replaced by images[g], truncating at
/// `cap` in the target grading. Each image must have zero constant term.
AssocSeries substitute(const AssocSeries& a, const std::vector<AssocSeries>& images, int cap);

} // namespace hopfforge::freeseries
