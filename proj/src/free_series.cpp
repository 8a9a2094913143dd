#include "hopfforge/free_series.hpp"

#include <functional>
#include <stdexcept>

#include "hopfforge/sparse_matrix.hpp"

namespace hopfforge::freeseries {

AssocSeries AssocSeries::one(int cap)
{
    AssocSeries s(cap);
    s.add(Word{}, Rational(1));
    return s;
}

AssocSeries AssocSeries::generator(int letter, int cap)
{
    AssocSeries s(cap);
    s.add(Word{letter}, Rational(1));
    return s;
}

int AssocSeries::min_degree() const
{
    int best = -1;
    for (const auto& [w, c] : terms_)
        if (best < 0 || static_cast<int>(w.size()) < best)
            best = static_cast<int>(w.size());
    return best;
}

AssocSeries AssocSeries::degree_part(int d) const
{
    AssocSeries s(cap_);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == d)
            s.terms_.add(w, c);
    return s;
}

AssocSeries AssocSeries::truncated(int cap) const
{
    AssocSeries s(cap);
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) <= cap)
            s.terms_.add(w, c);
    return s;
}

void AssocSeries::add(const Word& w, const Rational& c)
{
    if (static_cast<int>(w.size()) <= cap_)
        terms_.add(w, c);
}

AssocSeries& AssocSeries::operator+=(const AssocSeries& o)
{
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

AssocSeries& AssocSeries::operator-=(const AssocSeries& o)
{
    for (const auto& [w, c] : o.terms_)
        add(w, -c);
    return *this;
}

AssocSeries& AssocSeries::operator*=(const Rational& s)
{
    terms_ *= s;
    return *this;
}

AssocSeries multiply(const AssocSeries& a, const AssocSeries& b, int cap)
{
    AssocSeries out(cap);
    for (const auto& [wa, ca] : a.terms()) {
        if (static_cast<int>(wa.size()) > cap)
            continue;
        for (const auto& [wb, cb] : b.terms())
            if (static_cast<int>(wa.size() + wb.size()) <= cap)
                out.add(wa + wb, ca * cb);
    }
    return out;
}

AssocSeries commutator(const AssocSeries& a, const AssocSeries& b, int cap)
{
    return multiply(a, b, cap) - multiply(b, a, cap);
}

AssocSeries exp_series(const AssocSeries& a, int cap)
{
    if (!a.constant_term().is_zero())
        throw std::invalid_argument("exp_series: nonzero constant term");
    AssocSeries result = AssocSeries::one(cap);
    AssocSeries power = AssocSeries::one(cap);
    for (int k = 1; k <= cap; ++k) {
        power = multiply(power, a, cap) * Rational(1, k);
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

AssocSeries log_series(const AssocSeries& a, int cap)
{
    if (!a.constant_term().is_one())
        throw std::invalid_argument("log: constant term must be 1");
    AssocSeries u = a.truncated(cap) - AssocSeries::one(cap);
    AssocSeries result(cap);
    AssocSeries power = AssocSeries::one(cap);
    for (int k = 1; k <= cap; ++k) {
        power = multiply(power, u, cap);
        if (power.is_zero())
            break;
        result += power * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return result;
}

AssocSeries inverse_series(const AssocSeries& a, int cap)
{
    if (!a.constant_term().is_one())
        throw std::invalid_argument("inverse_series: constant term must be 1");
    // (1+u)^{-1} = sum (-u)^k
    AssocSeries minus_u = AssocSeries::one(cap) - a.truncated(cap);
    AssocSeries result = AssocSeries::one(cap);
    AssocSeries power = AssocSeries::one(cap);
    for (int k = 1; k <= cap; ++k) {
        power = multiply(power, minus_u, cap);
        if (power.is_zero())
            break;
        result += power;
    }
    return result;
}

std::vector<Word> lyndon_words(int num_generators, int degree)
{
    if (degree < 1)
        throw std::invalid_argument("lyndon_words: degree must be >= 1");
    std::vector<Word> out;
    // Duval: generates all Lyndon words of length <= degree in lex order.
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == degree)
            out.emplace_back(w);
        std::size_t m = w.size();
        while (static_cast<int>(w.size()) < degree)
            w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == num_generators - 1)
            w.pop_back();
    }
    return out;
}

namespace {

bool is_lyndon(const Word& w)
{
    if (w.empty())
        return false;
    for (std::size_t i = 1; i < w.size(); ++i) {
        // w must be strictly smaller than each proper rotation... equivalently
        // than each proper suffix in plain lexicographic order.
        Word suffix = w.sub(i);
        std::size_t n = std::min(suffix.size(), w.size());
        bool decided = false;
        for (std::size_t k = 0; k < n; ++k) {
            if (w[k] != suffix[k]) {
                if (w[k] > suffix[k])
                    return false;
                decided = true;
                break;
            }
        }
        if (!decided)
            return false; // suffix is a prefix of w
    }
    return true;
}

// Standard factorization w = u v, v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w)
{
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word v = w.sub(i);
        if (is_lyndon(v))
            return {w.sub(0, i), v};
    }
    throw std::logic_error("standard_factorization: not a Lyndon word of length >= 2");
}

std::string default_name(int g)
{
    static const char* names = "xyzuvw";
    if (g < 6)
        return std::string(1, names[g]);
    return "g" + std::to_string(g);
}

} // namespace

AssocSeries lyndon_bracket(const Word& lyndon)
{
    int cap = static_cast<int>(lyndon.size());
    if (lyndon.size() == 1)
        return AssocSeries::generator(lyndon[0], cap);
    auto [u, v] = standard_factorization(lyndon);
    return commutator(lyndon_bracket(u), lyndon_bracket(v), cap);
}

std::string bracket_string(const Word& lyndon, const std::vector<std::string>& names)
{
    auto name = [&](int g) { return g < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(g)] : default_name(g); };
    if (lyndon.size() == 1)
        return name(lyndon[0]);
    auto [u, v] = standard_factorization(lyndon);
    return "[" + bracket_string(u, names) + "," + bracket_string(v, names) + "]";
}

Word parse_bracket_string(const std::string& text, const std::vector<std::string>& names)
{
    std::size_t pos = 0;
    auto name_of = [&](int g) { return g < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(g)] : default_name(g); };
    std::function<Word()> parse = [&]() -> Word {
        if (pos >= text.size())
            throw std::invalid_argument("bracket string truncated: " + text);
        if (text[pos] == '[') {
            ++pos;
            Word a = parse();
            if (pos >= text.size() || text[pos] != ',')
                throw std::invalid_argument("bracket string: expected ',' in " + text);
            ++pos;
            Word b = parse();
            if (pos >= text.size() || text[pos] != ']')
                throw std::invalid_argument("bracket string: expected ']' in " + text);
            ++pos;
            return a + b;
        }
        for (int g = 0; g < 64; ++g) {
            std::string n = name_of(g);
            if (text.compare(pos, n.size(), n) == 0) {
                pos += n.size();
                return Word{g};
            }
        }
        throw std::invalid_argument("bracket string: unknown generator in " + text);
    };
    Word w = parse();
    if (pos != text.size() || !is_lyndon(w) || bracket_string(w, names) != text)
        throw std::invalid_argument("not a standard Lyndon bracketing: " + text);
    return w;
}

AssocSeries LieElement::expand(int cap) const
{
    AssocSeries out(cap);
    for (const auto& [d, coeffs] : by_degree) {
        if (d > cap)
            continue;
        auto basis = lyndon_words(num_generators, d);
        if (basis.size() != coeffs.size())
            throw std::invalid_argument("LieElement: coefficient count does not match Lyndon basis");
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!coeffs[i].is_zero())
                out += lyndon_bracket(basis[i]) * coeffs[i];
    }
    return out;
}

AssocSeries exp(const LieElement& l, int cap) { return exp_series(l.expand(cap), cap); }

LogResult log(const AssocSeries& a, int num_generators, int cap)
{
    AssocSeries lg = log_series(a, cap);
    LogResult res;
    LieElement lie;
    lie.num_generators = num_generators;
    for (int d = 1; d <= cap; ++d) {
        AssocSeries part = lg.degree_part(d);
        auto basis = lyndon_words(num_generators, d);
        if (part.is_zero()) {
            lie.by_degree[d] = std::vector<Rational>(basis.size());
            continue;
        }
        // Rows indexed by words appearing in the part or the basis expansions.
        std::vector<AssocSeries> expanded;
        std::map<Word, int> row_of;
        for (const auto& b : basis) {
            expanded.push_back(lyndon_bracket(b));
            for (const auto& [w, c] : expanded.back().terms())
                row_of.try_emplace(w, 0);
        }
        for (const auto& [w, c] : part.terms())
            row_of.try_emplace(w, 0);
        int r = 0;
        for (auto& [w, idx] : row_of)
            idx = r++;
        ratlin::SparseMatrix m(r, static_cast<int>(basis.size()));
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (const auto& [w, c] : expanded[j].terms())
                m.set(row_of[w], static_cast<int>(j), c);
        ratlin::Column rhs(static_cast<std::size_t>(r));
        for (const auto& [w, c] : part.terms())
            rhs[static_cast<std::size_t>(row_of[w])] = c;
        auto sol = ratlin::solve_affine(m, rhs);
        if (!sol.particular) {
            res.failing_degree = d;
            res.diagnostic = "degree-" + std::to_string(d) + " component of log is not a Lie element";
            return res;
        }
        lie.by_degree[d] = *sol.particular;
    }
    res.lie = std::move(lie);
    return res;
}

AssocSeries substitute(const AssocSeries& a, const std::vector<AssocSeries>& images, int cap)
{
    for (const auto& img : images)
        if (!img.constant_term().is_zero())
            throw std::invalid_argument("substitute: image with weight 0 would not terminate");
    // Memoized prefix products.
    std::map<Word, AssocSeries> prefix;
    prefix.emplace(Word{}, AssocSeries::one(cap));
    std::function<const AssocSeries&(const Word&)> product = [&](const Word& w) -> const AssocSeries& {
        auto it = prefix.find(w);
        if (it != prefix.end())
            return it->second;
        int last = w[w.size() - 1];
        if (last < 0 || last >= static_cast<int>(images.size()))
            throw std::out_of_range("substitute: no image for generator");
        Word head = w.sub(0, w.size() - 1);
        AssocSeries p = multiply(product(head), images[static_cast<std::size_t>(last)], cap);
        return prefix.emplace(w, std::move(p)).first->second;
    };
    AssocSeries out(cap);
    for (const auto& [w, c] : a.terms()) {
        if (static_cast<int>(w.size()) > cap)
            continue;
        const AssocSeries& p = product(w);
        for (const auto& [pw, pc] : p.terms())
            out.add(pw, pc * c);
    }
    return out;
}

} // namespace hopfforge::freeseries
