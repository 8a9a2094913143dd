#include "hopfforge/infbraid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hopfforge::infbraid {

using freeseries::AssocSeries;

DKAlgebra::DKAlgebra(int strands, int max_degree) : strands_(strands), max_degree_(max_degree)
{
    if (strands != 3 && strands != 4)
        throw std::invalid_argument("DKAlgebra: only 3 or 4 strands are supported");
    // Letters ordered t^{01} < t^{02} < t^{12} < t^{03} < t^{13} < t^{23}.
    for (int j = 1; j < strands; ++j)
        for (int i = 0; i < j; ++i)
            gens_.push_back({i, j});

    auto comm = [](int a, int b) {
        WordComb r;
        r.add(Word{a, b}, Rational(1));
        r.add(Word{b, a}, Rational(-1));
        return r;
    };
    for (int a = 0; a < num_generators(); ++a) {
        auto [i, j] = gens_[static_cast<std::size_t>(a)];
        for (int k = 0; k < strands; ++k) {
            if (k == i || k == j)
                continue;
            // [t^{ij}, t^{ik} + t^{jk}]
            WordComb r = comm(a, letter(i, k));
            r += comm(a, letter(j, k));
            relations_.push_back(std::move(r));
        }
        for (int b = a + 1; b < num_generators(); ++b) {
            auto [k, l] = gens_[static_cast<std::size_t>(b)];
            if (k != i && k != j && l != i && l != j)
                relations_.push_back(comm(a, b));
        }
    }
}

int DKAlgebra::letter(int i, int j) const
{
    if (i == j || i < 0 || j < 0 || i >= strands_ || j >= strands_)
        throw std::invalid_argument("DKAlgebra: invalid strand pair");
    if (i > j)
        std::swap(i, j);
    for (std::size_t a = 0; a < gens_.size(); ++a)
        if (gens_[a].i == i && gens_[a].j == j)
            return static_cast<int>(a);
    throw std::logic_error("DKAlgebra: generator not found");
}

DKElement DKAlgebra::t(int i, int j, int cap) const { return AssocSeries::generator(letter(i, j), cap); }

DKElement DKAlgebra::t_blocks(const std::vector<int>& a, const std::vector<int>& b, int cap) const
{
    AssocSeries s(cap);
    for (int i : a)
        for (int j : b)
            s.add(Word{letter(i, j)}, Rational(1));
    return s;
}

const GradedBasis& DKAlgebra::graded_basis(int degree) const
{
    if (degree < 0 || degree > max_degree_)
        throw std::out_of_range("graded_basis: degree " + std::to_string(degree) + " exceeds cache limit " +
                                std::to_string(max_degree_));
    std::lock_guard lock(mutex_);
    return build_locked(degree);
}

namespace {

using Row = std::map<Word, Rational>;

std::vector<Word> all_words(int letters, int degree)
{
    std::vector<Word> out{Word{}};
    for (int d = 0; d < degree; ++d) {
        std::vector<Word> next;
        next.reserve(out.size() * static_cast<std::size_t>(letters));
        for (const auto& w : out)
            for (int a = 0; a < letters; ++a) {
                Word v = w;
                v.push_back(a);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

const GradedBasis& DKAlgebra::build_locked(int degree) const
{
    if (auto it = cache_.find(degree); it != cache_.end())
        return *it->second;

    auto gb = std::make_unique<GradedBasis>();
    gb->degree = degree;
    // Echelon rows keyed by leading (largest) word, leading coefficient 1.
    std::map<Word, Row> pivots;

    if (degree >= 2) {
        const GradedBasis& prev = build_locked(degree - 1);
        for (const auto& [lead, nf] : prev.rewrite) {
            for (int a = 0; a < num_generators(); ++a) {
                Word la = Word{a} + lead;
                Row row;
                row[la] = Rational(1);
                for (const auto& [w, c] : nf)
                    row[Word{a} + w] -= c;
                pivots.emplace(la, std::move(row));
            }
        }
        auto reduce = [&](Row row) {
            auto it = row.end();
            while (it != row.begin()) {
                --it;
                auto p = pivots.find(it->first);
                if (p == pivots.end())
                    continue;
                Word w = it->first;
                Rational f = it->second;
                for (const auto& [pw, pc] : p->second) {
                    auto [e, inserted] = row.try_emplace(pw, -(f * pc));
                    if (!inserted) {
                        e->second -= f * pc;
                        if (e->second.is_zero())
                            row.erase(e);
                    }
                }
                it = row.lower_bound(w);
            }
            return row;
        };
        for (const auto& rel : relations_) {
            for (const auto& v : all_words(num_generators(), degree - 2)) {
                Row row;
                for (const auto& [w, c] : rel)
                    row[w + v] += c;
                row = reduce(std::move(row));
                if (row.empty())
                    continue;
                Rational inv = Rational(1) / row.rbegin()->second;
                for (auto& [w, c] : row)
                    c *= inv;
                Word lead = row.rbegin()->first;
                pivots.emplace(std::move(lead), std::move(row));
            }
        }
    }

    // Tail-reduce in increasing order of leading word.
    for (const auto& [lead, row] : pivots) {
        WordComb nf;
        for (const auto& [w, c] : row) {
            if (w == lead)
                continue;
            auto r = gb->rewrite.find(w);
            if (r == gb->rewrite.end())
                nf.add(w, -c);
            else
                nf.add(r->second, -c);
        }
        gb->rewrite.emplace(lead, std::move(nf));
    }
    for (auto& w : all_words(num_generators(), degree))
        if (!pivots.contains(w))
            gb->basis.push_back(std::move(w));

    return *cache_.emplace(degree, std::move(gb)).first->second;
}

DKElement DKAlgebra::normal_form(const DKElement& e) const
{
    AssocSeries out(e.cap());
    std::map<int, const GradedBasis*> bases;
    for (const auto& [w, c] : e.terms()) {
        int d = static_cast<int>(w.size());
        auto it = bases.find(d);
        if (it == bases.end())
            it = bases.emplace(d, &graded_basis(d)).first;
        auto r = it->second->rewrite.find(w);
        if (r == it->second->rewrite.end()) {
            out.add(w, c);
        } else {
            for (const auto& [bw, bc] : r->second)
                out.add(bw, bc * c);
        }
    }
    return out;
}

Report RelationReport::as_report(const std::string& name) const
{
    Report r;
    std::string detail;
    if (!passed)
        detail = "first failing degree " + std::to_string(first_failing_degree);
    r.add(name, passed, detail);
    return r;
}

namespace {

RelationReport summarize(const AssocSeries& residual, int maxdeg)
{
    RelationReport rep;
    for (int d = 0; d <= maxdeg; ++d)
        rep.residual_terms[d] = 0;
    for (const auto& [w, c] : residual.terms())
        ++rep.residual_terms[static_cast<int>(w.size())];
    for (const auto& [d, n] : rep.residual_terms)
        if (n > 0) {
            rep.passed = false;
            rep.first_failing_degree = d;
            break;
        }
    return rep;
}

AssocSeries swapped(const AssocSeries& phi, int cap)
{
    return freeseries::substitute(phi, {AssocSeries::generator(1, cap), AssocSeries::generator(0, cap)}, cap);
}

} // namespace

const DKAlgebra& four_strand_algebra()
{
    static const DKAlgebra algebra(4, 6);
    return algebra;
}

std::pair<DKElement, DKElement> pentagon_sides(const AssocSeries& phi, int maxdeg)
{
    const DKAlgebra& t4 = four_strand_algebra();
    auto sub = [&](const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
        return freeseries::substitute(phi, {t4.t_blocks(a, b, maxdeg), t4.t_blocks(b, c, maxdeg)}, maxdeg);
    };
    // Strands 1..4 of the usual notation are 0..3 here.
    AssocSeries p234 = sub({1}, {2}, {3});
    AssocSeries p1_23_4 = sub({0}, {1, 2}, {3});
    AssocSeries p123 = sub({0}, {1}, {2});
    AssocSeries p1_2_34 = sub({0}, {1}, {2, 3});
    AssocSeries p12_3_4 = sub({0, 1}, {2}, {3});
    AssocSeries lhs = freeseries::multiply(freeseries::multiply(p234, p1_23_4, maxdeg), p123, maxdeg);
    AssocSeries rhs = freeseries::multiply(p1_2_34, p12_3_4, maxdeg);
    return {lhs, rhs};
}

RelationReport check_pentagon(const AssocSeries& phi, int maxdeg)
{
    auto [lhs, rhs] = pentagon_sides(phi, maxdeg);
    return summarize(four_strand_algebra().normal_form(lhs - rhs), maxdeg);
}

AssocSeries hexagon_defect(const AssocSeries& phi, int maxdeg)
{
    AssocSeries x = AssocSeries::generator(0, maxdeg);
    AssocSeries y = AssocSeries::generator(1, maxdeg);
    AssocSeries z = (x + y) * Rational(-1);
    auto half_exp = [&](const AssocSeries& a) { return freeseries::exp_series(a * Rational(1, 2), maxdeg); };
    auto at = [&](const AssocSeries& a, const AssocSeries& b) { return freeseries::substitute(phi, {a, b}, maxdeg); };
    using freeseries::multiply;
    AssocSeries prod = half_exp(x);
    prod = multiply(prod, at(y, x), maxdeg);
    prod = multiply(prod, half_exp(y), maxdeg);
    prod = multiply(prod, at(z, y), maxdeg);
    prod = multiply(prod, half_exp(z), maxdeg);
    prod = multiply(prod, at(x, z), maxdeg);
    return prod - AssocSeries::one(maxdeg);
}

RelationReport check_hexagon(const AssocSeries& phi, int maxdeg) { return summarize(hexagon_defect(phi, maxdeg), maxdeg); }

AssocSeries duality_defect(const AssocSeries& phi, int maxdeg)
{
    AssocSeries p = phi.truncated(maxdeg);
    return freeseries::multiply(swapped(p, maxdeg), p, maxdeg) - AssocSeries::one(maxdeg);
}

RelationReport check_duality(const AssocSeries& phi, int maxdeg) { return summarize(duality_defect(phi, maxdeg), maxdeg); }

} // namespace hopfforge::infbraid
