#include "hopfforge/associator.hpp"

#include <set>

#include "hopfforge/infbraid.hpp"
#include "hopfforge/sparse_matrix.hpp"

namespace hopfforge::associator {

using freeseries::AssocSeries;

AssocSeries AssociatorCoeffs::phi(int cap) const { return freeseries::exp(log_phi, std::min(cap, max_degree)).truncated(cap); }

AssociatorCoeffs trivial(int max_degree)
{
    AssociatorCoeffs c;
    c.max_degree = max_degree;
    c.log_phi.num_generators = 2;
    for (int d = 1; d <= max_degree; ++d)
        c.log_phi.by_degree[d] = std::vector<Rational>(freeseries::lyndon_words(2, d).size());
    return c;
}

namespace {

// Degree-d part of one relation's defect, as word -> coefficient.
WordComb defect(Relation rel, const AssocSeries& phi, int d)
{
    switch (rel) {
    case Relation::duality:
        return infbraid::duality_defect(phi, d).degree_part(d).terms();
    case Relation::hexagon:
        return infbraid::hexagon_defect(phi, d).degree_part(d).terms();
    case Relation::pentagon: {
        auto [lhs, rhs] = infbraid::pentagon_sides(phi, d);
        return infbraid::four_strand_algebra().normal_form((lhs - rhs).degree_part(d)).terms();
    }
    }
    return {};
}

} // namespace

AssociatorCoeffs solve(int max_degree, const SolveOptions& options, SolveTrace* trace)
{
    if (max_degree < 1 || max_degree > options.degree_cap)
        throw std::invalid_argument("associator degree must be between 1 and " + std::to_string(options.degree_cap));
    AssociatorCoeffs result = trivial(max_degree);

    for (int d = 2; d <= max_degree; ++d) {
        const std::size_t n = freeseries::lyndon_words(2, d).size();
        auto evaluate = [&](const std::vector<Rational>& psi) {
            AssociatorCoeffs trial = result;
            trial.log_phi.by_degree[d] = psi;
            AssocSeries phi = trial.phi(d);
            std::vector<WordComb> out;
            for (Relation rel : options.order)
                out.push_back(defect(rel, phi, d));
            return out;
        };
        // The degree-d defect is affine in ψ_d.
        auto base = evaluate(std::vector<Rational>(n));
        std::vector<std::vector<WordComb>> columns;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> unit(n);
            unit[i] = Rational(1);
            auto v = evaluate(unit);
            for (std::size_t r = 0; r < v.size(); ++r)
                v[r] -= base[r];
            columns.push_back(std::move(v));
        }

        ratlin::SparseMatrix a(0, static_cast<int>(n));
        ratlin::Column b;
        for (std::size_t r = 0; r < options.order.size(); ++r) {
            std::set<Word> words;
            for (const auto& [w, c] : base[r])
                words.insert(w);
            for (const auto& col : columns)
                for (const auto& [w, c] : col[r])
                    words.insert(w);
            for (const auto& w : words) {
                int row = a.append_row();
                for (std::size_t i = 0; i < n; ++i)
                    a.set(row, static_cast<int>(i), columns[i][r].coeff(w));
                b.push_back(-base[r].coeff(w));
            }
        }

        auto sol = ratlin::solve_affine(a, b);
        if (!sol.particular)
            throw SolveError(d, "associator equations are inconsistent at degree " + std::to_string(d));
        std::vector<Rational> psi = *sol.particular;
        if (auto it = options.free_parameters.find(d); it != options.free_parameters.end()) {
            if (it->second.size() != sol.nullspace.size())
                throw std::invalid_argument("degree " + std::to_string(d) + " has " + std::to_string(sol.nullspace.size()) +
                                            " free parameters");
            for (std::size_t k = 0; k < sol.nullspace.size(); ++k)
                for (std::size_t i = 0; i < n; ++i)
                    psi[i] += it->second[k] * sol.nullspace[k][i];
        }
        result.log_phi.by_degree[d] = std::move(psi);
        if (trace) {
            trace->free_parameters[d] = static_cast<int>(sol.nullspace.size());
            trace->rank[d] = static_cast<int>(n - sol.nullspace.size());
        }
    }
    return result;
}

Report verify(const AssociatorCoeffs& phi, int maxdeg)
{
    if (maxdeg > phi.max_degree)
        throw std::invalid_argument("verify: degree exceeds the associator's max_degree");
    Report report;
    AssocSeries series = phi.phi(maxdeg);

    auto lg = freeseries::log(series, 2, maxdeg);
    for (int d = 1; d <= maxdeg; ++d) {
        bool ok = lg.lie && lg.lie->by_degree.at(d) == phi.log_phi.by_degree.at(d);
        report.add("group-like degree " + std::to_string(d), ok, ok ? "" : lg.diagnostic);
    }
    auto add = [&](const std::string& name, const infbraid::RelationReport& r) {
        for (int d = 1; d <= maxdeg; ++d) {
            int n = r.residual_terms.count(d) ? r.residual_terms.at(d) : 0;
            report.add(name + " degree " + std::to_string(d), n == 0,
                       n == 0 ? "" : std::to_string(n) + " nonzero residual coordinates");
        }
    };
    add("pentagon", infbraid::check_pentagon(series, maxdeg));
    add("hexagon", infbraid::check_hexagon(series, maxdeg));
    add("duality", infbraid::check_duality(series, maxdeg));
    return report;
}

Json to_json(const AssociatorCoeffs& phi)
{
    Json coeffs = Json::array();
    for (int d = 1; d <= phi.max_degree; ++d) {
        auto words = freeseries::lyndon_words(2, d);
        const auto& c = phi.log_phi.by_degree.at(d);
        Json entries = Json::array();
        for (std::size_t i = 0; i < words.size(); ++i) {
            Json e;
            e["word"] = freeseries::bracket_string(words[i]);
            put_rational(e, c[i]);
            entries.push_back(std::move(e));
        }
        coeffs.push_back(Json{{"degree", d}, {"entries", std::move(entries)}});
    }
    return Json{{"format_version", kFormatVersion}, {"max_degree", phi.max_degree}, {"basis", "lyndon"}, {"coefficients", coeffs}};
}

AssociatorCoeffs from_json(const Json& j)
{
    try {
        if (j.at("format_version").get<int>() != kFormatVersion)
            throw FormatError("unsupported associator format_version");
        if (j.at("basis").get<std::string>() != "lyndon")
            throw FormatError("associator basis must be \"lyndon\"");
        int max_degree = j.at("max_degree").get<int>();
        if (max_degree < 1)
            throw FormatError("associator max_degree must be >= 1");
        AssociatorCoeffs out = trivial(max_degree);
        std::set<int> seen_degrees;
        for (const auto& block : j.at("coefficients")) {
            int d = block.at("degree").get<int>();
            if (d < 1 || d > max_degree || !seen_degrees.insert(d).second)
                throw FormatError("invalid or repeated degree " + std::to_string(d));
            auto words = freeseries::lyndon_words(2, d);
            std::set<std::size_t> seen;
            for (const auto& e : block.at("entries")) {
                Word w = freeseries::parse_bracket_string(e.at("word").get<std::string>());
                auto it = std::find(words.begin(), words.end(), w);
                if (it == words.end())
                    throw FormatError("word of wrong degree: " + e.at("word").get<std::string>());
                std::size_t idx = static_cast<std::size_t>(it - words.begin());
                if (!seen.insert(idx).second)
                    throw FormatError("repeated word " + e.at("word").get<std::string>());
                out.log_phi.by_degree[d][idx] = get_rational(e);
            }
        }
        for (const auto& c : out.log_phi.by_degree.at(1))
            if (!c.is_zero())
                throw FormatError("degree-1 coefficients must be zero");
        return out;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed associator file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("malformed associator file: ") + e.what());
    }
}

std::string serialize(const AssociatorCoeffs& phi) { return dump_file(to_json(phi)); }

AssociatorCoeffs parse(const std::string& text) { return from_json(parse_file_text(text)); }

std::string hash(const AssociatorCoeffs& phi) { return fingerprint(to_json(phi)); }

} // namespace hopfforge::associator
