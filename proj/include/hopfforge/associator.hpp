#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfforge/free_series.hpp"
#include "hopfforge/report.hpp"
#include "hopfforge/serialization.hpp"

namespace hopfforge::associator {

inline constexpr int kDefaultDegreeCap = 5;
inline constexpr int kFormatVersion = 1;

/// log Φ on the Lyndon basis of the free Lie algebra on x, y.
struct AssociatorCoeffs {
    int max_degree = 0;
    freeseries::LieElement log_phi;

    /// Φ = exp(log Φ) truncated at `cap` (at most max_degree).
    [[nodiscard]] freeseries::AssocSeries phi(int cap) const;
    [[nodiscard]] const std::vector<Rational>& degree(int d) const { return log_phi.by_degree.at(d); }
    friend bool operator==(const AssociatorCoeffs&, const AssociatorCoeffs&) = default;
};

/// All coefficients zero, i.e. Φ = 1.
AssociatorCoeffs trivial(int max_degree);

enum class Relation { duality, hexagon, pentagon };

struct SolveOptions {
    int degree_cap = kDefaultDegreeCap;
    /// Order in which equation rows are stacked. The solution does not depend on it.
    std::vector<Relation> order{Relation::duality, Relation::hexagon, Relation::pentagon};
    /// Per degree, values for the free parameters (one per nullspace vector of
    /// that degree's system). Degrees not listed use zero.
    std::map<int, std::vector<Rational>> free_parameters;
};

/// Thrown when some degree's linear system is inconsistent.
class SolveError : public std::runtime_error {
public:
    SolveError(int degree, const std::string& what) : std::runtime_error(what), degree_(degree) {}
    [[nodiscard]] int degree() const { return degree_; }

private:
    int degree_;
};

struct SolveTrace {
    /// Number of free parameters found at each degree.
    std::map<int, int> free_parameters;
    /// Number of independent equations at each degree.
    std::map<int, int> rank;
};

/// Degree-by-degree solve of duality, hexagon and pentagon with ψ₁ = 0.
AssociatorCoeffs solve(int max_degree, const SolveOptions& options = {}, SolveTrace* trace = nullptr);

/// Group-likeness, pentagon, hexagon and duality, one entry per relation and degree.
Report verify(const AssociatorCoeffs& phi, int maxdeg);

Json to_json(const AssociatorCoeffs& phi);
AssociatorCoeffs from_json(const Json& j);
std::string serialize(const AssociatorCoeffs& phi);
AssociatorCoeffs parse(const std::string& text);
/// Fingerprint of the canonical JSON form.
std::string hash(const AssociatorCoeffs& phi);

} // namespace hopfforge::associator
