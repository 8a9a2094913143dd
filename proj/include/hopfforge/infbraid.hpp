#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfforge/free_series.hpp"
#include "hopfforge/report.hpp"

namespace hopfforge::infbraid {

/// Generator t^{ij} of the infinitesimal-braid algebra, strands 0-based, i < j.
struct DKGenerator {
    int i = 0;
    int j = 1;
    friend bool operator==(const DKGenerator&, const DKGenerator&) = default;
};

/// Elements are AssocSeries over the generator letters of a DKAlgebra.
using DKElement = freeseries::AssocSeries;

/// Per-degree basis of t_n: standard words plus the echelon rows of the
/// relation ideal used to rewrite arbitrary words onto them.
struct GradedBasis {
    int degree = 0;
    std::vector<Word> basis;
    /// leading word -> its normal form (a combination of basis words).
    std::unordered_map<Word, WordComb, WordHash> rewrite;
};

/// The infinitesimal-braid algebra on 3 or 4 strands: the free algebra on
/// t^{ij} modulo [t^{ij}, t^{ik} + t^{jk}] and [t^{ij}, t^{kl}] (disjoint).
class DKAlgebra {
public:
    explicit DKAlgebra(int strands, int max_degree = 6);

    [[nodiscard]] int strands() const { return strands_; }
    [[nodiscard]] int num_generators() const { return static_cast<int>(gens_.size()); }
    [[nodiscard]] int max_degree() const { return max_degree_; }
    [[nodiscard]] int letter(int i, int j) const;
    [[nodiscard]] DKGenerator generator(int letter) const { return gens_.at(static_cast<std::size_t>(letter)); }

    /// Degree-one element t^{ij}.
    [[nodiscard]] DKElement t(int i, int j, int cap) const;
    /// t^{A,B} = sum over i in A, j in B of t^{ij}.
    [[nodiscard]] DKElement t_blocks(const std::vector<int>& a, const std::vector<int>& b, int cap) const;

    /// Defining degree-two relations.
    [[nodiscard]] const std::vector<WordComb>& relations() const { return relations_; }

    /// Built on first use; later calls return the cached basis.
    const GradedBasis& graded_basis(int degree) const;
    [[nodiscard]] int dimension(int degree) const { return static_cast<int>(graded_basis(degree).basis.size()); }

    /// Expresses `e` on basis words. Throws std::out_of_range if e has terms
    /// beyond max_degree().
    [[nodiscard]] DKElement normal_form(const DKElement& e) const;

private:
    int strands_;
    int max_degree_;
    std::vector<DKGenerator> gens_;
    std::vector<WordComb> relations_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<GradedBasis>> cache_;

    const GradedBasis& build_locked(int degree) const;
};

struct RelationReport {
    bool passed = true;
    int first_failing_degree = -1;
    /// Number of nonzero residual coordinates per degree.
    std::map<int, int> residual_terms;
    Report as_report(const std::string& name) const;
};

/// Pentagon Φ^{2,3,4} Φ^{1,23,4} Φ^{1,2,3} = Φ^{1,2,34} Φ^{12,3,4} in t_4 up to maxdeg.
RelationReport check_pentagon(const freeseries::AssocSeries& phi, int maxdeg);
/// e^{x/2} Φ(y,x) e^{y/2} Φ(z,y) e^{z/2} Φ(x,z) = 1 with z = -x-y.
RelationReport check_hexagon(const freeseries::AssocSeries& phi, int maxdeg);
/// Φ(y,x) Φ(x,y) = 1.
RelationReport check_duality(const freeseries::AssocSeries& phi, int maxdeg);

/// Shared 4-strand algebra used by the pentagon checks and the solver.
const DKAlgebra& four_strand_algebra();

/// Both sides of the pentagon, computed in the free algebra on the six t^{ij}.
std::pair<DKElement, DKElement> pentagon_sides(const freeseries::AssocSeries& phi, int maxdeg);
/// Left side of the hexagon minus 1, in the free algebra on x, y.
freeseries::AssocSeries hexagon_defect(const freeseries::AssocSeries& phi, int maxdeg);
/// Φ(y,x) Φ(x,y) - 1.
freeseries::AssocSeries duality_defect(const freeseries::AssocSeries& phi, int maxdeg);

} // namespace hopfforge::infbraid
