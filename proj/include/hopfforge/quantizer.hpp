#pragma once

#include <map>
#include <memory>
#include <utility>

#include "hopfforge/associator.hpp"
#include "hopfforge/fusion.hpp"
#include "hopfforge/liebialg.hpp"
#include "hopfforge/report.hpp"

namespace hopfforge::quantizer {

inline constexpr int kFormatVersion = 1;

/// Thrown by build_hopf / quantize_twist when a post-condition fails.
class PostconditionError : public std::runtime_error {
public:
    explicit PostconditionError(Report r);
    [[nodiscard]] const Report& report() const { return report_; }

private:
    Report report_;
};

/// Exported tables: every entry whose inputs have total degree + N <= D.
struct HopfTables {
    std::map<std::pair<Word, Word>, PBWElement> product;
    std::map<Word, TensorElement> coproduct;
    std::map<Word, PBWElement> antipode;
    friend bool operator==(const HopfTables&, const HopfTables&) = default;
};

/// The quantized Hopf algebra F(M⊗M) ≅ U(𝔤)[[ħ]] mod ħ^{N+1}, in PBW
/// coordinates [1⊗u] ↦ u. Structure maps are computed on demand and memoized.
class HopfStructure {
public:
    HopfStructure(liebialg::LieBialgebra g, associator::AssociatorCoeffs phi, int order, int degree_cap,
                  Crossing crossing = Crossing::inverse);
    HopfStructure(const HopfStructure&) = delete;
    HopfStructure& operator=(const HopfStructure&) = delete;

    [[nodiscard]] const liebialg::LieBialgebra& bialgebra() const { return g_; }
    [[nodiscard]] const associator::AssociatorCoeffs& associator() const { return phi_coeffs_; }
    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] int degree_cap() const { return degree_cap_; }
    [[nodiscard]] Crossing crossing() const { return crossing_; }
    [[nodiscard]] const Enveloping& algebra() const { return *ug_; }
    [[nodiscard]] const std::shared_ptr<Enveloping>& algebra_ptr() const { return ug_; }
    [[nodiscard]] const InducedModule& module() const { return *m_; }
    [[nodiscard]] const TauMap& tau() const { return *tau_; }

    const PBWElement& product(const Word& a, const Word& b) const;
    [[nodiscard]] PBWElement product(const PBWElement& a, const PBWElement& b) const;
    const TensorElement& coproduct(const Word& u) const;
    [[nodiscard]] TensorElement coproduct(const PBWElement& a) const;
    const PBWElement& antipode(const Word& u) const;
    [[nodiscard]] PBWElement antipode(const PBWElement& a) const;
    [[nodiscard]] PBWElement unit() const { return PBWElement(order_, Word{}); }
    [[nodiscard]] static Rational counit(const Word& u) { return Enveloping::counit0(u); }
    [[nodiscard]] uenv::HPoly counit(const PBWElement& a) const;

    /// Triple product of x, y, z computed through the three-pair comonoidal map
    /// F(M⊗M⊗M⊗M) → F(M⊗M)^{⊗3} and the ε-collapse of both middle factors,
    /// independently of the binary product.
    const PBWElement& simplicial_product(const Word& x, const Word& y, const Word& z) const;

    /// Normal-ordered monomials of degree <= d.
    [[nodiscard]] std::vector<Word> monomials(int d) const { return ug_->monomials(d); }

    /// Fills the memo tables for the exported range, in parallel.
    void populate() const;
    [[nodiscard]] HopfTables tables() const;

private:
    liebialg::LieBialgebra g_;
    associator::AssociatorCoeffs phi_coeffs_;
    freeseries::AssocSeries phi_;
    int order_;
    int degree_cap_;
    Crossing crossing_;
    std::shared_ptr<Enveloping> ug_;
    std::unique_ptr<InducedModule> m_;
    std::unique_ptr<TauMap> tau_;
    std::unique_ptr<FusionCoproduct> coproduct_;
    MemoTable<Word, PBWElement, WordHash> antipode_;
    MemoTable<TensorKey, TensorElement, TensorKeyHash> triple_tau_;
    MemoTable<TensorKey, PBWElement, TensorKeyHash> simplicial_;

    void check_working_cap(std::size_t input_degree) const;
    const TensorElement& triple_tau(const Word& x, const Word& y, const Word& z) const;
};

struct BuildOptions {
    Crossing crossing = Crossing::inverse;
    /// Check (a) classical tables at ħ⁰, (b) product classical mod ħ², (c) the
    /// first-order coproduct on generators; throw PostconditionError on failure.
    bool check_postconditions = true;
};

/// Smallest degree cap that tables generators: N + 1.
int minimal_degree_cap(int order);

/// Validates g and Φ, builds and populates the tables, and checks the post-conditions.
std::shared_ptr<const HopfStructure> build_hopf(const liebialg::LieBialgebra& g,
                                                const associator::AssociatorCoeffs& phi, int order, int degree_cap,
                                                const BuildOptions& options = {});

/// The post-conditions (a), (b), (c) as a report.
Report postconditions(const HopfStructure& h);

/// Hopf axioms mod ħ^{N+1} on all monomials of degree <= test_degree.
/// Requires test_degree + N <= D.
Report verify_hopf(const HopfStructure& h, int test_degree);

// Tensor helpers over a HopfStructure.

/// Product in H⊗...⊗H, factorwise.
TensorElement tensor_product(const HopfStructure& h, const TensorElement& a, const TensorElement& b);
/// Applies Δ to factor `pos`, yielding one more factor.
TensorElement coproduct_on(const HopfStructure& h, int pos, const TensorElement& e);
/// Applies ε to factor `pos`, removing it.
TensorElement counit_on(int pos, const TensorElement& e);
/// Swaps the two factors of a k=2 element.
TensorElement flip(const TensorElement& e);
/// a ⊗ b as a k=2 element.
TensorElement outer(const PBWElement& a, const PBWElement& b, int order);

// Twist quantization

struct TwistResult {
    liebialg::Matrix j;
    TensorElement J;
    /// I on monomials of degree <= the test degree.
    std::map<Word, PBWElement> I;
    std::shared_ptr<const HopfStructure> H;
    std::shared_ptr<const HopfStructure> Hj;
    Report checks;
};

struct TwistOptions {
    int test_degree = 1;
    bool check_postconditions = true;
};

/// Quantizes the twist j: H = F(M⊗M), H_j = F(N⊗N) built from the twisted
/// bialgebra, the bimodule F(M⊗N), J with J·(1⊗1) = Δ(1) in F(M⊗N), and I
/// with a·1 = 1·I(a).
TwistResult quantize_twist(const liebialg::LieBialgebra& g, const liebialg::Matrix& j,
                           const associator::AssociatorCoeffs& phi, int order, int degree_cap,
                           const TwistOptions& options = {});

// File formats

Json hopf_to_json(const HopfStructure& h);
std::string serialize_hopf(const HopfStructure& h);
/// Reads a Hopf file: rebuilds the structure from the embedded bialgebra and
/// associator (hash-checked) and returns it together with the stored tables.
std::pair<std::shared_ptr<const HopfStructure>, HopfTables> parse_hopf(const std::string& text);

Json twist_to_json(const TwistResult& t);
std::string serialize_twist(const TwistResult& t);

} // namespace hopfforge::quantizer
