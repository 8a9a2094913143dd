#include <sstream>

#include "hopfforge/quantizer.hpp"

namespace hopfforge::quantizer {

PostconditionError::PostconditionError(Report r)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "post-condition failure:\n" << r;
          return os.str();
      }()),
      report_(std::move(r))
{
}

HopfStructure::HopfStructure(liebialg::LieBialgebra g, associator::AssociatorCoeffs phi, int order, int degree_cap,
                             Crossing crossing)
    : g_(std::move(g)), phi_coeffs_(std::move(phi)), order_(order), degree_cap_(degree_cap), crossing_(crossing)
{
    if (order < 0)
        throw std::invalid_argument("order must be non-negative");
    if (degree_cap < 0)
        throw std::invalid_argument("degree cap must be non-negative");
    if (phi_coeffs_.max_degree < order)
        throw std::invalid_argument("associator degree " + std::to_string(phi_coeffs_.max_degree) +
                                    " is below the order " + std::to_string(order));
    phi_ = phi_coeffs_.phi(order);
    // Room for iterated products of tabled monomials during verification.
    ug_ = std::make_shared<Enveloping>(g_.bracket, 3 * degree_cap + 2 * order + 1);
    m_ = std::make_unique<InducedModule>(ug_, g_);
    tau_ = std::make_unique<TauMap>(*m_, *m_, *m_, phi_, order_);
    coproduct_ = std::make_unique<FusionCoproduct>(*m_, *m_, phi_, order_, crossing_);
}

void HopfStructure::check_working_cap(std::size_t input_degree) const
{
    std::size_t need = input_degree + static_cast<std::size_t>(order_) + 1;
    if (need > static_cast<std::size_t>(ug_->degree_cap()))
        throw uenv::DegreeOverflow("input degree " + std::to_string(input_degree) + " needs working cap " +
                                   std::to_string(need) + " > " + std::to_string(ug_->degree_cap()));
}

const PBWElement& HopfStructure::product(const Word& a, const Word& b) const
{
    check_working_cap(a.size() + b.size());
    return tau_->collapse_inverse(a, b);
}

PBWElement HopfStructure::product(const PBWElement& a, const PBWElement& b) const
{
    return extend_bilinear(a, b, order_, [&](const Word& u, const Word& v) -> const PBWElement& {
        return product(u, v);
    });
}

const TensorElement& HopfStructure::coproduct(const Word& u) const
{
    check_working_cap(u.size());
    return coproduct_->apply(u);
}

TensorElement HopfStructure::coproduct(const PBWElement& a) const
{
    return extend_linear<TensorElement>(a, order_, [&](const Word& u) -> const TensorElement& { return coproduct(u); });
}

const PBWElement& HopfStructure::antipode(const Word& u) const
{
    check_working_cap(u.size());
    return antipode_.get(u, [&] {
        Factors f{m_.get(), m_.get()};
        uenv::Grouping grouping = uenv::Grouping::parse("(01)");
        TensorElement e = uenv::apply_braiding(f, grouping, 0, 2, true, TensorElement(order_, TensorKey{Word{}, u}));
        return reduce2(*ug_, e);
    });
}

PBWElement HopfStructure::antipode(const PBWElement& a) const
{
    return extend_linear<PBWElement>(a, order_, [&](const Word& u) -> const PBWElement& { return antipode(u); });
}

uenv::HPoly HopfStructure::counit(const PBWElement& a) const { return a.coeff(Word{}); }

const TensorElement& HopfStructure::triple_tau(const Word& x, const Word& y, const Word& z) const
{
    return triple_tau_.get(TensorKey{x, y, z}, [&] {
        TensorElement lifted(order_);
        for (const auto& [w, c] : ug_->antipode0(x))
            for (const auto& [k, d] : ug_->coproduct0(y))
                for (const auto& [v, e] : ug_->multiply_monomials(k[1], z))
                    for (const auto& [k2, f] : ug_->coproduct0(k[0]))
                        lifted.add(0, TensorKey{w, Word{}, Word{}, k2[0], k2[1], v}, c * d * e * f);
        Factors f6(6, m_.get());
        lifted = transport(f6,
                           {"(((0(12))(34))5)", "((((01)2)(34))5)", "(((01)(2(34)))5)", "(((01)((23)4))5)",
                            "((((01)(23))4)5)", "(((01)(23))(45))"},
                           phi_, std::move(lifted));
        TensorElement out = reduce_pairs(*ug_, lifted);
        if (!(out.at(0) == TensorComb(TensorKey{x, y, z})))
            throw InternalCheckFailure("three-pair comonoidal map is not the identity at h^0");
        return out;
    });
}

const PBWElement& HopfStructure::simplicial_product(const Word& x, const Word& y, const Word& z) const
{
    check_working_cap(x.size() + y.size() + z.size());
    return simplicial_.get(TensorKey{x, y, z}, [&] {
        auto apply = [&](const TensorElement& v) {
            return extend_linear<TensorElement>(v, order_, [&](const TensorKey& k) -> const TensorElement& {
                return triple_tau(k[0], k[1], k[2]);
            });
        };
        // Neumann series for the inverse; the correction raises the ħ-power.
        TensorElement result(order_, TensorKey{x, y, z});
        TensorElement term = result;
        for (int k = 1; k <= order_; ++k) {
            term = (apply(term) - term) * Rational(-1);
            if (term.is_zero())
                break;
            result += term;
        }
        return extend_linear<PBWElement>(result, order_, [&](const TensorKey& k) {
            return PBWElement(order_, ug_->multiply(ug_->multiply_monomials(k[0], k[1]), WordComb(k[2])));
        });
    });
}

void HopfStructure::populate() const
{
    std::vector<std::pair<Word, Word>> pairs;
    std::vector<Word> singles;
    int top = degree_cap_ - order_;
    if (top < 0)
        return;
    auto mons = monomials(top);
    for (const auto& a : mons) {
        singles.push_back(a);
        for (const auto& b : mons)
            if (static_cast<int>(a.size() + b.size()) <= top)
                pairs.emplace_back(a, b);
    }
    parallel_for(pairs.size(), [&](std::size_t i) { (void)product(pairs[i].first, pairs[i].second); });
    parallel_for(singles.size(), [&](std::size_t i) {
        (void)coproduct(singles[i]);
        (void)antipode(singles[i]);
    });
}

HopfTables HopfStructure::tables() const
{
    HopfTables t;
    int top = degree_cap_ - order_;
    if (top < 0)
        return t;
    auto mons = monomials(top);
    for (const auto& a : mons) {
        t.coproduct.emplace(a, coproduct(a));
        t.antipode.emplace(a, antipode(a));
        for (const auto& b : mons)
            if (static_cast<int>(a.size() + b.size()) <= top)
                t.product.emplace(std::make_pair(a, b), product(a, b));
    }
    return t;
}

int minimal_degree_cap(int order) { return order + 1; }

Report postconditions(const HopfStructure& h)
{
    const Enveloping& ug = h.algebra();
    const auto& g = h.bialgebra();
    HopfTables t = h.tables();
    Report r;

    std::string classical_fail, first_order_fail;
    for (const auto& [ab, v] : t.product) {
        if (classical_fail.empty() && !(v.at(0) == ug.multiply_monomials(ab.first, ab.second)))
            classical_fail = "product";
        if (first_order_fail.empty() && h.order() >= 1 && !v.at(1).empty())
            first_order_fail = "h^1 product term is nonzero";
    }
    for (const auto& [u, v] : t.coproduct)
        if (classical_fail.empty() && !(v.at(0) == ug.coproduct0(u)))
            classical_fail = "coproduct";
    for (const auto& [u, v] : t.antipode)
        if (classical_fail.empty() && !(v.at(0) == ug.antipode0(u)))
            classical_fail = "antipode";
    r.add("classical limit", classical_fail.empty(), classical_fail);
    r.add("product classical mod h^2", first_order_fail.empty(), first_order_fail);

    std::string cob_fail;
    for (int x = 0; x < g.dim && h.degree_cap() >= h.order() + 1; ++x) {
        TensorComb expected0 = ug.coproduct0(Word{x});
        TensorComb expected1;
        for (int a = 0; a < g.dim; ++a)
            for (int b = 0; b < g.dim; ++b)
                expected1.add(TensorKey{Word{a}, Word{b}}, g.cobracket[x][a][b] * Rational(1, 2));
        const TensorElement& d = h.coproduct(Word{x});
        bool ok = d.at(0) == expected0 && (h.order() < 1 || d.at(1) == expected1);
        if (!ok && cob_fail.empty())
            cob_fail = "generator " + g.names[static_cast<std::size_t>(x)];
    }
    r.add("first-order coproduct", cob_fail.empty(), cob_fail);
    return r;
}

std::shared_ptr<const HopfStructure> build_hopf(const liebialg::LieBialgebra& g,
                                                const associator::AssociatorCoeffs& phi, int order, int degree_cap,
                                                const BuildOptions& options)
{
    if (degree_cap < minimal_degree_cap(order))
        throw std::invalid_argument("degree cap " + std::to_string(degree_cap) + " is below N + 1 = " +
                                    std::to_string(minimal_degree_cap(order)));
    Report input = liebialg::validate(g);
    if (!input.passed())
        throw std::invalid_argument("bialgebra fails validation");
    Report assoc = associator::verify(phi, std::min(order, phi.max_degree));
    if (!assoc.passed())
        throw std::invalid_argument("associator fails verification");
    auto h = std::make_shared<HopfStructure>(g, phi, order, degree_cap, options.crossing);
    h->populate();
    if (options.check_postconditions) {
        Report r = postconditions(*h);
        if (!r.passed())
            throw PostconditionError(r);
    }
    return h;
}

} // namespace hopfforge::quantizer
