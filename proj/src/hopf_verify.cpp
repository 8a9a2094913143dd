#include "hopfforge/quantizer.hpp"

namespace hopfforge::quantizer {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

// Tensor product of per-factor series, truncated at `order`.
TensorElement tensor_of(const std::vector<PBWElement>& parts, int order)
{
    TensorElement acc(order, TensorKey{});
    for (const auto& part : parts) {
        TensorElement next(order);
        for (int p = 0; p <= order; ++p)
            for (int q = 0; p + q <= std::min(order, part.order()); ++q)
                for (const auto& [k, a] : acc.at(p))
                    for (const auto& [w, b] : part.at(q)) {
                        TensorKey nk = k;
                        nk.push_back(w);
                        next.add(p + q, nk, a * b);
                    }
        acc = std::move(next);
    }
    return acc;
}

std::string name_of(const liebialg::LieBialgebra& g, const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0)
            s += ' ';
        s += g.names[z(w[i])];
    }
    return s;
}

std::string names_of(const liebialg::LieBialgebra& g, std::initializer_list<Word> ws)
{
    std::string s = "(";
    bool first = true;
    for (const auto& w : ws) {
        if (!first)
            s += ", ";
        s += name_of(g, w);
        first = false;
    }
    return s + ")";
}

// Records the first failing input and the lowest ħ-power of the discrepancy.
class Family {
public:
    explicit Family(std::string name) : name_(std::move(name)) {}
    template <class S>
    void expect_equal(const S& lhs, const S& rhs, const std::string& where)
    {
        if (!detail_.empty())
            return;
        auto diff = lhs - rhs;
        int v = diff.valuation();
        if (v >= 0)
            detail_ = where + " at h^" + std::to_string(v);
    }
    void record(Report& r) const { r.add(name_, detail_.empty(), detail_); }

private:
    std::string name_;
    std::string detail_;
};

} // namespace

TensorElement tensor_product(const HopfStructure& h, const TensorElement& a, const TensorElement& b)
{
    int order = h.order();
    TensorElement out(order);
    for (int p = 0; p <= std::min(order, a.order()); ++p)
        for (int q = 0; p + q <= std::min(order, b.order()); ++q)
            for (const auto& [ka, ca] : a.at(p))
                for (const auto& [kb, cb] : b.at(q)) {
                    if (ka.size() != kb.size())
                        throw std::invalid_argument("tensor_product: factor counts differ");
                    std::vector<PBWElement> parts;
                    for (std::size_t i = 0; i < ka.size(); ++i)
                        parts.push_back(h.product(ka[i], kb[i]));
                    out.add(tensor_of(parts, order), ca * cb, p + q);
                }
    return out;
}

TensorElement coproduct_on(const HopfStructure& h, int pos, const TensorElement& e)
{
    int order = h.order();
    TensorElement out(order);
    for (int p = 0; p <= std::min(order, e.order()); ++p)
        for (const auto& [key, c] : e.at(p)) {
            const TensorElement& d = h.coproduct(key[z(pos)]);
            for (int q = 0; p + q <= order; ++q)
                for (const auto& [dk, dc] : d.at(q)) {
                    TensorKey nk;
                    for (int i = 0; i < static_cast<int>(key.size()); ++i) {
                        if (i == pos) {
                            nk.push_back(dk[0]);
                            nk.push_back(dk[1]);
                        } else {
                            nk.push_back(key[z(i)]);
                        }
                    }
                    out.add(p + q, nk, c * dc);
                }
        }
    return out;
}

TensorElement counit_on(int pos, const TensorElement& e)
{
    TensorElement out(e.order());
    for (int p = 0; p <= e.order(); ++p)
        for (const auto& [key, c] : e.at(p)) {
            if (!key[z(pos)].empty())
                continue;
            TensorKey nk = key;
            nk.erase(nk.begin() + pos);
            out.add(p, nk, c);
        }
    return out;
}

TensorElement flip(const TensorElement& e)
{
    TensorElement out(e.order());
    for (int p = 0; p <= e.order(); ++p)
        for (const auto& [key, c] : e.at(p))
            out.add(p, TensorKey{key[1], key[0]}, c);
    return out;
}

TensorElement outer(const PBWElement& a, const PBWElement& b, int order) { return tensor_of({a, b}, order); }

Report verify_hopf(const HopfStructure& h, int test_degree)
{
    if (test_degree < 0 || test_degree + h.order() > h.degree_cap())
        throw std::invalid_argument("verify_hopf: test degree " + std::to_string(test_degree) + " + N exceeds D = " +
                                    std::to_string(h.degree_cap()));
    const auto& g = h.bialgebra();
    int order = h.order();
    auto mons = h.monomials(test_degree);
    auto elem = [&](const Word& w) { return PBWElement(order, w); };

    // Warm the binary product memo in parallel; everything below reads it.
    std::vector<std::pair<Word, Word>> pairs;
    for (const auto& a : mons)
        for (const auto& b : mons)
            pairs.emplace_back(a, b);
    parallel_for(pairs.size(), [&](std::size_t i) { (void)h.product(pairs[i].first, pairs[i].second); });

    Report r;
    Family assoc("associativity"), unit("unit"), coassoc("coassociativity"), counit("counit"),
        bialg("bialgebra compatibility"), anti_left("antipode m(S x id)D = ue"), anti_right("antipode m(id x S)D = ue"),
        simplicial("simplicial bracketing");

    std::vector<std::tuple<Word, Word, Word>> triples;
    for (const auto& a : mons)
        for (const auto& b : mons)
            for (const auto& c : mons)
                triples.emplace_back(a, b, c);
    std::vector<PBWElement> left(triples.size()), right(triples.size()), simp(triples.size());
    parallel_for(triples.size(), [&](std::size_t i) {
        const auto& [a, b, c] = triples[i];
        left[i] = h.product(h.product(a, b), elem(c));
        right[i] = h.product(elem(a), h.product(b, c));
        simp[i] = h.simplicial_product(a, b, c);
    });
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const auto& [a, b, c] = triples[i];
        std::string where = names_of(g, {a, b, c});
        assoc.expect_equal(left[i], right[i], where);
        simplicial.expect_equal(simp[i], left[i], where + " vs left bracketing");
        simplicial.expect_equal(simp[i], right[i], where + " vs right bracketing");
    }

    for (const auto& a : mons) {
        std::string where = names_of(g, {a});
        PBWElement ea = elem(a);
        unit.expect_equal(h.product(h.unit(), ea), ea, where + " left");
        unit.expect_equal(h.product(ea, h.unit()), ea, where + " right");

        const TensorElement& d = h.coproduct(a);
        coassoc.expect_equal(coproduct_on(h, 0, d), coproduct_on(h, 1, d), where);
        TensorElement single(order, TensorKey{a});
        counit.expect_equal(counit_on(0, d), single, where + " left");
        counit.expect_equal(counit_on(1, d), single, where + " right");

        PBWElement eps_unit(order);
        eps_unit.add(0, Word{}, HopfStructure::counit(a));
        PBWElement sl(order), sr(order);
        for (int p = 0; p <= order; ++p)
            for (const auto& [k, c] : d.at(p)) {
                sl.add(h.product(h.antipode(k[0]), elem(k[1])), c, p);
                sr.add(h.product(elem(k[0]), h.antipode(k[1])), c, p);
            }
        anti_left.expect_equal(sl, eps_unit, where);
        anti_right.expect_equal(sr, eps_unit, where);

        for (const auto& b : mons) {
            TensorElement lhs = h.coproduct(h.product(a, b));
            TensorElement rhs = tensor_product(h, d, h.coproduct(b));
            bialg.expect_equal(lhs, rhs, names_of(g, {a, b}));
        }
    }

    for (const Family* f : {&assoc, &unit, &coassoc, &counit, &bialg, &anti_left, &anti_right, &simplicial})
        f->record(r);
    return r;
}

} // namespace hopfforge::quantizer
