#include "hopfforge/quantizer.hpp"
#include "hopfforge/serialization.hpp"

namespace hopfforge::quantizer {

namespace {

Json word_to_json(const Word& w) { return Json(w.letters()); }

Word word_from_json(const Json& j, int dim)
{
    if (!j.is_array())
        throw FormatError("monomial must be an array of basis indices");
    Word w;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<int>() < 0 || x.get<int>() >= dim)
            throw FormatError("monomial index out of range");
        w.push_back(x.get<int>());
    }
    if (!w.is_nondecreasing())
        throw FormatError("monomial is not normal-ordered");
    return w;
}

// [[power, num, den], ...] for the nonzero powers.
Json hpoly_to_json(const uenv::HPoly& h)
{
    Json out = Json::array();
    for (std::size_t p = 0; p < h.coeffs.size(); ++p)
        if (!h.coeffs[p].is_zero())
            out.push_back(
                {p, integer_to_json(h.coeffs[p].numerator()), integer_to_json(h.coeffs[p].denominator())});
    return out;
}

template <class Key, class F>
Json series_to_json(const uenv::HSeries<Key>& s, F&& key_fields)
{
    std::map<Key, uenv::HPoly> by_key;
    for (int p = 0; p <= s.order(); ++p)
        for (const auto& [k, c] : s.at(p)) {
            auto& h = by_key[k];
            h.coeffs.resize(static_cast<std::size_t>(s.order() + 1));
            h.coeffs[static_cast<std::size_t>(p)] = c;
        }
    Json out = Json::array();
    for (const auto& [k, h] : by_key) {
        Json entry = key_fields(k);
        entry["coeff"] = hpoly_to_json(h);
        out.push_back(std::move(entry));
    }
    return out;
}

template <class Key, class F>
uenv::HSeries<Key> series_from_json(const Json& j, int order, F&& key_of)
{
    if (!j.is_array())
        throw FormatError("series must be an array");
    uenv::HSeries<Key> s(order);
    for (const auto& entry : j) {
        Key k = key_of(entry);
        if (!entry.contains("coeff") || !entry["coeff"].is_array())
            throw FormatError("series entry without coeff");
        for (const auto& t : entry["coeff"]) {
            if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer())
                throw FormatError("coefficient must be [power, num, den]");
            int p = t[0].get<int>();
            if (p < 0 || p > order)
                throw FormatError("coefficient power out of range");
            s.add(p, k, Rational::from_parts(integer_from_json(t[1]), integer_from_json(t[2])));
        }
    }
    return s;
}

Json pbw_to_json(const PBWElement& e)
{
    return series_to_json(e, [](const Word& w) { return Json{{"monomial", word_to_json(w)}}; });
}

Json tensor2_to_json(const TensorElement& e)
{
    return series_to_json(e, [](const TensorKey& k) {
        return Json{{"left", word_to_json(k[0])}, {"right", word_to_json(k[1])}};
    });
}

PBWElement pbw_from_json(const Json& j, int order, int dim)
{
    return series_from_json<Word>(j, order, [&](const Json& e) { return word_from_json(e.at("monomial"), dim); });
}

TensorElement tensor2_from_json(const Json& j, int order, int dim)
{
    return series_from_json<TensorKey>(j, order, [&](const Json& e) {
        return TensorKey{word_from_json(e.at("left"), dim), word_from_json(e.at("right"), dim)};
    });
}

const char* crossing_name(Crossing c) { return c == Crossing::inverse ? "inverse" : "direct"; }

Json report_to_json(const Report& r)
{
    Json out = Json::array();
    for (const auto& e : r.entries())
        out.push_back({{"name", e.name}, {"passed", e.passed}, {"detail", e.detail}});
    return out;
}

} // namespace

Json hopf_to_json(const HopfStructure& h)
{
    HopfTables t = h.tables();
    Json product = Json::array();
    for (const auto& [ab, v] : t.product)
        product.push_back(
            {{"left", word_to_json(ab.first)}, {"right", word_to_json(ab.second)}, {"value", pbw_to_json(v)}});
    Json coproduct = Json::array();
    for (const auto& [u, v] : t.coproduct)
        coproduct.push_back({{"monomial", word_to_json(u)}, {"value", tensor2_to_json(v)}});
    Json antipode = Json::array();
    for (const auto& [u, v] : t.antipode)
        antipode.push_back({{"monomial", word_to_json(u)}, {"value", pbw_to_json(v)}});
    return Json{{"format_version", kFormatVersion},
                {"kind", "hopf"},
                {"bialgebra", liebialg::to_json(h.bialgebra())},
                {"bialgebra_hash", liebialg::hash(h.bialgebra())},
                {"associator", associator::to_json(h.associator())},
                {"associator_hash", associator::hash(h.associator())},
                {"order", h.order()},
                {"degree_cap", h.degree_cap()},
                {"crossing", crossing_name(h.crossing())},
                {"tables", {{"product", product}, {"coproduct", coproduct}, {"antipode", antipode}}}};
}

std::string serialize_hopf(const HopfStructure& h) { return dump_file(hopf_to_json(h)); }

std::pair<std::shared_ptr<const HopfStructure>, HopfTables> parse_hopf(const std::string& text)
{
    Json j = parse_file_text(text);
    try {
        if (!j.is_object() || j.value("kind", "") != "hopf")
            throw FormatError("not a Hopf structure file");
        if (j.at("format_version").get<int>() != kFormatVersion)
            throw FormatError("unsupported format_version");
        auto g = liebialg::from_json(j.at("bialgebra"));
        auto phi = associator::from_json(j.at("associator"));
        if (liebialg::hash(g) != j.at("bialgebra_hash").get<std::string>())
            throw FormatError("bialgebra hash does not match the embedded bialgebra");
        if (associator::hash(phi) != j.at("associator_hash").get<std::string>())
            throw FormatError("associator hash does not match the embedded associator");
        int order = j.at("order").get<int>();
        int cap = j.at("degree_cap").get<int>();
        std::string crossing = j.at("crossing").get<std::string>();
        if (crossing != "inverse" && crossing != "direct")
            throw FormatError("unknown crossing " + crossing);
        BuildOptions opts;
        opts.crossing = crossing == "inverse" ? Crossing::inverse : Crossing::direct;
        opts.check_postconditions = false;
        auto h = build_hopf(g, phi, order, cap, opts);

        HopfTables t;
        const Json& tables = j.at("tables");
        for (const auto& e : tables.at("product"))
            t.product.emplace(std::make_pair(word_from_json(e.at("left"), g.dim), word_from_json(e.at("right"), g.dim)),
                              pbw_from_json(e.at("value"), order, g.dim));
        for (const auto& e : tables.at("coproduct"))
            t.coproduct.emplace(word_from_json(e.at("monomial"), g.dim), tensor2_from_json(e.at("value"), order, g.dim));
        for (const auto& e : tables.at("antipode"))
            t.antipode.emplace(word_from_json(e.at("monomial"), g.dim), pbw_from_json(e.at("value"), order, g.dim));
        return {h, std::move(t)};
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed Hopf file: ") + e.what());
    }
}

Json twist_to_json(const TwistResult& t)
{
    Json iso = Json::array();
    for (const auto& [u, v] : t.I)
        iso.push_back({{"monomial", word_to_json(u)}, {"value", pbw_to_json(v)}});
    return Json{{"format_version", kFormatVersion},
                {"kind", "twist"},
                {"bialgebra_hash", liebialg::hash(t.H->bialgebra())},
                {"twisted_bialgebra", liebialg::to_json(t.Hj->bialgebra())},
                {"associator_hash", associator::hash(t.H->associator())},
                {"twist", liebialg::twist_to_json(t.j)},
                {"order", t.H->order()},
                {"degree_cap", t.H->degree_cap()},
                {"J", tensor2_to_json(t.J)},
                {"I", iso},
                {"checks", report_to_json(t.checks)}};
}

std::string serialize_twist(const TwistResult& t) { return dump_file(twist_to_json(t)); }

} // namespace hopfforge::quantizer
