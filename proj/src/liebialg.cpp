#include "hopfforge/liebialg.hpp"

#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace hopfforge::liebialg {

Matrix zero_matrix(int rows, int cols)
{
    return Matrix(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
}

Tensor3 zero_tensor(int n) { return Tensor3(static_cast<std::size_t>(n), zero_matrix(n, n)); }

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

std::string pair_name(const LieBialgebra& g, int i, int j) { return "(" + g.names[z(i)] + "," + g.names[z(j)] + ")"; }

// Diagonal adjoint action of the basis vector e_a on a 2-tensor.
Matrix act_on_tensor(const Tensor3& c, int a, const Matrix& t)
{
    int n = static_cast<int>(t.size());
    Matrix out = zero_matrix(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            const Rational& tv = t[z(u)][z(v)];
            if (tv.is_zero())
                continue;
            for (int k = 0; k < n; ++k) {
                if (!c[z(a)][z(u)][z(k)].is_zero())
                    out[z(k)][z(v)] += tv * c[z(a)][z(u)][z(k)];
                if (!c[z(a)][z(v)][z(k)].is_zero())
                    out[z(u)][z(k)] += tv * c[z(a)][z(v)][z(k)];
            }
        }
    return out;
}

bool is_zero(const Matrix& m)
{
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero())
                return false;
    return true;
}

bool is_zero(const std::vector<Rational>& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix sub(Matrix a, const Matrix& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            a[i][j] -= b[i][j];
    return a;
}

std::vector<Rational> unit(int n, int i)
{
    std::vector<Rational> v(z(n));
    v[z(i)] = Rational(1);
    return v;
}

// Jacobi for a set of structure constants; returns the failing triples.
std::vector<std::array<int, 3>> jacobi_failures(const Tensor3& c)
{
    int n = static_cast<int>(c.size());
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int d = b + 1; d < n; ++d) {
                auto ea = unit(n, a), eb = unit(n, b), ed = unit(n, d);
                auto s = bracket(c, bracket(c, ea, eb), ed);
                auto s2 = bracket(c, bracket(c, eb, ed), ea);
                auto s3 = bracket(c, bracket(c, ed, ea), eb);
                for (int k = 0; k < n; ++k)
                    s[z(k)] += s2[z(k)] + s3[z(k)];
                if (!is_zero(s))
                    out.push_back({a, b, d});
            }
    return out;
}

} // namespace

LieBialgebra::LieBialgebra(int n, std::vector<std::string> basis_names)
    : dim(n), names(std::move(basis_names)), bracket(zero_tensor(n)), cobracket(zero_tensor(n))
{
    if (names.empty())
        for (int i = 0; i < n; ++i)
            names.push_back("e" + std::to_string(i));
    if (static_cast<int>(names.size()) != n)
        throw std::invalid_argument("LieBialgebra: name count does not match dimension");
}

void LieBialgebra::set_bracket(int i, int j, int k, const Rational& c)
{
    bracket.at(z(i)).at(z(j)).at(z(k)) = c;
    bracket.at(z(j)).at(z(i)).at(z(k)) = -c;
}

void LieBialgebra::set_cobracket(int i, int j, int k, const Rational& c)
{
    cobracket.at(z(i)).at(z(j)).at(z(k)) = c;
    cobracket.at(z(i)).at(z(k)).at(z(j)) = -c;
}

bool LieBialgebra::cobracket_is_zero() const
{
    for (const auto& m : cobracket)
        if (!is_zero(m))
            return false;
    return true;
}

std::vector<Rational> bracket(const Tensor3& c, const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    std::size_t n = c.size();
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero())
                continue;
            Rational f = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!c[i][j][k].is_zero())
                    out[k] += f * c[i][j][k];
        }
    }
    return out;
}

Report validate(const LieBialgebra& g)
{
    Report rep;
    int n = g.dim;
    if (static_cast<int>(g.bracket.size()) != n || static_cast<int>(g.cobracket.size()) != n) {
        rep.fail("shape", "structure constants do not match dimension");
        return rep;
    }
    bool anti = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (g.bracket[z(i)][z(j)][z(k)] != -g.bracket[z(j)][z(i)][z(k)]) {
                    rep.fail("bracket antisymmetry", pair_name(g, i, j));
                    anti = false;
                }
                if (g.cobracket[z(i)][z(j)][z(k)] != -g.cobracket[z(i)][z(k)][z(j)]) {
                    rep.fail("cobracket antisymmetry", "δ(" + g.names[z(i)] + ") at " + pair_name(g, j, k));
                    anti = false;
                }
            }
    if (anti)
        rep.add("antisymmetry", true);

    auto jac = jacobi_failures(g.bracket);
    for (const auto& t : jac)
        rep.fail("Jacobi", "(" + g.names[z(t[0])] + "," + g.names[z(t[1])] + "," + g.names[z(t[2])] + ")");
    if (jac.empty())
        rep.add("Jacobi", true);

    // Dual bracket [e^p, e^q] = Σ_k γ_k^{pq} e^k.
    Tensor3 dual = zero_tensor(n);
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                dual[z(p)][z(q)][z(k)] = g.cobracket[z(k)][z(p)][z(q)];
    auto cojac = jacobi_failures(dual);
    for (const auto& t : cojac)
        rep.fail("co-Jacobi", "(" + g.names[z(t[0])] + "*," + g.names[z(t[1])] + "*," + g.names[z(t[2])] + "*)");
    if (cojac.empty())
        rep.add("co-Jacobi", true);

    bool cocycle = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix lhs = zero_matrix(n, n);
            for (int k = 0; k < n; ++k) {
                const Rational& c = g.bracket[z(i)][z(j)][z(k)];
                if (c.is_zero())
                    continue;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        lhs[z(p)][z(q)] += c * g.cobracket[z(k)][z(p)][z(q)];
            }
            Matrix rhs = sub(act_on_tensor(g.bracket, i, g.cobracket[z(j)]), act_on_tensor(g.bracket, j, g.cobracket[z(i)]));
            if (lhs != rhs) {
                rep.fail("cocycle", pair_name(g, i, j));
                cocycle = false;
            }
        }
    if (cocycle)
        rep.add("cocycle", true);
    return rep;
}

ManinDouble build_double(const LieBialgebra& g)
{
    int n = g.dim;
    ManinDouble d;
    d.n = n;
    d.dim = 2 * n;
    d.bracket = zero_tensor(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                d.bracket[z(i)][z(j)][z(k)] = g.bracket[z(i)][z(j)][z(k)];
                d.bracket[z(n + i)][z(n + j)][z(n + k)] = g.cobracket[z(k)][z(i)][z(j)];
                // [e_i, e^j] = Σ_k γ_i^{jk} e_k - Σ_k c_{ik}^j e^k
                Rational to_g = g.cobracket[z(i)][z(j)][z(k)];
                Rational to_dual = -g.bracket[z(i)][z(k)][z(j)];
                d.bracket[z(i)][z(n + j)][z(k)] = to_g;
                d.bracket[z(i)][z(n + j)][z(n + k)] = to_dual;
                d.bracket[z(n + j)][z(i)][z(k)] = -to_g;
                d.bracket[z(n + j)][z(i)][z(n + k)] = -to_dual;
            }
    d.pairing = zero_matrix(2 * n, 2 * n);
    d.r = zero_matrix(2 * n, 2 * n);
    d.t = zero_matrix(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        d.pairing[z(i)][z(n + i)] = d.pairing[z(n + i)][z(i)] = Rational(1);
        d.r[z(i)][z(n + i)] = Rational(1);
        d.t[z(i)][z(n + i)] = d.t[z(n + i)][z(i)] = Rational(1);
    }
    Report rep = check_double(d);
    if (!rep.passed())
        throw std::logic_error("Manin double invariant failed: " + rep.failures().front().name + " " +
                               rep.failures().front().detail);
    return d;
}

Report check_double(const ManinDouble& d)
{
    Report rep;
    int m = d.dim, n = d.n;
    auto pair = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        Rational s;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (!d.pairing[z(i)][z(j)].is_zero())
                    s += a[z(i)] * b[z(j)] * d.pairing[z(i)][z(j)];
        return s;
    };
    int bad = 0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                auto ea = unit(m, a), eb = unit(m, b), ec = unit(m, c);
                if (pair(bracket(d.bracket, ea, eb), ec) != pair(ea, bracket(d.bracket, eb, ec)))
                    ++bad;
            }
    rep.add("pairing invariance", bad == 0, bad ? std::to_string(bad) + " triples" : "");
    auto jac = jacobi_failures(d.bracket);
    rep.add("Jacobi on double", jac.empty(), jac.empty() ? "" : std::to_string(jac.size()) + " triples");
    bool sub_ok = true;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int k = 0; k < m; ++k) {
                bool same_half = (a < n) == (b < n);
                if (same_half && (k < n) != (a < n) && !d.bracket[z(a)][z(b)][z(k)].is_zero())
                    sub_ok = false;
            }
    rep.add("Lagrangian subalgebras", sub_ok);
    bool inv = true;
    for (int a = 0; a < m; ++a)
        if (!is_zero(act_on_tensor(d.bracket, a, d.t)))
            inv = false;
    rep.add("ad-invariance of t", inv);
    bool sym = true;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (d.t[z(a)][z(b)] != d.t[z(b)][z(a)] || d.t[z(a)][z(b)] != d.r[z(a)][z(b)] + d.r[z(b)][z(a)])
                sym = false;
    rep.add("t = r + flip(r)", sym);
    return rep;
}

LieBialgebra double_as_bialgebra(const LieBialgebra& g)
{
    ManinDouble d = build_double(g);
    std::vector<std::string> names = g.names;
    for (const auto& s : g.names)
        names.push_back(s + "*");
    LieBialgebra out(d.dim, names);
    out.bracket = d.bracket;
    for (int a = 0; a < d.dim; ++a)
        out.cobracket[z(a)] = act_on_tensor(d.bracket, a, d.r);
    return out;
}

Report validate_twist(const LieBialgebra& g, const Matrix& j)
{
    Report rep;
    int n = g.dim;
    if (static_cast<int>(j.size()) != n) {
        rep.fail("twist shape", "expected " + std::to_string(n) + "x" + std::to_string(n));
        return rep;
    }
    bool anti = true;
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(j[z(a)].size()) != n) {
            rep.fail("twist shape", "row " + std::to_string(a));
            return rep;
        }
        for (int b = 0; b < n; ++b)
            if (j[z(a)][z(b)] != -j[z(b)][z(a)])
                anti = false;
    }
    rep.add("twist antisymmetry", anti);
    if (!anti)
        return rep;

    ManinDouble d = build_double(g);
    auto f = [&](int c) {
        auto v = unit(2 * n, n + c);
        for (int b = 0; b < n; ++b)
            v[z(b)] += j[z(c)][z(b)];
        return v;
    };
    bool closed = true;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            auto v = bracket(d.bracket, f(a), f(b));
            std::vector<Rational> expected(z(2 * n));
            for (int c = 0; c < n; ++c) {
                auto fc = f(c);
                for (int k = 0; k < 2 * n; ++k)
                    expected[z(k)] += v[z(n + c)] * fc[z(k)];
            }
            if (v != expected) {
                rep.fail("twisted dual closure", pair_name(g, a, b));
                closed = false;
            }
        }
    if (closed)
        rep.add("twisted dual closure", true);
    return rep;
}

LieBialgebra twist_cobracket(const LieBialgebra& g, const Matrix& j)
{
    Report rep = validate_twist(g, j);
    if (!rep.passed())
        throw std::invalid_argument("invalid twist: " + rep.failures().front().name + " " + rep.failures().front().detail);
    int n = g.dim;
    LieBialgebra out = g;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const Rational& jab = j[z(a)][z(b)];
                if (jab.is_zero())
                    continue;
                for (int k = 0; k < n; ++k) {
                    out.cobracket[z(i)][z(k)][z(b)] += jab * g.bracket[z(i)][z(a)][z(k)];
                    out.cobracket[z(i)][z(a)][z(k)] += jab * g.bracket[z(i)][z(b)][z(k)];
                }
            }
    if (!validate(out).passed())
        throw std::logic_error("twisted cobracket fails validation");
    return out;
}

Report check_morphism(const LieBialgebra& s, const LieBialgebra& t, const Matrix& f)
{
    Report rep;
    int n = s.dim, m = t.dim;
    if (static_cast<int>(f.size()) != m || (m > 0 && static_cast<int>(f[0].size()) != n)) {
        rep.fail("morphism shape", "");
        return rep;
    }
    auto image = [&](int i) {
        std::vector<Rational> v(z(m));
        for (int k = 0; k < m; ++k)
            v[z(k)] = f[z(k)][z(i)];
        return v;
    };
    bool br = true;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rational> lhs(z(m));
            for (int k = 0; k < n; ++k) {
                auto fk = image(k);
                for (int p = 0; p < m; ++p)
                    lhs[z(p)] += s.bracket[z(i)][z(j)][z(k)] * fk[z(p)];
            }
            if (lhs != bracket(t.bracket, image(i), image(j))) {
                rep.fail("morphism preserves bracket", pair_name(s, i, j));
                br = false;
            }
        }
    if (br)
        rep.add("morphism preserves bracket", true);
    bool co = true;
    for (int i = 0; i < n; ++i) {
        Matrix lhs = zero_matrix(m, m), rhs = zero_matrix(m, m);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Rational& c = s.cobracket[z(i)][z(j)][z(k)];
                if (c.is_zero())
                    continue;
                for (int p = 0; p < m; ++p)
                    for (int q = 0; q < m; ++q)
                        lhs[z(p)][z(q)] += c * f[z(p)][z(j)] * f[z(q)][z(k)];
            }
        for (int a = 0; a < m; ++a)
            if (!f[z(a)][z(i)].is_zero())
                for (int p = 0; p < m; ++p)
                    for (int q = 0; q < m; ++q)
                        rhs[z(p)][z(q)] += f[z(a)][z(i)] * t.cobracket[z(a)][z(p)][z(q)];
        if (lhs != rhs) {
            rep.fail("morphism preserves cobracket", s.names[z(i)]);
            co = false;
        }
    }
    if (co)
        rep.add("morphism preserves cobracket", true);
    return rep;
}

namespace examples {

LieBialgebra b2()
{
    LieBialgebra g(2, {"H", "X"});
    g.set_bracket(0, 1, 1, 1);
    g.set_cobracket(1, 1, 0, 1);
    return g;
}

LieBialgebra sl2_standard()
{
    LieBialgebra g(3, {"H", "E", "F"});
    g.set_bracket(0, 1, 1, 2);
    g.set_bracket(0, 2, 2, -2);
    g.set_bracket(1, 2, 0, 1);
    g.set_cobracket(1, 1, 0, Rational(1, 2));
    g.set_cobracket(2, 2, 0, Rational(1, 2));
    return g;
}

LieBialgebra abelian(int n) { return LieBialgebra(n); }

LieBialgebra broken_cocycle_sl2()
{
    LieBialgebra g = sl2_standard();
    g.set_cobracket(2, 2, 0, 0);
    return g;
}

} // namespace examples

namespace {

std::map<std::string, Json> sparse_entries(const std::vector<Rational>& v)
{
    std::map<std::string, Json> out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero())
            out[std::to_string(k)] = rational_to_json(v[k]);
    return out;
}

int parse_index(const std::string& s, int n)
{
    std::size_t pos = 0;
    int v = -1;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw FormatError("invalid index '" + s + "'");
    }
    if (pos != s.size() || v < 0 || v >= n)
        throw FormatError("index out of range: '" + s + "'");
    return v;
}

int index_field(const Json& obj, const char* key, int n)
{
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw FormatError(std::string("missing integer field '") + key + "'");
    int v = obj[key].get<int>();
    if (v < 0 || v >= n)
        throw FormatError(std::string("field '") + key + "' out of range");
    return v;
}

} // namespace

Json to_json(const LieBialgebra& g)
{
    Json br = Json::array(), co = Json::array();
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            auto e = sparse_entries(g.bracket[z(i)][z(j)]);
            if (!e.empty())
                br.push_back(Json{{"i", i}, {"j", j}, {"coeffs", e}});
        }
    for (int i = 0; i < g.dim; ++i) {
        std::map<std::string, Json> e;
        for (int j = 0; j < g.dim; ++j)
            for (int k = j + 1; k < g.dim; ++k)
                if (!g.cobracket[z(i)][z(j)][z(k)].is_zero())
                    e[std::to_string(j) + "," + std::to_string(k)] = rational_to_json(g.cobracket[z(i)][z(j)][z(k)]);
        if (!e.empty())
            co.push_back(Json{{"i", i}, {"coeffs", e}});
    }
    return Json{{"format_version", kFormatVersion}, {"dim", g.dim}, {"basis", g.names}, {"bracket", br}, {"cobracket", co}};
}

LieBialgebra from_json(const Json& j)
{
    try {
        if (!j.is_object())
            throw FormatError("bialgebra file must be a JSON object");
        if (j.at("format_version").get<int>() != kFormatVersion)
            throw FormatError("unsupported bialgebra format_version");
        int n = j.at("dim").get<int>();
        if (n < 1 || n > 64)
            throw FormatError("dim must be between 1 and 64");
        std::vector<std::string> names;
        if (j.contains("basis"))
            names = j["basis"].get<std::vector<std::string>>();
        if (!names.empty() && static_cast<int>(names.size()) != n)
            throw FormatError("basis has " + std::to_string(names.size()) + " names but dim is " + std::to_string(n));
        if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
            throw FormatError("basis names must be distinct");
        LieBialgebra g(n, names);
        std::set<std::pair<int, int>> seen;
        for (const auto& e : j.value("bracket", Json::array())) {
            int a = index_field(e, "i", n), b = index_field(e, "j", n);
            if (a == b)
                throw FormatError("bracket entry with i == j");
            if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
                throw FormatError("duplicate bracket entry");
            for (const auto& [k, v] : e.at("coeffs").items())
                g.set_bracket(a, b, parse_index(k, n), rational_from_json(v));
        }
        std::set<int> seen_co;
        for (const auto& e : j.value("cobracket", Json::array())) {
            int i = index_field(e, "i", n);
            if (!seen_co.insert(i).second)
                throw FormatError("duplicate cobracket entry");
            std::set<std::pair<int, int>> pairs;
            for (const auto& [key, v] : e.at("coeffs").items()) {
                auto comma = key.find(',');
                if (comma == std::string::npos)
                    throw FormatError("cobracket key must be \"j,k\": " + key);
                int a = parse_index(key.substr(0, comma), n), b = parse_index(key.substr(comma + 1), n);
                if (a == b)
                    throw FormatError("cobracket key with j == k: " + key);
                if (!pairs.insert({std::min(a, b), std::max(a, b)}).second)
                    throw FormatError("duplicate cobracket key " + key);
                g.set_cobracket(i, a, b, rational_from_json(v));
            }
        }
        return g;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed bialgebra file: ") + e.what());
    }
}

std::string serialize(const LieBialgebra& g) { return dump_file(to_json(g)); }
LieBialgebra parse(const std::string& text) { return from_json(parse_file_text(text)); }
std::string hash(const LieBialgebra& g) { return fingerprint(to_json(g)); }

Json twist_to_json(const Matrix& j)
{
    Json entries = Json::array();
    int n = static_cast<int>(j.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!j[z(a)][z(b)].is_zero()) {
                Json e{{"i", a}, {"j", b}};
                put_rational(e, j[z(a)][z(b)]);
                entries.push_back(std::move(e));
            }
    return Json{{"format_version", kFormatVersion}, {"dim", n}, {"entries", entries}};
}

Matrix twist_from_json(const Json& j, int dim)
{
    try {
        if (j.at("format_version").get<int>() != kFormatVersion)
            throw FormatError("unsupported twist format_version");
        int n = j.at("dim").get<int>();
        if (n != dim)
            throw FormatError("twist dimension " + std::to_string(n) + " does not match bialgebra dimension " +
                              std::to_string(dim));
        Matrix m = zero_matrix(n, n);
        std::set<std::pair<int, int>> seen;
        for (const auto& e : j.at("entries")) {
            int a = index_field(e, "i", n), b = index_field(e, "j", n);
            if (a == b)
                throw FormatError("twist entry on the diagonal");
            if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
                throw FormatError("duplicate twist entry");
            Rational q = get_rational(e);
            m[z(a)][z(b)] = q;
            m[z(b)][z(a)] = -q;
        }
        return m;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed twist file: ") + e.what());
    }
}

} // namespace hopfforge::liebialg
