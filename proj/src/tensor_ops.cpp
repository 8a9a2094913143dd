#include <map>

#include "hopfforge/uenv.hpp"

namespace hopfforge::uenv {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

// Adds c * (key with factor i replaced by each term of ci, factor j by each term of cj).
void add_two_factor(TensorComb& out, const TensorKey& key, int i, const WordComb& ci, int j, const WordComb& cj,
                    const Rational& c)
{
    if (ci.empty() || cj.empty())
        return;
    TensorKey k = key;
    for (const auto& [wi, ai] : ci) {
        k[z(i)] = wi;
        Rational ca = c * ai;
        for (const auto& [wj, aj] : cj) {
            k[z(j)] = wj;
            out.add(k, ca * aj);
        }
    }
}

} // namespace

TensorElement act_on_factor(const Factors& f, int pos, int xi, const TensorElement& e)
{
    TensorElement out(e.order());
    for (int p = 0; p <= e.order(); ++p)
        for (const auto& [key, c] : e.at(p)) {
            TensorKey k = key;
            for (const auto& [w, a] : f[z(pos)]->act(xi, key[z(pos)])) {
                k[z(pos)] = w;
                out.add(p, k, c * a);
            }
        }
    return out;
}

TensorElement act_diagonal(const Factors& f, int xi, const TensorElement& e)
{
    TensorElement out(e.order());
    for (int pos = 0; pos < static_cast<int>(f.size()); ++pos)
        out += act_on_factor(f, pos, xi, e);
    return out;
}

TensorElement apply_t(const Factors& f, const std::vector<int>& a, const std::vector<int>& b, const TensorElement& e,
                      int weight)
{
    TensorElement out(e.order());
    if (f.empty())
        return out;
    int n = f[0]->n();
    for (int p = 0; p + weight <= e.order(); ++p) {
        TensorComb& dst = out.at(p + weight);
        for (const auto& [key, c] : e.at(p))
            for (int i : a)
                for (int j : b)
                    for (int x = 0; x < n; ++x) {
                        const WordComb& gi = f[z(i)]->act(x, key[z(i)]);
                        if (!gi.empty())
                            add_two_factor(dst, key, i, gi, j, f[z(j)]->act(n + x, key[z(j)]), c);
                        const WordComb& di = f[z(i)]->act(n + x, key[z(i)]);
                        if (!di.empty())
                            add_two_factor(dst, key, i, di, j, f[z(j)]->act(x, key[z(j)]), c);
                    }
    }
    return out;
}

TensorElement apply_exp_t(const Factors& f, const std::vector<int>& a, const std::vector<int>& b, const Rational& s,
                          const TensorElement& e)
{
    TensorElement result = e;
    TensorElement term = e;
    for (int k = 1; k <= e.order(); ++k) {
        term = apply_t(f, a, b, term, 1) * (s / Rational(k));
        if (term.is_zero())
            break;
        result += term;
    }
    return result;
}

TensorElement apply_series(const freeseries::AssocSeries& series, const std::vector<TensorOp>& ops,
                           const TensorElement& e)
{
    std::map<Word, TensorElement> suffix;
    suffix.emplace(Word{}, e);
    std::function<const TensorElement&(const Word&)> value = [&](const Word& w) -> const TensorElement& {
        if (auto it = suffix.find(w); it != suffix.end())
            return it->second;
        TensorElement v = ops.at(z(w[0]))(value(w.sub(1)));
        return suffix.emplace(w, std::move(v)).first->second;
    };
    TensorElement out(e.order());
    for (const auto& [w, c] : series.terms().sorted())
        if (static_cast<int>(w.size()) <= e.order())
            out.add(value(w), c);
    return out;
}

// Grouping

int Grouping::build(const std::string& s, std::size_t& pos, int& next_leaf)
{
    if (pos >= s.size())
        throw std::invalid_argument("grouping truncated: " + s);
    Node node;
    if (s[pos] == '(') {
        ++pos;
        int l = build(s, pos, next_leaf);
        int r = build(s, pos, next_leaf);
        if (pos >= s.size() || s[pos] != ')')
            throw std::invalid_argument("grouping: expected ')' in " + s);
        ++pos;
        node.left = l;
        node.right = r;
        node.first = nodes_[z(l)].first;
        node.count = nodes_[z(l)].count + nodes_[z(r)].count;
    } else {
        if (s[pos] - '0' != next_leaf)
            throw std::invalid_argument("grouping: leaves must be 0,1,2,... in order: " + s);
        ++pos;
        node.first = next_leaf++;
    }
    nodes_.push_back(node);
    return static_cast<int>(nodes_.size()) - 1;
}

Grouping Grouping::parse(const std::string& text)
{
    Grouping g;
    std::size_t pos = 0;
    int next = 0;
    g.root_ = g.build(text, pos, next);
    if (pos != text.size())
        throw std::invalid_argument("grouping: trailing characters in " + text);
    return g;
}

Grouping Grouping::left_comb(int leaves)
{
    std::string s = "0";
    for (int i = 1; i < leaves; ++i)
        s = "(" + s + std::to_string(i) + ")";
    return parse(s);
}

int Grouping::leaves() const { return nodes_[z(root_)].count; }

std::string Grouping::render(int node) const
{
    const Node& n = nodes_[z(node)];
    if (n.left < 0)
        return std::to_string(n.first);
    return "(" + render(n.left) + render(n.right) + ")";
}

std::string Grouping::str() const { return render(root_); }

int Grouping::find(int first, int count) const
{
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].first == first && nodes_[i].count == count)
            return static_cast<int>(i);
    return -1;
}

Grouping Grouping::braided(int first, int count) const
{
    int target = find(first, count);
    if (target < 0 || nodes_[z(target)].left < 0)
        throw std::invalid_argument("braiding position is not an internal node of " + str());
    std::function<std::string(int)> shape = [&](int node) -> std::string {
        const Node& n = nodes_[z(node)];
        if (n.left < 0)
            return "L";
        if (node == target)
            return "(" + shape(n.right) + shape(n.left) + ")";
        return "(" + shape(n.left) + shape(n.right) + ")";
    };
    std::string s = shape(root_);
    int next = 0;
    for (auto& ch : s)
        if (ch == 'L')
            ch = static_cast<char>('0' + next++);
    return parse(s);
}

namespace {

std::vector<int> leaf_range(const Grouping::Node& n)
{
    std::vector<int> v;
    for (int i = 0; i < n.count; ++i)
        v.push_back(n.first + i);
    return v;
}

std::string subtree_shape(const Grouping& g, int node)
{
    const auto& n = g.nodes()[z(node)];
    if (n.left < 0)
        return "L";
    return "(" + subtree_shape(g, n.left) + subtree_shape(g, n.right) + ")";
}

void collect_moves(const Grouping& s, int sn, const Grouping& t, int tn, std::vector<AssocMove>& out)
{
    const auto& S = s.nodes()[z(sn)];
    const auto& T = t.nodes()[z(tn)];
    if (S.left < 0 || T.left < 0) {
        if ((S.left < 0) != (T.left < 0))
            throw std::invalid_argument("groupings do not differ by associativity moves");
        return;
    }
    const auto& SL = s.nodes()[z(S.left)];
    const auto& TL = t.nodes()[z(T.left)];
    if (SL.count == TL.count) {
        collect_moves(s, S.left, t, T.left, out);
        collect_moves(s, S.right, t, T.right, out);
        return;
    }
    auto same = [&](int a, int b) { return subtree_shape(s, a) == subtree_shape(t, b); };
    if (SL.count > TL.count && SL.left >= 0) {
        // ((A B) C) -> (A (B C))
        const auto& TR = t.nodes()[z(T.right)];
        if (TR.left >= 0 && same(SL.left, T.left) && same(SL.right, TR.left) && same(S.right, TR.right)) {
            out.push_back({leaf_range(s.nodes()[z(SL.left)]), leaf_range(s.nodes()[z(SL.right)]),
                           leaf_range(s.nodes()[z(S.right)]), true});
            return;
        }
    }
    if (SL.count < TL.count && TL.left >= 0) {
        // (A (B C)) -> ((A B) C)
        const auto& SR = s.nodes()[z(S.right)];
        if (SR.left >= 0 && same(S.left, TL.left) && same(SR.left, TL.right) && same(SR.right, T.right)) {
            out.push_back({leaf_range(SL), leaf_range(s.nodes()[z(SR.left)]), leaf_range(s.nodes()[z(SR.right)]), false});
            return;
        }
    }
    throw std::invalid_argument("groupings " + s.str() + " and " + t.str() + " do not differ by one associativity move");
}

} // namespace

AssocMove find_assoc_move(const Grouping& source, const Grouping& target)
{
    if (source.leaves() != target.leaves())
        throw std::invalid_argument("groupings have different numbers of factors");
    std::vector<AssocMove> moves;
    collect_moves(source, source.root(), target, target.root(), moves);
    if (moves.size() != 1)
        throw std::invalid_argument("groupings " + source.str() + " and " + target.str() +
                                    " do not differ by exactly one associativity move");
    return moves.front();
}

TensorElement apply_assoc_move(const Factors& f, const AssocMove& move, const freeseries::AssocSeries& phi,
                               const TensorElement& e)
{
    int cap = e.order();
    freeseries::AssocSeries series = phi.truncated(cap);
    if (!move.forward)
        series = freeseries::inverse_series(series, cap);
    std::vector<TensorOp> ops{
        [&](const TensorElement& v) { return apply_t(f, move.a, move.b, v, 1); },
        [&](const TensorElement& v) { return apply_t(f, move.b, move.c, v, 1); },
    };
    return apply_series(series, ops, e);
}

TensorElement apply_assoc_move(const Factors& f, const Grouping& source, const Grouping& target,
                               const freeseries::AssocSeries& phi, const TensorElement& e)
{
    return apply_assoc_move(f, find_assoc_move(source, target), phi, e);
}

TensorElement apply_braiding(Factors& f, Grouping& g, int first, int count, bool inverse, const TensorElement& e)
{
    int node = g.find(first, count);
    if (node < 0 || g.nodes()[z(node)].left < 0)
        throw std::invalid_argument("braiding position is not an internal node of " + g.str());
    auto a = leaf_range(g.nodes()[z(g.nodes()[z(node)].left)]);
    auto b = leaf_range(g.nodes()[z(g.nodes()[z(node)].right)]);
    TensorElement v = apply_exp_t(f, a, b, Rational(inverse ? -1 : 1, 2), e);

    // Block transposition of the two children.
    std::vector<int> perm;
    for (int i = 0; i < first; ++i)
        perm.push_back(i);
    perm.insert(perm.end(), b.begin(), b.end());
    perm.insert(perm.end(), a.begin(), a.end());
    for (int i = first + count; i < static_cast<int>(f.size()); ++i)
        perm.push_back(i);
    TensorElement out(v.order());
    for (int p = 0; p <= v.order(); ++p)
        for (const auto& [key, c] : v.at(p)) {
            TensorKey k(key.size());
            for (std::size_t i = 0; i < perm.size(); ++i)
                k[i] = key[z(perm[i])];
            out.add(p, k, c);
        }
    Factors nf(f.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        nf[i] = f[z(perm[i])];
    f = std::move(nf);
    g = g.braided(first, count);
    return out;
}

} // namespace hopfforge::uenv
