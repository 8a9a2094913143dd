#include <mutex>

#include "hopfforge/uenv.hpp"

namespace hopfforge::uenv {

namespace {
std::size_t z(int i) { return static_cast<std::size_t>(i); }
} // namespace

Enveloping::Enveloping(liebialg::Tensor3 bracket, int degree_cap) : bracket_(std::move(bracket)), cap_(degree_cap) {}

void Enveloping::check_cap(std::size_t degree) const
{
    if (static_cast<int>(degree) > cap_)
        throw DegreeOverflow("PBW degree " + std::to_string(degree) + " exceeds working cap " + std::to_string(cap_));
}

const WordComb& Enveloping::left_mult(int a, const Word& u) const
{
    Word key = Word{a} + u;
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    check_cap(u.size() + 1);
    WordComb result;
    if (u.empty() || a <= u[0]) {
        result.add(key, Rational(1));
    } else {
        // a (b rest) = b (a rest) + [a, b] rest for b < a.
        int b = u[0];
        Word rest = u.sub(1);
        for (const auto& [v, c] : left_mult(a, rest))
            result.add(left_mult(b, v), c);
        for (int k = 0; k < dim(); ++k) {
            const Rational& s = bracket_[z(a)][z(b)][z(k)];
            if (!s.is_zero())
                result.add(left_mult(k, rest), s);
        }
    }
    std::unique_lock lock(mutex_);
    return memo_.try_emplace(std::move(key), std::move(result)).first->second;
}

WordComb Enveloping::normal_form(const Word& w) const
{
    check_cap(w.size());
    WordComb acc(Word{});
    for (std::size_t i = w.size(); i-- > 0;) {
        WordComb next;
        for (const auto& [v, c] : acc)
            next.add(left_mult(w[i], v), c);
        acc = std::move(next);
    }
    return acc;
}

WordComb Enveloping::multiply_monomials(const Word& a, const Word& b) const
{
    check_cap(a.size() + b.size());
    WordComb acc(b);
    for (std::size_t i = a.size(); i-- > 0;) {
        WordComb next;
        for (const auto& [v, c] : acc)
            next.add(left_mult(a[i], v), c);
        acc = std::move(next);
    }
    return acc;
}

WordComb Enveloping::multiply(const WordComb& a, const WordComb& b) const
{
    WordComb out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b)
            out.add(multiply_monomials(u, v), cu * cv);
    return out;
}

TensorComb Enveloping::coproduct0(const Word& u) const
{
    TensorComb out;
    std::size_t k = u.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Word left, right;
        for (std::size_t i = 0; i < k; ++i)
            ((mask >> i) & 1 ? left : right).push_back(u[i]);
        out.add(TensorKey{left, right}, Rational(1));
    }
    return out;
}

WordComb Enveloping::antipode0(const Word& u) const
{
    return normal_form(u.reversed()) * Rational(u.size() % 2 ? -1 : 1);
}

std::vector<Word> Enveloping::monomials(int d) const
{
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (int len = 1; len <= d; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int a = w.empty() ? 0 : w[w.size() - 1]; a < dim(); ++a)
                next.push_back(w + Word{a});
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

InducedModule::InducedModule(std::shared_ptr<const Enveloping> ug, const liebialg::LieBialgebra& g,
                             const liebialg::Matrix* twist)
    : ug_(std::move(ug)), n_(g.dim), twisted_(twist != nullptr), to_g_(liebialg::zero_tensor(g.dim)),
      to_dual_(liebialg::zero_tensor(g.dim)), base_(z(g.dim))
{
    if (ug_->dim() != n_)
        throw std::invalid_argument("InducedModule: enveloping algebra dimension mismatch");
    for (int c = 0; c < n_; ++c)
        for (int x = 0; x < n_; ++x)
            for (int k = 0; k < n_; ++k) {
                to_g_[z(c)][z(x)][z(k)] = -g.cobracket[z(x)][z(c)][z(k)];
                to_dual_[z(c)][z(x)][z(k)] = g.bracket[z(x)][z(k)][z(c)];
            }
    if (twist)
        for (int c = 0; c < n_; ++c)
            for (int b = 0; b < n_; ++b)
                base_[z(c)].add(Word{b}, (*twist)[z(b)][z(c)]);
}

const WordComb& InducedModule::act(int xi, const Word& u) const
{
    if (xi < n_)
        return ug_->left_mult(xi, u);
    Word key = Word{xi - n_} + u;
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }
    WordComb result = compute_dual(xi - n_, u);
    std::unique_lock lock(mutex_);
    return memo_.try_emplace(std::move(key), std::move(result)).first->second;
}

WordComb InducedModule::act(int xi, const WordComb& u) const
{
    WordComb out;
    for (const auto& [w, c] : u)
        out.add(act(xi, w), c);
    return out;
}

WordComb InducedModule::compute_dual(int c, const Word& u) const
{
    if (u.empty())
        return base_[z(c)];
    // e^c (x rest) = [e^c, x] rest + x (e^c rest)
    int x = u[0];
    Word rest = u.sub(1);
    WordComb out;
    for (int k = 0; k < n_; ++k) {
        const Rational& tg = to_g_[z(c)][z(x)][z(k)];
        if (!tg.is_zero())
            out.add(ug_->left_mult(k, rest), tg);
        const Rational& td = to_dual_[z(c)][z(x)][z(k)];
        if (!td.is_zero())
            out.add(act(n_ + k, rest), td);
    }
    for (const auto& [v, cv] : act(n_ + c, rest))
        out.add(ug_->left_mult(x, v), cv);
    return out;
}

} // namespace hopfforge::uenv
