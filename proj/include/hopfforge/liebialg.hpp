#pragma once

#include <string>
#include <vector>

#include "hopfforge/rational.hpp"
#include "hopfforge/report.hpp"
#include "hopfforge/serialization.hpp"

namespace hopfforge::liebialg {

using Matrix = std::vector<std::vector<Rational>>;
/// tensor[a][b][c]
using Tensor3 = std::vector<Matrix>;

inline constexpr int kFormatVersion = 1;

Matrix zero_matrix(int rows, int cols);
Tensor3 zero_tensor(int n);

/// Finite-dimensional Lie bialgebra given by structure constants.
struct LieBialgebra {
    int dim = 0;
    std::vector<std::string> names;
    /// bracket[i][j][k]: coefficient of e_k in [e_i, e_j].
    Tensor3 bracket;
    /// cobracket[i][j][k]: coefficient of e_j ⊗ e_k in δ(e_i).
    Tensor3 cobracket;

    explicit LieBialgebra(int n = 0, std::vector<std::string> basis_names = {});

    /// Sets [e_i, e_j] and its antisymmetric partner.
    void set_bracket(int i, int j, int k, const Rational& c);
    /// Sets the e_j ⊗ e_k coefficient of δ(e_i) and its antisymmetric partner.
    void set_cobracket(int i, int j, int k, const Rational& c);

    [[nodiscard]] bool cobracket_is_zero() const;
    friend bool operator==(const LieBialgebra&, const LieBialgebra&) = default;
};

/// Antisymmetry, Jacobi, co-Jacobi and the 1-cocycle condition.
Report validate(const LieBialgebra& g);

/// 𝔡 = 𝔤 ⊕ 𝔤* with basis e_0..e_{n-1}, e^0..e^{n-1} (indices n..2n-1).
struct ManinDouble {
    int n = 0;
    int dim = 0;
    Tensor3 bracket;
    Matrix pairing;
    /// r = Σ e_i ⊗ e^i and t = r + flip(r) as 2n x 2n coefficient matrices.
    Matrix r;
    Matrix t;
};

/// Throws std::logic_error if an invariant of the double fails.
ManinDouble build_double(const LieBialgebra& g);
/// Pairing invariance, Jacobi on 𝔡, subalgebra conditions and ad-invariance of t.
Report check_double(const ManinDouble& d);

/// Bracket of two vectors of 𝔡 (or of 𝔤 if the vectors have length n).
std::vector<Rational> bracket(const Tensor3& constants, const std::vector<Rational>& a, const std::vector<Rational>& b);

/// 𝔡 itself as a Lie bialgebra with δ(a) = [a ⊗ 1 + 1 ⊗ a, r].
LieBialgebra double_as_bialgebra(const LieBialgebra& g);

/// j is an antisymmetric n x n matrix: j = Σ j[a][b] e_a ⊗ e_b.
Report validate_twist(const LieBialgebra& g, const Matrix& j);
/// δ_j(u) = δ(u) + [u ⊗ 1 + 1 ⊗ u, j]. Throws std::invalid_argument if the twist is invalid.
LieBialgebra twist_cobracket(const LieBialgebra& g, const Matrix& j);

/// f(e_i) = Σ_k f[k][i] e'_k. Checks that f preserves bracket and cobracket.
Report check_morphism(const LieBialgebra& source, const LieBialgebra& target, const Matrix& f);

namespace examples {
/// Two-dimensional: [H, X] = X, δ(H) = 0, δ(X) = X ⊗ H - H ⊗ X.
LieBialgebra b2();
/// sl2 with [H,E] = 2E, [H,F] = -2F, [E,F] = H and δ(E) = (E⊗H - H⊗E)/2, δ(F) = (F⊗H - H⊗F)/2.
LieBialgebra sl2_standard();
LieBialgebra abelian(int n);
/// sl2 with δ(E) as in sl2_standard but δ(F) = 0; fails the cocycle condition on (E,F).
LieBialgebra broken_cocycle_sl2();
} // namespace examples

Json to_json(const LieBialgebra& g);
LieBialgebra from_json(const Json& j);
std::string serialize(const LieBialgebra& g);
LieBialgebra parse(const std::string& text);
std::string hash(const LieBialgebra& g);

Json twist_to_json(const Matrix& j);
/// Validates antisymmetry and the dimension against `dim`.
Matrix twist_from_json(const Json& j, int dim);

} // namespace hopfforge::liebialg
