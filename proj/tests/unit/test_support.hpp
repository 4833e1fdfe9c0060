#ifndef SUPERALG_TEST_SUPPORT_HPP
#define SUPERALG_TEST_SUPPORT_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "superalg/forms.hpp"
#include "superalg/superalgebra.hpp"

namespace superalg::testing {

/// Basis vector of the element with the given display name.
inline Vector e(const Superalgebra& a, const std::string& name) {
  const auto& n = a.basis_names();
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) throw std::invalid_argument("no basis element " + name);
  return unit_vector(a.dim(), static_cast<std::size_t>(it - n.begin()));
}

inline std::size_t idx(const Superalgebra& a, const std::string& name) {
  const auto& n = a.basis_names();
  return static_cast<std::size_t>(std::find(n.begin(), n.end(), name) - n.begin());
}

inline Matrix unit_matrix(std::size_t m, std::size_t i, std::size_t j) {
  Matrix u(m, m);
  u(i, j) = 1;
  return u;
}

/// Explicit m x m matrix units for names "eIJ".
inline std::vector<Matrix> mrs_matrices(const Superalgebra& a, std::size_t m) {
  std::vector<Matrix> out;
  for (const auto& n : a.basis_names())
    out.push_back(unit_matrix(m, static_cast<std::size_t>(n[1] - '1'), static_cast<std::size_t>(n[2] - '1')));
  return out;
}

/// Q(n) inside M(2n): E_ij = diag(e_ij, e_ij), F_ij = offdiag(e_ij, e_ij).
inline std::vector<Matrix> qn_matrices(const Superalgebra& a, std::size_t n) {
  std::vector<Matrix> out;
  for (const auto& name : a.basis_names()) {
    const auto i = static_cast<std::size_t>(name[1] - '1'), j = static_cast<std::size_t>(name[2] - '1');
    Matrix m(2 * n, 2 * n);
    if (name[0] == 'E') {
      m(i, j) = 1;
      m(n + i, n + j) = 1;
    } else {
      m(i, n + j) = 1;
      m(n + i, j) = 1;
    }
    out.push_back(m);
  }
  return out;
}

/// Coordinates of a matrix in the span of the model basis.
inline Vector model_coordinates(const std::vector<Matrix>& model, const Matrix& x) {
  std::vector<Vector> cols;
  for (const auto& m : model) cols.push_back(m.entries());
  auto sol = solve(Matrix::from_columns(cols, x.entries().size()), x.entries());
  if (!sol) throw std::runtime_error("matrix not in model span");
  return sol->particular;
}

/// Annihilator from the stacked regular representations.
inline GradedSubspace brute_annihilator(const Superalgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < n; ++j) {
    for (const Matrix& m : {left_mult(a, unit_vector(n, j)), right_mult(a, unit_vector(n, j))}) {
      // x -> e_j.x and x -> x.e_j
      for (std::size_t r = 0; r < n; ++r) rows.push_back(m.row(r));
    }
  }
  Matrix stacked = rows.empty() ? Matrix(0, n) : Matrix::from_rows(rows, n);
  return GradedSubspace::span(a, kernel(stacked).vectors());
}

/// Semi-direct product of K by its parity-flipped dual, written out by hand:
/// x.x = x, x.f = f.x = f, f.f = 0, with B(x, f) = 1.
inline Superalgebra semidirect_k() {
  Superalgebra a(1, 1, {"x", "x*"});
  a.add(0, 0, 0, 1);
  a.add(0, 1, 1, 1);
  a.add(1, 0, 1, 1);
  return a;
}

inline HomogeneousForm semidirect_k_form() {
  HomogeneousForm b{Parity::Odd, Matrix(2, 2)};
  b.gram(0, 1) = b.gram(1, 0) = 1;
  return b;
}

}  // namespace superalg::testing

#endif  // SUPERALG_TEST_SUPPORT_HPP
