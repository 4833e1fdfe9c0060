#ifndef SUPERALG_CATALOG_HPP
#define SUPERALG_CATALOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "forms.hpp"
#include "superalgebra.hpp"

namespace superalg {

struct StructuredAlgebra {
  Superalgebra algebra;
  HomogeneousForm form;
};

namespace detail {

inline std::string unit_name(const std::string& stem, std::size_t i, std::size_t j, std::size_t m) {
  if (m <= 9) return stem + std::to_string(i + 1) + std::to_string(j + 1);
  return stem + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace detail

/// Matrix superalgebra M_{r,s}: matrix units, diagonal blocks even, with the
/// supertrace form B(x,y) = str(xy).
inline StructuredAlgebra make_Mrs(std::size_t r, std::size_t s) {
  if (r == 0) throw PreconditionError("M(r,s) needs r >= 1");
  const std::size_t m = r + s;
  std::vector<std::pair<std::size_t, std::size_t>> even, odd;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ((i < r) == (j < r) ? even : odd).emplace_back(i, j);
  auto units = even;
  units.insert(units.end(), odd.begin(), odd.end());
  std::vector<std::vector<std::size_t>> index(m, std::vector<std::size_t>(m));
  std::vector<std::string> names;
  for (std::size_t k = 0; k < units.size(); ++k) {
    index[units[k].first][units[k].second] = k;
    names.push_back(detail::unit_name("e", units[k].first, units[k].second, m));
  }
  Superalgebra a(even.size(), odd.size(), names);
  HomogeneousForm b{Parity::Even, Matrix(a.dim(), a.dim())};
  for (std::size_t x = 0; x < units.size(); ++x) {
    const auto [i, j] = units[x];
    for (std::size_t l = 0; l < m; ++l) {
      a.add(x, index[j][l], index[i][l], Scalar(1));
    }
    // str(e_ij e_ji) = sign of row i.
    b.gram(x, index[j][i]) = i < r ? 1 : -1;
  }
  return {std::move(a), std::move(b)};
}

/// Q_n: even basis E_ij, odd basis F_ij with E E = E, E F = F E = F, F F = E
/// on matrix-unit indices, and the odd form B(E_ij, F_lk) = tr(e_ij e_lk).
inline StructuredAlgebra make_Qn(std::size_t n) {
  if (n == 0) throw PreconditionError("Q(n) needs n >= 1");
  const std::size_t q = n * n;
  std::vector<std::string> names;
  for (const char* stem : {"E", "F"})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) names.push_back(detail::unit_name(stem, i, j, n));
  Superalgebra a(q, q, names);
  HomogeneousForm b{Parity::Odd, Matrix(2 * q, 2 * q)};
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t x = at(i, j), y = at(j, k), z = at(i, k);
        a.add(x, y, z, Scalar(1));
        a.add(x, q + y, q + z, Scalar(1));
        a.add(q + x, y, q + z, Scalar(1));
        a.add(q + x, q + y, z, Scalar(1));
      }
      b.gram(at(i, j), q + at(j, i)) = 1;
      b.gram(q + at(j, i), at(i, j)) = 1;
    }
  }
  return {std::move(a), std::move(b)};
}

/// Null-product superalgebra of dimensions (n0, n1).
inline Superalgebra make_null(std::size_t n0, std::size_t n1) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n0; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n1; ++i) names.push_back("y" + std::to_string(i + 1));
  return Superalgebra(n0, n1, names);
}

/// The 2-dimensional null superalgebra with its hyperbolic odd form.
inline StructuredAlgebra make_R() {
  Superalgebra a = make_null(1, 1);
  HomogeneousForm b{Parity::Odd, Matrix(2, 2)};
  b.gram(0, 1) = b.gram(1, 0) = 1;
  return {std::move(a), std::move(b)};
}

}  // namespace superalg

#endif  // SUPERALG_CATALOG_HPP
