#ifndef SUPERALG_FORMS_HPP
#define SUPERALG_FORMS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact_linear.hpp"
#include "superalgebra.hpp"

namespace superalg {

/// Homogeneous bilinear form given by its full Gram matrix in the graded
/// basis order of the algebra it lives on.
struct HomogeneousForm {
  Parity parity = Parity::Even;
  Matrix gram;

  std::size_t dim() const { return gram.rows(); }
  Scalar operator()(const Vector& x, const Vector& y) const { return dot(x, gram * y); }
  Scalar operator()(std::size_t i, std::size_t j) const { return gram(i, j); }
  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.parity == b.parity && a.gram == b.gram;
  }
};

inline HomogeneousForm scaled(const Scalar& c, const HomogeneousForm& b) { return {b.parity, c * b.gram}; }

/// Completes a partially given Gram matrix by supersymmetry: for each nonzero
/// entry (i,j) the entry (j,i) is set to (-1)^{|i||j|} times it.
inline HomogeneousForm supersymmetric_completion(const Superalgebra& a, Parity p, const Matrix& partial) {
  if (partial.rows() != a.dim() || partial.cols() != a.dim()) throw ShapeError("gram size must equal dimension");
  Matrix g = partial;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (sgn(partial(i, j)) == 0) continue;
      const Scalar mirrored = sign_of(a.pbit(i), a.pbit(j)) * partial(i, j);
      if (sgn(partial(j, i)) != 0 && partial(j, i) != mirrored) {
        throw ParseError("gram entries (" + std::to_string(i) + "," + std::to_string(j) +
                         ") and their mirror are not supersymmetric");
      }
      g(j, i) = mirrored;
    }
  }
  return {p, g};
}

/// Every violated structural condition; empty means (a, b) is a homogeneous
/// symmetric structure.
inline std::vector<std::string> check_form(const Superalgebra& a, const HomogeneousForm& b,
                                           bool require_nondegenerate = true) {
  std::vector<std::string> report;
  const std::size_t n = a.dim();
  if (b.gram.rows() != n || b.gram.cols() != n) {
    report.push_back("shape: gram is " + std::to_string(b.gram.rows()) + "x" + std::to_string(b.gram.cols()) +
                     ", algebra has dimension " + std::to_string(n));
    return report;
  }
  const int p = bit(b.parity);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& g = b.gram(i, j);
      if (sgn(g) != 0 && (a.pbit(i) ^ a.pbit(j)) != p) {
        report.push_back(std::string("homogeneity: ") + parity_name(b.parity) + " form pairs " +
                         std::to_string(i) + " with " + std::to_string(j));
      }
      if (i < j && g != sign_of(a.pbit(i), a.pbit(j)) * b.gram(j, i)) {
        report.push_back("supersymmetry: entries (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Scalar lhs = 0, rhs = 0;
        for (const auto& t : ij) lhs += t.coeff * b.gram(t.index, k);
        for (const auto& t : a.product(j, k)) rhs += b.gram(i, t.index) * t.coeff;
        if (lhs != rhs) {
          report.push_back("associativity: B(e" + std::to_string(i) + ".e" + std::to_string(j) + ",e" +
                           std::to_string(k) + ") != B(e" + std::to_string(i) + ",e" + std::to_string(j) + ".e" +
                           std::to_string(k) + ")");
        }
      }
    }
  }
  if (require_nondegenerate) {
    const auto r = rank(b.gram);
    if (r != n) report.push_back("non-degeneracy: gram rank " + std::to_string(r) + " < " + std::to_string(n));
  }
  return report;
}

inline bool is_nondegenerate(const HomogeneousForm& b) { return rank(b.gram) == b.dim(); }

/// Linear space of invariant supersymmetric forms of one parity.
struct FormSpace {
  Superalgebra algebra;
  Parity parity = Parity::Even;
  std::vector<HomogeneousForm> basis;

  std::size_t dim() const noexcept { return basis.size(); }

  HomogeneousForm combination(const Vector& c) const {
    if (c.size() != basis.size()) throw ShapeError("coefficient count must equal form-space dimension");
    HomogeneousForm f{parity, Matrix(algebra.dim(), algebra.dim())};
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sgn(c[i]) != 0) f.gram = f.gram + c[i] * basis[i].gram;
    return f;
  }
};

/// All supersymmetric invariant forms of the given parity (degenerate ones
/// included).
inline FormSpace invariant_form_space(const Superalgebra& a, Parity parity) {
  const std::size_t n = a.dim();
  // Free entries: for each allowed pair i <= j one unknown; (j,i) follows by
  // supersymmetry. Odd-odd diagonal entries of an even form vanish.
  std::vector<std::vector<long>> slot(n, std::vector<long>(n, -1));
  std::vector<std::vector<int>> sgn_of(n, std::vector<int>(n, 0));
  long unknowns = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if ((a.pbit(i) ^ a.pbit(j)) != bit(parity)) continue;
      const int s = sign_of(a.pbit(i), a.pbit(j));
      if (i == j && s < 0) continue;
      slot[i][j] = slot[j][i] = unknowns++;
      sgn_of[i][j] = 1;
      sgn_of[j][i] = s;
    }
  }
  const auto w = static_cast<std::size_t>(unknowns);
  EchelonBuilder eb(w);
  for (std::size_t i = 0; i < n && !eb.full(); ++i) {
    for (std::size_t j = 0; j < n && !eb.full(); ++j) {
      const auto& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(w, Scalar(0));
        bool any = false;
        for (const auto& t : ij) {
          if (slot[t.index][k] >= 0) {
            row[static_cast<std::size_t>(slot[t.index][k])] += sgn_of[t.index][k] * t.coeff;
            any = true;
          }
        }
        for (const auto& t : a.product(j, k)) {
          if (slot[i][t.index] >= 0) {
            row[static_cast<std::size_t>(slot[i][t.index])] -= sgn_of[i][t.index] * t.coeff;
            any = true;
          }
        }
        if (any && !is_zero(row)) eb.add(std::move(row));
      }
    }
  }
  FormSpace fs{a, parity, {}};
  const auto sols = SubspaceBasis::span(w, eb.null_space());
  for (const auto& sol : sols.vectors()) {
    HomogeneousForm f{parity, Matrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (slot[i][j] >= 0) f.gram(i, j) = sgn_of[i][j] * sol[static_cast<std::size_t>(slot[i][j])];
    fs.basis.push_back(std::move(f));
  }
  return fs;
}

/// Largest grid (number of evaluation points) exists_nondegenerate will scan
/// before giving up.
inline constexpr std::uint64_t kMaxFormGrid = 2000000;

/// A non-degenerate member of the form space, if any. The determinant of a
/// generic member is a polynomial of degree at most rank(B_i) in the i-th
/// coefficient, so it vanishes identically iff it vanishes on the grid
/// {0..rank(B_i)} in each coordinate.
inline std::optional<HomogeneousForm> exists_nondegenerate(const FormSpace& fs) {
  const std::size_t k = fs.dim();
  const std::size_t n = fs.algebra.dim();
  if (k == 0) return std::nullopt;
  if (n == 0) return fs.basis.front();
  // A common kernel vector of every basis form rules out non-degeneracy.
  Matrix stacked(n, n * k);
  for (std::size_t f = 0; f < k; ++f)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(i, f * n + j) = fs.basis[f].gram(i, j);
  if (rank(stacked) < n) return std::nullopt;

  auto try_point = [&](const Vector& c) -> std::optional<HomogeneousForm> {
    auto f = fs.combination(c);
    if (sgn(det(f.gram)) != 0) return f;
    return std::nullopt;
  };
  for (std::size_t f = 0; f < k; ++f)
    if (auto r = try_point(unit_vector(k, f))) return r;
  {
    Vector c(k);
    for (std::size_t f = 0; f < k; ++f) c[f] = 1;
    if (auto r = try_point(c)) return r;
    for (std::size_t f = 0; f < k; ++f) c[f] = static_cast<long>(f + 1);
    if (auto r = try_point(c)) return r;
  }
  std::vector<std::size_t> bound(k);
  std::uint64_t total = 1;
  for (std::size_t f = 0; f < k; ++f) {
    bound[f] = rank(fs.basis[f].gram);
    total *= static_cast<std::uint64_t>(bound[f] + 1);
    if (total > kMaxFormGrid) {
      throw Error("form space of dimension " + std::to_string(k) + " is too large for an exhaustive grid");
    }
  }
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Vector c(k);
    for (std::size_t f = 0; f < k; ++f) c[f] = static_cast<unsigned long>(idx[f]);
    if (auto r = try_point(c)) return r;
    std::size_t f = 0;
    while (f < k && idx[f] == bound[f]) idx[f++] = 0;
    if (f == k) break;
    ++idx[f];
  }
  return std::nullopt;
}

struct IncompatibilityVerdict {
  bool has_even = false;
  bool has_odd = false;
  bool product_null = false;
  std::optional<HomogeneousForm> even_witness, odd_witness;
  /// Both parities admitted although the product is not null.
  bool violates() const { return has_even && has_odd && !product_null; }
};

inline IncompatibilityVerdict incompatibility_check(const Superalgebra& a) {
  IncompatibilityVerdict v;
  v.even_witness = exists_nondegenerate(invariant_form_space(a, Parity::Even));
  v.odd_witness = exists_nondegenerate(invariant_form_space(a, Parity::Odd));
  v.has_even = v.even_witness.has_value();
  v.has_odd = v.odd_witness.has_value();
  v.product_null = a.product_is_null();
  return v;
}

/// {x : B(x, u) = 0}.
inline GradedSubspace orthogonal(const Superalgebra& a, const HomogeneousForm& b, const GradedSubspace& u) {
  if (b.dim() != a.dim()) throw ShapeError("form dimension must equal algebra dimension");
  if (!is_nondegenerate(b)) throw DegenerateForm("orthogonal requires a non-degenerate form");
  Matrix rows(u.dim(), a.dim());
  const auto ub = u.basis();
  for (std::size_t r = 0; r < ub.size(); ++r) {
    const Vector gu = b.gram * ub[r];
    for (std::size_t c = 0; c < a.dim(); ++c) rows(r, c) = gu[c];
  }
  auto ker = kernel(rows);
  auto j = GradedSubspace::span(a, ker.vectors());
  if (j.dim() != ker.dim()) throw PreconditionError("form is not homogeneous");
  if (is_ideal(a, u)) {
    const bool ok = is_ideal(a, j) && product_subspaces(a, u, j).is_zero() && product_subspaces(a, j, u).is_zero();
    if (!ok) throw PreconditionError("form is not invariant: orthogonal of an ideal is not an annihilating ideal");
  }
  return j;
}

/// Gram matrix of b in the basis of u.
inline HomogeneousForm restrict(const HomogeneousForm& b, const GradedSubspace& u) {
  const Matrix m = u.basis_matrix();
  return {b.parity, m.transpose() * b.gram * m};
}

inline bool totally_isotropic(const HomogeneousForm& b, const GradedSubspace& u) {
  return restrict(b, u).gram.is_zero();
}

/// W = J/I with the induced form.
struct QuotientStructure {
  Superalgebra algebra;
  HomogeneousForm form;
  /// Columns: representatives in A of the quotient basis.
  Matrix lift;
  /// J-coordinates to W-coordinates.
  Matrix projection;
};

inline QuotientStructure quotient_form(const Superalgebra& a, const HomogeneousForm& b, const GradedSubspace& i,
                                       const GradedSubspace& j) {
  if (!is_ideal(a, i)) throw PreconditionError("I is not a graded two-sided ideal");
  if (!totally_isotropic(b, i)) throw PreconditionError("I is not totally isotropic");
  if (!(orthogonal(a, b, i) == j)) throw PreconditionError("J is not the orthogonal of I");
  if (!j.contains(i)) throw PreconditionError("I is not contained in J");
  const auto jalg = subalgebra(a, j);
  std::vector<Vector> icoords;
  for (const auto& v : i.basis()) icoords.push_back(j.coordinates(v));
  const auto iin = GradedSubspace::span(jalg, icoords);
  auto q = quotient(jalg, iin);
  const auto jb = j.basis();
  std::vector<Vector> lifts;
  for (auto r : q.representatives) lifts.push_back(jb[r]);
  Matrix lift = Matrix::from_columns(lifts, a.dim());
  HomogeneousForm form{b.parity, lift.transpose() * b.gram * lift};
  if (!is_nondegenerate(form)) throw Error("induced form on J/I is degenerate");
  return {std::move(q.algebra), std::move(form), std::move(lift), std::move(q.projection)};
}

/// Orthogonal sum of forms on direct_sum(parts).
inline HomogeneousForm direct_sum_form(const std::vector<Superalgebra>& parts,
                                       const std::vector<HomogeneousForm>& forms) {
  if (parts.size() != forms.size() || parts.empty()) throw ShapeError("one form per summand is required");
  const auto where = direct_sum_positions(parts);
  std::size_t n = 0;
  for (const auto& p : parts) n += p.dim();
  HomogeneousForm f{forms.front().parity, Matrix(n, n)};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (forms[k].parity != f.parity) throw PreconditionError("summand forms must share a parity");
    if (forms[k].dim() != parts[k].dim()) throw ShapeError("form dimension must equal summand dimension");
    for (std::size_t i = 0; i < parts[k].dim(); ++i)
      for (std::size_t j = 0; j < parts[k].dim(); ++j) f.gram(where[k][i], where[k][j]) = forms[k].gram(i, j);
  }
  return f;
}

/// Even parity: phi0: A0 -> A0*, phi1: A1 -> A1*. Odd parity: phi: A1 -> A0*.
/// Matrices act on coordinates, dual spaces in their dual bases.
struct BimoduleIso {
  Parity parity = Parity::Even;
  Matrix phi0, phi1, phi;
};

namespace detail {

/// Restriction of T to the coordinate block [lo, lo+len) (T must preserve it).
inline Matrix block_of(const Matrix& t, std::size_t lo, std::size_t len) { return t.block(lo, lo, len, len); }

}  // namespace detail

/// The A0-bimodule isomorphisms x -> B(x, .) and their intertwining check.
inline BimoduleIso form_to_bimodule_iso(const Superalgebra& a, const HomogeneousForm& b) {
  if (b.dim() != a.dim()) throw ShapeError("form dimension must equal algebra dimension");
  if (!is_nondegenerate(b)) throw DegenerateForm("bimodule isomorphism needs a non-degenerate form");
  if (!check_form(a, b).empty()) throw PreconditionError("form is not a homogeneous symmetric structure");
  const std::size_t n0 = a.dim_even(), n1 = a.dim_odd();
  BimoduleIso iso;
  iso.parity = b.parity;
  // Columns: phi(e_i) in the dual basis, entries B(e_i, e_j).
  auto intertwines = [&](const Matrix& phi, std::size_t src, std::size_t srclen, std::size_t tgt,
                         std::size_t tgtlen) {
    for (std::size_t y = 0; y < n0; ++y) {
      const Matrix l = left_basis(a, y), r = right_basis(a, y);
      const Matrix ls = detail::block_of(l, src, srclen), rs = detail::block_of(r, src, srclen);
      const Matrix lt = detail::block_of(l, tgt, tgtlen), rt = detail::block_of(r, tgt, tgtlen);
      // L*(y) = (R_y on target)^T, R*(y) = (L_y on target)^T.
      if (!(phi * ls == rt.transpose() * phi) || !(phi * rs == lt.transpose() * phi)) {
        throw Error("bimodule isomorphism fails to intertwine at even basis element " + std::to_string(y));
      }
    }
  };
  if (b.parity == Parity::Even) {
    iso.phi0 = b.gram.block(0, 0, n0, n0).transpose();
    iso.phi1 = b.gram.block(n0, n0, n1, n1).transpose();
    intertwines(iso.phi0, 0, n0, 0, n0);
    intertwines(iso.phi1, n0, n1, n0, n1);
  } else {
    if (n0 != n1) throw DegenerateForm("odd structure requires equal even and odd dimensions");
    iso.phi = b.gram.block(n0, 0, n1, n0).transpose();
    intertwines(iso.phi, n0, n1, 0, n0);
  }
  return iso;
}

}  // namespace superalg

#endif  // SUPERALG_FORMS_HPP
