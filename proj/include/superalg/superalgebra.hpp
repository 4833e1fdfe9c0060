#ifndef SUPERALG_SUPERALGEBRA_HPP
#define SUPERALG_SUPERALGEBRA_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact_linear.hpp"

namespace superalg {

enum class Parity { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline int bit(Parity p) { return static_cast<int>(p); }
/// (-1)^(a*b) as an integer.
inline int sign_of(int a, int b) { return ((a & b) & 1) ? -1 : 1; }
inline const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

struct Term {
  std::size_t index;
  Scalar coeff;
};

/// One structure constant: e_i . e_j contains coeff . e_k.
struct Triple {
  std::size_t i, j, k;
  Scalar coeff;
};

/// Finite-dimensional superalgebra given by structure constants. Indices
/// below dim_even() are even, the rest odd.
class Superalgebra {
 public:
  Superalgebra() = default;
  Superalgebra(std::size_t n0, std::size_t n1, std::vector<std::string> names = {})
      : n0_(n0), n1_(n1), names_(std::move(names)), table_((n0 + n1) * (n0 + n1)) {
    if (names_.empty()) {
      for (std::size_t i = 0; i < dim(); ++i) names_.push_back("b" + std::to_string(i));
    }
    if (names_.size() != dim()) throw ShapeError("basis name count must equal dimension");
  }

  std::size_t dim_even() const noexcept { return n0_; }
  std::size_t dim_odd() const noexcept { return n1_; }
  std::size_t dim() const noexcept { return n0_ + n1_; }
  Parity parity(std::size_t i) const { return i < n0_ ? Parity::Even : Parity::Odd; }
  int pbit(std::size_t i) const { return i < n0_ ? 0 : 1; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  void rename(std::vector<std::string> names) {
    if (names.size() != dim()) throw ShapeError("basis name count must equal dimension");
    names_ = std::move(names);
  }

  /// Adds c to the coefficient of e_k in e_i . e_j.
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    if (i >= dim() || j >= dim() || k >= dim()) throw ShapeError("structure index out of range");
    if (sgn(c) == 0) return;
    auto& cell = table_[i * dim() + j];
    for (auto it = cell.begin(); it != cell.end(); ++it) {
      if (it->index == k) {
        it->coeff += c;
        if (sgn(it->coeff) == 0) cell.erase(it);
        return;
      }
      if (it->index > k) {
        cell.insert(it, Term{k, c});
        return;
      }
    }
    cell.push_back(Term{k, c});
  }

  /// Replaces e_i . e_j by the given vector.
  void set_product(std::size_t i, std::size_t j, const Vector& v) {
    if (v.size() != dim()) throw ShapeError("product vector length mismatch");
    auto& cell = table_[i * dim() + j];
    cell.clear();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) cell.push_back(Term{k, v[k]});
  }

  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Scalar coeff(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& t : product(i, j))
      if (t.index == k) return t.coeff;
    return Scalar(0);
  }

  Vector product_vector(std::size_t i, std::size_t j) const {
    Vector v = zero_vector(dim());
    for (const auto& t : product(i, j)) v[t.index] = t.coeff;
    return v;
  }

  std::vector<Triple> triples() const {
    std::vector<Triple> out;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& t : product(i, j)) out.push_back(Triple{i, j, t.index, t.coeff});
    return out;
  }

  bool product_is_null() const {
    for (const auto& cell : table_)
      if (!cell.empty()) return false;
    return true;
  }

  friend bool operator==(const Superalgebra& a, const Superalgebra& b) {
    if (a.n0_ != b.n0_ || a.n1_ != b.n1_) return false;
    for (std::size_t c = 0; c < a.table_.size(); ++c) {
      const auto& x = a.table_[c];
      const auto& y = b.table_[c];
      if (x.size() != y.size()) return false;
      for (std::size_t t = 0; t < x.size(); ++t)
        if (x[t].index != y[t].index || x[t].coeff != y[t].coeff) return false;
    }
    return true;
  }

 private:
  std::size_t n0_ = 0;
  std::size_t n1_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<Term>> table_;
};

inline Vector multiply(const Superalgebra& a, const Vector& x, const Vector& y) {
  if (x.size() != a.dim() || y.size() != a.dim()) throw ShapeError("operand length must equal algebra dimension");
  Vector out = zero_vector(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar c = x[i] * y[j];
      for (const auto& t : a.product(i, j)) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

/// Matrix of x -> e_i . x.
inline Matrix left_basis(const Superalgebra& a, std::size_t i) {
  Matrix m(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j)
    for (const auto& t : a.product(i, j)) m(t.index, j) = t.coeff;
  return m;
}

/// Matrix of x -> x . e_j.
inline Matrix right_basis(const Superalgebra& a, std::size_t j) {
  Matrix m(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& t : a.product(i, j)) m(t.index, i) = t.coeff;
  return m;
}

inline Matrix left_mult(const Superalgebra& a, const Vector& x) {
  Matrix m(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (sgn(x[i]) != 0) m = m + x[i] * left_basis(a, i);
  return m;
}

inline Matrix right_mult(const Superalgebra& a, const Vector& x) {
  Matrix m(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (sgn(x[i]) != 0) m = m + x[i] * right_basis(a, i);
  return m;
}

/// Every violated grading or associativity condition; empty means valid.
inline std::vector<std::string> validate(const Superalgebra& a) {
  std::vector<std::string> report;
  const auto& nm = a.basis_names();
  for (const auto& t : a.triples()) {
    if ((a.pbit(t.i) ^ a.pbit(t.j)) != a.pbit(t.k)) {
      report.push_back("grading violation at (" + std::to_string(t.i) + "," + std::to_string(t.j) + ") -> " +
                       std::to_string(t.k) + " [" + nm[t.i] + "." + nm[t.j] + " has " + nm[t.k] + "]");
    }
  }
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = a.product_vector(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = zero_vector(n);
        for (std::size_t m = 0; m < n; ++m) {
          if (sgn(ij[m]) == 0) continue;
          for (const auto& t : a.product(m, k)) lhs[t.index] += ij[m] * t.coeff;
        }
        Vector rhs = zero_vector(n);
        for (const auto& u : a.product(j, k)) {
          for (const auto& t : a.product(i, u.index)) rhs[t.index] += u.coeff * t.coeff;
        }
        if (lhs != rhs) {
          report.push_back("associativity violation at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + ") [" + nm[i] + "," + nm[j] + "," + nm[k] + "]");
        }
      }
    }
  }
  return report;
}

/// A graded subspace, stored as an even part in the even coordinates and an
/// odd part in the odd coordinates.
class GradedSubspace {
 public:
  GradedSubspace() = default;
  GradedSubspace(SubspaceBasis even, SubspaceBasis odd) : even_(std::move(even)), odd_(std::move(odd)) {}

  static GradedSubspace zero(std::size_t n0, std::size_t n1) {
    return {SubspaceBasis::zero(n0), SubspaceBasis::zero(n1)};
  }
  static GradedSubspace whole(std::size_t n0, std::size_t n1) {
    return {SubspaceBasis::whole(n0), SubspaceBasis::whole(n1)};
  }
  static GradedSubspace zero(const Superalgebra& a) { return zero(a.dim_even(), a.dim_odd()); }
  static GradedSubspace whole(const Superalgebra& a) { return whole(a.dim_even(), a.dim_odd()); }

  /// Smallest graded subspace containing the given full-coordinate vectors
  /// (spans their homogeneous components).
  static GradedSubspace span(std::size_t n0, std::size_t n1, const std::vector<Vector>& vectors) {
    EchelonBuilder ev(n0), od(n1);
    for (const auto& v : vectors) {
      if (v.size() != n0 + n1) throw ShapeError("vector length must equal algebra dimension");
      ev.add(Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n0)));
      od.add(Vector(v.begin() + static_cast<std::ptrdiff_t>(n0), v.end()));
    }
    return {SubspaceBasis::from_echelon(ev), SubspaceBasis::from_echelon(od)};
  }
  static GradedSubspace span(const Superalgebra& a, const std::vector<Vector>& vectors) {
    return span(a.dim_even(), a.dim_odd(), vectors);
  }

  const SubspaceBasis& even_part() const noexcept { return even_; }
  const SubspaceBasis& odd_part() const noexcept { return odd_; }
  std::size_t n0() const noexcept { return even_.ambient_dim(); }
  std::size_t n1() const noexcept { return odd_.ambient_dim(); }
  std::size_t dim() const noexcept { return even_.dim() + odd_.dim(); }
  std::size_t dim_even() const noexcept { return even_.dim(); }
  std::size_t dim_odd() const noexcept { return odd_.dim(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return even_.is_whole() && odd_.is_whole(); }

  Vector embed_even(const Vector& v) const {
    Vector out = zero_vector(n0() + n1());
    std::copy(v.begin(), v.end(), out.begin());
    return out;
  }
  Vector embed_odd(const Vector& v) const {
    Vector out = zero_vector(n0() + n1());
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(n0()));
    return out;
  }

  /// Homogeneous basis in full coordinates, even vectors first.
  std::vector<Vector> basis() const {
    std::vector<Vector> out;
    for (const auto& v : even_.vectors()) out.push_back(embed_even(v));
    for (const auto& v : odd_.vectors()) out.push_back(embed_odd(v));
    return out;
  }

  std::pair<Vector, Vector> split(const Vector& v) const {
    if (v.size() != n0() + n1()) throw ShapeError("vector length must equal algebra dimension");
    return {Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n0())),
            Vector(v.begin() + static_cast<std::ptrdiff_t>(n0()), v.end())};
  }

  bool contains(const Vector& v) const {
    auto [e, o] = split(v);
    return even_.contains(e) && odd_.contains(o);
  }
  bool contains(const GradedSubspace& u) const { return even_.contains(u.even_) && odd_.contains(u.odd_); }

  /// Coordinates of v in basis(); v must lie in the subspace.
  Vector coordinates(const Vector& v) const {
    auto [e, o] = split(v);
    Vector c = even_.coordinates(e);
    Vector co = odd_.coordinates(o);
    c.insert(c.end(), co.begin(), co.end());
    return c;
  }

  /// Reduction of v modulo the subspace (canonical representative).
  Vector reduce(const Vector& v) const {
    auto [e, o] = split(v);
    e = even_.reduce(e);
    o = odd_.reduce(o);
    e.insert(e.end(), o.begin(), o.end());
    return e;
  }

  GradedSubspace sum(const GradedSubspace& u) const { return {even_.sum(u.even_), odd_.sum(u.odd_)}; }
  GradedSubspace intersect(const GradedSubspace& u) const {
    return {even_.intersect(u.even_), odd_.intersect(u.odd_)};
  }

  /// Matrix whose columns are basis().
  Matrix basis_matrix() const { return Matrix::from_columns(basis(), n0() + n1()); }

  friend bool operator==(const GradedSubspace& a, const GradedSubspace& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_;
  }

 private:
  SubspaceBasis even_;
  SubspaceBasis odd_;
};

/// Left and right regular actions of an algebra on itself together with the
/// dual actions on A*: L*(x)(f) = f o R_x and R*(x)(f) = f o L_x.
struct BimoduleAction {
  std::vector<Matrix> left, right, dual_left, dual_right;
};

inline BimoduleAction bimodule_action(const Superalgebra& a) {
  BimoduleAction act;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    act.left.push_back(left_basis(a, i));
    act.right.push_back(right_basis(a, i));
    // In the dual basis, f o T has matrix T^T.
    act.dual_left.push_back(act.right.back().transpose());
    act.dual_right.push_back(act.left.back().transpose());
  }
  return act;
}

/// Span of all products u . v.
inline GradedSubspace product_subspaces(const Superalgebra& a, const GradedSubspace& u, const GradedSubspace& v) {
  std::vector<Vector> prods;
  const auto ub = u.basis();
  const auto vb = v.basis();
  for (const auto& x : ub)
    for (const auto& y : vb) prods.push_back(multiply(a, x, y));
  return GradedSubspace::span(a, prods);
}

namespace detail {

/// Rows whose joint kernel within the given parity block is the set of x
/// there with x.e_j = e_j.x = 0 for all j.
inline SubspaceBasis annihilator_block(const Superalgebra& a, std::size_t lo, std::size_t hi) {
  const std::size_t n = a.dim();
  const std::size_t w = hi - lo;
  // Column c (basis e_{lo+c}) of the map x -> (x.e_j, e_j.x)_j.
  EchelonBuilder eb(w);
  for (std::size_t j = 0; j < n && !eb.full(); ++j) {
    for (int side = 0; side < 2; ++side) {
      std::vector<Vector> rows(n, zero_vector(w));
      for (std::size_t c = 0; c < w; ++c) {
        const auto& prod = side == 0 ? a.product(lo + c, j) : a.product(j, lo + c);
        for (const auto& t : prod) rows[t.index][c] = t.coeff;
      }
      for (auto& r : rows)
        if (!is_zero(r)) eb.add(std::move(r));
    }
  }
  return SubspaceBasis::span(w, eb.null_space());
}

}  // namespace detail

/// {x : x.A = A.x = 0}.
inline GradedSubspace annihilator(const Superalgebra& a) {
  return {detail::annihilator_block(a, 0, a.dim_even()), detail::annihilator_block(a, a.dim_even(), a.dim())};
}

inline bool is_ideal(const Superalgebra& a, const GradedSubspace& u) {
  const auto whole = GradedSubspace::whole(a);
  return u.contains(product_subspaces(a, whole, u)) && u.contains(product_subspaces(a, u, whole));
}

inline bool is_subalgebra(const Superalgebra& a, const GradedSubspace& u) {
  return u.contains(product_subspaces(a, u, u));
}

/// Smallest graded two-sided ideal containing the seed.
inline GradedSubspace ideal_generated(const Superalgebra& a, const GradedSubspace& seed) {
  if (seed.n0() != a.dim_even() || seed.n1() != a.dim_odd()) throw ShapeError("seed ambient mismatch");
  GradedSubspace cur = seed;
  const std::size_t n = a.dim();
  std::vector<Vector> frontier = cur.basis();
  while (!frontier.empty()) {
    std::vector<Vector> fresh;
    for (const auto& x : frontier) {
      for (std::size_t j = 0; j < n; ++j) {
        const Vector ej = unit_vector(n, j);
        for (const Vector& p : {multiply(a, ej, x), multiply(a, x, ej)}) {
          if (is_zero(p) || cur.contains(p)) continue;
          cur = cur.sum(GradedSubspace::span(a, {p}));
          fresh.push_back(p);
        }
      }
    }
    frontier = std::move(fresh);
  }
  return cur;
}

/// Algebra structure on a subalgebra u, in the coordinates of u.basis().
inline Superalgebra subalgebra(const Superalgebra& a, const GradedSubspace& u) {
  if (!is_subalgebra(a, u)) throw PreconditionError("subspace is not closed under the product");
  const auto b = u.basis();
  std::vector<std::string> names;
  for (const auto& v : b) {
    std::size_t nz = 0, idx = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) ++nz, idx = i;
    names.push_back(nz == 1 && v[idx] == 1 ? a.basis_names()[idx] : "u" + std::to_string(names.size()));
  }
  Superalgebra s(u.dim_even(), u.dim_odd(), names);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s.set_product(i, j, u.coordinates(multiply(a, b[i], b[j])));
  return s;
}

struct QuotientResult {
  Superalgebra algebra;
  /// s: A -> A/I in the quotient's coordinates.
  Matrix projection;
  /// Original basis indices kept as quotient basis representatives.
  std::vector<std::size_t> representatives;
};

inline QuotientResult quotient(const Superalgebra& a, const GradedSubspace& i) {
  if (i.n0() != a.dim_even() || i.n1() != a.dim_odd()) throw ShapeError("ideal ambient mismatch");
  if (!is_ideal(a, i)) throw NotAnIdeal("subspace is not a graded two-sided ideal");
  std::vector<std::size_t> reps;
  for (auto c : i.even_part().complement_coordinates()) reps.push_back(c);
  for (auto c : i.odd_part().complement_coordinates()) reps.push_back(a.dim_even() + c);
  const std::size_t q0 = a.dim_even() - i.dim_even();
  std::vector<std::string> names;
  for (auto r : reps) names.push_back(a.basis_names()[r]);
  Matrix s(reps.size(), a.dim());
  for (std::size_t c = 0; c < a.dim(); ++c) {
    const Vector red = i.reduce(unit_vector(a.dim(), c));
    for (std::size_t r = 0; r < reps.size(); ++r) s(r, c) = red[reps[r]];
  }
  Superalgebra q(q0, reps.size() - q0, names);
  for (std::size_t x = 0; x < reps.size(); ++x)
    for (std::size_t y = 0; y < reps.size(); ++y)
      q.set_product(x, y, s * a.product_vector(reps[x], reps[y]));
  return {std::move(q), std::move(s), std::move(reps)};
}

/// Block construction; all even coordinates of all summands come first, in
/// summand order, followed by the odd ones.
inline Superalgebra direct_sum(const std::vector<Superalgebra>& parts) {
  std::size_t n0 = 0, n1 = 0;
  for (const auto& p : parts) n0 += p.dim_even(), n1 += p.dim_odd();
  std::vector<std::vector<std::size_t>> where;
  std::vector<std::string> names(n0 + n1);
  std::size_t e = 0, o = n0;
  for (const auto& p : parts) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < p.dim(); ++i) {
      const std::size_t to = i < p.dim_even() ? e++ : o++;
      m.push_back(to);
      names[to] = p.basis_names()[i];
    }
    where.push_back(std::move(m));
  }
  Superalgebra s(n0, n1, names);
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (const auto& t : parts[k].triples()) s.add(where[k][t.i], where[k][t.j], where[k][t.k], t.coeff);
  return s;
}

/// Position of each summand's basis element inside direct_sum(parts).
inline std::vector<std::vector<std::size_t>> direct_sum_positions(const std::vector<Superalgebra>& parts) {
  std::size_t n0 = 0;
  for (const auto& p : parts) n0 += p.dim_even();
  std::vector<std::vector<std::size_t>> where;
  std::size_t e = 0, o = n0;
  for (const auto& p : parts) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < p.dim(); ++i) m.push_back(i < p.dim_even() ? e++ : o++);
    where.push_back(std::move(m));
  }
  return where;
}

/// Jacobson radical by the trace criterion on the unital hull:
/// x is radical iff tr L_x = 0 and tr L_{x.e_j} = 0 for every j.
inline GradedSubspace radical(const Superalgebra& a) {
  const std::size_t n = a.dim();
  Vector t(n, Scalar(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) t[k] += a.coeff(k, i, i);
  Matrix rows(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) rows(0, i) = t[i];
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& term : a.product(i, j)) rows(j + 1, i) += term.coeff * t[term.index];
  const auto ker = kernel(rows);
  auto g = GradedSubspace::span(a, ker.vectors());
  if (g.dim() != ker.dim()) throw Error("radical is not graded; input is not a valid superalgebra");
  return g;
}

/// Elements z with z.x = x.z for every x (center of the underlying algebra).
inline GradedSubspace center(const Superalgebra& a) {
  const std::size_t n = a.dim();
  EchelonBuilder eb(n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix diff = left_basis(a, j) - right_basis(a, j);
    // Column i of diff is e_j.e_i - e_i.e_j; condition sum_i z_i (e_i.e_j - e_j.e_i) = 0.
    for (std::size_t r = 0; r < n; ++r) {
      Vector row = zero_vector(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = -diff(r, i);
      if (!is_zero(row)) eb.add(std::move(row));
    }
  }
  auto ker = SubspaceBasis::span(n, eb.null_space());
  return GradedSubspace::span(a, ker.vectors());
}

/// Two-sided unit if one exists.
inline std::optional<Vector> unit(const Superalgebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return Vector{};
  // u.e_j = e_j and e_j.u = e_j: linear in u.
  Matrix m(2 * n * n, n);
  Vector rhs(2 * n * n, Scalar(0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& t : a.product(i, j)) m(j * n + t.index, i) += t.coeff;
      for (const auto& t : a.product(j, i)) m(n * n + j * n + t.index, i) += t.coeff;
    }
    rhs[j * n + j] = 1;
    rhs[n * n + j * n + j] = 1;
  }
  auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  return sol->particular;
}

}  // namespace superalg

#endif  // SUPERALG_SUPERALGEBRA_HPP
