#ifndef SUPERALG_EXACT_LINEAR_HPP
#define SUPERALG_EXACT_LINEAR_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace superalg {

/// Exact rational number. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// "p/q", or "p" when q = 1. The sign sits on the numerator.
inline std::string to_string(Scalar s) {
  s.canonicalize();  // direct (p, q) construction skips it
  return s.get_str();
}

inline Scalar parse_scalar(std::string_view text) {
  std::string t(text);
  auto first = t.find_first_not_of(" \t");
  auto last = t.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty scalar");
  t = t.substr(first, last - first + 1);
  if (!t.empty() && t.front() == '+') t.erase(t.begin());
  const auto slash = t.find('/');
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string::npos) {
    if (!valid_int(t)) throw ParseError("malformed scalar '" + std::string(text) + "'");
  } else {
    std::string_view num(t.data(), slash);
    std::string_view den(t.data() + slash + 1, t.size() - slash - 1);
    if (!valid_int(num) || den.empty() || den.front() == '-' || !valid_int(den)) {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
  }
  Scalar out;
  if (out.set_str(t, 10) != 0) throw ParseError("malformed scalar '" + std::string(text) + "'");
  if (out.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  out.canonicalize();
  return out;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

inline Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v[i] = 1;
  return v;
}

inline Vector add(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector sub(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector scale(const Scalar& c, Vector a) {
  for (auto& x : a) x *= c;
  return a;
}

inline void axpy(Vector& y, const Scalar& c, const Vector& x) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += c * x[i];
  }
}

inline Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector length mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw ShapeError("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw ShapeError("ragged columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Vector col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  std::vector<Vector> row_list() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
  }

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const Scalar& c, Matrix a) {
    for (auto& x : a.data_) x *= c;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
    Vector out = zero_vector(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
      }
    }
    return out;
  }

  /// Flattened entries in row-major order.
  const std::vector<Scalar>& entries() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

/// Incremental reduced row echelon form. Rows are kept fully reduced, so the
/// stored basis is canonical for the row space.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == width_; }

  /// Reduces `v` against the stored rows.
  Vector reduce(Vector v) const {
    if (v.size() != width_) throw ShapeError("echelon width mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (sgn(c) != 0) axpy(v, -c, rows_[r]);
    }
    return v;
  }

  /// Adds `v` to the row space. Returns false if it was already contained.
  bool add(Vector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < width_ && sgn(v[p]) == 0) ++p;
    if (p == width_) return false;
    const Scalar inv = 1 / v[p];
    for (std::size_t j = p; j < width_; ++j) {
      if (sgn(v[j]) != 0) v[j] *= inv;
    }
    for (auto& row : rows_) {
      const Scalar c = row[p];
      if (sgn(c) != 0) axpy(row, -c, v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
  }

  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Basis of {x : row·x = 0 for every stored row}.
  std::vector<Vector> null_space() const {
    std::vector<bool> is_pivot(width_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < width_; ++f) {
      if (is_pivot[f]) continue;
      Vector v = zero_vector(width_);
      v[f] = 1;
      for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// A subspace of K^n stored by its reduced row echelon basis, so two equal
/// subspaces compare equal entry-wise.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(std::size_t ambient) : ambient_(ambient) {}

  static SubspaceBasis span(std::size_t ambient, const std::vector<Vector>& vectors) {
    EchelonBuilder eb(ambient);
    for (const auto& v : vectors) {
      if (eb.full()) break;
      eb.add(v);
    }
    return from_echelon(eb);
  }

  static SubspaceBasis from_echelon(const EchelonBuilder& eb) {
    SubspaceBasis s(eb.width());
    s.vectors_ = eb.rows();
    s.pivots_ = eb.pivots();
    return s;
  }

  static SubspaceBasis zero(std::size_t ambient) { return SubspaceBasis(ambient); }

  static SubspaceBasis whole(std::size_t ambient) {
    std::vector<Vector> units;
    for (std::size_t i = 0; i < ambient; ++i) units.push_back(unit_vector(ambient, i));
    return span(ambient, units);
  }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return vectors_.size(); }
  bool is_zero() const noexcept { return vectors_.empty(); }
  bool is_whole() const noexcept { return vectors_.size() == ambient_; }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  Vector reduce(Vector v) const {
    if (v.size() != ambient_) throw ShapeError("subspace ambient mismatch");
    for (std::size_t r = 0; r < vectors_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (sgn(c) != 0) axpy(v, -c, vectors_[r]);
    }
    return v;
  }

  bool contains(const Vector& v) const { return superalg::is_zero(reduce(v)); }

  bool contains(const SubspaceBasis& other) const {
    if (other.ambient_ != ambient_) throw ShapeError("subspace ambient mismatch");
    return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                       [this](const Vector& v) { return contains(v); });
  }

  /// Coefficients of `v` in the stored basis; `v` must lie in the subspace.
  Vector coordinates(const Vector& v) const {
    if (!contains(v)) throw PreconditionError("vector is not in the subspace");
    Vector c(vectors_.size());
    for (std::size_t r = 0; r < vectors_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  Vector combine(const Vector& coeffs) const {
    if (coeffs.size() != vectors_.size()) throw ShapeError("coefficient count mismatch");
    Vector v = zero_vector(ambient_);
    for (std::size_t r = 0; r < vectors_.size(); ++r) axpy(v, coeffs[r], vectors_[r]);
    return v;
  }

  SubspaceBasis sum(const SubspaceBasis& other) const {
    if (other.ambient_ != ambient_) throw ShapeError("subspace ambient mismatch");
    std::vector<Vector> all = vectors_;
    all.insert(all.end(), other.vectors_.begin(), other.vectors_.end());
    return span(ambient_, all);
  }

  SubspaceBasis intersect(const SubspaceBasis& other) const;

  /// Standard basis vectors completing this subspace to the whole space.
  std::vector<std::size_t> complement_coordinates() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!is_pivot[i]) out.push_back(i);
    return out;
  }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.ambient_ == b.ambient_ && a.vectors_ == b.vectors_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> vectors_;
  std::vector<std::size_t> pivots_;
};

inline SubspaceBasis kernel(const Matrix& m) {
  EchelonBuilder eb(m.cols());
  for (std::size_t i = 0; i < m.rows() && !eb.full(); ++i) eb.add(m.row(i));
  return SubspaceBasis::span(m.cols(), eb.null_space());
}

inline std::size_t rank(const Matrix& m) {
  EchelonBuilder eb(m.cols());
  for (std::size_t i = 0; i < m.rows() && !eb.full(); ++i) eb.add(m.row(i));
  return eb.rank();
}

inline SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_) throw ShapeError("subspace ambient mismatch");
  if (is_zero() || other.is_zero()) return zero(ambient_);
  // Solve sum a_i u_i - sum b_j w_j = 0; the u-part of each solution spans the intersection.
  const std::size_t k = dim();
  Matrix m(ambient_, k + other.dim());
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, c) = vectors_[c][r];
  for (std::size_t c = 0; c < other.dim(); ++c)
    for (std::size_t r = 0; r < ambient_; ++r) m(r, k + c) = -other.vectors_[c][r];
  std::vector<Vector> out;
  const auto ker = kernel(m);
  for (const auto& sol : ker.vectors()) {
    out.push_back(combine(Vector(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(k))));
  }
  return span(ambient_, out);
}

/// Full solution set of m·x = b.
struct Solution {
  Vector particular;
  SubspaceBasis homogeneous;
};

inline std::optional<Solution> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw ShapeError("right-hand side length must equal row count");
  const std::size_t n = m.cols();
  EchelonBuilder eb(n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector r = m.row(i);
    r.push_back(b[i]);
    eb.add(std::move(r));
  }
  Vector x = zero_vector(n);
  for (std::size_t r = 0; r < eb.rank(); ++r) {
    const std::size_t p = eb.pivots()[r];
    if (p == n) return std::nullopt;
    x[p] = eb.rows()[r][n];
  }
  return Solution{std::move(x), kernel(m)};
}

/// Exact determinant by fraction-free (Bareiss) elimination on the matrix
/// with denominators cleared row by row.
inline Scalar det(const Matrix& m) {
  if (!m.square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  Scalar row_scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    row_scale *= l;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return Scalar(0);
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Scalar d(a[n - 1][n - 1] * sign);
  d /= row_scale;
  d.canonicalize();
  return d;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  EchelonBuilder eb(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = m.row(i);
    r.resize(2 * n, Scalar(0));
    r[n + i] = 1;
    eb.add(std::move(r));
  }
  if (eb.rank() < n || eb.pivots()[n - 1] >= n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) inv(r, j) = eb.rows()[r][n + j];
  return inv;
}

}  // namespace superalg

#endif  // SUPERALG_EXACT_LINEAR_HPP
