#ifndef SUPERALG_POLYNOMIAL_HPP
#define SUPERALG_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "exact_linear.hpp"

namespace superalg {

/// Univariate polynomial, coefficients from the constant term upwards.
using Poly = std::vector<Scalar>;

inline void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline long degree(const Poly& p) {
  Poly q = p;
  trim(q);
  return static_cast<long>(q.size()) - 1;
}

inline Scalar evaluate(const Poly& p, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

/// Quotient and remainder of a by b (b nonzero).
inline std::pair<Poly, Poly> divmod(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw PreconditionError("polynomial division by zero");
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, Scalar(0));
  for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    const Scalar c = a[shift + b.size() - 1] / b.back();
    q[shift] = c;
    if (sgn(c) != 0) {
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly make_monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  const Scalar lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

namespace detail {

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
    if (d > 10000000) throw SplitRequired("polynomial coefficients too large for rational root search");
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Distinct rational roots in increasing order.
inline std::vector<Scalar> rational_roots(Poly p) {
  trim(p);
  std::vector<Scalar> roots;
  if (p.size() <= 1) return roots;
  std::size_t low = 0;
  while (sgn(p[low]) == 0) ++low;
  if (low > 0) {
    roots.push_back(Scalar(0));
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (p.size() <= 1) return roots;
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : p) ints.push_back(c.get_num() * (l / c.get_den()));
  const auto nums = detail::positive_divisors(ints.front());
  const auto dens = detail::positive_divisors(ints.back());
  for (const auto& q : dens) {
    for (const auto& n : nums) {
      for (int s : {1, -1}) {
        Scalar cand(n * s, q);
        cand.canonicalize();
        if (sgn(evaluate(p, cand)) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Minimal polynomial of a square matrix (monic), found as the first linear
/// dependency among I, T, T^2, ...
inline Poly minimal_polynomial(const Matrix& t) {
  if (!t.square()) throw ShapeError("minimal polynomial of a non-square matrix");
  const std::size_t n = t.rows();
  const std::size_t flat = n * n;
  EchelonBuilder eb(flat + n + 1);
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector row(flat + n + 1, Scalar(0));
    std::copy(power.entries().begin(), power.entries().end(), row.begin());
    row[flat + k] = 1;
    Vector reduced = eb.reduce(row);
    const bool dependent = std::all_of(reduced.begin(), reduced.begin() + static_cast<std::ptrdiff_t>(flat),
                                       [](const Scalar& s) { return sgn(s) == 0; });
    if (dependent) {
      Poly m(reduced.begin() + static_cast<std::ptrdiff_t>(flat), reduced.end());
      return make_monic(m);
    }
    eb.add(std::move(row));
    power = power * t;
  }
  throw Error("minimal polynomial search exceeded the Cayley-Hamilton bound");
}

inline Matrix evaluate(const Poly& p, const Matrix& t) {
  Matrix acc(t.rows(), t.cols());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + (*it) * Matrix::identity(t.rows());
  return acc;
}

/// Generalized eigenspaces of t for its rational eigenvalues, in increasing
/// eigenvalue order. Throws SplitRequired if some eigenvalue is irrational.
inline std::vector<std::pair<Scalar, SubspaceBasis>> rational_eigenspaces(const Matrix& t) {
  const std::size_t n = t.rows();
  std::vector<std::pair<Scalar, SubspaceBasis>> out;
  if (n == 0) return out;
  const Poly m = minimal_polynomial(t);
  const auto roots = rational_roots(m);
  Poly rest = m;
  for (const auto& r : roots) {
    Poly lin{-r, Scalar(1)};
    while (true) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.empty()) break;
      rest = q;
    }
  }
  if (degree(rest) > 0) throw SplitRequired("operator has eigenvalues outside the rationals");
  for (const auto& r : roots) {
    Matrix shifted = t - r * Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) power = power * shifted;
    out.emplace_back(r, kernel(power));
  }
  return out;
}

}  // namespace superalg

#endif  // SUPERALG_POLYNOMIAL_HPP
