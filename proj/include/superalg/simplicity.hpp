#ifndef SUPERALG_SIMPLICITY_HPP
#define SUPERALG_SIMPLICITY_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact_linear.hpp"
#include "polynomial.hpp"
#include "superalgebra.hpp"

namespace superalg {

/// Refines a list of complementary subspaces by the generalized eigenspaces
/// of an operator commuting with all of them.
inline std::vector<SubspaceBasis> refine_by_operator(const std::vector<SubspaceBasis>& pieces, const Matrix& t) {
  const auto eig = rational_eigenspaces(t);
  std::vector<SubspaceBasis> out;
  for (const auto& p : pieces) {
    for (const auto& [value, space] : eig) {
      auto cut = p.intersect(space);
      if (!cut.is_zero()) out.push_back(std::move(cut));
    }
  }
  return out;
}

/// Ungraded simple components of a semisimple algebra, as subspaces of the
/// full coordinate space. Throws SplitRequired when the center is not split.
inline std::vector<SubspaceBasis> simple_components(const Superalgebra& a) {
  const auto z = center(a);
  std::vector<SubspaceBasis> pieces{SubspaceBasis::whole(a.dim())};
  for (const auto& c : z.basis()) {
    if (pieces.size() == z.dim()) break;
    pieces = refine_by_operator(pieces, left_mult(a, c));
  }
  if (pieces.size() != z.dim()) throw SplitRequired("center does not split into rational idempotents");
  return pieces;
}

struct SimplicityVerdict {
  bool simple = false;
  std::string reason;
  /// Number of ungraded simple components (0 if the radical is nonzero).
  std::size_t components = 0;
  /// True when the grading automorphism exchanges two components.
  bool swapped = false;
};

/// Decides whether a has no graded two-sided ideals besides 0 and a.
inline SimplicityVerdict is_graded_simple(const Superalgebra& a) {
  if (a.dim() == 0) throw PreconditionError("simplicity of the zero algebra is undefined");
  SimplicityVerdict v;
  const auto rad = radical(a);
  if (!rad.is_zero()) {
    v.reason = "nonzero radical of dimension " + std::to_string(rad.dim());
    return v;
  }
  const auto comps = simple_components(a);
  v.components = comps.size();
  // Grading automorphism: negate odd coordinates.
  auto flip = [&](const SubspaceBasis& s) {
    std::vector<Vector> img;
    for (auto x : s.vectors()) {
      for (std::size_t i = a.dim_even(); i < a.dim(); ++i) x[i] = -x[i];
      img.push_back(std::move(x));
    }
    return SubspaceBasis::span(a.dim(), img);
  };
  std::vector<int> orbit(comps.size(), -1);
  int orbits = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (orbit[i] >= 0) continue;
    orbit[i] = orbits;
    const auto img = flip(comps[i]);
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (j != i && comps[j] == img) {
        orbit[j] = orbits;
        v.swapped = true;
      }
    }
    ++orbits;
  }
  v.simple = orbits == 1;
  v.reason = v.simple ? (v.swapped ? "two components exchanged by the grading" : "one graded component")
                      : std::to_string(orbits) + " grading orbits of simple components";
  return v;
}

namespace detail {

inline std::optional<std::size_t> exact_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  for (std::size_t c = (r > 0 ? r - 1 : 0); c <= r + 1; ++c)
    if (c * c == n) return c;
  return std::nullopt;
}

}  // namespace detail

/// Names the catalog type of a graded-simple algebra from its dimensions and
/// component count: "M(r,s)" or "Q(n)". Empty when not simple or not matched.
inline std::string recognize_simple(const Superalgebra& a) {
  if (a.dim() == 0) return "";
  const auto v = is_graded_simple(a);
  if (!v.simple) return "";
  const std::size_t n0 = a.dim_even(), n1 = a.dim_odd();
  if (v.components == 1) {
    auto m = detail::exact_sqrt(n0 + n1);
    if (n0 < n1) return "";
    auto d = detail::exact_sqrt(n0 - n1);
    if (!m || !d || (*m + *d) % 2 != 0) return "";
    const std::size_t r = (*m + *d) / 2, s = (*m - *d) / 2;
    return "M(" + std::to_string(r) + "," + std::to_string(s) + ")";
  }
  if (v.components == 2 && n0 == n1) {
    if (auto n = detail::exact_sqrt(n0)) return "Q(" + std::to_string(*n) + ")";
  }
  return "";
}

}  // namespace superalg

#endif  // SUPERALG_SIMPLICITY_HPP
