#ifndef SUPERALG_STRUCTURE_HPP
#define SUPERALG_STRUCTURE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact_linear.hpp"
#include "extensions.hpp"
#include "forms.hpp"
#include "polynomial.hpp"
#include "simplicity.hpp"
#include "superalgebra.hpp"

namespace superalg {

inline constexpr std::uint32_t kDefaultProbeSeed = 20240611;

/// One orthogonal summand: subspace of the ambient algebra, its algebra in
/// the coordinates of subspace.basis(), the restricted form and a short type
/// label ("M(r,s)", "Q(n)", "null(n0,n1)" or "other").
struct Summand {
  GradedSubspace subspace;
  Superalgebra algebra;
  HomogeneousForm form;
  std::string kind;
};

struct Decomposition {
  std::vector<Summand> summands;
  /// Failed certificate checks; empty when the decomposition is verified.
  std::vector<std::string> certificate;
  bool verified() const noexcept { return certificate.empty(); }
};

/// Short type label: "null(n0,n1)", a recognized simple type or "other".
inline std::string describe(const Superalgebra& a) {
  if (a.product_is_null())
    return "null(" + std::to_string(a.dim_even()) + "," + std::to_string(a.dim_odd()) + ")";
  auto r = recognize_simple(a);
  return r.empty() ? "other" : r;
}

namespace detail {

/// Even maps T commuting with every L_x and R_x and self-adjoint for b.
/// Projections onto non-degenerate ideals along their orthogonal are
/// exactly the idempotents here.
inline std::vector<Matrix> self_adjoint_centroid(const Superalgebra& a, const HomogeneousForm& b) {
  const std::size_t n = a.dim();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::vector<std::vector<long>> at(n, std::vector<long>(n, -1));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (a.pbit(r) == a.pbit(c)) {
        at[r][c] = static_cast<long>(unknowns.size());
        unknowns.emplace_back(r, c);
      }
  const std::size_t u = unknowns.size();
  EchelonBuilder eb(u);
  auto push = [&](Vector row) {
    if (!is_zero(row) && !eb.full()) eb.add(std::move(row));
  };
  auto var = [&](std::size_t r, std::size_t c) { return at[r][c]; };
  for (std::size_t i = 0; i < n && !eb.full(); ++i) {
    for (const Matrix& m : {left_basis(a, i), right_basis(a, i)}) {
      // (T M - M T)(r, c) = 0.
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          Vector row = zero_vector(u);
          for (std::size_t k = 0; k < n; ++k) {
            if (sgn(m(k, c)) != 0 && var(r, k) >= 0) row[static_cast<std::size_t>(var(r, k))] += m(k, c);
            if (sgn(m(r, k)) != 0 && var(k, c) >= 0) row[static_cast<std::size_t>(var(k, c))] -= m(r, k);
          }
          push(std::move(row));
        }
      }
    }
  }
  // T^T G = G T.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Vector row = zero_vector(u);
      for (std::size_t k = 0; k < n; ++k) {
        if (var(k, r) >= 0) row[static_cast<std::size_t>(var(k, r))] += b.gram(k, c);
        if (var(k, c) >= 0) row[static_cast<std::size_t>(var(k, c))] -= b.gram(r, k);
      }
      push(std::move(row));
    }
  }
  std::vector<Matrix> out;
  for (const auto& v : eb.null_space()) {
    Matrix t(n, n);
    for (std::size_t q = 0; q < u; ++q) t(unknowns[q].first, unknowns[q].second) = v[q];
    out.push_back(std::move(t));
  }
  return out;
}

/// Splits the space into kernels of the pairwise coprime factors of the
/// minimal polynomial: one per rational root, one for the rest.
inline std::vector<SubspaceBasis> primary_pieces(const Matrix& t) {
  Poly m = minimal_polynomial(t);
  std::vector<SubspaceBasis> pieces;
  for (const auto& r : rational_roots(m)) {
    const Poly lin{-r, Scalar(1)};
    Poly power{Scalar(1)};
    while (true) {
      auto [q, rem] = divmod(m, lin);
      if (degree(rem) >= 0) break;
      m = q;
      Poly next(power.size() + 1, Scalar(0));
      for (std::size_t i = 0; i < power.size(); ++i) {
        next[i] -= r * power[i];
        next[i + 1] += power[i];
      }
      power = next;
    }
    pieces.push_back(kernel(evaluate(power, t)));
  }
  if (degree(m) > 0) pieces.push_back(kernel(evaluate(m, t)));
  return pieces;
}

inline Summand make_summand(const Superalgebra& a, const HomogeneousForm& b, GradedSubspace u) {
  Superalgebra s = subalgebra(a, u);
  HomogeneousForm f = restrict(b, u);
  std::string kind = describe(s);
  return {std::move(u), std::move(s), std::move(f), std::move(kind)};
}

/// Probe operators from a spanning set: the set itself, pairwise sums and
/// seeded random combinations.
inline std::vector<Matrix> centroid_probes(const std::vector<Matrix>& basis, std::uint32_t seed) {
  std::vector<Matrix> probes = basis;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) probes.push_back(basis[i] + basis[j]);
  std::mt19937 rng(seed);
  for (int k = 0; k < 12 && !basis.empty(); ++k) {
    Matrix t = Scalar(0) * basis.front();
    for (const auto& m : basis) t = t + Scalar(static_cast<int>(rng() % 7) - 3) * m;
    probes.push_back(std::move(t));
  }
  return probes;
}

inline std::vector<GradedSubspace> split_once(const Superalgebra& a, const HomogeneousForm& b, std::uint32_t seed) {
  const auto sc = self_adjoint_centroid(a, b);
  for (const auto& t : centroid_probes(sc, seed)) {
    auto pieces = primary_pieces(t);
    if (pieces.size() < 2) continue;
    std::vector<GradedSubspace> out;
    for (const auto& p : pieces) out.push_back(GradedSubspace::span(a, p.vectors()));
    return out;
  }
  return {};
}

inline void decompose_into(const Superalgebra& a, const HomogeneousForm& b, const Matrix& embed,
                           std::uint32_t seed, std::vector<GradedSubspace>& out, std::size_t n0, std::size_t n1) {
  auto pieces = a.dim() > 1 ? split_once(a, b, seed) : std::vector<GradedSubspace>{};
  if (pieces.empty()) {
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < a.dim(); ++c) cols.push_back(embed * unit_vector(a.dim(), c));
    out.push_back(GradedSubspace::span(n0, n1, cols));
    return;
  }
  for (const auto& p : pieces) {
    const auto sub = subalgebra(a, p);
    decompose_into(sub, restrict(b, p), embed * p.basis_matrix(), seed, out, n0, n1);
  }
}

}  // namespace detail

/// Certificate of an orthogonal decomposition into ideals.
inline std::vector<std::string> certify_decomposition(const Superalgebra& a, const HomogeneousForm& b,
                                                      const std::vector<GradedSubspace>& parts) {
  std::vector<std::string> bad;
  GradedSubspace total = GradedSubspace::zero(a);
  std::size_t dims = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    if (!is_ideal(a, p)) bad.push_back("summand " + std::to_string(k) + " is not an ideal");
    if (!is_nondegenerate(restrict(b, p))) bad.push_back("summand " + std::to_string(k) + " is degenerate");
    for (std::size_t l = k + 1; l < parts.size(); ++l) {
      const Matrix cross = p.basis_matrix().transpose() * b.gram * parts[l].basis_matrix();
      if (!cross.is_zero())
        bad.push_back("summands " + std::to_string(k) + " and " + std::to_string(l) + " are not orthogonal");
    }
    total = total.sum(p);
    dims += p.dim();
  }
  if (!total.is_whole() || dims != a.dim()) bad.push_back("summands do not span the algebra directly");
  return bad;
}

/// Orthogonal decomposition into B-irreducible graded ideals. Splitting uses
/// the primary decomposition of self-adjoint centroid probes.
inline Decomposition birreducible_decomposition(const Superalgebra& a, const HomogeneousForm& b,
                                                std::uint32_t seed = kDefaultProbeSeed) {
  if (auto bad = check_form(a, b); !bad.empty()) throw PreconditionError("input is not a homogeneous symmetric structure: " + bad.front());
  Decomposition d;
  if (a.dim() == 0) return d;
  std::vector<GradedSubspace> parts;
  detail::decompose_into(a, b, Matrix::identity(a.dim()), seed, parts, a.dim_even(), a.dim_odd());
  for (auto& p : parts) d.summands.push_back(detail::make_summand(a, b, std::move(p)));
  std::vector<GradedSubspace> subs;
  for (const auto& s : d.summands) subs.push_back(s.subspace);
  d.certificate = certify_decomposition(a, b, subs);
  return d;
}

/// A minimal graded two-sided ideal of a non-simple algebra. Annihilator
/// first; otherwise shrink generated ideals over homogeneous probes and
/// certify that every probe of the result regenerates it.
inline GradedSubspace minimal_ideal(const Superalgebra& a, const HomogeneousForm& b,
                                    std::uint32_t seed = kDefaultProbeSeed) {
  if (b.dim() != a.dim()) throw ShapeError("form dimension must equal algebra dimension");
  if (a.dim() <= 1) throw PreconditionError("minimal_ideal needs dim > 1");
  if (is_graded_simple(a).simple) throw SimpleAlgebra("algebra is graded simple");
  const auto ann = annihilator(a);
  if (!ann.is_zero()) return GradedSubspace::span(a, {ann.basis().front()});

  std::mt19937 rng(seed);
  auto probes_in = [&](const GradedSubspace& c) {
    std::vector<Vector> probes = c.basis();
    const auto base = c.basis();
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j)
        if ((i < c.dim_even()) == (j < c.dim_even())) probes.push_back(add(base[i], base[j]));
    for (int k = 0; k < 8; ++k) {
      for (const auto* part : {&c.even_part(), &c.odd_part()}) {
        if (part->is_zero()) continue;
        Vector coeffs(part->dim());
        for (auto& x : coeffs) x = static_cast<int>(rng() % 7) - 3;
        Vector v = part->combine(coeffs);
        if (!is_zero(v)) probes.push_back(part == &c.even_part() ? c.embed_even(v) : c.embed_odd(v));
      }
    }
    return probes;
  };
  auto generated = [&](const Vector& x) { return ideal_generated(a, GradedSubspace::span(a, {x})); };

  GradedSubspace cur = GradedSubspace::whole(a);
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (const auto& x : probes_in(cur)) {
      auto g = generated(x);
      if (!g.is_zero() && g.dim() < cur.dim()) {
        cur = std::move(g);
        shrunk = true;
        break;
      }
    }
  }
  if (cur.is_whole()) throw Error("no proper ideal found by probing");
  for (const auto& x : probes_in(cur))
    if (!(generated(x) == cur)) throw Error("cannot certify minimality of the candidate ideal");
  return cur;
}

/// Result of reading an algebra as a generalized double extension.
struct ReductionResult {
  GradedSubspace i, j, v;
  Superalgebra w;
  HomogeneousForm q;
  Superalgebra top;
  ExtensionContext context;
  Extension rebuilt;
  /// Columns: images in A of the rebuilt algebra's basis.
  Matrix delta;
  /// "one-dim-null", a simple type such as "M(2,0)", or "other".
  std::string quotient_type;
};

namespace detail {

inline std::vector<std::string> check_delta(const Superalgebra& a, const HomogeneousForm& b, const Extension& ext,
                                            const Matrix& delta) {
  std::vector<std::string> bad;
  if (sgn(det(delta)) == 0) bad.push_back("delta is not bijective");
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(delta * ext.algebra.product_vector(i, j) == multiply(a, delta.col(i), delta.col(j))))
        bad.push_back("delta is not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  if (!(delta.transpose() * b.gram * delta == ext.form.gram)) bad.push_back("delta is not an isometry");
  return bad;
}

}  // namespace detail

/// Reads (a, b) as the generalized double extension of (J/I, Q) by A/J,
/// where J is the orthogonal of the totally isotropic ideal i. The
/// complement of J is v when given, otherwise the first basis vectors
/// outside J; it is then made isotropic and orthogonal to the lift of J/I.
inline ReductionResult reduce(const Superalgebra& a, const HomogeneousForm& b, const GradedSubspace& i,
                              const std::optional<GradedSubspace>& v = std::nullopt) {
  if (auto bad = check_form(a, b); !bad.empty()) throw PreconditionError("input is not a homogeneous symmetric structure: " + bad.front());
  if (i.is_zero()) throw PreconditionError("ideal must be nonzero");
  if (!is_ideal(a, i)) throw PreconditionError("I is not a graded two-sided ideal");
  if (!totally_isotropic(b, i)) throw PreconditionError("I is not totally isotropic");
  const std::size_t n = a.dim();
  ReductionResult res;
  res.i = i;
  res.j = orthogonal(a, b, i);

  GradedSubspace v0;
  if (v) {
    if (!v->intersect(res.j).is_zero() || v->dim() + res.j.dim() != n)
      throw PreconditionError("V is not a complement of the orthogonal of I");
    v0 = *v;
  } else {
    std::vector<Vector> picked;
    GradedSubspace span = res.j;
    for (std::size_t k = 0; k < n; ++k) {
      const Vector e = unit_vector(n, k);
      if (span.contains(e)) continue;
      picked.push_back(e);
      span = span.sum(GradedSubspace::span(a, {e}));
    }
    v0 = GradedSubspace::span(a, picked);
  }

  const auto ib = i.basis();
  const auto vb = v0.basis();
  const std::size_t m = ib.size();
  Matrix p(m, m);  // B(f_p, v_q)
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) p(r, c) = b(ib[r], vb[c]);
  const auto pinv = inverse(p);
  if (!pinv) throw PreconditionError("B is degenerate on I x V");
  const Matrix pt_inv = pinv->transpose();
  auto in_i = [&](const Vector& coeffs) {
    Vector out = zero_vector(n);
    for (std::size_t r = 0; r < m; ++r) axpy(out, coeffs[r], ib[r]);
    return out;
  };
  // V' = {v + phi(v)} with B(phi(v), w) = -B(v, w)/2.
  std::vector<Vector> vp;
  for (const auto& x : vb) {
    Vector rhs(m);
    for (std::size_t c = 0; c < m; ++c) rhs[c] = Scalar(-1, 2) * b(x, vb[c]);
    vp.push_back(add(x, in_i(pt_inv * rhs)));
  }
  // Dual basis of I: B(f^c, v'_a) = delta.
  std::vector<Vector> dual;
  for (std::size_t c = 0; c < m; ++c) dual.push_back(in_i(pinv->row(c)));

  auto qs = quotient_form(a, b, i, res.j);
  std::vector<Vector> wp;
  for (std::size_t x = 0; x < qs.lift.cols(); ++x) {
    const Vector y = qs.lift.col(x);
    Vector rhs(m);
    for (std::size_t c = 0; c < m; ++c) rhs[c] = b(y, vb[c]);
    wp.push_back(sub(y, in_i(pt_inv * rhs)));
  }
  res.w = qs.algebra;
  res.q = qs.form;
  res.v = GradedSubspace::span(a, vp);

  // New basis in logical order D, W, V.
  std::vector<Vector> cols = dual;
  cols.insert(cols.end(), wp.begin(), wp.end());
  cols.insert(cols.end(), vp.begin(), vp.end());
  const Matrix t = Matrix::from_columns(cols, n);
  const auto tinv = inverse(t);
  if (!tinv) throw Error("adapted basis is singular");
  const std::size_t nw = wp.size();
  auto coords = [&](const Vector& z) { return *tinv * z; };

  std::vector<std::string> vnames;
  for (const auto& x : vb) {
    std::size_t nz = 0, idx = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(x[k]) != 0) ++nz, idx = k;
    vnames.push_back(nz == 1 ? a.basis_names()[idx] : "v" + std::to_string(vnames.size() + 1));
  }
  Superalgebra top(v0.dim_even(), v0.dim_odd(), vnames);
  ExtensionContext ctx;
  ctx.parity = b.parity;
  ctx.w = res.w;
  ctx.b = res.q;
  ctx.mu.assign(m, Matrix(nw, nw));
  ctx.lambda.assign(m, std::vector<Vector>(m, zero_vector(nw)));
  ctx.gamma.assign(m, std::vector<Vector>(m, zero_vector(m)));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const Vector c = coords(multiply(a, vp[x], vp[y]));
      for (std::size_t k = 0; k < m; ++k) {
        top.add(x, y, k, c[m + nw + k]);
        ctx.gamma[x][y][k] = c[k];
      }
      for (std::size_t r = 0; r < nw; ++r) ctx.lambda[x][y][r] = c[m + r];
    }
    for (std::size_t y = 0; y < nw; ++y) {
      const Vector c = coords(multiply(a, vp[x], wp[y]));
      for (std::size_t r = 0; r < nw; ++r) ctx.mu[x](r, y) = c[m + r];
    }
  }
  ctx.v = top;
  res.top = top;
  if (auto bad = validate_context(ctx); !bad.empty())
    throw Error("reduction produced an invalid context: " + bad.front());
  res.context = ctx;
  res.rebuilt = assemble_extension(ctx);

  res.delta = Matrix(n, n);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t r = 0; r < n; ++r) res.delta(r, res.rebuilt.dual_pos[c]) = dual[c][r];
  for (std::size_t x = 0; x < nw; ++x)
    for (std::size_t r = 0; r < n; ++r) res.delta(r, res.rebuilt.base_pos[x]) = wp[x][r];
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t r = 0; r < n; ++r) res.delta(r, res.rebuilt.top_pos[x]) = vp[x][r];
  if (auto bad = detail::check_delta(a, b, res.rebuilt, res.delta); !bad.empty())
    throw Error("reconstruction check failed: " + bad.front());

  if (top.dim() == 1 && top.product_is_null()) {
    res.quotient_type = "one-dim-null";
  } else {
    const auto r = recognize_simple(top);
    res.quotient_type = r.empty() ? "other" : r;
  }
  return res;
}

/// True iff A0 is a semisimple A0-bimodule: its radical equals its
/// annihilator.
inline bool semisimple_bimodule_check(const Superalgebra& a) {
  if (a.dim_even() == 0) return true;
  const auto even = subalgebra(a, GradedSubspace(SubspaceBasis::whole(a.dim_even()), SubspaceBasis::zero(a.dim_odd())));
  return radical(even) == annihilator(even);
}

/// A1 split into the A0-fixed part and the two product spaces, all as
/// subspaces of A.
struct OddPartDecomposition {
  GradedSubspace fixed, left, right;
  bool direct = false;
  /// Whether A1 being a semisimple A0-bimodule was verified (needs an odd
  /// form) and the outcome.
  bool precondition_checked = false;
  bool precondition_holds = false;
};

inline OddPartDecomposition odd_part_decomposition(const Superalgebra& a, const HomogeneousForm* odd_form = nullptr) {
  OddPartDecomposition d;
  const std::size_t n0 = a.dim_even(), n1 = a.dim_odd();
  const GradedSubspace a0(SubspaceBasis::whole(n0), SubspaceBasis::zero(n1));
  const GradedSubspace a1(SubspaceBasis::zero(n0), SubspaceBasis::whole(n1));
  if (odd_form) {
    if (odd_form->parity != Parity::Odd || !check_form(a, *odd_form).empty())
      throw PreconditionError("given form is not an odd-symmetric structure");
    d.precondition_checked = true;
    d.precondition_holds = semisimple_bimodule_check(a);
  }
  // x in A1 with x.A0 = A0.x = 0.
  std::vector<Vector> rows;
  for (std::size_t y = 0; y < n0; ++y) {
    const Matrix l = left_basis(a, y), r = right_basis(a, y);
    for (const Matrix* m : {&l, &r})
      for (std::size_t k = 0; k < a.dim(); ++k) rows.push_back(m->block(k, n0, 1, n1).row(0));
  }
  const Matrix stacked = rows.empty() ? Matrix(0, n1) : Matrix::from_rows(rows, n1);
  d.fixed = GradedSubspace(SubspaceBasis::zero(n0), kernel(stacked));
  d.left = product_subspaces(a, a0, a1);
  d.right = product_subspaces(a, a1, a0);
  d.direct = d.fixed.dim() + d.left.dim() + d.right.dim() == n1 && d.fixed.sum(d.left).sum(d.right) == a1;
  return d;
}

/// One block of the odd classification.
struct OddBlock {
  /// "Qn", "simple-plus-dual", "null-pair" or "gamma-block".
  std::string tag;
  /// Even and odd pieces: (S_i, S^_i) or the even/odd parts of a block of N + N^.
  GradedSubspace even, odd;
  Summand summand;
  /// For simple-plus-dual blocks: dim I, dim S and dim S.A1.
  std::size_t dim_i = 0, dim_s = 0, dim_s_a1 = 0;
};

struct OddSSReport {
  std::vector<OddBlock> blocks;
  GradedSubspace n, nhat;
  std::vector<GradedSubspace> s, shat;
  Matrix eta;
  /// Named invariant checks and their outcome.
  std::vector<std::pair<std::string, bool>> invariants;
  bool all_invariants_hold() const {
    for (const auto& [name, ok] : invariants)
      if (!ok) return false;
    return true;
  }
};

/// Classification of an odd-symmetric algebra whose even part is a
/// semisimple bimodule, following A = (+)(S_i + S^_i) + (N + N^).
inline OddSSReport odd_ss_classify(const Superalgebra& a, const HomogeneousForm& b,
                                   std::uint32_t seed = kDefaultProbeSeed) {
  if (b.parity != Parity::Odd || !check_form(a, b).empty())
    throw PreconditionError("input is not an odd-symmetric structure");
  if (!semisimple_bimodule_check(a)) throw PreconditionError("even part is not a semisimple bimodule");
  const std::size_t n0 = a.dim_even(), n1 = a.dim_odd();
  OddSSReport rep;
  const GradedSubspace a0(SubspaceBasis::whole(n0), SubspaceBasis::zero(n1));
  const Superalgebra even = subalgebra(a, a0);
  // Even part as an algebra: S = A0.A0 and N = Ann(A0).
  const auto sprod = product_subspaces(even, GradedSubspace::whole(even), GradedSubspace::whole(even));
  const auto nann = annihilator(even);
  std::vector<SubspaceBasis> comps;
  if (!sprod.is_zero()) {
    const auto salg = subalgebra(even, sprod);
    const Matrix emb = sprod.basis_matrix();
    for (const auto& c : simple_components(salg)) {
      std::vector<Vector> vs;
      for (const auto& x : c.vectors()) vs.push_back(emb * x);
      comps.push_back(SubspaceBasis::span(n0, vs));
    }
  }
  // Adapted basis of A0 and the block form in it.
  std::vector<Vector> adapted;
  std::vector<std::size_t> owner;  // component index, or comps.size() for N
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (const auto& x : comps[k].vectors()) adapted.push_back(x), owner.push_back(k);
  for (const auto& x : nann.even_part().vectors()) adapted.push_back(x), owner.push_back(comps.size());
  if (adapted.size() != n0) throw Error("even part does not split as S + Ann(A0)");
  const Matrix u = Matrix::from_columns(adapted, n0);
  Matrix g_adapted(n0, n0);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const GradedSubspace cs(comps[k], SubspaceBasis::zero(0));
    const auto calg = subalgebra(even, cs);
    std::vector<std::size_t> at;
    for (std::size_t q = 0; q < n0; ++q)
      if (owner[q] == k) at.push_back(q);
    for (std::size_t x = 0; x < at.size(); ++x)
      for (std::size_t y = 0; y < at.size(); ++y) {
        const Matrix r = right_basis(calg, x) * right_basis(calg, y);
        Scalar tr = 0;
        for (std::size_t d = 0; d < r.rows(); ++d) tr += r(d, d);
        g_adapted(at[x], at[y]) = tr;
      }
  }
  for (std::size_t q = 0; q < n0; ++q)
    if (owner[q] == comps.size()) g_adapted(q, q) = 1;
  // gamma on A0: trace forms tr(R_x R_y) on each S_i, identity on N.
  const auto uinv = inverse(u);
  const Matrix gamma = uinv->transpose() * g_adapted * *uinv;

  // eta: A0 -> A1 with B(eta(x), x') = gamma(x, x').
  const Matrix b10 = b.gram.block(n0, 0, n1, n0);
  const auto b10t_inv = inverse(b10.transpose());
  if (!b10t_inv) throw DegenerateForm("odd form is degenerate");
  rep.eta = *b10t_inv * gamma;
  auto hat = [&](const SubspaceBasis& s) {
    std::vector<Vector> vs;
    for (const auto& x : s.vectors()) vs.push_back(rep.eta * x);
    return GradedSubspace(SubspaceBasis::zero(n0), SubspaceBasis::span(n1, vs));
  };
  for (const auto& c : comps) {
    rep.s.emplace_back(c, SubspaceBasis::zero(n1));
    rep.shat.push_back(hat(c));
  }
  rep.n = GradedSubspace(nann.even_part(), SubspaceBasis::zero(n1));
  rep.nhat = hat(nann.even_part());

  auto prod = [&](const GradedSubspace& x, const GradedSubspace& y) { return product_subspaces(a, x, y); };
  bool i_ok = true, ii_ok = true, iii_ok = true;
  for (std::size_t p = 0; p < comps.size(); ++p) {
    for (std::size_t q = 0; q < comps.size(); ++q)
      if (p != q && !prod(rep.shat[p], rep.shat[q]).is_zero()) i_ok = false;
    const auto sq = prod(rep.shat[p], rep.shat[p]);
    if (!(sq.is_zero() || sq == rep.s[p])) ii_ok = false;
    if (!prod(rep.nhat, rep.shat[p]).is_zero() || !prod(rep.shat[p], rep.nhat).is_zero()) iii_ok = false;
  }
  const bool iv_ok = rep.n.contains(prod(rep.nhat, rep.nhat));
  rep.invariants = {{"(i) S^_i S^_j = 0 for i != j", i_ok},
                    {"(ii) S^_i S^_i in {0, S_i}", ii_ok},
                    {"(iii) N^ S^_i = S^_i N^ = 0", iii_ok},
                    {"(iv) N^ N^ in N", iv_ok}};

  GradedSubspace a1(SubspaceBasis::zero(n0), SubspaceBasis::whole(n1));
  for (std::size_t p = 0; p < comps.size(); ++p) {
    OddBlock blk;
    blk.even = rep.s[p];
    blk.odd = rep.shat[p];
    const auto block = blk.even.sum(blk.odd);
    blk.summand = detail::make_summand(a, b, block);
    blk.tag = prod(rep.shat[p], rep.shat[p]).is_zero() ? "simple-plus-dual" : "Qn";
    blk.dim_i = rep.shat[p].dim();
    blk.dim_s = rep.s[p].dim();
    blk.dim_s_a1 = prod(rep.s[p], a1).dim();
    rep.invariants.push_back({"block " + std::to_string(p) + " is a non-degenerate ideal",
                              is_ideal(a, block) && is_nondegenerate(blk.summand.form)});
    rep.blocks.push_back(std::move(blk));
  }
  const auto nn = rep.n.sum(rep.nhat);
  if (!nn.is_zero()) {
    const bool ideal = is_ideal(a, nn);
    rep.invariants.push_back({"N + N^ is a non-degenerate ideal", ideal && is_nondegenerate(restrict(b, nn))});
    if (ideal) {
      const auto nalg = subalgebra(a, nn);
      const auto dec = birreducible_decomposition(nalg, restrict(b, nn), seed);
      const Matrix emb = nn.basis_matrix();
      for (const auto& s : dec.summands) {
        std::vector<Vector> vs;
        for (const auto& x : s.subspace.basis()) vs.push_back(emb * x);
        const auto sub = GradedSubspace::span(a, vs);
        OddBlock blk;
        blk.even = GradedSubspace(sub.even_part(), SubspaceBasis::zero(n1));
        blk.odd = GradedSubspace(SubspaceBasis::zero(n0), sub.odd_part());
        blk.summand = detail::make_summand(a, b, sub);
        blk.tag = prod(blk.odd, blk.odd).is_zero() ? "null-pair" : "gamma-block";
        rep.blocks.push_back(std::move(blk));
      }
    }
  }
  return rep;
}

/// Outcome of the even semisimple-bimodule analysis.
struct EvenSSResult {
  /// "simple-list", "elementary" or "odd-gde".
  std::string branch;
  std::vector<Summand> simples;
  std::optional<ReductionResult> reduction;
  /// D on W = J/I, and x0 for the odd branch.
  Matrix d;
  Vector x0;
};

inline EvenSSResult even_ss_reduce(const Superalgebra& a, const HomogeneousForm& b,
                                   std::uint32_t seed = kDefaultProbeSeed) {
  if (b.parity != Parity::Even || !check_form(a, b).empty())
    throw PreconditionError("input is not an even-symmetric structure");
  if (!semisimple_bimodule_check(a)) throw PreconditionError("even part is not a semisimple bimodule");
  EvenSSResult out;
  const auto ann = annihilator(a);
  const std::size_t n0 = a.dim_even(), n1 = a.dim_odd(), n = a.dim();
  if (ann.is_zero()) {
    out.branch = "simple-list";
    auto dec = birreducible_decomposition(a, b, seed);
    for (auto& s : dec.summands) {
      if (s.algebra.dim() == 0 || !is_graded_simple(s.algebra).simple)
        throw Error("summand with zero annihilator is not simple");
      out.simples.push_back(std::move(s));
    }
    return out;
  }
  if (!ann.even_part().is_zero()) {
    out.branch = "elementary";
    const Vector estar = ann.embed_even(ann.even_part().vectors().front());
    const auto i = GradedSubspace::span(a, {estar});
    // e in Ann(A0) pairing with e*.
    const GradedSubspace a0(SubspaceBasis::whole(n0), SubspaceBasis::zero(n1));
    const auto even = subalgebra(a, a0);
    const auto ann0 = annihilator(even);
    std::optional<Vector> e;
    for (const auto& x : ann0.even_part().vectors()) {
      Vector full = zero_vector(n);
      std::copy(x.begin(), x.end(), full.begin());
      if (sgn(b(estar, full)) != 0) {
        e = full;
        break;
      }
    }
    if (!e) throw Error("no element of Ann(A0) pairs with the annihilator element");
    out.reduction = reduce(a, b, i, GradedSubspace::span(a, {*e}));
    out.d = out.reduction->context.mu.front();
    out.x0 = out.reduction->context.lambda.front().front();
    if (auto bad = validate_elementary(out.reduction->w, out.reduction->q, out.d); !bad.empty())
      throw Error("recovered map violates the elementary conditions: " + bad.front());
    return out;
  }
  out.branch = "odd-gde";
  const Vector estar = ann.embed_odd(ann.odd_part().vectors().front());
  out.reduction = reduce(a, b, GradedSubspace::span(a, {estar}));
  out.d = out.reduction->context.mu.front();
  out.x0 = out.reduction->context.lambda.front().front();
  OneDimDatum dt{out.reduction->w, out.reduction->q, Parity::Odd, out.d, out.x0, 0};
  if (auto bad = validate_one_dim(dt); !bad.empty())
    throw Error("recovered datum violates the one-dimensional conditions: " + bad.front());
  return out;
}

}  // namespace superalg

#endif  // SUPERALG_STRUCTURE_HPP
