#ifndef SUPERALG_EXTENSIONS_HPP
#define SUPERALG_EXTENSIONS_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact_linear.hpp"
#include "forms.hpp"
#include "superalgebra.hpp"

namespace superalg {

/// Output of a forward construction. The three position lists map the
/// logical blocks (dual summand, base W, top V) to output basis indices.
struct Extension {
  Superalgebra algebra;
  HomogeneousForm form;
  std::vector<std::size_t> dual_pos, base_pos, top_pos;

  GradedSubspace block(const std::vector<std::size_t>& pos) const {
    std::vector<Vector> vs;
    for (auto p : pos) vs.push_back(unit_vector(algebra.dim(), p));
    return GradedSubspace::span(algebra, vs);
  }
  GradedSubspace dual() const { return block(dual_pos); }
  GradedSubspace base() const { return block(base_pos); }
  GradedSubspace top() const { return block(top_pos); }
};

/// Parity-flipped dual P(V*) of a superalgebra V: the dual vector f^c of v_c
/// has parity |v_c| + shift. With shift 0 this is plain V*.
struct ParityFlippedDual {
  std::vector<int> source_parities;
  Parity shift = Parity::Odd;

  std::size_t dim() const { return source_parities.size(); }
  int pbit(std::size_t c) const { return source_parities[c] ^ bit(shift); }

  /// Left action of v_a, read off from B(v.g, u) = +-B(u.v, g); column g,
  /// row u.
  Matrix left(const Superalgebra& v, std::size_t a) const {
    Matrix m(dim(), dim());
    for (std::size_t g = 0; g < dim(); ++g)
      for (std::size_t u = 0; u < dim(); ++u)
        m(u, g) = sign_of(v.pbit(u), v.pbit(a) + pbit(g)) * sign_of(v.pbit(g), pbit(g)) * v.coeff(u, a, g);
    return m;
  }
  /// r*(v)(f) = f o L_v.
  Matrix right(const Superalgebra& v, std::size_t a) const {
    Matrix m(dim(), dim());
    for (std::size_t f = 0; f < dim(); ++f)
      for (std::size_t c = 0; c < dim(); ++c) m(c, f) = v.coeff(a, c, f);
    return m;
  }
};

/// Context of a generalized double extension of (W, B) by V, for either form
/// parity. mu[a] is an endomorphism of W, lambda[a][b] a vector of W and
/// gamma[a][b][c] the coefficient of the dual vector f^c in v_a.v_b, that is
/// gamma(v_a, v_b)(v_c). Empty mu/lambda/gamma mean zero.
struct ExtensionContext {
  Parity parity = Parity::Even;
  Superalgebra w;
  HomogeneousForm b;
  Superalgebra v;
  std::vector<Matrix> mu;
  std::vector<std::vector<Vector>> lambda;
  std::vector<std::vector<Vector>> gamma;
};

/// Data of the extension of (W, B) by a one-dimensional Ke with null product.
struct OneDimDatum {
  Superalgebra w;
  HomogeneousForm b;
  Parity e_parity = Parity::Even;
  Matrix d;
  Vector x0;
  Scalar k = 0;
};

namespace detail {

/// Stable reorder putting evens first; returns logical -> output index.
inline std::vector<std::size_t> graded_positions(const std::vector<int>& parities, std::size_t& n0) {
  std::vector<std::size_t> pos(parities.size());
  n0 = static_cast<std::size_t>(std::count(parities.begin(), parities.end(), 0));
  std::size_t e = 0, o = n0;
  for (std::size_t i = 0; i < parities.size(); ++i) pos[i] = parities[i] == 0 ? e++ : o++;
  return pos;
}

inline std::string fresh_name(std::string name, const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "'";
  return name;
}

/// Logical layout D, W, V of an extension with its output algebra shell.
struct Layout {
  std::size_t nd = 0, nw = 0, nv = 0;
  std::vector<std::size_t> pos;
  std::vector<char> block;  // per output index: 'D', 'W' or 'V'
  Superalgebra shell;

  std::size_t d(std::size_t c) const { return pos[c]; }
  std::size_t w(std::size_t x) const { return pos[nd + x]; }
  std::size_t v(std::size_t a) const { return pos[nd + nw + a]; }
};

inline Layout make_layout(const Superalgebra& w, const Superalgebra& v, const std::vector<int>& dual_parities,
                          const std::vector<std::string>& dual_names) {
  Layout l;
  l.nd = dual_parities.size();
  l.nw = w.dim();
  l.nv = v.dim();
  std::vector<int> par = dual_parities;
  std::vector<std::string> logical = dual_names;
  for (std::size_t x = 0; x < l.nw; ++x) {
    par.push_back(w.pbit(x));
    logical.push_back(fresh_name(w.basis_names()[x], logical));
  }
  for (std::size_t a = 0; a < l.nv; ++a) {
    par.push_back(v.pbit(a));
    logical.push_back(fresh_name(v.basis_names()[a], logical));
  }
  std::size_t n0 = 0;
  l.pos = graded_positions(par, n0);
  std::vector<std::string> names(par.size());
  l.block.assign(par.size(), 'D');
  for (std::size_t i = 0; i < par.size(); ++i) {
    names[l.pos[i]] = logical[i];
    l.block[l.pos[i]] = i < l.nd ? 'D' : (i < l.nd + l.nw ? 'W' : 'V');
  }
  l.shell = Superalgebra(n0, par.size() - n0, names);
  return l;
}

inline Extension finish(Layout&& l, HomogeneousForm form) {
  Extension ext{std::move(l.shell), std::move(form), {}, {}, {}};
  for (std::size_t c = 0; c < l.nd; ++c) ext.dual_pos.push_back(l.d(c));
  for (std::size_t x = 0; x < l.nw; ++x) ext.base_pos.push_back(l.w(x));
  for (std::size_t a = 0; a < l.nv; ++a) ext.top_pos.push_back(l.v(a));
  return ext;
}

/// Adjoint of t for the non-degenerate gram g: B(t^* x, y) = B(x, t y).
inline Matrix adjoint(const Matrix& g, const Matrix& t) {
  if (g.rows() == 0) return t;
  auto inv = inverse(g.transpose());
  if (!inv) throw DegenerateForm("base form is degenerate");
  return *inv * t.transpose() * g.transpose();
}

inline void require_shapes(const ExtensionContext& c) {
  const std::size_t nv = c.v.dim(), nw = c.w.dim();
  if (c.b.dim() != nw) throw ShapeError("base form dimension must equal dim W");
  if (!c.mu.empty()) {
    if (c.mu.size() != nv) throw ShapeError("mu needs one matrix per basis element of V");
    for (const auto& m : c.mu)
      if (m.rows() != nw || m.cols() != nw) throw ShapeError("mu(v) must be a dim W square matrix");
  }
  auto grid = [nv](const std::vector<std::vector<Vector>>& t, std::size_t len, const char* what) {
    if (t.empty()) return;
    if (t.size() != nv) throw ShapeError(std::string(what) + " needs dim V rows");
    for (const auto& row : t) {
      if (row.size() != nv) throw ShapeError(std::string(what) + " needs dim V columns");
      for (const auto& x : row)
        if (x.size() != len) throw ShapeError(std::string(what) + " entry has the wrong length");
    }
  };
  grid(c.lambda, nw, "lambda");
  grid(c.gamma, nv, "gamma");
}

/// Zero-filled copy so that every map can be indexed.
inline ExtensionContext normalized(const ExtensionContext& c) {
  require_shapes(c);
  ExtensionContext out = c;
  const std::size_t nv = c.v.dim(), nw = c.w.dim();
  if (out.mu.empty()) out.mu.assign(nv, Matrix(nw, nw));
  if (out.lambda.empty()) out.lambda.assign(nv, std::vector<Vector>(nv, zero_vector(nw)));
  if (out.gamma.empty()) out.gamma.assign(nv, std::vector<Vector>(nv, zero_vector(nv)));
  return out;
}

}  // namespace detail

/// Right action of V on W forced by invariance: B(rho(v)x, y) = B(x, mu(v)y).
inline std::vector<Matrix> derived_right_action(const ExtensionContext& ctx) {
  const auto c = detail::normalized(ctx);
  std::vector<Matrix> rho;
  for (const auto& m : c.mu) rho.push_back(detail::adjoint(c.b.gram, m));
  return rho;
}

/// Builds the algebra on D + W + V without checking the context. Products
/// into W + V come from the context; every D-component is fixed by
/// invariance of the form against the top basis.
inline Extension assemble_extension(const ExtensionContext& ctx) {
  const auto c = detail::normalized(ctx);
  const Superalgebra& w = c.w;
  const Superalgebra& v = c.v;
  const int beta = bit(c.parity);
  const std::size_t nw = w.dim(), nv = v.dim();
  const Matrix& g = c.b.gram;
  const auto rho = derived_right_action(c);

  ParityFlippedDual dual;
  std::vector<int> dpar;
  std::vector<std::string> dnames;
  for (std::size_t a = 0; a < nv; ++a) {
    dual.source_parities.push_back(v.pbit(a));
    dpar.push_back(v.pbit(a) ^ beta);
    dnames.push_back(v.basis_names()[a] + "*");
  }
  dual.shift = c.parity;
  auto l = detail::make_layout(w, v, dpar, dnames);
  Superalgebra& out = l.shell;
  auto pv = [&](std::size_t a) { return v.pbit(a); };
  auto pw = [&](std::size_t x) { return w.pbit(x); };
  auto bw = [&](const Vector& x, const Vector& y) { return dot(x, g * y); };

  for (std::size_t a = 0; a < nv; ++a) {
    for (std::size_t b2 = 0; b2 < nv; ++b2) {
      for (const auto& t : v.product(a, b2)) out.add(l.v(a), l.v(b2), l.v(t.index), t.coeff);
      for (std::size_t r = 0; r < nw; ++r) out.add(l.v(a), l.v(b2), l.w(r), c.lambda[a][b2][r]);
      for (std::size_t u = 0; u < nv; ++u) out.add(l.v(a), l.v(b2), l.d(u), c.gamma[a][b2][u]);
    }
    for (std::size_t y = 0; y < nw; ++y) {
      for (std::size_t r = 0; r < nw; ++r) out.add(l.v(a), l.w(y), l.w(r), c.mu[a](r, y));
      const Vector ey = unit_vector(nw, y);
      for (std::size_t u = 0; u < nv; ++u) {
        // B(u.v, y) moved across by supersymmetry.
        out.add(l.v(a), l.w(y), l.d(u), sign_of(pv(u), pv(a) + pw(y)) * bw(c.lambda[u][a], ey));
        out.add(l.w(y), l.v(a), l.d(u), bw(ey, c.lambda[a][u]));
      }
      for (std::size_t r = 0; r < nw; ++r) out.add(l.w(y), l.v(a), l.w(r), rho[a](r, y));
    }
    // f.w and v.g land in the dual summand.
    const Matrix rs = dual.right(v, a), ls = dual.left(v, a);
    for (std::size_t f = 0; f < nv; ++f) {
      for (std::size_t u = 0; u < nv; ++u) {
        out.add(l.d(f), l.v(a), l.d(u), rs(u, f));
        out.add(l.v(a), l.d(f), l.d(u), ls(u, f));
      }
    }
  }
  for (std::size_t x = 0; x < nw; ++x) {
    for (std::size_t y = 0; y < nw; ++y) {
      for (const auto& t : w.product(x, y)) out.add(l.w(x), l.w(y), l.w(t.index), t.coeff);
      const Vector ex = unit_vector(nw, x), ey = unit_vector(nw, y);
      for (std::size_t u = 0; u < nv; ++u) out.add(l.w(x), l.w(y), l.d(u), bw(ex, rho[u] * ey));
    }
  }

  HomogeneousForm form{c.parity, Matrix(out.dim(), out.dim())};
  for (std::size_t x = 0; x < nw; ++x)
    for (std::size_t y = 0; y < nw; ++y) form.gram(l.w(x), l.w(y)) = g(x, y);
  for (std::size_t a = 0; a < nv; ++a) {
    form.gram(l.d(a), l.v(a)) = 1;
    form.gram(l.v(a), l.d(a)) = sign_of(pv(a), dual.pbit(a));
  }
  return detail::finish(std::move(l), std::move(form));
}

namespace detail {

inline std::string triple_label(const Layout& l, const Superalgebra& a, std::size_t i, std::size_t j,
                                std::size_t k) {
  const auto& n = a.basis_names();
  return std::string("(") + l.block[i] + "," + l.block[j] + "," + l.block[k] + ") at (" + n[i] + ", " + n[j] +
         ", " + n[k] + ")";
}

/// Associativity and invariance failures of an assembled extension, each
/// tagged by the block type of the witnessing triple.
inline std::vector<std::string> classify_failures(const Layout& l, const Extension& ext) {
  std::vector<std::string> items;
  const Superalgebra& a = ext.algebra;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector diff = zero_vector(n);
        for (const auto& t : ij)
          for (const auto& s : a.product(t.index, k)) diff[s.index] += t.coeff * s.coeff;
        for (const auto& t : a.product(j, k))
          for (const auto& s : a.product(i, t.index)) diff[s.index] -= t.coeff * s.coeff;
        if (!is_zero(diff)) {
          std::string comps;
          for (char blk : {'V', 'W', 'D'}) {
            bool hit = false;
            for (std::size_t r = 0; r < n; ++r) hit = hit || (l.block[r] == blk && sgn(diff[r]) != 0);
            if (hit) comps += blk;
          }
          items.push_back("associativity " + triple_label(l, a, i, j, k) + " fails in component " + comps);
        }
        Scalar lhs = 0, rhs = 0;
        for (const auto& t : ij) lhs += t.coeff * ext.form.gram(t.index, k);
        for (const auto& t : a.product(j, k)) rhs += ext.form.gram(i, t.index) * t.coeff;
        if (lhs != rhs) items.push_back("invariance " + triple_label(l, a, i, j, k));
      }
    }
  }
  return items;
}

}  // namespace detail

/// Every violated context condition; empty means the context is valid.
inline std::vector<std::string> validate_context(const ExtensionContext& ctx) {
  const auto c = detail::normalized(ctx);
  std::vector<std::string> items;
  const Superalgebra& w = c.w;
  const Superalgebra& v = c.v;
  const int beta = bit(c.parity);
  if (w.dim() > 0 && c.b.parity != c.parity) items.push_back("base: form parity differs from context parity");
  for (const auto& s : check_form(w, {c.parity, c.b.gram})) items.push_back("base: " + s);
  for (const auto& s : validate(v)) items.push_back("V: " + s);
  const auto& vn = v.basis_names();
  const auto& wn = w.basis_names();
  for (std::size_t a = 0; a < v.dim(); ++a) {
    for (std::size_t r = 0; r < w.dim(); ++r)
      for (std::size_t y = 0; y < w.dim(); ++y)
        if (sgn(c.mu[a](r, y)) != 0 && w.pbit(r) != (w.pbit(y) ^ v.pbit(a)))
          items.push_back("mu parity: mu(" + vn[a] + ")(" + wn[y] + ") has a " + wn[r] + " component");
    for (std::size_t b = 0; b < v.dim(); ++b) {
      for (std::size_t r = 0; r < w.dim(); ++r)
        if (sgn(c.lambda[a][b][r]) != 0 && w.pbit(r) != (v.pbit(a) ^ v.pbit(b)))
          items.push_back("lambda parity: lambda(" + vn[a] + ", " + vn[b] + ") has a " + wn[r] + " component");
      for (std::size_t u = 0; u < v.dim(); ++u) {
        if (sgn(c.gamma[a][b][u]) != 0 && (v.pbit(u) ^ beta) != (v.pbit(a) ^ v.pbit(b)))
          items.push_back("gamma parity: gamma(" + vn[a] + ", " + vn[b] + ")(" + vn[u] + ") must vanish");
        const Scalar cyc = sign_of(v.pbit(a), v.pbit(b) + v.pbit(u)) * c.gamma[b][u][a];
        if (c.gamma[a][b][u] != cyc)
          items.push_back("gamma cyclicity at (" + vn[a] + ", " + vn[b] + ", " + vn[u] + ")");
      }
    }
  }
  if (!items.empty()) return items;
  auto ext = assemble_extension(c);
  std::vector<int> dpar;
  for (std::size_t a = 0; a < v.dim(); ++a) dpar.push_back(v.pbit(a) ^ beta);
  std::vector<std::string> dn;
  for (const auto& s : vn) dn.push_back(s + "*");
  const auto layout = detail::make_layout(w, v, dpar, dn);
  return detail::classify_failures(layout, ext);
}

/// Post-condition shared by every construction: valid algebra, homogeneous
/// symmetric structure, dual summand a totally isotropic ideal whose
/// orthogonal is dual + base.
inline std::vector<std::string> extension_postcheck(const Extension& ext) {
  std::vector<std::string> items = validate(ext.algebra);
  for (const auto& s : check_form(ext.algebra, ext.form)) items.push_back(s);
  if (!items.empty()) return items;
  const auto d = ext.dual();
  if (!is_ideal(ext.algebra, d)) items.push_back("dual summand is not a two-sided ideal");
  if (!totally_isotropic(ext.form, d)) items.push_back("dual summand is not totally isotropic");
  if (!(orthogonal(ext.algebra, ext.form, d) == d.sum(ext.base())))
    items.push_back("orthogonal of the dual summand is not dual + base");
  return items;
}

namespace detail {

inline Extension checked(Extension ext) {
  auto items = extension_postcheck(ext);
  if (!items.empty()) throw ConditionViolation(std::move(items));
  return ext;
}

}  // namespace detail

/// Generalized double extension V + W + V* (even form) or P(V*) + W + V
/// (odd form) from a validated context.
inline Extension generalized_double_extension(const ExtensionContext& ctx) {
  auto items = validate_context(ctx);
  if (!items.empty()) throw ConditionViolation(std::move(items));
  return detail::checked(assemble_extension(ctx));
}

inline Extension even_generalized_de(const ExtensionContext& ctx) {
  if (ctx.parity != Parity::Even) throw PreconditionError("even extension needs an even context");
  return generalized_double_extension(ctx);
}

inline Extension odd_generalized_de(const ExtensionContext& ctx) {
  if (ctx.parity != Parity::Odd) throw PreconditionError("odd extension needs an odd context");
  return generalized_double_extension(ctx);
}

/// A + P(A*) for a purely even associative A, with B(x + f, y + h) = f(y) + h(x).
inline Extension semidirect_odd_dual(const Superalgebra& a) {
  if (a.dim_odd() != 0) throw PreconditionError("semi-direct product needs a purely even algebra");
  if (auto bad = validate(a); !bad.empty()) throw ConditionViolation(std::move(bad));
  ExtensionContext ctx;
  ctx.parity = Parity::Odd;
  ctx.b = {Parity::Odd, Matrix(0, 0)};
  ctx.v = a;
  return detail::checked(assemble_extension(ctx));
}

/// P(A1*) + A1 for a purely odd space A1 = null(0, n) with (f + x)(g + y) =
/// gamma(x, y); gamma[a][b][c] = gamma(y_a, y_b)(y_c) must be cyclic.
inline Extension generalized_semidirect(std::size_t n, const std::vector<std::vector<Vector>>& gamma) {
  ExtensionContext ctx;
  ctx.parity = Parity::Odd;
  ctx.b = {Parity::Odd, Matrix(0, 0)};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
  ctx.v = Superalgebra(0, n, names);
  ctx.gamma = gamma;
  return generalized_double_extension(ctx);
}

/// B(G x, y) = B(x, D y).
inline Matrix derived_g(const HomogeneousForm& b, const Matrix& d) { return detail::adjoint(b.gram, d); }

/// Violated conditions of a one-dimensional extension datum.
inline std::vector<std::string> validate_one_dim(const OneDimDatum& dt) {
  std::vector<std::string> items;
  const Superalgebra& w = dt.w;
  const std::size_t n = w.dim();
  if (dt.d.rows() != n || dt.d.cols() != n) throw ShapeError("D must be a dim W square matrix");
  if (dt.x0.size() != n) throw ShapeError("x0 must have length dim W");
  if (dt.b.parity != Parity::Even) items.push_back("base: form must be even");
  for (const auto& s : check_form(w, {Parity::Even, dt.b.gram})) items.push_back("base: " + s);
  if (!items.empty()) return items;
  const int e = bit(dt.e_parity);
  const auto& wn = w.basis_names();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(dt.d(r, c)) != 0 && w.pbit(r) != (w.pbit(c) ^ e))
        items.push_back("D has degree " + std::to_string(e) + ": D(" + wn[c] + ") has a " + wn[r] + " component");
  for (std::size_t r = 0; r < n; ++r)
    if (sgn(dt.x0[r]) != 0 && w.pbit(r) != 0) items.push_back("x0 must be even: component " + wn[r]);
  if (e == 1 && sgn(dt.k) != 0) items.push_back("k must be 0 when e is odd");
  const Matrix g = derived_g(dt.b, dt.d);
  if (!(dt.d * dt.x0 == g * dt.x0)) items.push_back("D(x0) = G(x0)");
  const Matrix lx0 = left_mult(w, dt.x0);
  for (std::size_t c = 0; c < n; ++c)
    if (!((dt.d * dt.d).col(c) == lx0.col(c))) items.push_back("D^2(x) = x0*x fails at x = " + wn[c]);
  if (!(dt.d * g == g * dt.d)) items.push_back("D o G = G o D");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vector ex = unit_vector(n, x), ey = unit_vector(n, y);
      if (!(dt.d * multiply(w, ex, ey) == multiply(w, dt.d * ex, ey)))
        items.push_back("D(x*y) = D(x)*y fails at (" + wn[x] + ", " + wn[y] + ")");
    }
  }
  // (e.e).e = e.(e.e) forces B(x0, x0) = -B(x0, x0) for odd e.
  if (e == 1 && sgn(dt.b(dt.x0, dt.x0)) != 0) items.push_back("B(x0, x0) = 0 for odd e");
  return items;
}

/// Ke* + W + Ke with e.e = x0 + k e*, x.y = x*y + (-1)^{|e|} B(Dx, y) e*,
/// e.x = Dx + (-1)^{|e|} B(x, x0) e*, x.e = Gx + B(x, x0) e*.
inline Extension one_dim_gde(const OneDimDatum& dt) {
  auto items = validate_one_dim(dt);
  if (!items.empty()) throw ConditionViolation(std::move(items));
  const Superalgebra& w = dt.w;
  const std::size_t n = w.dim();
  const int e = bit(dt.e_parity);
  const int s = e ? -1 : 1;
  const Matrix g = derived_g(dt.b, dt.d);
  Superalgebra kv(e ? 0 : 1, e ? 1 : 0, {"e"});
  auto l = detail::make_layout(w, kv, {e}, {"e*"});
  Superalgebra& out = l.shell;
  const std::size_t es = l.d(0), ee = l.v(0);
  for (std::size_t r = 0; r < n; ++r) out.add(ee, ee, l.w(r), dt.x0[r]);
  out.add(ee, ee, es, dt.k);
  for (std::size_t x = 0; x < n; ++x) {
    const Vector ex = unit_vector(n, x);
    const Vector dx = dt.d * ex;
    for (std::size_t y = 0; y < n; ++y) {
      for (const auto& t : w.product(x, y)) out.add(l.w(x), l.w(y), l.w(t.index), t.coeff);
      out.add(l.w(x), l.w(y), es, s * dt.b(dx, unit_vector(n, y)));
    }
    const Scalar bx = dt.b(ex, dt.x0);
    for (std::size_t r = 0; r < n; ++r) {
      out.add(ee, l.w(x), l.w(r), dt.d(r, x));
      out.add(l.w(x), ee, l.w(r), g(r, x));
    }
    out.add(ee, l.w(x), es, s * bx);
    out.add(l.w(x), ee, es, bx);
  }
  HomogeneousForm form{Parity::Even, Matrix(out.dim(), out.dim())};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) form.gram(l.w(x), l.w(y)) = dt.b.gram(x, y);
  form.gram(es, ee) = 1;
  form.gram(ee, es) = s;
  return detail::checked(detail::finish(std::move(l), std::move(form)));
}

/// Violated conditions of an elementary even double extension datum.
inline std::vector<std::string> validate_elementary(const Superalgebra& w, const HomogeneousForm& b, const Matrix& d) {
  std::vector<std::string> items;
  const std::size_t n = w.dim(), n0 = w.dim_even();
  if (d.rows() != n || d.cols() != n) throw ShapeError("D must be a dim W square matrix");
  if (b.parity != Parity::Even) items.push_back("base: form must be even");
  for (const auto& s : check_form(w, {Parity::Even, b.gram})) items.push_back("base: " + s);
  if (!items.empty()) return items;
  const auto& wn = w.basis_names();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(d(r, c)) != 0 && w.pbit(r) != w.pbit(c))
        items.push_back("D must be even: D(" + wn[c] + ") has a " + wn[r] + " component");
  for (std::size_t c = 0; c < n0; ++c)
    if (!is_zero(d.col(c))) items.push_back("D vanishes on W0: D(" + wn[c] + ") != 0");
  if (!(d * d).is_zero()) items.push_back("D^2 = 0");
  const Matrix ds = derived_g(b, d);
  if (!(d * ds == ds * d)) items.push_back("D o D* = D* o D");
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vector ex = unit_vector(n, x), ey = unit_vector(n, y);
      const std::string at = " at (" + wn[x] + ", " + wn[y] + ")";
      if (x >= n0 && y >= n0 && !is_zero(multiply(w, d * ex, ey))) items.push_back("D(W1)*W1 = 0" + at);
      if (x < n0 && y >= n0 && !is_zero(d * multiply(w, ex, ey))) items.push_back("D(W0*W1) = 0" + at);
      if (x >= n0 && y < n0 && !(d * multiply(w, ex, ey) == multiply(w, d * ex, ey)))
        items.push_back("D(W1*W0) = D(W1)*W0" + at);
    }
  }
  return items;
}

/// Ke* + W + Ke with e.e = 0, e.x = Dx, x.e = D*x, x.y = x*y + B(Dx, y) e*.
inline Extension elementary_even_de(const Superalgebra& w, const HomogeneousForm& b, const Matrix& d) {
  auto items = validate_elementary(w, b, d);
  if (!items.empty()) throw ConditionViolation(std::move(items));
  return one_dim_gde(OneDimDatum{w, b, Parity::Even, d, zero_vector(w.dim()), 0});
}

}  // namespace superalg

#endif  // SUPERALG_EXTENSIONS_HPP
