#ifndef SUPERALG_IO_HPP
#define SUPERALG_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "exact_linear.hpp"
#include "extensions.hpp"
#include "forms.hpp"
#include "superalgebra.hpp"

// JSON interchange. Scalars are strings "p/q" (or "p"); indices are
// zero-based; structure triples and form entries that are omitted are zero.
namespace superalg::io {

using json = nlohmann::json;

/// An algebra file: the algebra and every form attached to it.
struct AlgebraFile {
  Superalgebra algebra;
  std::vector<HomogeneousForm> forms;
};

namespace detail {

inline std::string at(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(where, key) + ": missing");
  return *it;
}

inline std::size_t index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

inline Scalar scalar(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw ParseError(where + ": scalars must be strings \"p/q\" or integers");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline Parity parity(const json& j, const std::string& where) {
  if (j == "even") return Parity::Even;
  if (j == "odd") return Parity::Odd;
  throw ParseError(where + ": parity must be \"even\" or \"odd\"");
}

}  // namespace detail

inline json scalar_json(const Scalar& s) { return to_string(s); }

inline json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

inline Vector parse_vector(const json& j, const std::string& where = "vector") {
  if (!j.is_array()) throw ParseError(where + ": expected an array of scalars");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(detail::scalar(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

/// Dense matrix as an array of rows.
inline json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

inline Matrix parse_matrix(const json& j, std::size_t cols, const std::string& where = "matrix") {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(parse_vector(j[i], where + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != cols)
      throw ParseError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(cols) + " entries");
  }
  return Matrix::from_rows(rows, cols);
}

inline json form_json(const HomogeneousForm& b) {
  json entries = json::array();
  for (std::size_t i = 0; i < b.gram.rows(); ++i)
    for (std::size_t k = 0; k < b.gram.cols(); ++k)
      if (sgn(b.gram(i, k)) != 0) entries.push_back({i, k, to_string(b.gram(i, k))});
  return {{"parity", parity_name(b.parity)}, {"entries", entries}};
}

/// Entries are completed by supersymmetry on the parities of `a`.
inline HomogeneousForm parse_form(const json& j, const Superalgebra& a, const std::string& where = "form") {
  const Parity p = detail::parity(detail::field(j, "parity", where), detail::at(where, "parity"));
  const json& entries = detail::field(j, "entries", where);
  if (!entries.is_array()) throw ParseError(detail::at(where, "entries") + ": expected an array");
  Matrix partial(a.dim(), a.dim());
  for (std::size_t t = 0; t < entries.size(); ++t) {
    const std::string w = detail::at(where, "entries") + "[" + std::to_string(t) + "]";
    const json& e = entries[t];
    if (!e.is_array() || e.size() != 3) throw ParseError(w + ": expected [i, j, scalar]");
    const auto i = detail::index(e[0], w), k = detail::index(e[1], w);
    if (i >= a.dim() || k >= a.dim()) throw ParseError(w + ": index out of range");
    partial(i, k) = detail::scalar(e[2], w);
  }
  try {
    return supersymmetric_completion(a, p, partial);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline json algebra_json(const Superalgebra& a, const std::vector<HomogeneousForm>& forms = {}) {
  json structure = json::array();
  for (const auto& t : a.triples()) structure.push_back({t.i, t.j, t.k, to_string(t.coeff)});
  json fs = json::array();
  for (const auto& f : forms) fs.push_back(form_json(f));
  return {{"dim_even", a.dim_even()},
          {"dim_odd", a.dim_odd()},
          {"basis", a.basis_names()},
          {"structure", structure},
          {"forms", fs}};
}

inline AlgebraFile parse_algebra(const json& j, const std::string& where = "") {
  const auto n0 = detail::index(detail::field(j, "dim_even", where), detail::at(where, "dim_even"));
  const auto n1 = detail::index(detail::field(j, "dim_odd", where), detail::at(where, "dim_odd"));
  std::vector<std::string> names;
  if (auto it = j.find("basis"); it != j.end()) {
    if (!it->is_array() || it->size() != n0 + n1)
      throw ParseError(detail::at(where, "basis") + ": expected " + std::to_string(n0 + n1) + " names");
    for (const auto& s : *it) {
      if (!s.is_string()) throw ParseError(detail::at(where, "basis") + ": names must be strings");
      names.push_back(s.get<std::string>());
    }
  }
  AlgebraFile f{Superalgebra(n0, n1, names), {}};
  if (auto it = j.find("structure"); it != j.end()) {
    if (!it->is_array()) throw ParseError(detail::at(where, "structure") + ": expected an array");
    for (std::size_t t = 0; t < it->size(); ++t) {
      const std::string w = detail::at(where, "structure") + "[" + std::to_string(t) + "]";
      const json& e = (*it)[t];
      if (!e.is_array() || e.size() != 4) throw ParseError(w + ": expected [i, j, k, scalar]");
      const auto i = detail::index(e[0], w), jj = detail::index(e[1], w), k = detail::index(e[2], w);
      if (i >= f.algebra.dim() || jj >= f.algebra.dim() || k >= f.algebra.dim())
        throw ParseError(w + ": index out of range");
      f.algebra.add(i, jj, k, detail::scalar(e[3], w));
    }
  }
  if (auto it = j.find("forms"); it != j.end()) {
    if (!it->is_array()) throw ParseError(detail::at(where, "forms") + ": expected an array");
    for (std::size_t t = 0; t < it->size(); ++t)
      f.forms.push_back(parse_form((*it)[t], f.algebra, detail::at(where, "forms") + "[" + std::to_string(t) + "]"));
  }
  return f;
}

/// Context: {"parity", "w": algebra with its form, "v": algebra, "mu": [matrix],
/// "lambda": [[vector]], "gamma": [[vector]]}; missing maps are zero.
inline json context_json(const ExtensionContext& c) {
  json mu = json::array(), lambda = json::array(), gamma = json::array();
  for (const auto& m : c.mu) mu.push_back(matrix_json(m));
  for (const auto& row : c.lambda) {
    json r = json::array();
    for (const auto& v : row) r.push_back(vector_json(v));
    lambda.push_back(r);
  }
  for (const auto& row : c.gamma) {
    json r = json::array();
    for (const auto& v : row) r.push_back(vector_json(v));
    gamma.push_back(r);
  }
  return {{"parity", parity_name(c.parity)}, {"w", algebra_json(c.w, {c.b})}, {"v", algebra_json(c.v)},
          {"mu", mu},         {"lambda", lambda}, {"gamma", gamma}};
}

inline ExtensionContext parse_context(const json& j, const std::string& where = "") {
  ExtensionContext c;
  c.parity = detail::parity(detail::field(j, "parity", where), detail::at(where, "parity"));
  auto w = parse_algebra(detail::field(j, "w", where), detail::at(where, "w"));
  if (w.forms.size() != 1) throw ParseError(detail::at(where, "w.forms") + ": expected exactly one form");
  c.w = w.algebra;
  c.b = w.forms.front();
  c.v = parse_algebra(detail::field(j, "v", where), detail::at(where, "v")).algebra;
  const std::size_t nv = c.v.dim(), nw = c.w.dim();
  auto pairs = [&](const char* key, std::size_t len) {
    std::vector<std::vector<Vector>> out;
    auto it = j.find(key);
    if (it == j.end() || it->empty()) return out;
    const std::string w0 = detail::at(where, key);
    if (!it->is_array() || it->size() != nv) throw ParseError(w0 + ": expected " + std::to_string(nv) + " rows");
    for (std::size_t a = 0; a < nv; ++a) {
      const json& row = (*it)[a];
      if (!row.is_array() || row.size() != nv) throw ParseError(w0 + "[" + std::to_string(a) + "]: expected " + std::to_string(nv) + " entries");
      std::vector<Vector> r;
      for (std::size_t b = 0; b < nv; ++b) {
        const std::string wb = w0 + "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
        r.push_back(parse_vector(row[b], wb));
        if (r.back().size() != len) throw ParseError(wb + ": expected length " + std::to_string(len));
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  if (auto it = j.find("mu"); it != j.end() && !it->empty()) {
    if (!it->is_array() || it->size() != nv) throw ParseError(detail::at(where, "mu") + ": expected one matrix per basis vector of V");
    for (std::size_t a = 0; a < nv; ++a)
      c.mu.push_back(parse_matrix((*it)[a], nw, detail::at(where, "mu") + "[" + std::to_string(a) + "]"));
    for (std::size_t a = 0; a < nv; ++a)
      if (c.mu[a].rows() != nw) throw ParseError(detail::at(where, "mu") + "[" + std::to_string(a) + "]: wrong row count");
  }
  c.lambda = pairs("lambda", nw);
  c.gamma = pairs("gamma", nv);
  return c;
}

inline json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

}  // namespace superalg::io

#endif  // SUPERALG_IO_HPP
