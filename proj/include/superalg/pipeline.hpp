#ifndef SUPERALG_PIPELINE_HPP
#define SUPERALG_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "extensions.hpp"
#include "io.hpp"

namespace superalg {

/// Outcome of a tower run. `result` is empty for an empty description.
struct PipelineResult {
  std::optional<StructuredAlgebra> result;
  std::vector<std::string> log;
};

namespace detail {

inline std::string dims(const Superalgebra& a) {
  return "(" + std::to_string(a.dim_even()) + "," + std::to_string(a.dim_odd()) + ")";
}

/// Seeds: {"catalog": "mrs", "r", "s"}, {"catalog": "qn", "n"},
/// {"catalog": "R"}, {"catalog": "zero"} (the zero algebra with an even form)
/// or {"algebra": <algebra file with one form>}.
inline StructuredAlgebra pipeline_seed(const io::json& j, const std::string& where) {
  using io::detail::field;
  using io::detail::index;
  if (auto it = j.find("algebra"); it != j.end()) {
    auto f = io::parse_algebra(*it, where + ".algebra");
    if (f.forms.size() != 1) throw ParseError(where + ".algebra.forms: expected exactly one form");
    return {f.algebra, f.forms.front()};
  }
  const io::json& kind = field(j, "catalog", where);
  if (kind == "mrs") return make_Mrs(index(field(j, "r", where), where + ".r"), index(field(j, "s", where), where + ".s"));
  if (kind == "qn") return make_Qn(index(field(j, "n", where), where + ".n"));
  if (kind == "R") return make_R();
  if (kind == "zero") return {Superalgebra(0, 0), {Parity::Even, Matrix(0, 0)}};
  throw ParseError(where + ".catalog: unknown seed kind");
}

inline void require_valid(const StructuredAlgebra& s, const std::string& step) {
  auto bad = validate(s.algebra);
  for (auto& x : check_form(s.algebra, s.form)) bad.push_back(std::move(x));
  for (auto& x : bad) x = step + ": " + x;
  if (!bad.empty()) throw ConditionViolation(bad);
}

}  // namespace detail

/// Runs {"seed": ..., "steps": [...]}. Steps:
///   {"op": "elementary", "d": matrix}
///   {"op": "one-dim", "parity": "even"|"odd", "d": matrix, "x0": vector, "k": scalar}
///   {"op": "context", "v": algebra, "mu": ..., "lambda": ..., "gamma": ...}
///   {"op": "direct-sum", "with": seed}
///   {"op": "semidirect-odd-dual"}
/// Missing maps are zero. Every intermediate is verified; the first failure
/// throws.
inline PipelineResult run_pipeline(const io::json& spec) {
  using io::detail::field;
  PipelineResult out;
  if (!spec.is_object()) throw ParseError("pipeline: expected an object");
  if (spec.empty()) return out;
  StructuredAlgebra cur = detail::pipeline_seed(field(spec, "seed", "pipeline"), "pipeline.seed");
  detail::require_valid(cur, "seed");
  out.log.push_back("seed: dims " + detail::dims(cur.algebra) + ", " + parity_name(cur.form.parity) + " form");
  const io::json empty = io::json::array();
  const io::json& steps = spec.contains("steps") ? spec["steps"] : empty;
  if (!steps.is_array()) throw ParseError("pipeline.steps: expected an array");
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const std::string where = "pipeline.steps[" + std::to_string(s) + "]";
    const io::json& st = steps[s];
    const io::json& op = field(st, "op", where);
    if (!op.is_string()) throw ParseError(where + ".op: expected a string");
    const std::size_t n = cur.algebra.dim();
    auto matrix_or_zero = [&](const char* key) {
      return st.contains(key) ? io::parse_matrix(st[key], n, where + "." + key) : Matrix(n, n);
    };
    Extension ext;
    if (op == "elementary") {
      ext = elementary_even_de(cur.algebra, cur.form, matrix_or_zero("d"));
    } else if (op == "one-dim") {
      OneDimDatum dt{cur.algebra, cur.form, io::detail::parity(field(st, "parity", where), where + ".parity"),
                     matrix_or_zero("d"), zero_vector(n), 0};
      if (st.contains("x0")) dt.x0 = io::parse_vector(st["x0"], where + ".x0");
      if (dt.x0.size() != n) throw ParseError(where + ".x0: expected length " + std::to_string(n));
      if (st.contains("k")) dt.k = io::detail::scalar(st["k"], where + ".k");
      ext = one_dim_gde(dt);
    } else if (op == "context") {
      io::json c = st;
      c["parity"] = parity_name(cur.form.parity);
      c["w"] = io::algebra_json(cur.algebra, {cur.form});
      ext = generalized_double_extension(io::parse_context(c, where));
    } else if (op == "direct-sum") {
      const auto other = detail::pipeline_seed(field(st, "with", where), where + ".with");
      if (other.form.parity != cur.form.parity) throw PreconditionError(where + ": direct sum of forms of different parities");
      const Superalgebra sum = direct_sum({cur.algebra, other.algebra});
      cur = {sum, direct_sum_form({cur.algebra, other.algebra}, {cur.form, other.form})};
      detail::require_valid(cur, where);
      out.log.push_back(where + " direct-sum: dims " + detail::dims(cur.algebra));
      continue;
    } else if (op == "semidirect-odd-dual") {
      ext = semidirect_odd_dual(cur.algebra);
    } else {
      throw ParseError(where + ".op: unknown operation");
    }
    cur = {ext.algebra, ext.form};
    detail::require_valid(cur, where);
    if (auto bad = extension_postcheck(ext); !bad.empty()) {
      for (auto& x : bad) x = where + ": " + x;
      throw ConditionViolation(bad);
    }
    out.log.push_back(where + " " + op.get<std::string>() + ": dims " + detail::dims(cur.algebra) + ", " +
                      parity_name(cur.form.parity) + " form");
  }
  out.result = cur;
  return out;
}

}  // namespace superalg

#endif  // SUPERALG_PIPELINE_HPP
