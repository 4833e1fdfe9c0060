// superalg: command-line front end over the JSON interchange format.
// Exit codes: 0 pass, 1 mathematical violation, 2 parse or schema error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superalg/catalog.hpp"
#include "superalg/extensions.hpp"
#include "superalg/forms.hpp"
#include "superalg/io.hpp"
#include "superalg/pipeline.hpp"
#include "superalg/structure.hpp"

using namespace superalg;
using io::json;

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kParse = 2;

struct Options {
  std::uint32_t seed = kDefaultProbeSeed;
  bool as_json = false;
  std::string out;
  std::size_t form_index = 0;
};

void emit(const Options& o, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ParseError(o.out + ": cannot write");
  f << text;
}

StructuredAlgebra load_structured(const std::string& path, std::size_t form_index) {
  auto f = io::parse_algebra(io::read_file(path), path);
  if (form_index >= f.forms.size())
    throw ParseError(path + ": form " + std::to_string(form_index) + " requested but the file has " +
                     std::to_string(f.forms.size()));
  return {f.algebra, f.forms[form_index]};
}

Vector parse_list(const std::string& text, const std::string& what) {
  Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(parse_scalar(item));
    } catch (const ParseError& e) {
      throw ParseError(what + ": " + e.what());
    }
  }
  return v;
}

json subspace_json(const GradedSubspace& u) {
  json out = json::array();
  for (const auto& v : u.basis()) out.push_back(io::vector_json(v));
  return out;
}

std::string dims(const Superalgebra& a) {
  return "(" + std::to_string(a.dim_even()) + "," + std::to_string(a.dim_odd()) + ")";
}

void print_items(const std::vector<std::string>& items) {
  for (const auto& s : items) std::cout << "  - " << s << "\n";
}

int cmd_verify(const std::string& path) {
  const auto f = io::parse_algebra(io::read_file(path), path);
  bool ok = true;
  const auto bad = validate(f.algebra);
  std::cout << "algebra " << dims(f.algebra) << ": " << (bad.empty() ? "valid" : "INVALID") << "\n";
  print_items(bad);
  ok = ok && bad.empty();
  for (std::size_t k = 0; k < f.forms.size(); ++k) {
    const auto fb = check_form(f.algebra, f.forms[k]);
    std::cout << "form " << k << " (" << parity_name(f.forms[k].parity) << "): " << (fb.empty() ? "valid" : "INVALID")
              << "\n";
    print_items(fb);
    ok = ok && fb.empty();
  }
  return ok ? kPass : kViolation;
}

int cmd_forms(const std::string& path, const std::string& which, const Options& o) {
  const auto f = io::parse_algebra(io::read_file(path), path);
  std::vector<Parity> ps;
  if (which == "even" || which == "both") ps.push_back(Parity::Even);
  if (which == "odd" || which == "both") ps.push_back(Parity::Odd);
  json report = json::object();
  for (auto p : ps) {
    const auto fs = invariant_form_space(f.algebra, p);
    const auto w = exists_nondegenerate(fs);
    json basis = json::array();
    for (const auto& b : fs.basis) basis.push_back(io::form_json(b));
    report[parity_name(p)] = {{"dim", fs.dim()}, {"basis", basis}, {"witness", w ? io::form_json(*w) : json(nullptr)}};
    if (!o.as_json) {
      std::cout << parity_name(p) << ": dim " << fs.dim() << ", "
                << (w ? "non-degenerate witness" : (fs.dim() == 0 ? "no structure" : "no non-degenerate member")) << "\n";
      if (w) std::cout << "  witness " << io::form_json(*w).dump() << "\n";
    }
  }
  report["product_null"] = f.algebra.product_is_null();
  if (o.as_json) {
    emit(o, report);
  } else {
    std::cout << "product " << (f.algebra.product_is_null() ? "null" : "not null") << "\n";
  }
  return kPass;
}

void emit_extension(const Options& o, const Extension& ext) { emit(o, io::algebra_json(ext.algebra, {ext.form})); }

int cmd_decompose(const std::string& path, const Options& o) {
  const auto s = load_structured(path, o.form_index);
  const auto d = birreducible_decomposition(s.algebra, s.form, o.seed);
  json summands = json::array();
  for (const auto& sm : d.summands)
    summands.push_back({{"kind", sm.kind},
                        {"dim_even", sm.subspace.dim_even()},
                        {"dim_odd", sm.subspace.dim_odd()},
                        {"basis", subspace_json(sm.subspace)}});
  if (o.as_json) {
    emit(o, {{"summands", summands}, {"verified", d.verified()}, {"certificate", d.certificate}});
  } else {
    std::cout << d.summands.size() << " B-irreducible summand(s)\n";
    for (const auto& sm : d.summands)
      std::cout << "  " << sm.kind << " dims (" << sm.subspace.dim_even() << "," << sm.subspace.dim_odd() << ")\n";
    std::cout << "certificate: " << (d.verified() ? "verified" : "FAILED") << "\n";
    print_items(d.certificate);
  }
  return d.verified() ? kPass : kViolation;
}

json reduction_json(const ReductionResult& r) {
  return {{"ideal", subspace_json(r.i)},
          {"complement", subspace_json(r.v)},
          {"quotient_type", r.quotient_type},
          {"context", io::context_json(r.context)},
          {"delta", io::matrix_json(r.delta)},
          {"rebuilt", io::algebra_json(r.rebuilt.algebra, {r.rebuilt.form})}};
}

void print_reduction(const ReductionResult& r) {
  std::cout << "I dims (" << r.i.dim_even() << "," << r.i.dim_odd() << "), W = J/I dims " << dims(r.w)
            << " (" << describe(r.w) << "), A/J dims " << dims(r.top) << " type " << r.quotient_type << "\n";
  std::cout << "delta: bijective, multiplicative and isometric (verified)\n";
}

int cmd_reduce(const std::string& path, const std::string& ideal, const Options& o) {
  const auto s = load_structured(path, o.form_index);
  GradedSubspace i;
  if (ideal == "auto") {
    i = minimal_ideal(s.algebra, s.form, o.seed);
  } else {
    const json j = io::read_file(ideal);
    if (!j.is_array()) throw ParseError(ideal + ": expected an array of vectors");
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < j.size(); ++k) {
      vs.push_back(io::parse_vector(j[k], ideal + "[" + std::to_string(k) + "]"));
      if (vs.back().size() != s.algebra.dim()) throw ParseError(ideal + "[" + std::to_string(k) + "]: wrong length");
    }
    i = GradedSubspace::span(s.algebra, vs);
  }
  const auto r = reduce(s.algebra, s.form, i);
  if (o.as_json) {
    emit(o, reduction_json(r));
  } else {
    print_reduction(r);
  }
  return kPass;
}

int cmd_classify_odd(const std::string& path, const Options& o) {
  const auto s = load_structured(path, o.form_index);
  const auto rep = odd_ss_classify(s.algebra, s.form, o.seed);
  json blocks = json::array(), inv = json::array();
  for (const auto& b : rep.blocks) {
    json jb = {{"tag", b.tag}, {"kind", b.summand.kind}, {"dim_even", b.summand.subspace.dim_even()},
               {"dim_odd", b.summand.subspace.dim_odd()}, {"basis", subspace_json(b.summand.subspace)}};
    if (b.tag == "simple-plus-dual") jb["block_dims"] = {b.dim_i, b.dim_s, b.dim_s_a1};
    blocks.push_back(jb);
  }
  for (const auto& [name, ok] : rep.invariants) inv.push_back({{"name", name}, {"holds", ok}});
  if (o.as_json) {
    emit(o, {{"blocks", blocks}, {"invariants", inv}, {"eta", io::matrix_json(rep.eta)}});
  } else {
    std::cout << rep.blocks.size() << " block(s)\n";
    for (const auto& b : rep.blocks)
      std::cout << "  " << b.tag << " dims (" << b.summand.subspace.dim_even() << "," << b.summand.subspace.dim_odd()
                << ")\n";
    for (const auto& [name, ok] : rep.invariants) std::cout << (ok ? "  holds: " : "  FAILS: ") << name << "\n";
  }
  return rep.all_invariants_hold() ? kPass : kViolation;
}

int cmd_reduce_even(const std::string& path, const Options& o) {
  const auto s = load_structured(path, o.form_index);
  const auto r = even_ss_reduce(s.algebra, s.form, o.seed);
  json j = {{"branch", r.branch}};
  json simples = json::array();
  for (const auto& sm : r.simples) simples.push_back({{"kind", sm.kind}, {"basis", subspace_json(sm.subspace)}});
  j["simples"] = simples;
  if (r.reduction) {
    j["reduction"] = reduction_json(*r.reduction);
    j["d"] = io::matrix_json(r.d);
    j["x0"] = io::vector_json(r.x0);
  }
  if (o.as_json) {
    emit(o, j);
  } else {
    std::cout << "branch: " << r.branch << "\n";
    for (const auto& sm : r.simples) std::cout << "  simple " << sm.kind << "\n";
    if (r.reduction) print_reduction(*r.reduction);
  }
  return kPass;
}

int cmd_pipeline(const std::string& path, const Options& o) {
  const auto r = run_pipeline(io::read_file(path));
  for (const auto& line : r.log) std::cerr << line << "\n";
  if (r.result) emit(o, io::algebra_json(r.result->algebra, {r.result->form}));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for superalgebras with homogeneous symmetric structures"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized probes")->capture_default_str();
  app.add_flag("--json", o.as_json, "Emit reports as JSON");
  app.add_option("-o,--output", o.out, "Write JSON output to a file");
  app.add_option("--form", o.form_index, "Index of the form to use from the algebra file")->capture_default_str();

  std::function<int()> run;

  auto* catalog = app.add_subcommand("catalog", "Emit a catalog algebra");
  catalog->require_subcommand(1);
  std::size_t r = 1, s = 0, n = 1, n0 = 0, n1 = 0;
  auto* mrs = catalog->add_subcommand("mrs", "M(r,s) with its even form");
  mrs->add_option("--r", r)->required();
  mrs->add_option("--s", s)->required();
  mrs->callback([&] { run = [&] { auto m = make_Mrs(r, s); emit(o, io::algebra_json(m.algebra, {m.form})); return kPass; }; });
  auto* qn = catalog->add_subcommand("qn", "Q(n) with its odd form");
  qn->add_option("--n", n)->required();
  qn->callback([&] { run = [&] { auto q = make_Qn(n); emit(o, io::algebra_json(q.algebra, {q.form})); return kPass; }; });
  auto* null = catalog->add_subcommand("null", "Null-product algebra (no form attached)");
  null->add_option("--even", n0)->required();
  null->add_option("--odd", n1)->required();
  null->callback([&] { run = [&] { emit(o, io::algebra_json(make_null(n0, n1))); return kPass; }; });

  std::string file, parity = "both", ideal = "auto";
  auto* verify = app.add_subcommand("verify", "Check the algebra and every attached form");
  verify->add_option("file", file)->required();
  verify->callback([&] { run = [&] { return cmd_verify(file); }; });

  auto* forms = app.add_subcommand("forms", "Invariant supersymmetric forms of an algebra");
  forms->add_option("file", file)->required();
  forms->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd", "both"}))->capture_default_str();
  forms->callback([&] { run = [&] { return cmd_forms(file, parity, o); }; });

  auto* extend = app.add_subcommand("extend", "Build an extension");
  extend->require_subcommand(1);
  std::string base, dfile, x0, k = "0", ctx, eparity;
  auto* one = extend->add_subcommand("one-dim", "Generalized double extension by a one-dimensional algebra");
  one->add_option("--parity", eparity)->required()->check(CLI::IsMember({"even", "odd"}));
  one->add_option("--base", base)->required();
  one->add_option("--d", dfile, "JSON matrix file; zero when omitted");
  one->add_option("--x0", x0, "Comma-separated scalars; zero when omitted");
  one->add_option("--k", k)->capture_default_str();
  one->callback([&] {
    run = [&] {
      const auto w = load_structured(base, o.form_index);
      const std::size_t dim = w.algebra.dim();
      OneDimDatum dt{w.algebra, w.form, eparity == "odd" ? Parity::Odd : Parity::Even, Matrix(dim, dim),
                     zero_vector(dim), parse_scalar(k)};
      if (!dfile.empty()) dt.d = io::parse_matrix(io::read_file(dfile), dim, dfile);
      if (!x0.empty()) dt.x0 = parse_list(x0, "--x0");
      if (dt.x0.size() != dim) throw ParseError("--x0: expected " + std::to_string(dim) + " scalars");
      if (dt.d.rows() != dim) throw ParseError(dfile + ": expected " + std::to_string(dim) + " rows");
      emit_extension(o, one_dim_gde(dt));
      return kPass;
    };
  });
  auto* elem = extend->add_subcommand("elementary", "Elementary even double extension");
  elem->add_option("--base", base)->required();
  elem->add_option("--d", dfile)->required();
  elem->callback([&] {
    run = [&] {
      const auto w = load_structured(base, o.form_index);
      const Matrix d = io::parse_matrix(io::read_file(dfile), w.algebra.dim(), dfile);
      if (d.rows() != w.algebra.dim()) throw ParseError(dfile + ": wrong row count");
      emit_extension(o, elementary_even_de(w.algebra, w.form, d));
      return kPass;
    };
  });
  auto* context = extend->add_subcommand("context", "Generalized double extension from a context file");
  context->add_option("--ctx", ctx)->required();
  context->callback([&] {
    run = [&] {
      emit_extension(o, generalized_double_extension(io::parse_context(io::read_file(ctx), ctx)));
      return kPass;
    };
  });

  auto* decompose = app.add_subcommand("decompose", "Orthogonal decomposition into B-irreducible ideals");
  decompose->add_option("file", file)->required();
  decompose->callback([&] { run = [&] { return cmd_decompose(file, o); }; });

  auto* red = app.add_subcommand("reduce", "Read the algebra as a generalized double extension");
  red->add_option("file", file)->required();
  red->add_option("--ideal", ideal, "\"auto\" or a JSON file listing spanning vectors")->capture_default_str();
  red->callback([&] { run = [&] { return cmd_reduce(file, ideal, o); }; });

  auto* odd = app.add_subcommand("classify-odd-ss", "Classify an odd-symmetric algebra with semisimple even bimodule");
  odd->add_option("file", file)->required();
  odd->callback([&] { run = [&] { return cmd_classify_odd(file, o); }; });

  auto* even = app.add_subcommand("reduce-even-ss", "Reduce an even-symmetric algebra with semisimple even bimodule");
  even->add_option("file", file)->required();
  even->callback([&] { run = [&] { return cmd_reduce_even(file, o); }; });

  auto* pipe = app.add_subcommand("pipeline", "Run a tower of extensions described in a JSON file");
  pipe->add_option("file", file)->required();
  pipe->callback([&] { run = [&] { return cmd_pipeline(file, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ShapeError& e) {
    std::cerr << "shape error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  }
}
