#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "generators.hpp"
#include "superalg/catalog.hpp"
#include "superalg/extensions.hpp"
#include "superalg/structure.hpp"
#include "test_support.hpp"

using namespace superalg;
using namespace superalg::testing;

namespace {

StructuredAlgebra sum_of(const std::vector<StructuredAlgebra>& parts) {
  std::vector<Superalgebra> as;
  std::vector<HomogeneousForm> fs;
  for (const auto& p : parts) as.push_back(p.algebra), fs.push_back(p.form);
  return {direct_sum(as), direct_sum_form(as, fs)};
}

GradedSubspace coords(const Superalgebra& a, const std::vector<std::size_t>& idx) {
  std::vector<Vector> vs;
  for (auto i : idx) vs.push_back(unit_vector(a.dim(), i));
  return GradedSubspace::span(a, vs);
}

std::multiset<std::string> kinds(const Decomposition& d) {
  std::multiset<std::string> out;
  for (const auto& s : d.summands) out.insert(s.kind);
  return out;
}

StructuredAlgebra as_structured(const Extension& e) { return {e.algebra, e.form}; }

/// The quotient type is only constrained when I is minimal.
void expect_round_trip(const Superalgebra& a, const HomogeneousForm& b, const GradedSubspace& i, bool minimal = true) {
  const auto r = reduce(a, b, i);
  EXPECT_TRUE(detail::check_delta(a, b, r.rebuilt, r.delta).empty());
  EXPECT_NE(det(r.delta), 0);
  EXPECT_EQ(r.w.dim() + 2 * i.dim(), a.dim());
  if (!minimal) return;
  EXPECT_TRUE(r.quotient_type == "one-dim-null" || r.quotient_type.rfind("M(", 0) == 0 ||
              r.quotient_type.rfind("Q(", 0) == 0)
      << r.quotient_type;
}

StructuredAlgebra semidirect_m2() { return as_structured(semidirect_odd_dual(make_Mrs(2, 0).algebra)); }

}  // namespace

TEST(Decomposition, EvenOrthogonalSum) {
  const auto m11 = make_Mrs(1, 1), k = make_Mrs(1, 0);
  const StructuredAlgebra line{make_null(1, 0), {Parity::Even, Matrix::identity(1)}};
  const auto s = sum_of({m11, k, line});
  const auto d = birreducible_decomposition(s.algebra, s.form);
  EXPECT_TRUE(d.verified());
  ASSERT_EQ(d.summands.size(), 3u);
  EXPECT_EQ(kinds(d), (std::multiset<std::string>{"M(1,1)", "M(1,0)", "null(1,0)"}));
  // Evens of all summands first, then odds.
  const std::map<std::string, GradedSubspace> expected{
      {"M(1,1)", coords(s.algebra, {0, 1, 4, 5})}, {"M(1,0)", coords(s.algebra, {2})}, {"null(1,0)", coords(s.algebra, {3})}};
  for (const auto& sm : d.summands) EXPECT_TRUE(sm.subspace == expected.at(sm.kind)) << sm.kind;
}

TEST(Decomposition, OddOrthogonalSum) {
  const auto s = sum_of({make_Qn(1), make_R(), as_structured(semidirect_odd_dual(make_Mrs(1, 0).algebra))});
  const auto d = birreducible_decomposition(s.algebra, s.form);
  EXPECT_TRUE(d.verified());
  ASSERT_EQ(d.summands.size(), 3u);
  EXPECT_EQ(kinds(d), (std::multiset<std::string>{"Q(1)", "null(1,1)", "other"}));
}

TEST(Decomposition, IrreducibleInputsStayWhole) {
  const auto q2 = make_Qn(2);
  auto d = birreducible_decomposition(q2.algebra, q2.form);
  ASSERT_EQ(d.summands.size(), 1u);
  EXPECT_EQ(d.summands[0].kind, "Q(2)");

  const auto sd = semidirect_m2();
  d = birreducible_decomposition(sd.algebra, sd.form);
  ASSERT_EQ(d.summands.size(), 1u);
  EXPECT_TRUE(d.summands[0].subspace.is_whole());
  // The dual ideal cannot be split off: B vanishes on it.
  const auto ext = semidirect_odd_dual(make_Mrs(2, 0).algebra);
  EXPECT_TRUE(restrict(ext.form, ext.dual()).gram.is_zero());
}

TEST(Decomposition, CertificateCatchesBadSplits) {
  const auto m11 = make_Mrs(1, 1), k = make_Mrs(1, 0);
  const auto s = sum_of({m11, k});
  // Halves that are not ideals.
  const auto bad = certify_decomposition(s.algebra, s.form, {coords(s.algebra, {0, 3}), coords(s.algebra, {1, 2, 4})});
  EXPECT_FALSE(bad.empty());
  EXPECT_TRUE(certify_decomposition(s.algebra, s.form, {coords(s.algebra, {0, 1, 3, 4}), coords(s.algebra, {2})}).empty());
}

TEST(Decomposition, GeneratedSumsRecoverTheirParts) {
  gen::Rng rng(gen::kDefaultSeed);
  const auto even = gen::even_bases();
  for (int trial = 0; trial < 6; ++trial) {
    // Simple even-symmetric pieces only, so the count is known.
    const auto& x = even[rng.pick(4)];
    const auto& y = even[rng.pick(4)];
    const auto s = sum_of({x, y});
    const auto d = birreducible_decomposition(s.algebra, s.form);
    EXPECT_TRUE(d.verified());
    EXPECT_EQ(d.summands.size(), 2u);
  }
}

TEST(MinimalIdeal, Examples) {
  const auto m11 = make_Mrs(1, 1);
  const auto g = one_dim_gde({m11.algebra, m11.form, Parity::Even, Matrix(4, 4), zero_vector(4), 0});
  // D = 0, x0 = 0, k = 0: both e* and e annihilate; the first annihilator
  // basis vector is e*.
  const auto i = minimal_ideal(g.algebra, g.form);
  EXPECT_EQ(i.dim(), 1u);
  EXPECT_TRUE(i == g.dual());

  const auto ext = semidirect_odd_dual(make_Mrs(2, 0).algebra);
  const auto j = minimal_ideal(ext.algebra, ext.form);
  EXPECT_TRUE(j == ext.dual());

  const auto q1 = make_Qn(1);
  EXPECT_THROW(minimal_ideal(q1.algebra, q1.form), SimpleAlgebra);
  const auto k = make_Mrs(1, 0);
  EXPECT_THROW(minimal_ideal(k.algebra, k.form), PreconditionError);
}

TEST(MinimalIdeal, IsIsotropicWithNullProduct) {
  std::vector<StructuredAlgebra> inputs{semidirect_m2(), as_structured(generalized_semidirect(1, {{Vector{Scalar(1)}}})),
                                        as_structured(generalized_semidirect(2, {}))};
  gen::Rng rng(gen::kDefaultSeed);
  for (int t = 0; t < 4; ++t) inputs.push_back(as_structured(assemble_extension(gen::context(rng, Parity::Even))));
  for (const auto& s : inputs) {
    const auto d = birreducible_decomposition(s.algebra, s.form);
    if (d.summands.size() != 1) continue;
    const auto i = minimal_ideal(s.algebra, s.form);
    EXPECT_TRUE(is_ideal(s.algebra, i));
    EXPECT_TRUE(totally_isotropic(s.form, i));
    EXPECT_TRUE(product_subspaces(s.algebra, i, i).is_zero());
  }
}

TEST(Reduce, RoundTrips) {
  const auto m11 = make_Mrs(1, 1);
  // R1: GDE of M(1,1) with D = 0.
  {
    const auto g = one_dim_gde({m11.algebra, m11.form, Parity::Even, Matrix(4, 4), zero_vector(4), 0});
    const auto r = reduce(g.algebra, g.form, g.dual());
    EXPECT_EQ(r.w.dim(), 4u);
    EXPECT_EQ(r.quotient_type, "one-dim-null");
    EXPECT_EQ(describe(r.w), "M(1,1)");
    expect_round_trip(g.algebra, g.form, g.dual());
  }
  // R2: M_2 plus its parity-flipped dual.
  {
    const auto ext = semidirect_odd_dual(make_Mrs(2, 0).algebra);
    const auto r = reduce(ext.algebra, ext.form, ext.dual());
    EXPECT_EQ(r.quotient_type, "M(2,0)");
    EXPECT_EQ(r.w.dim(), 0u);
    for (const auto& row : r.context.lambda)
      for (const auto& l : row) EXPECT_TRUE(is_zero(l));
  }
  // R3: odd GDE of Q(1) by a one-dimensional odd null V.
  {
    ExtensionContext c;
    c.parity = Parity::Odd;
    const auto q1 = make_Qn(1);
    c.w = q1.algebra;
    c.b = q1.form;
    c.v = make_null(0, 1);
    const auto ext = odd_generalized_de(c);
    const auto r = reduce(ext.algebra, ext.form, ext.dual());
    EXPECT_EQ(describe(r.w), "Q(1)");
    EXPECT_EQ(r.top.dim_odd(), 1u);
    EXPECT_EQ(r.quotient_type, "one-dim-null");
  }
  // R4: odd e over M(1,1) with D = L_a.
  {
    const Vector a = add(e(m11.algebra, "e12"), e(m11.algebra, "e21"));
    const auto g = one_dim_gde({m11.algebra, m11.form, Parity::Odd, left_mult(m11.algebra, a),
                                multiply(m11.algebra, a, a), 0});
    expect_round_trip(g.algebra, g.form, g.dual());
  }
  // R5: even GDE with V = Q(1), W = 0.
  {
    ExtensionContext c;
    c.parity = Parity::Even;
    c.w = Superalgebra(0, 0);
    c.b = {Parity::Even, Matrix(0, 0)};
    c.v = make_Qn(1).algebra;
    const auto ext = even_generalized_de(c);
    const auto r = reduce(ext.algebra, ext.form, ext.dual());
    EXPECT_EQ(r.quotient_type, "Q(1)");
  }
  // R6: generated contexts of both parities.
  {
    gen::Rng rng(gen::kDefaultSeed);
    for (int t = 0; t < 6; ++t) {
      const auto ctx = gen::context(rng, t % 2 ? Parity::Odd : Parity::Even);
      const auto ext = assemble_extension(ctx);
      // A null V of dimension 2 pairs with a non-minimal dual.
      expect_round_trip(ext.algebra, ext.form, ext.dual(), !(ctx.v.product_is_null() && ctx.v.dim() > 1));
    }
  }
  // R7: elementary extension of null(0,2) by a square-zero map.
  {
    const auto w = gen::even_bases().back();
    const auto ext = elementary_even_de(w.algebra, w.form, unit_matrix(2, 0, 1));
    expect_round_trip(ext.algebra, ext.form, ext.dual());
  }
}

TEST(Reduce, ExplicitComplementIsHonored) {
  const auto ext = semidirect_odd_dual(make_Mrs(1, 0).algebra);
  const auto r = reduce(ext.algebra, ext.form, ext.dual(), ext.top());
  EXPECT_TRUE(r.v == ext.top());
  EXPECT_THROW(reduce(ext.algebra, ext.form, ext.dual(), ext.dual()), PreconditionError);
}

TEST(Reduce, RejectsBadIdeals) {
  const auto m11 = make_Mrs(1, 1);
  const auto g = one_dim_gde({m11.algebra, m11.form, Parity::Even, Matrix(4, 4), zero_vector(4), 0});
  // W is an ideal-free slice that is not isotropic.
  EXPECT_THROW(reduce(g.algebra, g.form, g.base()), PreconditionError);
  EXPECT_THROW(reduce(g.algebra, g.form, GradedSubspace::zero(g.algebra)), PreconditionError);
}

TEST(SemisimpleBimodule, Examples) {
  EXPECT_TRUE(semisimple_bimodule_check(make_Qn(2).algebra));
  EXPECT_TRUE(semisimple_bimodule_check(make_null(2, 0)));
  const auto m11 = make_Mrs(1, 1);
  const auto k0 = one_dim_gde({m11.algebra, m11.form, Parity::Even, Matrix(4, 4), zero_vector(4), 0});
  EXPECT_TRUE(semisimple_bimodule_check(k0.algebra));
  // k = 1 gives e.e = e*, a nilpotent that does not annihilate A0.
  const auto k1 = one_dim_gde({m11.algebra, m11.form, Parity::Even, Matrix(4, 4), zero_vector(4), 1});
  EXPECT_FALSE(semisimple_bimodule_check(k1.algebra));
}

TEST(OddPart, Examples) {
  const auto q1 = make_Qn(1);
  auto d = odd_part_decomposition(q1.algebra, &q1.form);
  EXPECT_TRUE(d.fixed.is_zero());
  EXPECT_EQ(d.left.dim(), 1u);
  EXPECT_TRUE(d.left == d.right);
  EXPECT_FALSE(d.direct);
  EXPECT_TRUE(d.precondition_checked && d.precondition_holds);

  const auto r = make_R();
  d = odd_part_decomposition(r.algebra, &r.form);
  EXPECT_EQ(d.fixed.dim(), 1u);
  EXPECT_TRUE(d.left.is_zero() && d.right.is_zero());
  EXPECT_TRUE(d.direct);

  const auto k = semidirect_odd_dual(make_Mrs(1, 0).algebra);
  d = odd_part_decomposition(k.algebra);
  EXPECT_FALSE(d.precondition_checked);
  EXPECT_TRUE(d.fixed.is_zero());
  EXPECT_TRUE(d.left == d.right);
  EXPECT_EQ(d.left.dim(), 1u);

  // Semidirect of the even null line: A0 acts trivially.
  const auto n = semidirect_odd_dual(make_null(2, 0));
  d = odd_part_decomposition(n.algebra);
  EXPECT_EQ(d.fixed.dim(), 2u);
  EXPECT_TRUE(d.direct);
}

TEST(OddSS, Tags) {
  const auto q2 = make_Qn(2);
  auto rep = odd_ss_classify(q2.algebra, q2.form);
  ASSERT_EQ(rep.blocks.size(), 1u);
  EXPECT_EQ(rep.blocks[0].tag, "Qn");
  EXPECT_TRUE(rep.all_invariants_hold());

  const auto sd = semidirect_m2();
  rep = odd_ss_classify(sd.algebra, sd.form);
  ASSERT_EQ(rep.blocks.size(), 1u);
  EXPECT_EQ(rep.blocks[0].tag, "simple-plus-dual");
  EXPECT_EQ(rep.blocks[0].dim_i, 4u);
  EXPECT_EQ(rep.blocks[0].dim_s, 4u);
  EXPECT_EQ(rep.blocks[0].dim_s_a1, 4u);
  EXPECT_TRUE(rep.all_invariants_hold());

  const auto r = make_R();
  rep = odd_ss_classify(r.algebra, r.form);
  ASSERT_EQ(rep.blocks.size(), 1u);
  EXPECT_EQ(rep.blocks[0].tag, "null-pair");

  // y.y = x in a one-dimensional generalized semidirect product.
  const auto gs = generalized_semidirect(1, {{Vector{Scalar(1)}}});
  rep = odd_ss_classify(gs.algebra, gs.form);
  ASSERT_EQ(rep.blocks.size(), 1u);
  EXPECT_EQ(rep.blocks[0].tag, "gamma-block");
  EXPECT_TRUE(rep.all_invariants_hold());
}

TEST(OddSS, MixedSumSplitsIntoTaggedBlocks) {
  const auto s = sum_of({make_Qn(1), make_R(), semidirect_m2()});
  const auto rep = odd_ss_classify(s.algebra, s.form);
  EXPECT_TRUE(rep.all_invariants_hold());
  std::multiset<std::string> tags;
  for (const auto& b : rep.blocks) tags.insert(b.tag);
  EXPECT_EQ(tags, (std::multiset<std::string>{"Qn", "simple-plus-dual", "null-pair"}));
  for (const auto& b : rep.blocks) {
    if (b.tag == "simple-plus-dual") {
      EXPECT_TRUE(b.dim_i == b.dim_s && b.dim_s == b.dim_s_a1);
    }
  }
}

TEST(OddSS, Preconditions) {
  const auto m = make_Mrs(1, 0);
  EXPECT_THROW(odd_ss_classify(m.algebra, m.form), PreconditionError);
}

TEST(EvenSS, SimpleList) {
  const auto m = make_Mrs(2, 1);
  const auto r = even_ss_reduce(m.algebra, m.form);
  EXPECT_EQ(r.branch, "simple-list");
  ASSERT_EQ(r.simples.size(), 1u);
  EXPECT_EQ(r.simples[0].kind, "M(2,1)");

  const auto s = sum_of({make_Mrs(1, 1), make_Mrs(2, 0)});
  EXPECT_EQ(even_ss_reduce(s.algebra, s.form).simples.size(), 2u);
}

TEST(EvenSS, ElementaryBranch) {
  const auto m11 = make_Mrs(1, 1);
  const auto ext = elementary_even_de(m11.algebra, m11.form, Matrix(4, 4));
  const auto r = even_ss_reduce(ext.algebra, ext.form);
  EXPECT_EQ(r.branch, "elementary");
  ASSERT_TRUE(r.reduction);
  EXPECT_EQ(describe(r.reduction->w), "M(1,1)");
  EXPECT_TRUE(r.d.is_zero());

  // A nonzero square-zero D survives the round trip up to a basis change:
  // rank is preserved.
  const auto w = gen::even_bases().back();
  const auto e2 = elementary_even_de(w.algebra, w.form, unit_matrix(2, 0, 1));
  const auto r2 = even_ss_reduce(e2.algebra, e2.form);
  EXPECT_EQ(r2.branch, "elementary");
  EXPECT_EQ(rank(r2.d), 1u);
}

TEST(EvenSS, OddGdeBranch) {
  const auto m11 = make_Mrs(1, 1);
  const auto g = one_dim_gde({m11.algebra, m11.form, Parity::Odd, Matrix(4, 4), zero_vector(4), 0});
  const auto r = even_ss_reduce(g.algebra, g.form);
  EXPECT_EQ(r.branch, "odd-gde");
  ASSERT_TRUE(r.reduction);
  EXPECT_EQ(describe(r.reduction->w), "M(1,1)");
  EXPECT_TRUE(r.d.is_zero());
  EXPECT_TRUE(is_zero(r.x0));
}
