#include <gtest/gtest.h>

#include "superalg/catalog.hpp"
#include "superalg/forms.hpp"
#include "test_support.hpp"

using namespace superalg;
using namespace superalg::testing;

namespace {

// Supertrace of a product of model matrices: the M(r,s) form written out.
Scalar supertrace(const Matrix& m, std::size_t r) {
  Scalar s = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += i < r ? m(i, i) : Scalar(-m(i, i));
  return s;
}

}  // namespace

TEST(Catalog, MrsExamples) {
  auto k = make_Mrs(1, 0);
  EXPECT_EQ(k.algebra.dim_even(), 1u);
  EXPECT_EQ(k.algebra.dim_odd(), 0u);
  EXPECT_EQ(k.form.gram(0, 0), 1);
  EXPECT_EQ(k.algebra.coeff(0, 0, 0), 1);

  auto m = make_Mrs(1, 1);
  const auto& a = m.algebra;
  EXPECT_EQ(a.dim_even(), 2u);
  EXPECT_EQ(a.dim_odd(), 2u);
  EXPECT_EQ(m.form.gram(idx(a, "e11"), idx(a, "e11")), 1);
  EXPECT_EQ(m.form.gram(idx(a, "e22"), idx(a, "e22")), -1);
  EXPECT_EQ(m.form.gram(idx(a, "e12"), idx(a, "e21")), 1);
  EXPECT_EQ(m.form.gram(idx(a, "e21"), idx(a, "e12")), -1);
  EXPECT_TRUE(check_form(a, m.form).empty());

  auto m21 = make_Mrs(2, 1);
  EXPECT_EQ(m21.algebra.dim_even(), 5u);
  EXPECT_EQ(m21.algebra.dim_odd(), 4u);
  EXPECT_TRUE(check_form(m21.algebra, m21.form).empty());
  EXPECT_THROW(make_Mrs(0, 2), PreconditionError);
}

TEST(Catalog, MrsFormIsSupertrace) {
  for (auto [r, s] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    auto m = make_Mrs(r, s);
    auto model = mrs_matrices(m.algebra, r + s);
    for (std::size_t i = 0; i < model.size(); ++i)
      for (std::size_t j = 0; j < model.size(); ++j) EXPECT_EQ(m.form.gram(i, j), supertrace(model[i] * model[j], r));
  }
}

TEST(Catalog, QnExamples) {
  auto q = make_Qn(1);
  EXPECT_EQ(q.algebra.dim_even(), 1u);
  EXPECT_EQ(q.algebra.dim_odd(), 1u);
  EXPECT_EQ(q.algebra.coeff(0, 0, 0), 1);
  EXPECT_EQ(q.algebra.coeff(1, 1, 0), 1);
  EXPECT_EQ(q.form.gram(0, 1), 1);
  auto q2 = make_Qn(2);
  EXPECT_EQ(q2.algebra.dim_even(), 4u);
  EXPECT_TRUE(check_form(q2.algebra, q2.form).empty());
  EXPECT_THROW(make_Qn(0), PreconditionError);
}

TEST(Catalog, NullExamples) {
  auto n = make_null(1, 0);
  EXPECT_EQ(n.dim(), 1u);
  EXPECT_TRUE(n.product_is_null());
  auto r = make_null(1, 1);
  auto fs = invariant_form_space(r, Parity::Odd);
  ASSERT_EQ(fs.dim(), 1u);
  EXPECT_EQ(fs.basis[0].gram(0, 1), fs.basis[0].gram(1, 0));
  EXPECT_NE(fs.basis[0].gram(0, 1), 0);
  for (std::size_t n0 = 0; n0 <= 2; ++n0)
    for (std::size_t n1 = 0; n1 <= 2; ++n1) EXPECT_TRUE(annihilator(make_null(n0, n1)).is_whole());
}

TEST(CheckForm, Examples) {
  auto m = make_Mrs(1, 1);
  EXPECT_TRUE(check_form(m.algebra, m.form).empty());
  auto q = make_Qn(1);
  EXPECT_TRUE(check_form(q.algebra, q.form).empty());
  HomogeneousForm zero{Parity::Even, Matrix(4, 4)};
  auto rep = check_form(m.algebra, zero);
  ASSERT_EQ(rep.size(), 1u);
  EXPECT_NE(rep[0].find("non-degeneracy"), std::string::npos);
  // Odd parity declared on an even gram fails homogeneity.
  HomogeneousForm wrong{Parity::Odd, m.form.gram};
  EXPECT_FALSE(check_form(m.algebra, wrong).empty());
}

TEST(CheckForm, CatalogUpToFour) {
  for (std::size_t r = 1; r <= 4; ++r)
    for (std::size_t s = 0; r + s <= 4; ++s) {
      auto m = make_Mrs(r, s);
      EXPECT_TRUE(check_form(m.algebra, m.form).empty());
    }
  for (std::size_t n = 1; n <= 4; ++n) {
    auto q = make_Qn(n);
    EXPECT_TRUE(check_form(q.algebra, q.form).empty());
  }
}

TEST(FormSpace, Examples) {
  auto q1 = make_Qn(1).algebra;
  EXPECT_EQ(invariant_form_space(q1, Parity::Even).dim(), 0u);
  auto odd = invariant_form_space(q1, Parity::Odd);
  ASSERT_EQ(odd.dim(), 1u);
  EXPECT_EQ(odd.basis[0].gram, make_Qn(1).form.gram);
  EXPECT_EQ(invariant_form_space(make_null(1, 0), Parity::Even).dim(), 1u);
}

TEST(FormSpace, EveryMemberIsInvariant) {
  std::vector<Superalgebra> algs{make_Mrs(2, 1).algebra, make_Qn(2).algebra, make_null(1, 2),
                                 direct_sum({make_Qn(1).algebra, make_null(1, 1)}), semidirect_k()};
  for (const auto& a : algs) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      auto fs = invariant_form_space(a, p);
      for (const auto& f : fs.basis) EXPECT_TRUE(check_form(a, f, false).empty());
    }
  }
}

TEST(FormSpace, CatalogDimensions) {
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t s = 0; r + s <= 3; ++s) {
      auto a = make_Mrs(r, s).algebra;
      EXPECT_EQ(invariant_form_space(a, Parity::Even).dim(), 1u);
      EXPECT_EQ(invariant_form_space(a, Parity::Odd).dim(), 0u);
    }
  for (std::size_t n = 1; n <= 3; ++n) {
    auto a = make_Qn(n).algebra;
    EXPECT_EQ(invariant_form_space(a, Parity::Even).dim(), 0u);
    EXPECT_EQ(invariant_form_space(a, Parity::Odd).dim(), 1u);
  }
}

TEST(ExistsNondegenerate, Examples) {
  auto q1 = make_Qn(1);
  auto w = exists_nondegenerate(invariant_form_space(q1.algebra, Parity::Odd));
  ASSERT_TRUE(w);
  EXPECT_TRUE(check_form(q1.algebra, *w).empty());
  // A multiple of the canonical form.
  const Scalar c = w->gram(0, 1);
  EXPECT_EQ(w->gram, c * q1.form.gram);
  EXPECT_FALSE(exists_nondegenerate(invariant_form_space(q1.algebra, Parity::Even)));
  EXPECT_FALSE(exists_nondegenerate(invariant_form_space(make_Mrs(1, 1).algebra, Parity::Odd)));
}

TEST(ExistsNondegenerate, NeedsGridBeyondBasis) {
  // null(2,0): every symmetric 2x2 form is invariant; basis forms are the
  // matrix units diag(1,0), offdiag, diag(0,1) and the first two are singular.
  auto fs = invariant_form_space(make_null(2, 0), Parity::Even);
  EXPECT_EQ(fs.dim(), 3u);
  auto w = exists_nondegenerate(fs);
  ASSERT_TRUE(w);
  EXPECT_NE(det(w->gram), 0);
}

TEST(Incompatibility, Examples) {
  auto m = incompatibility_check(make_Mrs(1, 1).algebra);
  EXPECT_TRUE(m.has_even);
  EXPECT_FALSE(m.has_odd);
  auto q = incompatibility_check(make_Qn(1).algebra);
  EXPECT_FALSE(q.has_even);
  EXPECT_TRUE(q.has_odd);
  // An even form restricts to an antisymmetric form on the odd part, so a
  // one-dimensional odd part rules out even structures.
  auto r = incompatibility_check(make_null(1, 1));
  EXPECT_FALSE(r.has_even);
  EXPECT_TRUE(r.has_odd && r.product_null);
  auto n = incompatibility_check(make_null(2, 2));
  EXPECT_TRUE(n.has_even && n.has_odd && n.product_null);
  EXPECT_FALSE(n.violates());
}

TEST(Orthogonal, Examples) {
  auto m = make_Mrs(1, 1);
  EXPECT_TRUE(orthogonal(m.algebra, m.form, GradedSubspace::whole(m.algebra)).is_zero());
  EXPECT_TRUE(orthogonal(m.algebra, m.form, GradedSubspace::zero(m.algebra)).is_whole());
  auto sd = semidirect_k();
  GradedSubspace dual(SubspaceBasis::zero(1), SubspaceBasis::whole(1));
  EXPECT_EQ(orthogonal(sd, semidirect_k_form(), dual), dual);
  HomogeneousForm zero{Parity::Even, Matrix(4, 4)};
  EXPECT_THROW(orthogonal(m.algebra, zero, GradedSubspace::whole(m.algebra)), DegenerateForm);
}

TEST(Orthogonal, DimensionAndInvolution) {
  auto a = direct_sum({make_Mrs(1, 1).algebra, make_Mrs(1, 0).algebra});
  auto b = direct_sum_form({make_Mrs(1, 1).algebra, make_Mrs(1, 0).algebra}, {make_Mrs(1, 1).form, make_Mrs(1, 0).form});
  ASSERT_TRUE(check_form(a, b).empty());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i; j < a.dim(); ++j) {
      auto u = GradedSubspace::span(a, {unit_vector(a.dim(), i), unit_vector(a.dim(), j)});
      auto perp = orthogonal(a, b, u);
      EXPECT_EQ(u.dim() + perp.dim(), a.dim());
      EXPECT_EQ(orthogonal(a, b, perp), u);
      auto id = ideal_generated(a, u);
      auto jperp = orthogonal(a, b, id);
      EXPECT_EQ(id.dim() + jperp.dim(), a.dim());
      EXPECT_TRUE(is_ideal(a, jperp));
    }
  }
}

TEST(Restrict, Examples) {
  auto m = make_Mrs(1, 1);
  EXPECT_EQ(restrict(m.form, GradedSubspace::whole(m.algebra)), m.form);
  GradedSubspace dual(SubspaceBasis::zero(1), SubspaceBasis::whole(1));
  EXPECT_TRUE(restrict(semidirect_k_form(), dual).gram.is_zero());
  GradedSubspace even(SubspaceBasis::whole(2), SubspaceBasis::zero(2));
  Matrix expect(2, 2);
  expect(0, 0) = 1;
  expect(1, 1) = -1;
  EXPECT_EQ(restrict(m.form, even).gram, expect);
}

TEST(QuotientForm, TrivialIdeal) {
  auto m = make_Mrs(1, 1);
  auto q = quotient_form(m.algebra, m.form, GradedSubspace::zero(m.algebra), GradedSubspace::whole(m.algebra));
  EXPECT_EQ(q.algebra, m.algebra);
  EXPECT_EQ(q.form, m.form);
}

TEST(BimoduleIso, Examples) {
  auto q = make_Qn(1);
  auto iso = form_to_bimodule_iso(q.algebra, q.form);
  EXPECT_EQ(iso.parity, Parity::Odd);
  Matrix one(1, 1);
  one(0, 0) = 1;
  EXPECT_EQ(iso.phi, one);
  auto k = make_Mrs(1, 0);
  auto ik = form_to_bimodule_iso(k.algebra, k.form);
  EXPECT_EQ(ik.phi0, Matrix::identity(1));
  auto scaled_iso = form_to_bimodule_iso(q.algebra, scaled(Scalar(3), q.form));
  EXPECT_EQ(scaled_iso.phi, Scalar(3) * one);
  HomogeneousForm zero{Parity::Odd, Matrix(2, 2)};
  EXPECT_THROW(form_to_bimodule_iso(q.algebra, zero), DegenerateForm);
}

TEST(BimoduleIso, PairingIdentities) {
  // phi_i(x)(y) = (-1)^i phi_i(y)(x) in the even case, and
  // phi(x)(y.z) = phi(z)(x.y) for odd x, y, z in the odd case.
  for (auto [r, s] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}}) {
    auto m = make_Mrs(r, s);
    auto iso = form_to_bimodule_iso(m.algebra, m.form);
    EXPECT_EQ(iso.phi0, iso.phi0.transpose());
    EXPECT_EQ(iso.phi1, Scalar(-1) * iso.phi1.transpose());
    const std::size_t n0 = m.algebra.dim_even();
    // phi1(x.y)(z) = phi0(x)(y.z) for even x and odd y, z.
    for (std::size_t x = 0; x < n0; ++x)
      for (std::size_t y = n0; y < m.algebra.dim(); ++y)
        for (std::size_t z = n0; z < m.algebra.dim(); ++z) {
          const Vector xy = m.algebra.product_vector(x, y), yz = m.algebra.product_vector(y, z);
          Scalar lhs = 0, rhs = 0;
          for (std::size_t t = n0; t < m.algebra.dim(); ++t) lhs += xy[t] * iso.phi1(z - n0, t - n0);
          for (std::size_t t = 0; t < n0; ++t) rhs += yz[t] * iso.phi0(t, x);
          EXPECT_EQ(lhs, rhs);
        }
  }
  for (std::size_t n = 1; n <= 2; ++n) {
    auto q = make_Qn(n);
    auto iso = form_to_bimodule_iso(q.algebra, q.form);
    const std::size_t n0 = q.algebra.dim_even();
    for (std::size_t x = n0; x < q.algebra.dim(); ++x)
      for (std::size_t y = n0; y < q.algebra.dim(); ++y)
        for (std::size_t z = n0; z < q.algebra.dim(); ++z) {
          const Vector yz = q.algebra.product_vector(y, z), xy = q.algebra.product_vector(x, y);
          Scalar lhs = 0, rhs = 0;
          for (std::size_t t = 0; t < n0; ++t) {
            lhs += iso.phi(t, x - n0) * yz[t];
            rhs += iso.phi(t, z - n0) * xy[t];
          }
          EXPECT_EQ(lhs, rhs);
        }
  }
}
