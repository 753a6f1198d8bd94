#include "doctest.h"
#include "superstein/errors.hpp"
#include "superstein/steinberg.hpp"

using namespace superstein;

namespace {

// Bracket on gl ⊕ <<A,A>>: ([X,Y], c(X,Y)) with
// c(E_ij(a), E_kl(b)) = δ_jk δ_il (−1)^{|i|(|i|+|a|+|b|)} <<a,b>>.
// x ↦ (φx, νx) is injective on st, so this pins down every bracket of the model.
SparseVec oracle_cocycle(const StModel& st, const SparseVec& x, const SparseVec& y) {
  const SuperAlgebra& a = st.algebra();
  const std::size_t d = a.dim(), n = st.size();
  SparseVec out;
  for (const auto& [p, s] : x)
    for (const auto& [q, t] : y) {
      const std::size_t i = p / d / n, j = p / d % n, k = q / d / n, l = q / d % n;
      if (j != k || l != i) continue;
      const std::size_t u = p % d, v = q % d;
      const int pi = st.shape().parity(i);
      out.axpy(s * t * sign_of(pi * (pi + a.parity(u) + a.parity(v))), st.pairing().pair(u, v));
    }
  return out;
}

SparseVec pair_vec(const StModel& st, const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  for (const auto& [x, s] : a)
    for (const auto& [y, t] : b) out.axpy(s * t, st.pairing().pair(x, y));
  return out;
}

}  // namespace

TEST_CASE("model dimensions") {
  CHECK(StModel(builtin("field"), {2, 2}).dim() == 15);
  CHECK(StModel(builtin("grassmann(1)"), {2, 1}).dim() == 17);
  CHECK(StModel(builtin("field"), {3, 2}).dim() == 24);
  CHECK(StModel(builtin("grassmann(1)"), {2, 2}).dim() == 31);
  const StModel g(builtin("grassmann(1)"), {2, 1});
  CHECK(g.f_dim() == 12);
  CHECK(g.h_dim() == 1);
  CHECK(g.d_dim() == 4);
  CHECK_THROWS_AS(StModel(builtin("field"), {1, 1}), std::invalid_argument);
}

TEST_CASE("shape 0|n is swapped") {
  const StModel st(builtin("field"), {0, 3});
  CHECK(st.swapped());
  CHECK(st.shape() == MatrixShape{3, 0});
}

TEST_CASE("normalize_H examples") {
  const auto f = builtin("field");
  const StModel s21(f, {2, 1});
  CHECK(s21.normalize_H(1, 0, 0, 0) == s21.D(1, SparseVec::unit(0)).scaled(Scalar(-1)));
  const StModel s22(f, {2, 2});
  SparseVec want = s22.D(2, SparseVec::unit(0));
  want -= s22.D(1, SparseVec::unit(0));
  CHECK(s22.normalize_H(1, 2, 0, 0) == want);

  // φ-oracle: H_ij(1,1) maps to [E_ij(1), E_ji(1)].
  const GlLayout g(f, {2, 2});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      SparseVec image;
      for (const auto& [k, c] : s22.normalize_H(i, j, 0, 0)) image.axpy(c, phi(s22, k));
      CHECK(image == gl_unit_bracket(g, g.index(i, j, 0), g.index(j, i, 0)));
    }

  // First-row case: H_1j(a,b) = h(a,b) + (−1)^{|a||b|} D_j(ba).
  const auto g1 = builtin("grassmann(1)");
  const StModel t(g1, {2, 1});
  SparseVec h11 = t.h(1, 1);
  h11.axpy(Scalar(-1), t.D(1, g1.product(1, 1)));
  CHECK(t.normalize_H(0, 1, 1, 1) == h11);
}

TEST_CASE("bracket examples") {
  const auto g1 = builtin("grassmann(1)");
  const StModel st(g1, {2, 1});
  const SparseVec th = SparseVec::unit(1);
  CHECK(st.bracket(st.F(0, 1, th), st.F(1, 2, th)) == st.F(0, 2, g1.product(1, 1)));
  CHECK(st.bracket(st.F(0, 1, SparseVec::unit(0)), st.F(1, 2, th)) == st.F(0, 2, th));
  for (std::size_t c = 0; c < g1.dim(); ++c)
    CHECK(st.bracket(st.D(1, SparseVec::unit(0)), st.F(0, 2, SparseVec::unit(c))) == st.F(0, 2, SparseVec::unit(c)));

  const StModel s22(builtin("field"), {2, 2});
  CHECK(s22.bracket(s22.F(0, 1, SparseVec::unit(0)), s22.F(2, 3, SparseVec::unit(0))).empty());
}

TEST_CASE("bracket agrees with the gl ⊕ <<A,A>> oracle") {
  for (const char* name : {"field", "grassmann(1)", "dual", "mat(1|1)", "grassmann(2)"}) {
    for (const MatrixShape shape : {MatrixShape{2, 1}, MatrixShape{1, 2}, MatrixShape{3, 1}}) {
      const auto a = builtin(name);
      const std::size_t dim_estimate = shape.size() * shape.size() * a.dim();
      if (dim_estimate > 40) continue;
      CAPTURE(name);
      CAPTURE(shape.to_string());
      const StModel st(a, shape);
      const GlLayout g(a, st.shape());
      // injectivity of (φ, ν)
      std::vector<SparseVec> columns;
      for (std::size_t x = 0; x < st.dim(); ++x) {
        SparseVec v = phi(st, x);
        for (const auto& [q, c] : nu(st, SparseVec::unit(x))) v.add_term(g.dim() + q, c);
        columns.push_back(v);
      }
      REQUIRE(rank(Matrix::from_columns(g.dim() + st.h_dim(), columns)) == st.dim());

      bool ok = true;
      for (std::size_t x = 0; x < st.dim() && ok; ++x)
        for (std::size_t y = 0; y < st.dim() && ok; ++y) {
          const SparseVec z = st.bracket(x, y);
          SparseVec phz;
          for (const auto& [k, c] : z) phz.axpy(c, phi(st, k));
          const SparseVec px = phi(st, x), py = phi(st, y);
          if (!(phz == gl_bracket(g, px, py))) ok = false;
          if (!(nu(st, z) == oracle_cocycle(st, px, py))) ok = false;
          if (!ok) MESSAGE("mismatch at " << st.basis_name(x) << ", " << st.basis_name(y));
        }
      CHECK(ok);
    }
  }
}

TEST_CASE("h-brackets match the pairing of commutators") {
  // [h(a,b), h(c,d)] has ν-part <<[a,b],[c,d]>>
  const auto a = builtin("mat(1|1)");
  const StModel st(a, {2, 1});
  for (std::size_t p = 0; p < st.h_dim(); ++p)
    for (std::size_t q = 0; q < st.h_dim(); ++q) {
      const SparseVec z = st.bracket(st.h_index(p), st.h_index(q));
      const SparseVec cp = st.pairing().commutator(SparseVec::unit(p));
      const SparseVec cq = st.pairing().commutator(SparseVec::unit(q));
      CHECK(nu(st, z) == pair_vec(st, cp, cq));
    }
}

TEST_CASE("phi, kernel and diagram") {
  const auto g1 = builtin("grassmann(1)");
  const StModel st(g1, {2, 1});
  const GlLayout g(g1, st.shape());
  CHECK(phi(st, st.f_index(0, 1, 1)) == SparseVec::unit(g.index(0, 1, 1)));
  SparseVec want = SparseVec::unit(g.index(0, 0, 0));
  want.add_term(g.index(1, 1, 0), Scalar(-1));
  CHECK(phi(st, st.d_index(1, 0)) == want);
  CHECK(phi(st, st.h_index(0)).empty());
  CHECK(nu(st, st.F(0, 1, SparseVec::unit(1))).empty());
  CHECK(nu(st, st.h(1, 1)) == SparseVec::unit(0));
  CHECK(diagram_check(st).pass);

  const auto k = kernel_phi(st);
  CHECK(k.kernel.dim() == 1);
  CHECK(k.hc1_match);
  CHECK(k.central);
  CHECK(k.kernel.contains(st.h(1, 1)));

  CHECK(kernel_phi(StModel(builtin("field"), {2, 2})).kernel.dim() == 0);
  const auto k22 = kernel_phi(StModel(g1, {2, 2}));
  CHECK(k22.kernel.dim() == 1);
  CHECK(k22.central);
  CHECK(k22.hc1_match);
}

TEST_CASE("verification suites") {
  for (const char* name : {"field", "grassmann(1)", "trunc(3)", "mat(1|1)"}) {
    CAPTURE(name);
    const StModel st(builtin(name), {2, 1});
    const auto v = verify_st(st);
    CHECK(v.relations.pass);
    CHECK(v.axioms.pass);
    CHECK(v.expansion.pass);
    CHECK(v.homomorphism.pass);
    CHECK(v.nu_section.pass);
  }
}
