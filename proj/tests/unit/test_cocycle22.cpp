#include "doctest.h"
#include "superstein/cocycle22.hpp"
#include "superstein/errors.hpp"
#include "superstein/matrix_superlie.hpp"

using namespace superstein;

TEST_CASE("W dimensions") {
  CHECK(build_W(builtin("field")).dim() == 2);
  CHECK(build_W(builtin("grassmann(1)")).dim() == 4);
  CHECK(build_W(builtin("mat(2)")).dim() == 0);
}

TEST_CASE("identification classes") {
  const auto& cls = CocycleTarget::classes();
  for (std::size_t b = 0; b < 2; ++b)
    for (const auto& t : cls[b]) {
      CHECK(CocycleTarget::block_of(t) == b);
      // ε_ijkl = ε_ilkj = ε_kjil = ε_klij stay in the same class
      const auto [i, j, k, l] = t;
      CHECK(CocycleTarget::block_of({i, l, k, j}) == b);
      CHECK(CocycleTarget::block_of({k, j, i, l}) == b);
      CHECK(CocycleTarget::block_of({k, l, i, j}) == b);
    }
  CHECK_FALSE(CocycleTarget::block_of({1, 2, 3, 4}));
}

TEST_CASE("psi values") {
  const auto g1 = builtin("grassmann(1)");
  const StModel st(g1, {2, 2});
  const auto w = build_W(g1);
  // ψ(F_31(a), F_42(b)) = (−1)^{1+|b|} ε_3142(ab)
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const SparseVec ab = w.a0.project(g1.product(a, b));
      CHECK(psi(st, w, st.f_index(2, 0, a), st.f_index(3, 1, b)) == ab.scaled(sign_of(1 + g1.parity(b))));
    }
  const StModel sf(builtin("field"), {2, 2});
  const auto wf = build_W(builtin("field"));
  // ψ(F_13(1), F_24(1)) = −ε_1324(1), which sits in the second block
  CHECK(psi(sf, wf, sf.f_index(0, 2, 0), sf.f_index(1, 3, 0)) == SparseVec::unit(1, Scalar(-1)));
  CHECK(psi(sf, wf, sf.f_index(0, 1, 0), sf.f_index(2, 3, 0)).empty());
  CHECK(psi(sf, wf, sf.d_index(1, 0), sf.f_index(0, 2, 0)).empty());
}

TEST_CASE("cocycle verification") {
  CHECK(verify_cocycle(builtin("field")).pass());
  CHECK(verify_cocycle(builtin("grassmann(1)")).pass());
  const auto mutated = verify_cocycle(builtin("grassmann(1)"), true);
  CHECK_FALSE(mutated.pass());
  CHECK_FALSE(mutated.witness.empty());
  CHECK_THROWS_AS(verify_cocycle(StModel(builtin("field"), {2, 1}), build_W(builtin("field"))),
                  std::invalid_argument);
}

TEST_CASE("st sharp") {
  const auto f = build_st_sharp(builtin("field"));
  CHECK(f.dim() == 17);
  const auto c = perfectness_and_center(f);
  // W is central
  for (std::size_t k = 15; k < 17; ++k) CHECK(c.center.contains(SparseVec::unit(k)));
  CHECK(c.perfect);

  const auto g = build_st_sharp(builtin("grassmann(1)"));
  CHECK(g.dim() == 35);
  CHECK_FALSE(check_lie_axioms(g));

  // projection onto st is a homomorphism with kernel W
  const StModel st(builtin("field"), {2, 2});
  for (std::size_t x = 0; x < 15; ++x)
    for (std::size_t y = 0; y < 15; ++y) {
      SparseVec v;
      for (const auto& [k, coeff] : f.bracket(x, y))
        if (k < 15) v.add_term(k, coeff);
      CHECK(v == st.bracket(x, y));
    }
}
