#include <random>

#include "doctest.h"
#include "superstein/cyclic.hpp"
#include "superstein/errors.hpp"

using namespace superstein;

namespace {

// Random homogeneous element of the given parity with small integer coefficients.
SparseVec random_homogeneous(const SuperAlgebra& a, int parity, std::mt19937& rng) {
  std::uniform_int_distribution<int> value(-2, 2);
  SparseVec v;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.parity(i) == parity) v.add_term(i, Scalar(value(rng)));
  return v;
}

SparseVec tensor(const SuperAlgebra& a, const SparseVec& x, const SparseVec& y) {
  SparseVec out;
  for (const auto& [i, c] : x)
    for (const auto& [j, e] : y) out.add_term(i * a.dim() + j, c * e);
  return out;
}

}  // namespace

TEST_CASE("pairing module dimensions") {
  CHECK(PairingModule(builtin("field")).dim() == 0);
  CHECK(PairingModule(builtin("dual")).dim() == 0);

  // Oracle for grassmann1 (basis 1, θ): relations 1⊗1, 1⊗θ+θ⊗1, 2(1⊗θ)+θ⊗1 in A⊗A.
  // Coordinates: 1⊗1 = 0, 1⊗θ = 1, θ⊗1 = 2, θ⊗θ = 3.
  const std::vector<SparseVec> oracle{SparseVec::unit(0), SparseVec::unit(1) + SparseVec::unit(2),
                                      SparseVec::unit(1, Scalar(2)) + SparseVec::unit(2)};
  const auto span = SubspaceBasis::span(4, oracle);
  CHECK(4 - span.dim() == 1);
  CHECK_FALSE(span.contains(SparseVec::unit(3)));

  const PairingModule g1(builtin("grassmann(1)"));
  CHECK(g1.dim() == 1);
  CHECK(g1.relations() == span);
  CHECK(g1.pair(1, 1) == SparseVec::unit(0));
}

TEST_CASE("HC_1 via the pairing module") {
  CHECK(hc1(builtin("field")).dim == 0);
  const auto g1 = builtin("grassmann(1)");
  const PairingModule pm(g1);
  const auto h = hc1(pm);
  CHECK(h.dim == 1);
  CHECK(h.basis.contains(pm.pair(1, 1)));
  CHECK(hc1(builtin("mat(2)")).dim == 0);
}

TEST_CASE("property: <<1, a>> vanishes and relations hold for non-basis elements") {
  std::mt19937 rng(5);
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto a = builtin(name);
    const PairingModule pm(a);
    for (std::size_t i = 0; i < a.dim(); ++i) CHECK(pm.pair(a.unit(), i).empty());
    for (int trial = 0; trial < 10; ++trial) {
      const int pa = trial & 1, pb = (trial >> 1) & 1, pc = (trial >> 2) & 1;
      const auto x = random_homogeneous(a, pa, rng);
      const auto y = random_homogeneous(a, pb, rng);
      const auto z = random_homogeneous(a, pc, rng);
      auto first = tensor(a, x, y);
      first.axpy(sign_of(pa * pb), tensor(a, y, x));
      CHECK(pm.project(first).empty());
      auto second = tensor(a, x, a.multiply(y, z)).scaled(sign_of(pa * pc));
      second.axpy(sign_of(pb * pa), tensor(a, y, a.multiply(z, x)));
      second.axpy(sign_of(pc * pb), tensor(a, z, a.multiply(x, y)));
      CHECK(pm.project(second).empty());
      // d is well defined: d<<x,y>> = [x,y]
      auto bracket = a.multiply(x, y);
      bracket.axpy(-sign_of(pa * pb), a.multiply(y, x));
      CHECK(pm.commutator(pm.project(tensor(a, x, y))) == bracket);
    }
  }
}

TEST_CASE("chain levels") {
  const auto f = builtin("field");
  const auto c0 = chain_level(f, 0);
  CHECK(c0.dim() == 1);
  CHECK(chain_level(f, 1).boundary.is_zero());

  // For n = 1 the I_1 generators are exactly the first pairing relation family.
  for (const char* name : {"grassmann(1)", "mat(1|1)", "trunc(3)"}) {
    const auto a = builtin(name);
    std::vector<SparseVec> family;
    for (std::size_t x = 0; x < a.dim(); ++x)
      for (std::size_t y = 0; y < a.dim(); ++y) {
        SparseVec r = SparseVec::unit(x * a.dim() + y);
        r.add_term(y * a.dim() + x, sign_of(a.parity(x) * a.parity(y)));
        family.push_back(r);
      }
    CHECK(chain_level(a, 1).space.relations() == SubspaceBasis::span(a.dim() * a.dim(), family));
  }

  const auto m2 = builtin("mat(2)");
  const auto c1 = chain_level(m2, 1);
  const auto img = image(c1.boundary);
  CHECK(img.dim() == 3);
  CHECK(img == supercommutator_span(m2));
}

TEST_CASE("HC_n via the complex") {
  CHECK(hc_n(builtin("field"), 0) == 1);
  CHECK(hc_n(builtin("grassmann(1)"), 1) == 1);
  CHECK(hc_n(builtin("dual"), 1) == 0);
  for (const auto& name : corpus_names()) {
    const auto a = builtin(name);
    CAPTURE(name);
    CHECK(hc_n(a, 0) == a.dim() - supercommutator_span(a).dim());
  }
}

TEST_CASE("HC_1 cross-check between both routes") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto check = hc1_crosscheck(builtin(name));
    CHECK(check.pass());
  }
  const auto g1 = hc1_crosscheck(builtin("grassmann(1)"));
  CHECK(g1.pairing_route == 1);
  CHECK(g1.complex_route == 1);
  const auto t3 = hc1_crosscheck(builtin("trunc(3)"));
  CHECK(t3.pairing_route == 0);
  CHECK(t3.complex_route == 0);
}

TEST_CASE("property: boundaries are well defined and square to zero") {
  for (const char* name : {"field", "dual", "grassmann(1)", "trunc(3)", "mat(1|1)", "group_z(3)", "grassmann(2)"}) {
    CAPTURE(name);
    const auto a = builtin(name);
    const std::size_t top = a.dim() <= 2 ? 4 : 3;
    std::vector<ChainLevel> levels;
    for (std::size_t n = 0; n <= top; ++n) {
      levels.push_back(chain_level(a, n));
      CHECK(levels.back().well_defined);
    }
    for (std::size_t n = 1; n + 1 <= top; ++n) {
      CHECK(levels[n].boundary.multiply(levels[n + 1].boundary).is_zero());
    }
  }
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(chain_level(builtin("grassmann(4)"), 3, 20000), SizeGuardError);
  CHECK_NOTHROW(chain_level(builtin("grassmann(2)"), 3, 20000));
}
