#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "superstein/cocycle22.hpp"
#include "superstein/errors.hpp"
#include "superstein/homology.hpp"
#include "superstein/steinberg.hpp"

using namespace superstein;

namespace {

// sl_2 over Q: e, h, f with [h,e] = 2e, [h,f] = −2f, [e,f] = h.
FinLieSuper sl2() {
  std::vector<SparseVec> t(9);
  auto set = [&](std::size_t i, std::size_t j, SparseVec v) {
    t[j * 3 + i] = v.scaled(Scalar(-1));
    t[i * 3 + j] = std::move(v);
  };
  set(1, 0, SparseVec::unit(0, Scalar(2)));
  set(1, 2, SparseVec::unit(2, Scalar(-2)));
  set(0, 2, SparseVec::unit(1));
  return FinLieSuper("sl2", Field::rationals(), {"e", "h", "f"}, {0, 0, 0}, t);
}

// Heisenberg algebra [x,y] = z: H2 = 2 (classical count: Λ² dim 3, rank d2 = 1, d3 = 0).
FinLieSuper heisenberg() {
  std::vector<SparseVec> t(9);
  t[0 * 3 + 1] = SparseVec::unit(2);
  t[1 * 3 + 0] = SparseVec::unit(2, Scalar(-1));
  return FinLieSuper("heis", Field::rationals(), {"x", "y", "z"}, {0, 0, 0}, t);
}

}  // namespace

TEST_CASE("koszul normalizer") {
  const std::vector<int> parity{0, 0, 1, 1};
  auto n = koszul_normalize(parity, {1, 0});
  REQUIRE(n);
  CHECK(n->first == std::vector<std::size_t>{0, 1});
  CHECK(n->second == Scalar(-1));
  n = koszul_normalize(parity, {2, 0});
  CHECK(n->second == Scalar(-1));
  n = koszul_normalize(parity, {3, 2});
  CHECK(n->second == Scalar(1));
  CHECK_FALSE(koszul_normalize(parity, {0, 0}));
  CHECK(koszul_normalize(parity, {2, 2}));
  CHECK_FALSE(koszul_normalize(parity, {1, 2, 1}));

  // every permutation agrees up to its Koszul sign
  std::vector<std::size_t> t{3, 0, 2, 1};
  const auto base = koszul_normalize(parity, t);
  std::sort(t.begin(), t.end());
  do {
    const auto p = koszul_normalize(parity, t);
    REQUIRE(p);
    CHECK(p->first == base->first);
    // applying the inverse normalization returns to the same canonical sign
    const auto again = koszul_normalize(parity, p->first);
    CHECK(again->second == Scalar(1));
  } while (std::next_permutation(t.begin(), t.end()));
}

TEST_CASE("wedge basis sizes") {
  const std::vector<int> parity{0, 0, 0, 1, 1};
  for (std::size_t p = 1; p <= 3; ++p) CHECK(SuperWedgeBasis(parity, p).size() == wedge_count(parity, p));
  // C(3,2) + 3·2 + C(3,2)
  CHECK(wedge_count(parity, 2) == 3 + 6 + 3);
}

TEST_CASE("small examples") {
  const auto ab = abelian({0, 1, 1});
  CHECK(ce_boundary(ab, 2).is_zero());
  CHECK(ce_boundary(ab, 3).is_zero());
  const auto r = homology(sl2());
  CHECK(r.h1 == 0);
  CHECK(r.h2 == 0);
  CHECK(r.boundary_squares_to_zero);
  CHECK(homology(heisenberg()).h2 == 2);
  CHECK(homology(heisenberg()).h1 == 2);
}

TEST_CASE("d2 d3 = 0 on unblocked boundaries") {
  for (const auto& l : {StModel(builtin("grassmann(1)"), {2, 1}).lie(), concretize_sl(builtin("mat(1|1)"), {2, 1})}) {
    const Matrix d2 = ce_boundary(l, 2), d3 = ce_boundary(l, 3);
    CHECK(d2.multiply(d3).is_zero());
  }
}

TEST_CASE("Steinberg homology") {
  const auto st22 = StModel(builtin("field"), {2, 2}).lie();
  const auto r = homology(st22);
  CHECK(rank(ce_boundary(st22, 2)) == 15);
  CHECK(r.h1 == 0);
  CHECK(r.h2 == 2);
  CHECK(homology(StModel(builtin("field"), {2, 1}).lie()).h2 == 0);
  CHECK(homology(StModel(builtin("grassmann(1)"), {2, 1}).lie()).h2 == 0);
  CHECK(homology(build_st_sharp(builtin("field"))).h2 == 0);
}

TEST_CASE("blocked and unblocked homology agree") {
  const auto l = StModel(builtin("grassmann(1)"), {2, 1}).lie();
  const auto blocked = homology(l);
  const auto plain = homology(l.without_weights());
  CHECK(blocked.h2 == plain.h2);
  CHECK(blocked.h1 == plain.h1);
  CHECK(blocked.blocks > plain.blocks);
  const std::size_t r2 = rank(ce_boundary(l, 2)), r3 = rank(ce_boundary(l, 3));
  CHECK(plain.h2 == wedge_count(l.parities(), 2) - r2 - r3);
}

TEST_CASE("property: H2 is invariant under basis permutation") {
  std::mt19937 rng(11);
  const auto l = StModel(builtin("field"), {2, 2}).lie();
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::size_t> perm(l.dim());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto p = l.permuted(perm);
    CHECK(homology(p).h2 == 2);
    CHECK(homology(p.without_weights()).h2 == 2);
  }
}

TEST_CASE("size guard") {
  const auto l = StModel(builtin("field"), {2, 2}).lie();
  CHECK_THROWS_AS(homology(l, 100), SizeGuardError);
  const auto v = uce_verdict(LieSource::st, builtin("field"), {2, 2}, 100);
  CHECK_FALSE(v.failed());
  CHECK(v.rows.back().verdict == Verdict::skipped);
}

TEST_CASE("uce verdict rows") {
  const auto v = uce_verdict(LieSource::st, builtin("grassmann(1)"), {2, 1});
  CHECK_FALSE(v.failed());
  CHECK(v.rows.back().expected == 0u);
  CHECK(v.rows.back().verdict == Verdict::pass);
  CHECK_FALSE(v.assumption.empty());

  const auto w = uce_verdict(LieSource::st, builtin("field"), {2, 2});
  CHECK(w.rows.back().expected == 2u);
  CHECK(w.rows.back().verdict == Verdict::pass);
}

TEST_CASE("st_2|2 over mat(2) has W = 0 and H2 = 0") {
  const auto a = builtin("mat(2)");
  CHECK(build_W(a).dim() == 0);
  const auto v = uce_verdict(LieSource::st, a, {2, 2});
  REQUIRE(v.report);
  CHECK(v.report->h2 == 0);
  CHECK_FALSE(v.failed());
}
