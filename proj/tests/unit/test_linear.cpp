#include <random>

#include "doctest.h"
#include "superstein/linear.hpp"

using namespace superstein;

namespace {

SparseVec vec(std::initializer_list<long> values) {
  std::vector<Scalar> dense(values.begin(), values.end());
  return SparseVec::from_dense(dense);
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int density_percent) {
  std::uniform_int_distribution<int> coin(0, 99), value(-3, 3);
  std::vector<SparseVec> out(rows);
  for (auto& r : out)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) < density_percent) r.add_term(c, Scalar(value(rng)));
  return Matrix::from_rows(cols, out);
}

SubspaceBasis random_subspace(std::mt19937& rng, std::size_t ambient, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> count(0, max_dim);
  const auto m = random_matrix(rng, count(rng), ambient, 40);
  return SubspaceBasis::span(ambient, m.row_list());
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  const Scalar half = Scalar::rational(1, 2);
  CHECK(half + half == Scalar(1));
  CHECK((Scalar(1) / Scalar(3)).to_string() == "1/3");
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  CHECK(parse_scalar("-6/4") == Scalar::rational(-3, 2));
  CHECK_THROWS(parse_scalar("1/x"));
}

TEST_CASE("residues mod p mix with integer literals") {
  const Field f7 = Field::prime(7);
  const Scalar three = f7.from(Scalar(3));
  CHECK((three * Scalar(5)).residue_value() == 1);
  CHECK((three.inverse() * three).is_one());
  CHECK(f7.from(Scalar::rational(1, 2)).residue_value() == 4);
  CHECK_THROWS(Field::prime(2));
  CHECK_THROWS(Field::prime(9));
  CHECK_THROWS(three + Field::prime(5).one());
  CHECK(Field::parse("Fp:11").modulus() == 11);
  CHECK_THROWS(Field::parse("Fp:2"));
}

TEST_CASE("reduce: identity, zero, and a rank-one example") {
  auto id = Matrix::from_rows(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  auto r = reduce(id);
  CHECK(r.rank == 3);
  CHECK(r.kernel.dim() == 0);

  auto zero = Matrix::from_rows(4, {SparseVec(), SparseVec()});
  r = reduce(zero);
  CHECK(r.rank == 0);
  CHECK(r.kernel.dim() == 4);

  // Hand elimination: row 2 = 2 * row 1, so x1 + 2 x2 = 0.
  auto m = Matrix::from_rows(2, {vec({1, 2}), vec({2, 4})});
  r = reduce(m);
  CHECK(r.rank == 1);
  const std::vector<SparseVec> expected{vec({-2, 1})};
  CHECK(r.kernel == SubspaceBasis::span(2, expected));
  // canonical form normalizes the leading entry
  CHECK(r.kernel.vectors().front() == SparseVec::from_dense(std::vector<Scalar>{Scalar(1), Scalar::rational(-1, 2)}));

  CHECK_THROWS_AS(reduce(Matrix::from_rows(0, {SparseVec()})), std::invalid_argument);
}

TEST_CASE("subspace sum, intersection, quotient") {
  const std::vector<SparseVec> e1{vec({1, 0})}, e2{vec({0, 1})};
  CHECK(subspace_intersect(SubspaceBasis::span(2, e1), SubspaceBasis::span(2, e2)).dim() == 0);

  const std::vector<SparseVec> u{vec({1, 1, 0})}, v{vec({0, 1, 1})};
  CHECK(subspace_sum(SubspaceBasis::span(3, u), SubspaceBasis::span(3, v)).dim() == 2);

  const auto whole = SubspaceBasis::whole(3);
  CHECK(subspace_quotient(whole, whole).dim == 0);
  const auto q = subspace_quotient(whole, SubspaceBasis::span(3, u));
  CHECK(q.dim == 2);
  CHECK(q.section.size() == 2);
  CHECK_THROWS_AS(subspace_quotient(SubspaceBasis::span(3, u), whole), std::invalid_argument);
}

TEST_CASE("quotient space coordinates") {
  const std::vector<SparseVec> rel{vec({1, -1, 0})};
  QuotientSpace qs(SubspaceBasis::span(3, rel));
  CHECK(qs.dim() == 2);
  CHECK(qs.project(vec({1, -1, 0})).empty());
  CHECK(qs.project(vec({1, 0, 0})) == qs.project(vec({0, 1, 0})));
  for (std::size_t i = 0; i < qs.dim(); ++i) CHECK(qs.project(qs.lift(SparseVec::unit(i))) == SparseVec::unit(i));
}

TEST_CASE("property: rank-nullity and kernel correctness on random matrices") {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 9);
    const auto m = random_matrix(rng, size(rng), size(rng), 35);
    const auto r = reduce(m);
    CHECK(r.rank + r.kernel.dim() == m.cols());
    CHECK(rank(m) == r.rank);
    for (const auto& k : r.kernel.vectors()) CHECK(m.apply(k).empty());
    for (const auto& row : m.row_list()) CHECK(r.rowspace.contains(row));
    // canonicalization is idempotent
    CHECK(SubspaceBasis::span(m.cols(), r.rowspace.vectors()) == r.rowspace);
    const auto again = reduce(Matrix::from_rows(m.cols(), r.rowspace.vectors()));
    CHECK(again.rowspace == r.rowspace);
  }
}

TEST_CASE("property: Grassmann identity for random subspaces") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    std::uniform_int_distribution<std::size_t> amb(1, 10);
    const std::size_t n = amb(rng);
    const auto u = random_subspace(rng, n, 6);
    const auto v = random_subspace(rng, n, 6);
    const auto s = subspace_sum(u, v);
    const auto i = subspace_intersect(u, v);
    CHECK(s.dim() + i.dim() == u.dim() + v.dim());
    CHECK(u.contains(i));
    CHECK(v.contains(i));
    CHECK(s.contains(u));
    CHECK(s.contains(v));
  }
}

TEST_CASE("incremental insert agrees with batch span") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = random_matrix(rng, 7, 8, 30);
    SubspaceBasis inc(8);
    for (const auto& row : m.row_list()) inc.insert(row);
    CHECK(inc == SubspaceBasis::span(8, m.row_list()));
  }
}

TEST_CASE("rank over F_p can drop below rank over Q") {
  auto m = Matrix::from_rows(2, {vec({1, 1}), vec({1, 4})});
  CHECK(rank(m) == 2);
  const Field f3 = Field::prime(3);
  std::vector<SparseVec> rows;
  for (const auto& r : m.row_list()) {
    SparseVec v;
    for (const auto& [i, c] : r) v.add_term(i, f3.from(c));
    rows.push_back(v);
  }
  CHECK(rank(Matrix::from_rows(2, rows)) == 1);
}
