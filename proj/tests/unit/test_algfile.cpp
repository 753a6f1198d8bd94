#include <sstream>

#include "doctest.h"
#include "superstein/algfile.hpp"
#include "superstein/matrix_superlie.hpp"
#include "superstein/steinberg.hpp"

using namespace superstein;

namespace {

bool same_algebra(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.dim() != b.dim() || a.unit() != b.unit() || !(a.field() == b.field())) return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.parity(i) != b.parity(i) || a.basis_name(i) != b.basis_name(i)) return false;
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(a.product(i, j) == b.product(i, j))) return false;
  }
  return true;
}

AlgFileError::Kind kind_of(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const AlgFileError& e) {
    return e.kind();
  }
  FAIL("document was accepted");
  return AlgFileError::Kind::syntax;
}

}  // namespace

TEST_CASE("corpus round-trips through text") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto a = builtin(name);
    const auto text = serialize_algebra(a);
    const auto b = parse_algebra(text);
    CHECK(same_algebra(a, b));
    CHECK(serialize_algebra(b) == text);
  }
}

TEST_CASE("hand-written dual numbers") {
  const auto a = parse_algebra(R"(# dual numbers, odd generator
name eps
field Q
basis one:even e:odd
unit one
)");
  CHECK(a.dim() == 2);
  CHECK(a.name() == "eps");
  CHECK(a.product(1, 1).empty());
  CHECK(a.product(0, 1) == SparseVec::unit(1));
  CHECK(validate(a).ok());
}

TEST_CASE("prime fields and coefficients") {
  const auto a = parse_algebra("field Fp:5\nbasis one:even x:even\nunit one\nmul x x = 3/2*one - 1*x\n");
  CHECK(a.field() == Field::prime(5));
  // 3/2 = 4 mod 5
  CHECK(a.product(1, 1).at(0) == Field::prime(5).from(Scalar(4)));
}

TEST_CASE("errors carry kind and position") {
  using K = AlgFileError::Kind;
  CHECK(kind_of("basis one:even\nunit two\n") == K::unknown_name);
  CHECK(kind_of("basis one:evn\nunit one\n") == K::syntax);
  CHECK(kind_of("field Fp:2\nbasis one:even\nunit one\n") == K::field);
  CHECK(kind_of("field Fp:9\nbasis one:even\nunit one\n") == K::field);
  CHECK(kind_of("basis one:even x:even\n") == K::missing);
  CHECK(kind_of("basis one:even one:odd\nunit one\n") == K::duplicate);
  CHECK(kind_of("basis one:even x:even\nunit one\nmul x x = 1*x\nmul x x = 1*one\n") == K::duplicate);
  // x^2 = x, y^2 = y, xy = x, yx = 0 with unit 1: (xy)y = xy = x but x(yy) = xy = x;
  // (yx)x = 0 but y(xx) = yx = 0; (xy)x = xx = x but x(yx) = 0.
  CHECK(kind_of("basis one:even x:even y:even\nunit one\nmul x x = 1*x\nmul y y = 1*y\nmul x y = 1*x\n") ==
        K::validation);
  CHECK(kind_of("basis one:even\nunit one\nfrobnicate\n") == K::syntax);

  try {
    parse_algebra("basis one:even\nunit one\nmul one one = 2*bogus\n");
    FAIL("accepted");
  } catch (const AlgFileError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 17);
  }
}

TEST_CASE("odd generator squaring to the unit fails grading") {
  CHECK(kind_of("basis one:even e:odd\nunit one\nmul e e = 1*e\n") == AlgFileError::Kind::validation);
}

TEST_CASE("Lie export round-trip") {
  for (const auto& l : {StModel(builtin("grassmann(1)"), {2, 1}).lie(), concretize_sl(builtin("field"), {2, 1})}) {
    const auto text = export_lie(l);
    const auto back = parse_lie(text);
    REQUIRE(back.dim() == l.dim());
    CHECK(back.has_weights() == l.has_weights());
    for (std::size_t i = 0; i < l.dim(); ++i) {
      CHECK(back.parity(i) == l.parity(i));
      for (std::size_t j = 0; j < l.dim(); ++j) CHECK(back.bracket(i, j) == l.bracket(i, j));
    }
    CHECK(export_lie(back).find("[b1, b") != std::string::npos);
  }
}

TEST_CASE("Lie export line counts") {
  const auto text = export_lie(concretize_sl(builtin("field"), {2, 1}));
  std::size_t basis_lines = 0, bracket_lines = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    basis_lines += line.rfind("basis ", 0) == 0;
    bracket_lines += line.rfind("[", 0) == 0;
  }
  CHECK(basis_lines == 8);
  CHECK(bracket_lines > 0);
  CHECK(export_lie(abelian({0, 1, 1})).find('[') == std::string::npos);
}
