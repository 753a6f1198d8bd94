#include "superstein/matrix_superlie.hpp"

#include <charconv>
#include <stdexcept>

#include "superstein/cocycle22.hpp"
#include "superstein/steinberg.hpp"

namespace superstein {

std::string MatrixShape::to_string() const { return std::to_string(m) + "|" + std::to_string(n); }

MatrixShape MatrixShape::parse(std::string_view text) {
  const auto sep = text.find_first_of("|x");
  if (sep == std::string_view::npos) throw std::invalid_argument("shape must look like m|n or mxn: " + std::string(text));
  auto number = [&](std::string_view part) {
    int v = -1;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || v < 0)
      throw std::invalid_argument("bad shape component '" + std::string(part) + "' in " + std::string(text));
    return v;
  };
  return MatrixShape{number(text.substr(0, sep)), number(text.substr(sep + 1))};
}

void require_sl_shape(const MatrixShape& shape) {
  if (shape.m < 0 || shape.n < 0 || shape.m + shape.n < 3)
    throw std::invalid_argument("shape " + shape.to_string() + " needs m + n >= 3");
}

int GlLayout::parity(std::size_t index) const {
  const std::size_t d = algebra_->dim();
  const std::size_t cell = index / d;
  return (shape_.parity(cell / size()) + shape_.parity(cell % size()) + algebra_->parity(index % d)) & 1;
}

SparseVec GlLayout::cell(std::size_t i, std::size_t j, const SparseVec& v) const {
  return v.remapped([&](std::size_t a) { return index(i, j, a); });
}

std::string GlLayout::basis_name(std::size_t index) const {
  const std::size_t d = algebra_->dim();
  const std::size_t c = index / d;
  return "E" + std::to_string(c / size() + 1) + "_" + std::to_string(c % size() + 1) + "(" +
         algebra_->basis_name(index % d) + ")";
}

SparseVec gl_unit_bracket(const GlLayout& g, std::size_t x, std::size_t y) {
  const std::size_t d = g.algebra().dim(), n = g.size();
  const std::size_t cx = x / d, cy = y / d, a = x % d, b = y % d;
  const std::size_t i = cx / n, j = cx % n, k = cy / n, l = cy % n;
  SparseVec out;
  if (j == k) out += g.cell(i, l, g.algebra().product(a, b));
  if (l == i) out.axpy(-sign_of(g.parity(x) * g.parity(y)), g.cell(k, j, g.algebra().product(b, a)));
  return out;
}

SparseVec gl_bracket(const GlLayout& g, const SparseVec& x, const SparseVec& y) {
  SparseVec out;
  for (const auto& [i, s] : x)
    for (const auto& [j, t] : y) out.axpy(s * t, gl_unit_bracket(g, i, j));
  return out;
}

GlElement gl_bracket(const SuperAlgebra& a, const GlElement& x, const GlElement& y) {
  if (!(x.shape == y.shape)) throw std::invalid_argument("gl_bracket: shape mismatch");
  return GlElement{x.shape, gl_bracket(GlLayout(a, x.shape), x.coords, y.coords)};
}

SparseVec supertrace(const GlLayout& g, const SparseVec& x) {
  const std::size_t d = g.algebra().dim(), n = g.size();
  SparseVec out;
  for (const auto& [idx, c] : x) {
    const std::size_t cell = idx / d, a = idx % d;
    const std::size_t i = cell / n;
    if (i != cell % n) continue;
    const int pi = g.shape().parity(i);
    out.add_term(a, sign_of(pi * (pi + g.algebra().parity(a))) * c);
  }
  return out;
}

Matrix supertrace_matrix(const GlLayout& g) {
  std::vector<SparseVec> columns(g.dim());
  for (std::size_t c = 0; c < g.dim(); ++c) columns[c] = supertrace(g, SparseVec::unit(c));
  return Matrix::from_columns(g.algebra().dim(), columns);
}

SlSpaces sl_space(const SuperAlgebra& a, const MatrixShape& shape) {
  require_sl_shape(shape);
  const GlLayout g(a, shape);
  SlSpaces out;
  std::vector<SparseVec> brackets;
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t y = 0; y < g.dim(); ++y) {
      SparseVec v = gl_unit_bracket(g, x, y);
      if (!v.empty()) brackets.push_back(std::move(v));
    }
  out.derived = SubspaceBasis::span(g.dim(), brackets);

  const QuotientSpace cocommutators(supercommutator_span(a));
  std::vector<SparseVec> columns(g.dim());
  for (std::size_t c = 0; c < g.dim(); ++c) columns[c] = cocommutators.project(supertrace(g, SparseVec::unit(c)));
  out.trace_criterion = kernel(Matrix::from_columns(cocommutators.dim(), columns));
  out.equal = out.derived == out.trace_criterion;
  out.contained = out.trace_criterion.contains(out.derived);
  out.equality_claimed = shape.m >= 1;
  return out;
}

SubspaceBasis derived_subalgebra(const FinLieSuper& l) {
  std::vector<SparseVec> brackets;
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i; j < l.dim(); ++j)
      if (!l.bracket(i, j).empty()) brackets.push_back(l.bracket(i, j));
  return SubspaceBasis::span(l.dim(), brackets);
}

PerfectnessReport perfectness_and_center(const FinLieSuper& l) {
  const std::size_t d = l.dim();
  PerfectnessReport out;
  out.derived_dim = derived_subalgebra(l).dim();
  out.perfect = out.derived_dim == d;
  // Column i stacks [e_i, e_j] for every j.
  std::vector<SparseVec> columns(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [k, c] : l.bracket(i, j)) columns[i].add_term(j * d + k, c);
  out.center = kernel(Matrix::from_columns(d * d, columns));
  return out;
}

LieSource parse_lie_source(std::string_view text) {
  if (text == "gl") return LieSource::gl;
  if (text == "sl") return LieSource::sl;
  if (text == "st") return LieSource::st;
  if (text == "stsharp" || text == "st_sharp") return LieSource::st_sharp;
  throw std::invalid_argument("unknown target '" + std::string(text) + "' (expected gl, sl, st, stsharp)");
}

std::string to_string(LieSource s) {
  switch (s) {
    case LieSource::gl: return "gl";
    case LieSource::sl: return "sl";
    case LieSource::st: return "st";
    case LieSource::st_sharp: return "stsharp";
  }
  return "?";
}

std::vector<int> root_weight(std::size_t size, std::size_t i, std::size_t j) {
  std::vector<int> w(size, 0);
  w[i] += 1;
  w[j] -= 1;
  return w;
}

namespace {

FinLieSuper gl_unverified(const SuperAlgebra& a, const MatrixShape& shape) {
  const GlLayout g(a, shape);
  const std::size_t dim = g.dim(), n = g.size();
  std::vector<std::string> names(dim);
  std::vector<int> parity(dim);
  std::vector<FinLieSuper::Weight> weights(dim);
  std::vector<SparseVec> table(dim * dim);
  for (std::size_t x = 0; x < dim; ++x) {
    names[x] = g.basis_name(x);
    parity[x] = g.parity(x);
    const std::size_t cell = x / a.dim();
    weights[x] = root_weight(n, cell / n, cell % n);
    for (std::size_t y = 0; y < dim; ++y) table[x * dim + y] = gl_unit_bracket(g, x, y);
  }
  return FinLieSuper("gl_" + shape.to_string() + "(" + a.name() + ")", a.field(), std::move(names),
                     std::move(parity), std::move(table), std::move(weights));
}

}  // namespace

FinLieSuper concretize_gl(const SuperAlgebra& a, const MatrixShape& shape) {
  FinLieSuper l = gl_unverified(a, shape);
  require_lie_axioms(l);
  return l;
}

FinLieSuper concretize_sl(const SuperAlgebra& a, const MatrixShape& shape) {
  const SlSpaces spaces = sl_space(a, shape);
  FinLieSuper l = restrict_to(gl_unverified(a, shape), spaces.derived, "sl_" + shape.to_string() + "(" + a.name() + ")");
  require_lie_axioms(l);
  return l;
}

FinLieSuper concretize(LieSource source, const SuperAlgebra& a, const MatrixShape& shape) {
  switch (source) {
    case LieSource::gl: return concretize_gl(a, shape);
    case LieSource::sl: return concretize_sl(a, shape);
    case LieSource::st: return StModel(a, shape).lie();
    case LieSource::st_sharp:
      if (!(shape == MatrixShape{2, 2})) throw std::invalid_argument("st_sharp exists only for shape 2|2");
      return build_st_sharp(a);
  }
  throw std::invalid_argument("unknown source");
}

}  // namespace superstein
