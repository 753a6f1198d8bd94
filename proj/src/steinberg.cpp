#include "superstein/steinberg.hpp"

#include <limits>
#include <stdexcept>

#include "superstein/errors.hpp"
#include "superstein/parallel.hpp"

namespace superstein {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

MatrixShape effective_shape(MatrixShape shape) {
  if (shape.m == 0) std::swap(shape.m, shape.n);
  require_sl_shape(shape);
  return shape;
}

std::string f_name(const SuperAlgebra& a, std::size_t i, std::size_t j, std::size_t c) {
  return "F" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + "(" + a.basis_name(c) + ")";
}

Check relations_check(const StModel& st) {
  const SuperAlgebra& a = st.algebra();
  const std::size_t n = st.size(), d = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (i == j || k == l) continue;
          const bool chain = j == k && i != l;
          const bool disjoint = j != k && l != i;
          if (!chain && !disjoint) continue;
          for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) {
              const SparseVec& got = st.bracket(st.f_index(i, j, x), st.f_index(k, l, y));
              const SparseVec want = chain ? st.F(i, l, a.product(x, y)) : SparseVec();
              if (!(got == want))
                return Check{false, "[" + f_name(a, i, j, x) + ", " + f_name(a, k, l, y) + "]" +
                                        (chain ? " differs from F_il(ab)" : " is not zero")};
            }
        }
  return {};
}

}  // namespace

StModel::StModel(const SuperAlgebra& a, MatrixShape shape, std::size_t expansion_index, bool verify)
    : algebra_(a),
      shape_(effective_shape(shape)),
      swapped_(shape.m == 0),
      j_star_(expansion_index),
      pairing_(a) {
  const std::size_t n = size(), d = algebra_.dim();
  if (d == 0 || algebra_.unit() == SuperAlgebra::kNoUnit) throw std::invalid_argument("st needs a nonzero unital algebra");
  if (j_star_ == 0 || j_star_ >= n) throw std::invalid_argument("expansion index must lie in 2..N");
  cell_of_.assign(n * n, kNone);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        cell_of_[i * n + j] = cells_.size();
        cells_.emplace_back(i, j);
      }
  h_offset_ = cells_.size() * d;
  d_offset_ = h_offset_ + pairing_.dim();

  const std::size_t total = dim();
  parity_.resize(total);
  std::vector<std::string> names(total);
  std::vector<FinLieSuper::Weight> weights(total, FinLieSuper::Weight(n, 0));
  for (std::size_t x = 0; x < total; ++x) {
    const Coord c = decode(x);
    switch (c.part) {
      case Part::f:
        parity_[x] = (shape_.parity(c.i) + shape_.parity(c.j) + algebra_.parity(c.index)) & 1;
        weights[x] = root_weight(n, c.i, c.j);
        break;
      case Part::h: {
        const auto [p, q] = pairing_.representative(c.index);
        parity_[x] = (algebra_.parity(p) + algebra_.parity(q)) & 1;
        break;
      }
      case Part::d:
        parity_[x] = algebra_.parity(c.index);
        break;
    }
    names[x] = basis_name(x);
  }

  table_.resize(total * total);
  parallel_for(total, [&](std::size_t x) {
    for (std::size_t y = 0; y < total; ++y) table_[x * total + y] = compute_bracket(x, y);
  });
  lie_ = FinLieSuper("st_" + shape_.to_string() + "(" + algebra_.name() + ")", algebra_.field(), std::move(names),
                     parity_, table_, std::move(weights));

  if (verify) {
    if (const Check rel = relations_check(*this); !rel.pass) throw ConstructionError(lie_.label() + ": " + rel.witness);
    require_lie_axioms(lie_);
    verified_ = true;
  }
}

std::size_t StModel::f_index(std::size_t i, std::size_t j, std::size_t a) const {
  const std::size_t cell = cell_of_.at(i * size() + j);
  if (cell == kNone) throw std::invalid_argument("F_ij needs i != j");
  return cell * algebra_.dim() + a;
}

StModel::Coord StModel::decode(std::size_t x) const {
  const std::size_t d = algebra_.dim();
  if (x < h_offset_) {
    const auto [i, j] = cells_[x / d];
    return Coord{Part::f, i, j, x % d};
  }
  if (x < d_offset_) return Coord{Part::h, 0, 0, x - h_offset_};
  if (x >= dim()) throw std::out_of_range("st coordinate out of range");
  return Coord{Part::d, 0, (x - d_offset_) / d + 1, (x - d_offset_) % d};
}

std::string StModel::basis_name(std::size_t x) const {
  const Coord c = decode(x);
  switch (c.part) {
    case Part::f: return f_name(algebra_, c.i, c.j, c.index);
    case Part::h: {
      const auto [p, q] = pairing_.representative(c.index);
      return "h(" + algebra_.basis_name(p) + "," + algebra_.basis_name(q) + ")";
    }
    case Part::d: return "D" + std::to_string(c.j + 1) + "(" + algebra_.basis_name(c.index) + ")";
  }
  return "?";
}

SparseVec StModel::F(std::size_t i, std::size_t j, const SparseVec& v) const {
  return v.remapped([&](std::size_t a) { return f_index(i, j, a); });
}

SparseVec StModel::h(std::size_t a, std::size_t b) const {
  return pairing_.pair(a, b).remapped([&](std::size_t q) { return h_offset_ + q; });
}

SparseVec StModel::D(std::size_t j, const SparseVec& v) const {
  if (j == 0 || j >= size()) throw std::invalid_argument("D_j needs 2 <= j <= N");
  return v.remapped([&](std::size_t c) { return d_index(j, c); });
}

SparseVec StModel::normalize_H(std::size_t i, std::size_t j, std::size_t a, std::size_t b) const {
  if (i == j) throw std::invalid_argument("H_ij needs i != j");
  const int pa = algebra_.parity(a), pb = algebra_.parity(b);
  if (i == 0) {
    SparseVec out = h(a, b);
    out.axpy(sign_of(pa * pb), D(j, algebra_.product(b, a)));
    return out;
  }
  const int pij = shape_.parity(i) + shape_.parity(j);
  const Scalar s = sign_of((pij + pa) * (pij + pb));
  if (j == 0) return normalize_H(0, i, b, a).scaled(-s);
  SparseVec out = normalize_H(i, 0, a, b);
  for (const auto& [k, c] : algebra_.product(b, a)) out.axpy(-s * c, normalize_H(j, 0, k, algebra_.unit()));
  return out;
}

SparseVec StModel::normalize_H(std::size_t i, std::size_t j, const SparseVec& a, const SparseVec& b) const {
  SparseVec out;
  for (const auto& [x, s] : a)
    for (const auto& [y, t] : b) out.axpy(s * t, normalize_H(i, j, x, y));
  return out;
}

SparseVec StModel::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, s] : x)
    for (const auto& [j, t] : y) out.axpy(s * t, bracket(i, j));
  return out;
}

std::vector<StModel::HTerm> StModel::expand(std::size_t x) const {
  const Coord c = decode(x);
  const std::size_t one = algebra_.unit();
  if (c.part == Part::d) return {HTerm{c.j, one, c.index, Scalar(1)}};
  // h(a,b) = H_{1j*}(a,b) − (−1)^{|a||b|} H_{1j*}(1,ba)
  const auto [a, b] = pairing_.representative(c.index);
  std::vector<HTerm> out{HTerm{j_star_, a, b, Scalar(1)}};
  const Scalar s = sign_of(algebra_.parity(a) * algebra_.parity(b));
  for (const auto& [k, v] : algebra_.product(b, a)) out.push_back(HTerm{j_star_, one, k, -s * v});
  return out;
}

SparseVec StModel::h_on_f(std::size_t i, std::size_t j, std::size_t a, std::size_t b, std::size_t k, std::size_t l,
                          std::size_t c) const {
  const SuperAlgebra& A = algebra_;
  const int pa = A.parity(a), pb = A.parity(b), pc = A.parity(c);
  const int pi = shape_.parity(i), pj = shape_.parity(j), pk = shape_.parity(k);
  const Scalar s = sign_of((pi + pj + pa) * (pi + pj + pb));
  auto triple = [&](std::size_t x, std::size_t y, std::size_t z) {
    return A.multiply(A.product(x, y), SparseVec::unit(z));
  };
  if (k == i && l == j) {
    SparseVec v = triple(a, b, c);
    v.axpy(sign_of(pi + pj + pa * pb + pb * pc + pc * pa), triple(c, b, a));
    return F(i, j, v);
  }
  if (k == j && l == i) {
    SparseVec v = triple(b, a, c);
    v.axpy(sign_of(pj + pi + pb * pa + pa * pc + pc * pb), triple(c, a, b));
    return F(j, i, v).scaled(-s);
  }
  if (k == i) return F(i, l, triple(a, b, c));
  if (l == i) return F(k, i, triple(c, a, b)).scaled(-sign_of((pa + pb) * (pi + pk + pc)));
  if (k == j) return F(j, l, triple(b, a, c)).scaled(-s);
  if (l == j) return F(k, j, triple(c, b, a)).scaled(s * sign_of((pa + pb) * (pj + pk + pc)));
  return {};
}

SparseVec StModel::f_bracket(std::size_t x, std::size_t y) const {
  const Coord cx = decode(x), cy = decode(y);
  const std::size_t i = cx.i, j = cx.j, k = cy.i, l = cy.j;
  if (j == k && l == i) return normalize_H(i, j, cx.index, cy.index);
  if (j == k) return F(i, l, algebra_.product(cx.index, cy.index));
  if (l == i) return F(k, j, algebra_.product(cy.index, cx.index)).scaled(-sign_of(parity_[x] * parity_[y]));
  return {};
}

SparseVec StModel::hf_bracket(std::size_t x, std::size_t y) const {
  const Coord cy = decode(y);
  SparseVec out;
  for (const HTerm& t : expand(x)) out.axpy(t.coeff, h_on_f(0, t.j, t.a, t.b, cy.i, cy.j, cy.index));
  return out;
}

SparseVec StModel::compute_bracket(std::size_t x, std::size_t y) const {
  const bool fx = x < h_offset_, fy = y < h_offset_;
  if (fx && fy) return f_bracket(x, y);
  if (!fx && fy) return hf_bracket(x, y);
  if (fx && !fy) return hf_bracket(y, x).scaled(-sign_of(parity_[x] * parity_[y]));
  // [X, H_1j(a,b)] = [[X, F_1j(a)], F_j1(b)] + (−1)^{|X|(|1|+|j|+|a|)} [F_1j(a), [X, F_j1(b)]]
  SparseVec out;
  for (const HTerm& t : expand(y)) {
    const std::size_t fa = f_index(0, t.j, t.a), fb = f_index(t.j, 0, t.b);
    SparseVec term;
    for (const auto& [k, c] : hf_bracket(x, fa)) term.axpy(c, f_bracket(k, fb));
    const Scalar s = sign_of(parity_[x] * parity_[fa]);
    for (const auto& [k, c] : hf_bracket(x, fb)) term.axpy(s * c, f_bracket(fa, k));
    out.axpy(t.coeff, term);
  }
  return out;
}

SparseVec phi(const StModel& model, std::size_t x) {
  const GlLayout g(model.algebra(), model.shape());
  const SuperAlgebra& a = model.algebra();
  const StModel::Coord c = model.decode(x);
  switch (c.part) {
    case StModel::Part::f: return SparseVec::unit(g.index(c.i, c.j, c.index));
    case StModel::Part::h: return g.cell(0, 0, model.pairing().commutator(SparseVec::unit(c.index)));
    case StModel::Part::d: {
      const int pj = model.shape().parity(c.j);
      SparseVec out = SparseVec::unit(g.index(0, 0, c.index));
      out.add_term(g.index(c.j, c.j, c.index), -sign_of(pj * (pj + a.parity(c.index))));
      return out;
    }
  }
  return {};
}

Matrix phi_matrix(const StModel& model) {
  std::vector<SparseVec> columns(model.dim());
  for (std::size_t x = 0; x < model.dim(); ++x) columns[x] = phi(model, x);
  return Matrix::from_columns(GlLayout(model.algebra(), model.shape()).dim(), columns);
}

SparseVec nu(const StModel& model, const SparseVec& x) {
  SparseVec out;
  for (const auto& [k, c] : x)
    if (k >= model.h_offset() && k < model.d_offset()) out.add_term(k - model.h_offset(), c);
  return out;
}

KernelPhiReport kernel_phi(const StModel& model) {
  KernelPhiReport out;
  out.kernel = kernel(phi_matrix(model));
  const HC1Result hc = hc1(model.pairing());
  out.hc1_dim = hc.dim;
  std::vector<SparseVec> image;
  for (const auto& v : hc.basis.vectors()) image.push_back(v.remapped([&](std::size_t q) { return model.h_index(q); }));
  out.hc1_image = SubspaceBasis::span(model.dim(), image);
  out.hc1_match = out.kernel == out.hc1_image && out.kernel.dim() == hc.dim;
  out.central = true;
  for (const auto& v : out.kernel.vectors())
    for (std::size_t y = 0; y < model.dim() && out.central; ++y)
      if (!model.bracket(v, SparseVec::unit(y)).empty()) out.central = false;
  return out;
}

Check diagram_check(const StModel& model) {
  const GlLayout g(model.algebra(), model.shape());
  for (std::size_t x = 0; x < model.dim(); ++x) {
    const SparseVec lhs = model.pairing().commutator(nu(model, SparseVec::unit(x)));
    const SparseVec rhs = supertrace(g, phi(model, x));
    if (!(lhs == rhs)) return Check{false, "d(nu(x)) != str(phi(x)) at x = " + model.basis_name(x)};
  }
  return {};
}

StVerification verify_st(const StModel& model) {
  StVerification out;
  out.relations = relations_check(model);
  if (!model.verified())
    if (auto issue = check_lie_axioms(model.lie())) out.axioms = Check{false, issue->message};

  const StModel alternate(model.algebra(), model.shape(), model.size() - 1, false);
  for (std::size_t x = 0; x < model.dim() && out.expansion.pass; ++x)
    for (std::size_t y = 0; y < model.dim(); ++y)
      if (!(model.bracket(x, y) == alternate.bracket(x, y))) {
        out.expansion = Check{false, "[" + model.basis_name(x) + ", " + model.basis_name(y) +
                                         "] depends on the expansion index"};
        break;
      }

  const GlLayout g(model.algebra(), model.shape());
  const std::size_t n = model.dim();
  std::vector<SparseVec> images(n);
  for (std::size_t x = 0; x < n; ++x) images[x] = phi(model, x);
  std::vector<std::optional<std::size_t>> bad(n);
  parallel_for(n, [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y) {
      SparseVec lhs;
      for (const auto& [k, c] : model.bracket(x, y)) lhs.axpy(c, images[k]);
      if (!(lhs == gl_bracket(g, images[x], images[y]))) {
        bad[x] = y;
        return;
      }
    }
  });
  for (std::size_t x = 0; x < n; ++x)
    if (bad[x]) {
      out.homomorphism = Check{false, "phi fails to preserve [" + model.basis_name(x) + ", " +
                                          model.basis_name(*bad[x]) + "]"};
      break;
    }

  for (std::size_t q = 0; q < model.h_dim(); ++q)
    if (!(nu(model, SparseVec::unit(model.h_index(q))) == SparseVec::unit(q))) {
      out.nu_section = Check{false, "nu(h_q) != e_q at q = " + std::to_string(q)};
      break;
    }
  return out;
}

}  // namespace superstein
