#include "superstein/cocycle22.hpp"

#include <stdexcept>

#include "superstein/errors.hpp"
#include "superstein/parallel.hpp"

namespace superstein {

namespace {

void require_22(const StModel& st) {
  if (!(st.shape() == MatrixShape{2, 2})) throw std::invalid_argument("the cocycle lives on st_{2|2}");
}

SparseVec psi_vec(const StModel& st, const CocycleTarget& w, const SparseVec& x, std::size_t y, bool mutate) {
  SparseVec out;
  for (const auto& [k, c] : x) out.axpy(c, psi(st, w, k, y, mutate));
  return out;
}

}  // namespace

const std::array<std::array<std::array<int, 4>, 4>, 2>& CocycleTarget::classes() {
  static const std::array<std::array<std::array<int, 4>, 4>, 2> table{{
      {{{3, 1, 4, 2}, {3, 2, 4, 1}, {4, 1, 3, 2}, {4, 2, 3, 1}}},
      {{{1, 3, 2, 4}, {1, 4, 2, 3}, {2, 3, 1, 4}, {2, 4, 1, 3}}},
  }};
  return table;
}

std::optional<std::size_t> CocycleTarget::block_of(const std::array<int, 4>& tuple) {
  for (std::size_t b = 0; b < 2; ++b)
    for (const auto& t : classes()[b])
      if (t == tuple) return b;
  return std::nullopt;
}

CocycleTarget build_W(const SuperAlgebra& a) { return CocycleTarget{supercommutative_quotient(a)}; }

SparseVec psi(const StModel& st, const CocycleTarget& w, std::size_t x, std::size_t y, bool drop_b_parity) {
  require_22(st);
  if (x >= st.f_dim() || y >= st.f_dim()) return {};
  const auto cx = st.decode(x), cy = st.decode(y);
  const std::array<int, 4> tuple{int(cx.i) + 1, int(cx.j) + 1, int(cy.i) + 1, int(cy.j) + 1};
  const auto block = CocycleTarget::block_of(tuple);
  if (!block) return {};
  const SuperAlgebra& a = st.algebra();
  const int exponent = tuple[1] + tuple[2] + (drop_b_parity ? 0 : a.parity(cy.index));
  const SparseVec ab = w.a0.project(a.product(cx.index, cy.index));
  const std::size_t offset = *block * w.block_dim();
  return ab.remapped([&](std::size_t k) { return offset + k; }).scaled(sign_of(exponent));
}

CocycleVerdict verify_cocycle(const StModel& st, const CocycleTarget& w, bool drop_b_parity) {
  require_22(st);
  const std::size_t n = st.dim();
  CocycleVerdict out;
  for (std::size_t x = 0; x < n && out.skew; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      SparseVec s = psi(st, w, x, y, drop_b_parity);
      s.axpy(sign_of(st.parity(x) * st.parity(y)), psi(st, w, y, x, drop_b_parity));
      if (!s.empty()) {
        out.skew = false;
        out.witness = {x, y};
        out.message = "psi is not super skew on (" + st.basis_name(x) + ", " + st.basis_name(y) + ")";
        break;
      }
    }
  if (!out.skew) return out;

  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> bad(n);
  parallel_for(n, [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const int px = st.parity(x), py = st.parity(y), pz = st.parity(z);
        SparseVec j = psi_vec(st, w, st.bracket(x, y), z, drop_b_parity).scaled(sign_of(px * pz));
        j.axpy(sign_of(px * py), psi_vec(st, w, st.bracket(y, z), x, drop_b_parity));
        j.axpy(sign_of(py * pz), psi_vec(st, w, st.bracket(z, x), y, drop_b_parity));
        if (!j.empty()) {
          bad[x] = {y, z};
          return;
        }
      }
  });
  for (std::size_t x = 0; x < n; ++x)
    if (bad[x]) {
      const auto [y, z] = *bad[x];
      out.jacobi = false;
      out.witness = {x, y, z};
      out.message = "J(" + st.basis_name(x) + ", " + st.basis_name(y) + ", " + st.basis_name(z) + ") != 0";
      break;
    }
  return out;
}

CocycleVerdict verify_cocycle(const SuperAlgebra& a, bool drop_b_parity) {
  const StModel st(a, MatrixShape{2, 2});
  return verify_cocycle(st, build_W(a), drop_b_parity);
}

FinLieSuper build_st_sharp(const StModel& st, const CocycleTarget& w) {
  require_22(st);
  if (const auto verdict = verify_cocycle(st, w); !verdict.pass())
    throw ConstructionError("st_sharp: " + verdict.message);
  const FinLieSuper& base = st.lie();
  const std::size_t n = st.dim(), b = w.block_dim(), total = n + w.dim();
  const SuperAlgebra& a0 = w.a0.quotient;

  std::vector<std::string> names = base.basis_names();
  std::vector<int> parity = base.parities();
  std::vector<FinLieSuper::Weight> weights = base.weights();
  for (std::size_t block = 0; block < 2; ++block) {
    const auto& rep = CocycleTarget::classes()[block][0];
    FinLieSuper::Weight wt(4, 0);
    wt[rep[0] - 1] += 1;
    wt[rep[1] - 1] -= 1;
    wt[rep[2] - 1] += 1;
    wt[rep[3] - 1] -= 1;
    for (std::size_t k = 0; k < b; ++k) {
      names.push_back("eps" + std::to_string(rep[0]) + std::to_string(rep[1]) + std::to_string(rep[2]) +
                      std::to_string(rep[3]) + "(" + a0.basis_name(k) + ")");
      parity.push_back(a0.parity(k));
      weights.push_back(wt);
    }
  }
  std::vector<SparseVec> table(total * total);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      SparseVec v = base.bracket(x, y);
      v += psi(st, w, x, y).remapped([&](std::size_t k) { return n + k; });
      table[x * total + y] = std::move(v);
    }
  FinLieSuper l("stsharp_2|2(" + st.algebra().name() + ")", base.field(), std::move(names), std::move(parity),
                std::move(table), std::move(weights));
  require_lie_axioms(l);
  return l;
}

FinLieSuper build_st_sharp(const SuperAlgebra& a) {
  const StModel st(a, MatrixShape{2, 2});
  return build_st_sharp(st, build_W(a));
}

}  // namespace superstein
