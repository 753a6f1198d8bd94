#include "superstein/cyclic.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "superstein/errors.hpp"

namespace superstein {

namespace {

using Digits = std::vector<std::size_t>;

Digits decode(std::size_t index, std::size_t length, std::size_t base) {
  Digits d(length);
  for (std::size_t k = length; k-- > 0;) {
    d[k] = index % base;
    index /= base;
  }
  return d;
}

std::size_t encode(const Digits& d, std::size_t base) {
  std::size_t index = 0;
  for (auto x : d) index = index * base + x;
  return index;
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t guard, std::size_t degree) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    out *= base;
    if (out > guard)
      throw SizeGuardError("cyclic chain level " + std::to_string(degree) + " needs dim(A)^" + std::to_string(exp) +
                           " = " + std::to_string(base) + "^" + std::to_string(exp) + " > guard " +
                           std::to_string(guard));
  }
  return out;
}

// Sign exponent of the cyclic rotation a_0⊗…⊗a_n -> a_n⊗a_0⊗…⊗a_{n-1}.
int rotation_exponent(const SuperAlgebra& a, const Digits& t) {
  const std::size_t n = t.size() - 1;
  int others = 0;
  for (std::size_t i = 0; i < n; ++i) others += a.parity(t[i]);
  return static_cast<int>(n) + a.parity(t[n]) * others;
}

// Generators of I_n over basis tuples; I_0 = 0.
QuotientSpace cyclic_quotient(const SuperAlgebra& a, std::size_t n, std::size_t size) {
  const std::size_t d = a.dim();
  std::vector<SparseVec> gens;
  if (n > 0) {
    for (std::size_t t = 0; t < size; ++t) {
      const Digits digits = decode(t, n + 1, d);
      Digits rotated(n + 1);
      rotated[0] = digits[n];
      for (std::size_t i = 0; i < n; ++i) rotated[i + 1] = digits[i];
      SparseVec g = SparseVec::unit(t, a.field().one());
      g.add_term(encode(rotated, d), -sign_of(rotation_exponent(a, digits)));
      gens.push_back(std::move(g));
    }
  }
  return QuotientSpace(SubspaceBasis::span(size, gens));
}

}  // namespace

PairingModule::PairingModule(const SuperAlgebra& a) : algebra_dim_(a.dim()) {
  const std::size_t d = a.dim();
  const auto at = [d](std::size_t x, std::size_t y) { return x * d + y; };
  // x ⊗ (vector v)
  const auto left_tensor = [&](std::size_t x, const SparseVec& v, const Scalar& c) {
    SparseVec out;
    for (const auto& [k, val] : v) out.add_term(at(x, k), c * val);
    return out;
  };
  std::vector<SparseVec> rel;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x; y < d; ++y) {
      SparseVec r = SparseVec::unit(at(x, y), a.field().one());
      r.add_term(at(y, x), sign_of(a.parity(x) * a.parity(y)));
      rel.push_back(std::move(r));
    }
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        const int px = a.parity(x), py = a.parity(y), pz = a.parity(z);
        SparseVec r = left_tensor(x, a.product(y, z), sign_of(px * pz));
        r += left_tensor(y, a.product(z, x), sign_of(py * px));
        r += left_tensor(z, a.product(x, y), sign_of(pz * py));
        if (!r.empty()) rel.push_back(std::move(r));
      }
  quotient_ = QuotientSpace(SubspaceBasis::span(d * d, rel));

  std::vector<SparseVec> columns;
  for (std::size_t q = 0; q < quotient_.dim(); ++q) {
    const auto [x, y] = representative(q);
    columns.push_back(a.supercommutator(x, y));
  }
  commutator_ = Matrix::from_columns(d, columns);
}

std::pair<std::size_t, std::size_t> PairingModule::representative(std::size_t q) const {
  const std::size_t col = quotient_.free_column(q);
  return {col / algebra_dim_, col % algebra_dim_};
}

HC1Result hc1(const PairingModule& pairing) {
  HC1Result out;
  out.basis = kernel(pairing.commutator_map());
  out.dim = out.basis.dim();
  return out;
}

HC1Result hc1(const SuperAlgebra& a) { return hc1(PairingModule(a)); }

SparseVec cyclic_boundary_on_tuple(const SuperAlgebra& a, std::size_t n, std::size_t tuple_index) {
  if (n == 0) throw std::invalid_argument("the cyclic boundary starts at degree 1");
  const std::size_t d = a.dim();
  const Digits t = decode(tuple_index, n + 1, d);
  SparseVec out;
  Digits target(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar sign = sign_of(static_cast<int>(i));
    for (const auto& [k, c] : a.product(t[i], t[i + 1])) {
      std::size_t w = 0;
      for (std::size_t s = 0; s < i; ++s) target[w++] = t[s];
      target[w++] = k;
      for (std::size_t s = i + 2; s <= n; ++s) target[w++] = t[s];
      out.add_term(encode(target, d), sign * c);
    }
  }
  const Scalar wrap = sign_of(rotation_exponent(a, t));
  for (const auto& [k, c] : a.product(t[n], t[0])) {
    target[0] = k;
    for (std::size_t s = 1; s < n; ++s) target[s] = t[s];
    out.add_term(encode(target, d), wrap * c);
  }
  return out;
}

ChainLevel chain_level(const SuperAlgebra& a, std::size_t n, std::size_t max_chain) {
  const std::size_t d = a.dim();
  const std::size_t size = checked_power(d, n + 1, max_chain, n);
  ChainLevel level;
  level.degree = n;
  level.space = cyclic_quotient(a, n, size);
  if (n == 0) {
    level.boundary = Matrix(0, level.space.dim());
    return level;
  }
  const std::size_t lower_size = size / std::max<std::size_t>(d, 1);
  const QuotientSpace lower = cyclic_quotient(a, n - 1, lower_size);

  auto apply_unreduced = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [t, c] : v) out.axpy(c, cyclic_boundary_on_tuple(a, n, t));
    return out;
  };
  for (const auto& g : level.space.relations().vectors()) {
    if (!lower.project(apply_unreduced(g)).empty()) {
      level.well_defined = false;
      break;
    }
  }
  std::vector<SparseVec> columns;
  for (std::size_t q = 0; q < level.space.dim(); ++q)
    columns.push_back(lower.project(cyclic_boundary_on_tuple(a, n, level.space.free_column(q))));
  level.boundary = Matrix::from_columns(lower.dim(), columns);
  return level;
}

std::size_t hc_n(const SuperAlgebra& a, std::size_t n, std::size_t max_chain) {
  const ChainLevel here = chain_level(a, n, max_chain);
  const ChainLevel above = chain_level(a, n + 1, max_chain);
  const std::size_t cycles = n == 0 ? here.dim() : here.dim() - rank(here.boundary);
  return cycles - rank(above.boundary);
}

HC1CrossCheck hc1_crosscheck(const SuperAlgebra& a, std::size_t max_chain) {
  HC1CrossCheck out;
  out.pairing_route = hc1(a).dim;
  out.complex_route = hc_n(a, 1, max_chain);
  return out;
}

}  // namespace superstein
