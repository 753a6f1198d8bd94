#include "superstein/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "superstein/cocycle22.hpp"
#include "superstein/cyclic.hpp"
#include "superstein/errors.hpp"
#include "superstein/parallel.hpp"

namespace superstein {

const char* const kUceAssumption =
    "for a perfect finite-dimensional Lie superalgebra over a field, the kernel of the universal central "
    "extension is H2 with trivial coefficients; H2 = 0 means centrally closed";

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

using Key = std::pair<std::vector<int>, int>;

Key key_of(const FinLieSuper& l, const std::vector<std::size_t>& t) {
  Key k{l.has_weights() ? std::vector<int>(l.weight(0).size(), 0) : std::vector<int>{}, 0};
  for (auto i : t) {
    k.second ^= l.parity(i);
    if (l.has_weights())
      for (std::size_t c = 0; c < k.first.size(); ++c) k.first[c] += l.weight(i)[c];
  }
  return k;
}

void guard(const FinLieSuper& l, std::size_t degree, std::size_t max_wedge) {
  const std::size_t count = wedge_count(l.parities(), degree);
  if (count > max_wedge)
    throw SizeGuardError("Lambda^" + std::to_string(degree) + " of " + l.label() + " has " + std::to_string(count) +
                         " elements > guard " + std::to_string(max_wedge));
}

// v ∧ (basis vector z) written in sorted-tuple form and handed to `emit`.
template <class Emit>
void wedge_vec(const std::vector<int>& parity, const SparseVec& v, std::vector<std::size_t> tail, const Scalar& scale,
               Emit&& emit) {
  for (const auto& [k, c] : v) {
    std::vector<std::size_t> t{k};
    t.insert(t.end(), tail.begin(), tail.end());
    if (auto n = koszul_normalize(parity, std::move(t))) emit(n->first, scale * c * n->second);
  }
}

// d2 on a sorted pair, as a vector over L.
SparseVec d2_column(const FinLieSuper& l, const std::vector<std::size_t>& t) { return l.bracket(t[0], t[1]); }

// d3 on a sorted triple; emit(sorted pair, coefficient).
template <class Emit>
void d3_column(const FinLieSuper& l, const std::vector<std::size_t>& t, Emit&& emit) {
  const std::size_t x = t[0], y = t[1], z = t[2];
  const int px = l.parity(x), py = l.parity(y), pz = l.parity(z);
  wedge_vec(l.parities(), l.bracket(x, y), {z}, Scalar(1), emit);
  wedge_vec(l.parities(), l.bracket(x, z), {y}, -sign_of(py * pz), emit);
  wedge_vec(l.parities(), l.bracket(y, z), {x}, sign_of(px * (py + pz)), emit);
}

}  // namespace

std::optional<std::pair<std::vector<std::size_t>, Scalar>> koszul_normalize(const std::vector<int>& parity,
                                                                             std::vector<std::size_t> tuple) {
  int exponent = 0;
  // insertion sort; each adjacent swap of x, y contributes −(−1)^{|x||y|}
  for (std::size_t i = 1; i < tuple.size(); ++i)
    for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
      exponent += 1 + parity[tuple[j - 1]] * parity[tuple[j]];
      std::swap(tuple[j - 1], tuple[j]);
    }
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i] == tuple[i - 1] && parity[tuple[i]] == 0) return std::nullopt;
  return std::make_pair(std::move(tuple), sign_of(exponent));
}

SuperWedgeBasis::SuperWedgeBasis(const std::vector<int>& parity, std::size_t degree)
    : SuperWedgeBasis(parity, degree, [](const std::vector<std::size_t>&) { return true; }) {}

std::optional<std::size_t> SuperWedgeBasis::index_of(const std::vector<std::size_t>& sorted) const {
  auto it = index_.find(sorted);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t wedge_count(const std::vector<int>& parity, std::size_t degree) {
  const std::size_t d1 = static_cast<std::size_t>(std::count(parity.begin(), parity.end(), 1));
  const std::size_t d0 = parity.size() - d1;
  std::size_t total = 0;
  for (std::size_t k = 0; k <= degree; ++k) {
    const std::size_t r = degree - k;
    const std::size_t odd = d1 == 0 ? (r == 0 ? 1 : 0) : binomial(d1 + r - 1, r);
    total += binomial(d0, k) * odd;
  }
  return total;
}

Matrix ce_boundary(const FinLieSuper& l, std::size_t degree, std::size_t max_wedge) {
  if (degree != 2 && degree != 3) throw std::invalid_argument("ce_boundary supports degrees 2 and 3");
  guard(l, degree, max_wedge);
  const SuperWedgeBasis top(l.parities(), degree);
  std::vector<SparseVec> columns(top.size());
  if (degree == 2) {
    for (std::size_t k = 0; k < top.size(); ++k) columns[k] = d2_column(l, top.element(k));
    return Matrix::from_columns(l.dim(), columns);
  }
  const SuperWedgeBasis low(l.parities(), 2);
  parallel_for(top.size(), [&](std::size_t k) {
    d3_column(l, top.element(k), [&](const std::vector<std::size_t>& t, const Scalar& c) {
      columns[k].add_term(*low.index_of(t), c);
    });
  });
  return Matrix::from_columns(low.size(), columns);
}

HomologyReport homology(const FinLieSuper& l, std::size_t max_wedge) {
  guard(l, 3, max_wedge);
  HomologyReport out;
  out.dim = l.dim();
  const SuperWedgeBasis w2(l.parities(), 2);
  const SuperWedgeBasis w3(l.parities(), 3);
  out.wedge2 = w2.size();
  out.wedge3 = w3.size();

  struct Block {
    std::vector<std::size_t> ones, twos, threes;
  };
  std::map<Key, Block> blocks;
  for (std::size_t i = 0; i < l.dim(); ++i) blocks[key_of(l, {i})].ones.push_back(i);
  for (std::size_t k = 0; k < w2.size(); ++k) blocks[key_of(l, w2.element(k))].twos.push_back(k);
  for (std::size_t k = 0; k < w3.size(); ++k) blocks[key_of(l, w3.element(k))].threes.push_back(k);

  // Global -> block-local positions (the bracket preserves the key, so the
  // images of a block stay inside it).
  std::vector<std::size_t> local1(l.dim()), local2(w2.size());
  for (auto& [key, b] : blocks) {
    for (std::size_t p = 0; p < b.ones.size(); ++p) local1[b.ones[p]] = p;
    for (std::size_t p = 0; p < b.twos.size(); ++p) local2[b.twos[p]] = p;
  }

  std::vector<const Block*> list;
  for (const auto& [key, b] : blocks) list.push_back(&b);
  struct Result {
    std::size_t r2 = 0, r3 = 0;
    bool zero = true;
  };
  std::vector<Result> results(list.size());
  parallel_for(list.size(), [&](std::size_t bi) {
    const Block& b = *list[bi];
    std::vector<SparseVec> c2(b.twos.size()), c3(b.threes.size());
    for (std::size_t p = 0; p < b.twos.size(); ++p)
      c2[p] = d2_column(l, w2.element(b.twos[p])).remapped([&](std::size_t i) { return local1[i]; });
    for (std::size_t p = 0; p < b.threes.size(); ++p)
      d3_column(l, w3.element(b.threes[p]), [&](const std::vector<std::size_t>& t, const Scalar& c) {
        c3[p].add_term(local2[*w2.index_of(t)], c);
      });
    const Matrix d2 = Matrix::from_columns(b.ones.size(), c2);
    const Matrix d3 = Matrix::from_columns(b.twos.size(), c3);
    results[bi].r2 = rank(d2);
    results[bi].r3 = rank(d3);
    results[bi].zero = d2.multiply(d3).is_zero();
  });

  out.blocks = list.size();
  out.boundary_squares_to_zero = true;
  for (const auto& r : results) {
    out.rank_d2 += r.r2;
    out.rank_d3 += r.r3;
    out.boundary_squares_to_zero = out.boundary_squares_to_zero && r.zero;
  }
  out.h1 = out.dim - out.rank_d2;
  out.h2 = out.wedge2 - out.rank_d2 - out.rank_d3;
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

bool UceVerdict::failed() const {
  return std::any_of(rows.begin(), rows.end(), [](const ClaimRow& r) { return r.verdict == Verdict::fail; });
}

UceVerdict uce_verdict(LieSource source, const SuperAlgebra& a, const MatrixShape& requested, std::size_t max_wedge) {
  MatrixShape shape = requested;
  if (source == LieSource::st && shape.m == 0) std::swap(shape.m, shape.n);
  UceVerdict out;
  out.target = to_string(source) + "_" + shape.to_string() + "(" + a.name() + ")";
  out.assumption = kUceAssumption;

  ClaimRow h2row;
  const std::size_t size = shape.size();
  switch (source) {
    case LieSource::st:
      if (shape == MatrixShape{2, 2}) {
        h2row.claim = "H2 = dim W (universal central extension is st^#)";
        h2row.expected = build_W(a).dim();
        if (*h2row.expected == 0) h2row.note = "A_0 = 0, so W = 0";
      } else if (size >= 5 || shape == MatrixShape{2, 1} || shape == MatrixShape{3, 1}) {
        h2row.claim = "H2 = 0 (centrally closed)";
        h2row.expected = 0;
      }
      break;
    case LieSource::sl:
      if (size >= 5) {
        h2row.claim = "H2 = dim HC_1(A) (st is the universal central extension)";
        h2row.expected = hc1(a).dim;
      }
      break;
    case LieSource::st_sharp:
      h2row.claim = "H2 = 0 (st^# is centrally closed)";
      h2row.expected = 0;
      break;
    case LieSource::gl:
      break;
  }
  if (h2row.claim.empty()) {
    h2row.claim = "H2 (no claim for this target and shape)";
    h2row.note = "recorded only";
  }

  ClaimRow perfect{"H1 = 0 (perfect)", 0, std::nullopt, Verdict::skipped, {}};
  if (source == LieSource::gl) {
    perfect.claim = "H1 (gl is not perfect; recorded only)";
    perfect.expected.reset();
  }
  ClaimRow square{"d2 d3 = 0", std::nullopt, std::nullopt, Verdict::skipped, {}};

  try {
    const FinLieSuper l = concretize(source, a, shape);
    out.dim = l.dim();
    out.report = homology(l, max_wedge);
  } catch (const SizeGuardError& e) {
    for (ClaimRow* r : {&perfect, &square, &h2row}) r->note = std::string("size guard: ") + e.what();
    out.rows = {perfect, square, h2row};
    return out;
  }
  const HomologyReport& rep = *out.report;
  perfect.computed = rep.h1;
  perfect.verdict = perfect.expected ? (rep.h1 == *perfect.expected ? Verdict::pass : Verdict::fail) : Verdict::skipped;
  square.verdict = rep.boundary_squares_to_zero ? Verdict::pass : Verdict::fail;
  h2row.computed = rep.h2;
  if (h2row.expected) h2row.verdict = rep.h2 == *h2row.expected ? Verdict::pass : Verdict::fail;
  out.rows = {perfect, square, h2row};
  return out;
}

}  // namespace superstein
