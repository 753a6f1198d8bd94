#include "superstein/lie_superalgebra.hpp"

#include <sstream>
#include <stdexcept>

#include "superstein/errors.hpp"
#include "superstein/parallel.hpp"

namespace superstein {

namespace {

FinLieSuper::Weight add(const FinLieSuper::Weight& a, const FinLieSuper::Weight& b) {
  FinLieSuper::Weight out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

std::string triple_text(const FinLieSuper& l, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ", ";
    s += l.basis_name(i);
    first = false;
  }
  return s + ")";
}

}  // namespace

FinLieSuper::FinLieSuper(std::string label, Field field, std::vector<std::string> basis_names,
                         std::vector<int> parity, std::vector<SparseVec> table, std::vector<Weight> weights)
    : label_(std::move(label)),
      field_(field),
      names_(std::move(basis_names)),
      parity_(std::move(parity)),
      table_(std::move(table)),
      weights_(std::move(weights)) {
  const std::size_t d = parity_.size();
  if (names_.empty() && d > 0)
    for (std::size_t i = 0; i < d; ++i) names_.push_back("b" + std::to_string(i));
  if (names_.size() != d) throw std::invalid_argument("basis name count differs from dimension");
  if (table_.size() != d * d) throw std::invalid_argument("bracket table must have dim^2 entries");
  for (int p : parity_)
    if (p != 0 && p != 1) throw std::invalid_argument("parity must be 0 or 1");
  for (auto& v : table_) {
    if (!v.empty() && v.entries().back().first >= d) throw std::invalid_argument("bracket entry out of range");
    SparseVec converted;
    for (const auto& [k, c] : v) converted.add_term(k, field_.from(c));
    v = std::move(converted);
  }
  if (!weights_.empty()) {
    if (weights_.size() != d) throw std::invalid_argument("weight count differs from dimension");
    for (const auto& w : weights_)
      if (w.size() != weights_.front().size()) throw std::invalid_argument("weights of unequal length");
  }
}

SparseVec FinLieSuper::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.axpy(a * b, bracket(i, j));
  return out;
}

FinLieSuper FinLieSuper::permuted(const std::vector<std::size_t>& perm) const {
  const std::size_t d = dim();
  if (perm.size() != d) throw std::invalid_argument("permutation size differs from dimension");
  std::vector<std::size_t> inverse(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (perm[i] >= d || inverse[perm[i]] != d) throw std::invalid_argument("not a permutation");
    inverse[perm[i]] = i;
  }
  std::vector<std::string> names(d);
  std::vector<int> parity(d);
  std::vector<Weight> weights;
  std::vector<SparseVec> table(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    names[i] = names_[perm[i]];
    parity[i] = parity_[perm[i]];
    if (has_weights()) weights.push_back(weights_[perm[i]]);
    for (std::size_t j = 0; j < d; ++j)
      table[i * d + j] = bracket(perm[i], perm[j]).remapped([&](std::size_t k) { return inverse[k]; });
  }
  return FinLieSuper(label_, field_, std::move(names), std::move(parity), std::move(table), std::move(weights));
}

FinLieSuper FinLieSuper::without_weights() const {
  FinLieSuper out = *this;
  out.weights_.clear();
  return out;
}

FinLieSuper FinLieSuper::relabeled(std::string label) const {
  FinLieSuper out = *this;
  out.label_ = std::move(label);
  return out;
}

std::optional<LieAxiomIssue> check_lie_axioms(const FinLieSuper& l) {
  using Kind = LieAxiomIssue::Kind;
  const std::size_t d = l.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const SparseVec& v = l.bracket(i, j);
      for (const auto& [k, c] : v) {
        if (l.parity(k) != ((l.parity(i) + l.parity(j)) & 1))
          return LieAxiomIssue{Kind::grading, {i, j, k},
                               "bracket of " + triple_text(l, {i, j}) + " has a component of the wrong parity"};
        if (l.has_weights() && l.weight(k) != add(l.weight(i), l.weight(j)))
          return LieAxiomIssue{Kind::weight, {i, j, k},
                               "bracket of " + triple_text(l, {i, j}) + " breaks the weight grading"};
      }
      SparseVec skew = v;
      skew.axpy(sign_of(l.parity(i) * l.parity(j)), l.bracket(j, i));
      if (!skew.empty())
        return LieAxiomIssue{Kind::skew, {i, j}, "super skew-symmetry fails on " + triple_text(l, {i, j})};
    }

  // Jacobi: one slot per x, filled by the first failing (y, z).
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> failure(d);
  parallel_for(d, [&](std::size_t x) {
    for (std::size_t y = 0; y < d; ++y) {
      const SparseVec& xy = l.bracket(x, y);
      for (std::size_t z = 0; z < d; ++z) {
        SparseVec r = l.bracket(SparseVec::unit(x), l.bracket(y, z));
        r.axpy(Scalar(-1), l.bracket(xy, SparseVec::unit(z)));
        r.axpy(-sign_of(l.parity(x) * l.parity(y)), l.bracket(SparseVec::unit(y), l.bracket(x, z)));
        if (!r.empty()) {
          failure[x] = {y, z};
          return;
        }
      }
    }
  });
  for (std::size_t x = 0; x < d; ++x)
    if (failure[x]) {
      const auto [y, z] = *failure[x];
      return LieAxiomIssue{Kind::jacobi, {x, y, z}, "super Jacobi fails on " + triple_text(l, {x, y, z})};
    }
  return std::nullopt;
}

void require_lie_axioms(const FinLieSuper& l) {
  if (auto issue = check_lie_axioms(l)) throw ConstructionError(l.label() + ": " + issue->message);
}

FinLieSuper restrict_to(const FinLieSuper& l, const SubspaceBasis& s, std::string label,
                        std::vector<std::string> names) {
  if (s.ambient_dim() != l.dim()) throw std::invalid_argument("subspace ambient dimension differs from algebra");
  const auto& basis = s.vectors();
  const std::size_t d = basis.size();
  std::vector<int> parity(d);
  std::vector<FinLieSuper::Weight> weights;
  bool weighted = l.has_weights();
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t lead = basis[i].leading();
    parity[i] = l.parity(lead);
    for (const auto& [k, c] : basis[i]) {
      if (l.parity(k) != parity[i])
        throw ConstructionError(label + ": basis vector " + std::to_string(i) + " is not homogeneous");
      if (weighted && l.weight(k) != l.weight(lead)) weighted = false;
    }
    if (weighted) weights.push_back(l.weight(lead));
  }
  if (!weighted) weights.clear();

  std::vector<SparseVec> table(d * d);
  parallel_for(d, [&](std::size_t i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto coords = s.coordinates(l.bracket(basis[i], basis[j]));
      if (!coords)
        throw ConstructionError(label + ": subspace not closed under the bracket at basis pair (" + std::to_string(i) +
                                ", " + std::to_string(j) + ")");
      table[i * d + j] = std::move(*coords);
    }
  });
  if (names.empty())
    for (const auto& v : basis) names.push_back(format_vector(v, l.basis_names()));
  return FinLieSuper(std::move(label), l.field(), std::move(names), std::move(parity), std::move(table),
                     std::move(weights));
}

FinLieSuper abelian(const std::vector<int>& parity, const Field& field) {
  return FinLieSuper("abelian" + std::to_string(parity.size()), field, {}, parity,
                     std::vector<SparseVec>(parity.size() * parity.size()));
}

std::string format_vector(const SparseVec& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : v) {
    std::string coeff = c.to_string();
    const bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    out << coeff << '*' << names[k];
    first = false;
  }
  return out.str();
}

}  // namespace superstein
