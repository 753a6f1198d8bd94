#include "superstein/superalgebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace superstein {

SuperAlgebra::SuperAlgebra(std::string name, Field field, std::vector<std::string> basis_names,
                           std::vector<int> parity, std::size_t unit, std::vector<SparseVec> table)
    : name_(std::move(name)),
      field_(field),
      names_(std::move(basis_names)),
      parity_(std::move(parity)),
      unit_(unit),
      table_(std::move(table)) {
  const std::size_t n = parity_.size();
  if (names_.size() != n) throw std::invalid_argument("basis name count does not match dimension");
  if (table_.size() != n * n) throw std::invalid_argument("multiplication table must have dim^2 entries");
  for (int p : parity_)
    if (p != 0 && p != 1) throw std::invalid_argument("parity must be 0 or 1");
  if (n > 0 && unit_ >= n) throw std::invalid_argument("unit index out of range");
  if (n == 0) unit_ = kNoUnit;
  for (auto& v : table_) {
    if (!v.empty() && v.entries().back().first >= n) throw std::invalid_argument("product coordinate out of range");
    SparseVec converted;
    for (const auto& [i, c] : v) converted.add_term(i, field_.from(c));
    v = std::move(converted);
  }
}

SparseVec SuperAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out.axpy(a * b, product(i, j));
  return out;
}

SparseVec SuperAlgebra::unit_vector() const {
  return unit_ == kNoUnit ? SparseVec() : SparseVec::unit(unit_, field_.one());
}

std::optional<int> SuperAlgebra::parity_of(const SparseVec& v) const {
  if (v.empty()) return std::nullopt;
  const int p = parity_[v.leading()];
  for (const auto& [i, c] : v)
    if (parity_[i] != p) return std::nullopt;
  return p;
}

std::pair<SparseVec, SparseVec> SuperAlgebra::split(const SparseVec& v) const {
  SparseVec even, odd;
  for (const auto& [i, c] : v) (parity_[i] ? odd : even).add_term(i, c);
  return {even, odd};
}

SparseVec SuperAlgebra::supercommutator(std::size_t i, std::size_t j) const {
  SparseVec out = product(i, j);
  out.axpy(-sign_of(parity_[i] * parity_[j]), product(j, i));
  return out;
}

SuperAlgebra SuperAlgebra::renamed(std::string name) const {
  SuperAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::string ValidationReport::summary() const {
  if (issues.empty()) return "valid";
  std::ostringstream os;
  os << issues.size() << " issue(s); first: " << issues.front().message;
  return os.str();
}

ValidationReport validate(const SuperAlgebra& a) {
  ValidationReport report;
  const std::size_t n = a.dim();
  auto witness_text = [&](std::initializer_list<std::size_t> ids) {
    std::string s = "(";
    bool first = true;
    for (auto i : ids) {
      s += (first ? "" : ",") + a.basis_name(i);
      first = false;
    }
    return s + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, c] : a.product(i, j)) {
        if (a.parity(k) != (a.parity(i) + a.parity(j)) % 2) {
          report.issues.push_back({ValidationIssue::Kind::grading, {i, j, k},
                                   "grading violation: " + witness_text({i, j}) + " has a component on " +
                                       a.basis_name(k) + " of the wrong parity"});
        }
      }
    }
  }
  if (n > 0) {
    const std::size_t u = a.unit();
    if (a.parity(u) != 0)
      report.issues.push_back({ValidationIssue::Kind::unit, {u}, "unit " + a.basis_name(u) + " is odd"});
    for (std::size_t i = 0; i < n; ++i) {
      const SparseVec e = SparseVec::unit(i, a.field().one());
      if (!(a.product(u, i) == e) || !(a.product(i, u) == e))
        report.issues.push_back(
            {ValidationIssue::Kind::unit, {i}, "unit law fails on " + a.basis_name(i)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec& ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec left;
        for (const auto& [t, c] : ij) left.axpy(c, a.product(t, k));
        SparseVec right;
        for (const auto& [t, c] : a.product(j, k)) right.axpy(c, a.product(i, t));
        if (!(left == right))
          report.issues.push_back({ValidationIssue::Kind::associativity, {i, j, k},
                                   "associativity fails on " + witness_text({i, j, k})});
      }
    }
  }
  return report;
}

// ----------------------------------------------------------------- builtins

namespace {

SuperAlgebra field_algebra(const Field& f) {
  return SuperAlgebra("field", f, {"one"}, {0}, 0, {SparseVec::unit(0)});
}

SuperAlgebra truncated(std::size_t n, std::string name, const Field& f) {
  if (n < 1) throw std::invalid_argument("trunc(n) needs n >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(i == 0 ? "one" : i == 1 ? "x" : "x" + std::to_string(i));
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) table[i * n + j] = SparseVec::unit(i + j);
  return SuperAlgebra(std::move(name), f, names, std::vector<int>(n, 0), 0, std::move(table));
}

SuperAlgebra grassmann(std::size_t k, const Field& f) {
  if (k > 4) throw std::invalid_argument("grassmann(k) is limited to k <= 4");
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << k); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) {
    if (x == y) return false;
    if (std::popcount(x) != std::popcount(y)) return std::popcount(x) < std::popcount(y);
    // lexicographic on the sorted generator lists
    for (unsigned b = 0;; ++b) {
      const bool in_x = x >> b & 1u, in_y = y >> b & 1u;
      if (in_x != in_y) return in_x;
    }
  });
  const std::size_t n = masks.size();
  std::vector<std::size_t> index_of(n);
  std::vector<std::string> names;
  std::vector<int> parity;
  for (std::size_t i = 0; i < n; ++i) {
    index_of[masks[i]] = i;
    std::string name;
    for (unsigned b = 0; b < k; ++b)
      if (masks[i] >> b & 1u) name += "t" + std::to_string(b + 1);
    names.push_back(name.empty() ? "one" : name);
    parity.push_back(std::popcount(masks[i]) % 2);
  }
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned s = masks[i], t = masks[j];
      if (s & t) continue;
      int inversions = 0;
      for (unsigned b = 0; b < k; ++b)
        if (t >> b & 1u) inversions += std::popcount(s >> (b + 1));
      table[i * n + j] = SparseVec::unit(index_of[s | t], sign_of(inversions));
    }
  }
  return SuperAlgebra("grassmann" + std::to_string(k), f, names, parity, 0, std::move(table));
}

// (p+q)x(p+q) matrices, basis {1} ∪ {E_ij : (i,j) != (1,1)}.
SuperAlgebra matrices(std::size_t p, std::size_t q, std::string name, const Field& f) {
  const std::size_t r = p + q;
  if (r < 1) throw std::invalid_argument("mat needs a positive size");
  auto block = [p](std::size_t i) { return i < p ? 0 : 1; };
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // index 0 stands for the identity
  std::vector<std::string> names{"one"};
  std::vector<int> parity{0};
  cells.emplace_back(0, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == 0 && j == 0) continue;
      cells.emplace_back(i, j);
      names.push_back("e" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      parity.push_back((block(i) + block(j)) % 2);
    }
  const std::size_t n = cells.size();
  std::vector<std::size_t> cell_index(r * r, 0);
  for (std::size_t b = 1; b < n; ++b) cell_index[cells[b].first * r + cells[b].second] = b;

  // Dense r x r matrix of basis element b.
  auto as_matrix = [&](std::size_t b) {
    std::vector<long> m(r * r, 0);
    if (b == 0) {
      for (std::size_t i = 0; i < r; ++i) m[i * r + i] = 1;
    } else {
      m[cells[b].first * r + cells[b].second] = 1;
    }
    return m;
  };
  auto coordinates = [&](const std::vector<long>& m) {
    SparseVec v;
    const long m11 = m[0];
    v.add_term(0, Scalar(m11));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (i == 0 && j == 0) continue;
        const long entry = m[i * r + j] - (i == j ? m11 : 0);
        v.add_term(cell_index[i * r + j], Scalar(entry));
      }
    return v;
  };
  std::vector<SparseVec> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto mx = as_matrix(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto my = as_matrix(y);
      std::vector<long> prod(r * r, 0);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k)
          if (mx[i * r + k])
            for (std::size_t j = 0; j < r; ++j) prod[i * r + j] += mx[i * r + k] * my[k * r + j];
      table[x * n + y] = coordinates(prod);
    }
  }
  return SuperAlgebra(std::move(name), f, names, parity, 0, std::move(table));
}

SuperAlgebra cyclic_group(std::size_t n, const Field& f) {
  if (n < 1) throw std::invalid_argument("group_z(n) needs n >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = SparseVec::unit((i + j) % n);
  return SuperAlgebra("group_z" + std::to_string(n), f, names, std::vector<int>(n, 0), 0, std::move(table));
}

std::size_t parse_count(const std::string& text, std::string_view label) {
  if (text.empty() || text.size() > 3 || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad parameter in builtin '" + std::string(label) + "'");
  return std::stoul(text);
}

}  // namespace

SuperAlgebra builtin(std::string_view label, const Field& field) {
  std::string base, arg;
  if (auto open = label.find('('); open != std::string_view::npos) {
    if (label.back() != ')') throw std::invalid_argument("unbalanced parentheses in builtin '" + std::string(label) + "'");
    base = std::string(label.substr(0, open));
    arg = std::string(label.substr(open + 1, label.size() - open - 2));
  } else {
    std::size_t cut = 0;
    while (cut < label.size() && !std::isdigit(static_cast<unsigned char>(label[cut]))) ++cut;
    base = std::string(label.substr(0, cut));
    arg = std::string(label.substr(cut));
  }
  if (base == "field" && arg.empty()) return field_algebra(field);
  if (base == "dual" && arg.empty()) return truncated(2, "dual", field);
  if (base == "trunc") {
    const auto n = parse_count(arg, label);
    return truncated(n, "trunc" + std::to_string(n), field);
  }
  if (base == "grassmann") return grassmann(parse_count(arg, label), field);
  if (base == "group_z") return cyclic_group(parse_count(arg, label), field);
  if (base == "mat") {
    auto bar = arg.find('|');
    if (bar == std::string::npos) bar = arg.find('_');
    if (bar == std::string::npos) {
      const auto r = parse_count(arg, label);
      return matrices(r, 0, "mat" + std::to_string(r), field);
    }
    const auto p = parse_count(arg.substr(0, bar), label);
    const auto q = parse_count(arg.substr(bar + 1), label);
    return matrices(p, q, "mat" + std::to_string(p) + "_" + std::to_string(q), field);
  }
  throw std::invalid_argument("unknown builtin algebra '" + std::string(label) + "'");
}

std::vector<std::string> corpus_names() {
  return {"field", "dual", "trunc(3)", "grassmann(1)", "grassmann(2)", "mat(2)", "mat(1|1)", "group_z(3)"};
}

SubspaceBasis supercommutator_span(const SuperAlgebra& a) {
  std::vector<SparseVec> brackets;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) brackets.push_back(a.supercommutator(i, j));
  return SubspaceBasis::span(a.dim(), brackets);
}

IdealQuotient graded_ideal_quotient(const SuperAlgebra& a, const std::vector<SparseVec>& generators) {
  const std::size_t n = a.dim();
  // Work with the unit moved to the last column so it is a pivot only when 1 ∈ I.
  std::vector<std::size_t> to_work(n), to_orig(n);
  {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (i != a.unit()) to_orig[pos++] = i;
    if (n > 0) to_orig[n - 1] = a.unit();
    for (std::size_t p = 0; p < n; ++p) to_work[to_orig[p]] = p;
  }
  auto work = [&](const SparseVec& v) { return v.remapped([&](std::size_t i) { return to_work[i]; }); };

  SubspaceBasis closure(n);
  std::deque<SparseVec> pending;
  auto offer = [&](const SparseVec& v) {
    if (closure.insert(work(v))) pending.push_back(v);
  };
  for (const auto& g : generators) {
    auto [even, odd] = a.split(g);
    offer(even);
    offer(odd);
  }
  while (!pending.empty()) {
    const SparseVec v = std::move(pending.front());
    pending.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      const SparseVec e = SparseVec::unit(i);
      offer(a.multiply(e, v));
      offer(a.multiply(v, e));
    }
  }

  IdealQuotient out;
  std::vector<SparseVec> ideal_vectors;
  for (const auto& v : closure.vectors())
    ideal_vectors.push_back(v.remapped([&](std::size_t p) { return to_orig[p]; }));
  out.ideal = SubspaceBasis::span(n, ideal_vectors);

  std::vector<bool> pivot(n, false);
  for (auto p : closure.pivots()) pivot[to_orig[p]] = true;
  std::vector<std::size_t> kept;
  std::vector<std::size_t> kept_index(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) {
      kept_index[i] = kept.size();
      kept.push_back(i);
    }
  out.collapsed = n > 0 && pivot[a.unit()];

  auto project = [&](const SparseVec& v) {
    return closure.remainder(work(v)).remapped([&](std::size_t p) { return kept_index[to_orig[p]]; });
  };
  std::vector<SparseVec> columns;
  for (std::size_t i = 0; i < n; ++i) columns.push_back(project(SparseVec::unit(i, a.field().one())));
  out.projection = Matrix::from_columns(kept.size(), columns);

  std::vector<std::string> names;
  std::vector<int> parity;
  std::vector<SparseVec> table;
  for (auto i : kept) {
    names.push_back(a.basis_name(i));
    parity.push_back(a.parity(i));
  }
  for (auto i : kept)
    for (auto j : kept) table.push_back(project(a.product(i, j)));
  const std::size_t unit = kept.empty() ? SuperAlgebra::kNoUnit : kept_index[a.unit()];
  out.quotient = SuperAlgebra(a.name() + "_quot", a.field(), names, parity, unit, std::move(table));
  return out;
}

IdealQuotient supercommutative_quotient(const SuperAlgebra& a) {
  std::vector<SparseVec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) gens.push_back(a.supercommutator(i, j));
  auto q = graded_ideal_quotient(a, gens);
  q.quotient = q.quotient.renamed(a.name() + "_ab");
  return q;
}

SuperAlgebra compose(const SuperAlgebra& a, const SuperAlgebra& b, CompositionKind kind) {
  if (!(a.field() == b.field())) throw std::invalid_argument("cannot compose algebras over different fields");
  if (a.dim() == 0 || b.dim() == 0) throw std::invalid_argument("cannot compose with the zero algebra");
  const std::size_t da = a.dim(), db = b.dim();
  if (kind == CompositionKind::super_tensor) {
    std::vector<std::string> names;
    std::vector<int> parity;
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) {
        names.push_back(a.basis_name(i) + "_" + b.basis_name(j));
        parity.push_back((a.parity(i) + b.parity(j)) % 2);
      }
    std::vector<SparseVec> table;
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j)
        for (std::size_t k = 0; k < da; ++k)
          for (std::size_t l = 0; l < db; ++l) {
            SparseVec v;
            const Scalar sign = sign_of(b.parity(j) * a.parity(k));
            for (const auto& [s, x] : a.product(i, k))
              for (const auto& [t, y] : b.product(j, l)) v.add_term(s * db + t, sign * x * y);
            table.push_back(std::move(v));
          }
    return SuperAlgebra(a.name() + "_x_" + b.name(), a.field(), names, parity, a.unit() * db + b.unit(),
                        std::move(table));
  }

  // Product basis: index 0 = (1_A, 1_B), then A's non-unit basis, then B's basis.
  std::vector<std::size_t> a_slot(da), b_slot(db);
  std::vector<std::string> names{"unit"};
  std::vector<int> parity{0};
  for (std::size_t i = 0; i < da; ++i) {
    if (i == a.unit()) {
      a_slot[i] = 0;
      continue;
    }
    a_slot[i] = names.size();
    names.push_back("l_" + a.basis_name(i));
    parity.push_back(a.parity(i));
  }
  for (std::size_t j = 0; j < db; ++j) {
    b_slot[j] = names.size();
    names.push_back("r_" + b.basis_name(j));
    parity.push_back(b.parity(j));
  }
  const std::size_t n = names.size();
  // An element (x, y) of A × B in the product basis.
  auto coords = [&](const SparseVec& x, const SparseVec& y) {
    SparseVec v;
    const Scalar unit_coeff = x.at(a.unit());
    for (const auto& [i, c] : x) v.add_term(a_slot[i], c);
    for (const auto& [j, c] : y) v.add_term(b_slot[j], c);
    v.add_term(b_slot[b.unit()], -unit_coeff);
    return v;
  };
  // Basis element -> (A part, B part).
  auto components = [&](std::size_t idx) -> std::pair<SparseVec, SparseVec> {
    if (idx == 0) return {a.unit_vector(), b.unit_vector()};
    for (std::size_t i = 0; i < da; ++i)
      if (i != a.unit() && a_slot[i] == idx) return {SparseVec::unit(i), {}};
    for (std::size_t j = 0; j < db; ++j)
      if (b_slot[j] == idx) return {{}, SparseVec::unit(j)};
    throw std::logic_error("product basis index out of range");
  };
  std::vector<SparseVec> table;
  for (std::size_t x = 0; x < n; ++x) {
    const auto [xa, xb] = components(x);
    for (std::size_t y = 0; y < n; ++y) {
      const auto [ya, yb] = components(y);
      table.push_back(coords(a.multiply(xa, ya), b.multiply(xb, yb)));
    }
  }
  return SuperAlgebra(a.name() + "_times_" + b.name(), a.field(), names, parity, 0, std::move(table));
}

}  // namespace superstein
