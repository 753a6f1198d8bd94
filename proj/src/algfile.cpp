#include "superstein/algfile.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace superstein {

AlgFileError::AlgFileError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message
                              : message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

using Kind = AlgFileError::Kind;

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s) out += ident_char(c) ? c : '_';
  if (out.empty() || !ident_start(out[0])) out = "a" + out;
  return out;
}

// Character cursor over one line; columns are 1-based.
class Cursor {
public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  std::size_t column() const { return pos_ + 1; }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  [[noreturn]] void fail(Kind kind, const std::string& message) const { throw AlgFileError(kind, line_, column(), message); }
  [[noreturn]] void fail_at(std::size_t column, Kind kind, const std::string& message) const {
    throw AlgFileError(kind, line_, column, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(Kind::syntax, std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string ident() {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail(Kind::syntax, "expected an identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  // A run of non-space characters.
  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(Kind::syntax, "unexpected end of line");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string coefficient() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

struct BasisTable {
  std::vector<std::string> names;
  std::vector<int> parity;
  std::map<std::string, std::size_t> index;

  void declare(Cursor& c) {
    while (!c.done()) {
      const std::size_t col = c.column();
      const std::string id = c.ident();
      c.expect(':');
      const std::size_t pcol = c.column();
      const std::string p = c.ident();
      if (p != "even" && p != "odd") c.fail_at(pcol, Kind::syntax, "parity must be 'even' or 'odd', got '" + p + "'");
      if (!index.emplace(id, names.size()).second) c.fail_at(col, Kind::duplicate, "duplicate basis name '" + id + "'");
      names.push_back(id);
      parity.push_back(p == "odd" ? 1 : 0);
    }
  }
  std::size_t lookup(Cursor& c) const {
    const std::size_t col = c.column();
    const std::string id = c.ident();
    auto it = index.find(id);
    if (it == index.end()) c.fail_at(col, Kind::unknown_name, "unknown basis name '" + id + "'");
    return it->second;
  }
};

Scalar read_coefficient(Cursor& c) {
  c.skip_space();
  const std::size_t col = c.column();
  const std::string text = c.coefficient();
  try {
    return parse_scalar(text);
  } catch (const std::exception&) {
    c.fail_at(col, Kind::syntax, "bad coefficient '" + text + "'");
  }
}

// <coeff>*<ident> [(+|-) <coeff>*<ident> ...]
SparseVec read_combination(Cursor& c, const BasisTable& basis, const Field& field) {
  SparseVec v;
  Scalar sign(1);
  while (true) {
    const Scalar coeff = read_coefficient(c);
    c.expect('*');
    v.add_term(basis.lookup(c), field.from(sign * coeff));
    if (c.peek('+')) {
      c.expect('+');
      sign = Scalar(1);
    } else if (c.peek('-')) {
      c.expect('-');
      sign = Scalar(-1);
    } else {
      break;
    }
  }
  if (!c.done()) c.fail(Kind::syntax, "unexpected text after expression");
  return v;
}

Field read_field(Cursor& c) {
  const std::size_t col = (c.skip_space(), c.column());
  const std::string text = c.word();
  try {
    return Field::parse(text);
  } catch (const std::exception& e) {
    c.fail_at(col, Kind::field, e.what());
  }
}

std::string combination_text(const SparseVec& v, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& [k, c] : v) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + "*" + names[k];
  }
  return out;
}

}  // namespace

SuperAlgebra parse_algebra(std::string_view text, bool check) {
  std::optional<std::string> name;
  std::optional<Field> field;
  std::optional<std::size_t> unit;
  BasisTable basis;
  struct Mul {
    std::size_t line, column, i, j;
    SparseVec value;
  };
  std::vector<Mul> muls;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;

  for (const Line& line : split_lines(text)) {
    Cursor c(line.text, line.number);
    if (c.done()) continue;
    const std::size_t kcol = c.column();
    const std::string keyword = c.ident();
    if (keyword == "name") {
      if (name) c.fail_at(kcol, Kind::duplicate, "second 'name' declaration");
      name = c.ident();
    } else if (keyword == "field") {
      if (field) c.fail_at(kcol, Kind::duplicate, "second 'field' declaration");
      if (!basis.names.empty()) c.fail_at(kcol, Kind::syntax, "'field' must precede 'basis'");
      field = read_field(c);
    } else if (keyword == "basis") {
      if (!muls.empty() || unit) c.fail_at(kcol, Kind::syntax, "'basis' must precede 'unit' and 'mul'");
      basis.declare(c);
    } else if (keyword == "unit") {
      if (unit) c.fail_at(kcol, Kind::duplicate, "second 'unit' declaration");
      unit = basis.lookup(c);
    } else if (keyword == "mul") {
      const std::size_t i = basis.lookup(c);
      const std::size_t j = basis.lookup(c);
      c.expect('=');
      if (!seen.emplace(std::make_pair(i, j), line.number).second)
        c.fail_at(kcol, Kind::duplicate, "product " + basis.names[i] + " " + basis.names[j] + " given twice");
      muls.push_back({line.number, kcol, i, j, read_combination(c, basis, field.value_or(Field::rationals()))});
      continue;
    } else {
      c.fail_at(kcol, Kind::syntax, "unknown keyword '" + keyword + "'");
    }
    if (!c.done()) c.fail(Kind::syntax, "unexpected text after declaration");
  }

  if (basis.names.empty()) throw AlgFileError(Kind::missing, 0, 0, "missing basis");
  if (!unit) throw AlgFileError(Kind::missing, 0, 0, "missing unit");
  const Field f = field.value_or(Field::rationals());
  const std::size_t d = basis.names.size();
  std::vector<SparseVec> table(d * d);
  for (auto& m : muls) table[m.i * d + m.j] = std::move(m.value);
  for (std::size_t k = 0; k < d; ++k) {
    if (!seen.count({*unit, k})) table[*unit * d + k] = SparseVec::unit(k, f.one());
    if (!seen.count({k, *unit})) table[k * d + *unit] = SparseVec::unit(k, f.one());
  }
  SuperAlgebra a(name.value_or("algebra"), f, basis.names, basis.parity, *unit, std::move(table));
  if (!check) return a;
  if (const auto report = validate(a); !report.ok())
    throw AlgFileError(Kind::validation, 0, 0, "invalid algebra: " + report.summary());
  return a;
}

SuperAlgebra load_algebra(const std::string& source, bool check) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return builtin(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw std::invalid_argument("cannot open algebra file '" + source + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str(), check);
}

std::string serialize_algebra(const SuperAlgebra& a) {
  std::ostringstream out;
  out << "name " << sanitize(a.name()) << "\n";
  out << "field " << a.field().name() << "\n";
  out << "basis";
  for (std::size_t i = 0; i < a.dim(); ++i) out << ' ' << a.basis_name(i) << ':' << (a.parity(i) ? "odd" : "even");
  out << "\n";
  if (a.unit() != SuperAlgebra::kNoUnit) out << "unit " << a.basis_name(a.unit()) << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const SparseVec& p = a.product(i, j);
      if (p.empty()) continue;
      out << "mul " << a.basis_name(i) << ' ' << a.basis_name(j) << " = " << combination_text(p, a.basis_names())
          << "\n";
    }
  return out.str();
}

std::string export_lie(const FinLieSuper& l) {
  std::vector<std::string> ids(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i) ids[i] = "b" + std::to_string(i + 1);
  std::ostringstream out;
  out << "# " << l.label() << "\n";
  for (std::size_t i = 0; i < l.dim(); ++i) out << "# " << ids[i] << " = " << l.basis_name(i) << "\n";
  out << "lie " << sanitize(l.label()) << "\n";
  out << "field " << l.field().name() << "\n";
  for (std::size_t i = 0; i < l.dim(); ++i) out << "basis " << ids[i] << ':' << (l.parity(i) ? "odd" : "even") << "\n";
  if (l.has_weights())
    for (std::size_t i = 0; i < l.dim(); ++i) {
      out << "weight " << ids[i];
      for (int w : l.weight(i)) out << ' ' << w;
      out << "\n";
    }
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i; j < l.dim(); ++j) {
      const SparseVec& v = l.bracket(i, j);
      if (v.empty()) continue;
      out << "[" << ids[i] << ", " << ids[j] << "] = " << combination_text(v, ids) << "\n";
    }
  return out.str();
}

FinLieSuper parse_lie(std::string_view text) {
  std::optional<std::string> label;
  std::optional<Field> field;
  BasisTable basis;
  std::map<std::size_t, std::vector<int>> weights;
  std::map<std::pair<std::size_t, std::size_t>, SparseVec> brackets;

  for (const Line& line : split_lines(text)) {
    Cursor c(line.text, line.number);
    if (c.done()) continue;
    const std::size_t kcol = c.column();
    if (c.peek('[')) {
      c.expect('[');
      const std::size_t i = basis.lookup(c);
      c.expect(',');
      const std::size_t j = basis.lookup(c);
      c.expect(']');
      c.expect('=');
      const SparseVec v = read_combination(c, basis, field.value_or(Field::rationals()));
      if (!brackets.emplace(std::make_pair(i, j), v).second)
        c.fail_at(kcol, Kind::duplicate, "bracket given twice");
      continue;
    }
    const std::string keyword = c.ident();
    if (keyword == "lie") {
      label = c.ident();
    } else if (keyword == "field") {
      field = read_field(c);
    } else if (keyword == "basis") {
      basis.declare(c);
    } else if (keyword == "weight") {
      const std::size_t i = basis.lookup(c);
      std::vector<int> w;
      while (!c.done()) {
        const std::size_t col = c.column();
        const std::string t = c.word();
        try {
          w.push_back(std::stoi(t));
        } catch (const std::exception&) {
          c.fail_at(col, Kind::syntax, "bad weight '" + t + "'");
        }
      }
      weights[i] = std::move(w);
    } else {
      c.fail_at(kcol, Kind::syntax, "unknown keyword '" + keyword + "'");
    }
    if (!c.done()) c.fail(Kind::syntax, "unexpected text after declaration");
  }
  if (basis.names.empty()) throw AlgFileError(Kind::missing, 0, 0, "missing basis");
  const std::size_t d = basis.names.size();
  std::vector<SparseVec> table(d * d);
  for (const auto& [key, v] : brackets) {
    const auto [i, j] = key;
    if (i > j && brackets.count({j, i})) continue;  // keep the listed i <= j entry
    table[i * d + j] = v;
    if (i != j) table[j * d + i] = v.scaled(-sign_of(basis.parity[i] * basis.parity[j]));
  }
  std::vector<FinLieSuper::Weight> w;
  if (!weights.empty()) {
    if (weights.size() != d) throw AlgFileError(Kind::missing, 0, 0, "weights must be given for every basis element");
    for (auto& [i, wt] : weights) w.push_back(wt);
  }
  FinLieSuper l(label.value_or("lie"), field.value_or(Field::rationals()), basis.names, basis.parity,
                std::move(table), std::move(w));
  if (auto issue = check_lie_axioms(l)) throw AlgFileError(Kind::validation, 0, 0, "invalid Lie superalgebra: " + issue->message);
  return l;
}

}  // namespace superstein
