#include "superstein/report.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "superstein/algfile.hpp"
#include "superstein/cocycle22.hpp"
#include "superstein/errors.hpp"
#include "superstein/lie_superalgebra.hpp"
#include "superstein/steinberg.hpp"

namespace superstein {

namespace {

constexpr std::size_t kStGridMaxDim = 60;

const std::vector<MatrixShape>& grid_shapes() {
  static const std::vector<MatrixShape> shapes{{2, 1}, {3, 1}, {2, 2}, {3, 2}};
  return shapes;
}

template <class F>
Report timed(F&& build) {
  const auto start = std::chrono::steady_clock::now();
  Report r = build();
  const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
  r.set_runtime_ms(ms.count());
  return r;
}

Json algebra_inputs(const SuperAlgebra& a) {
  return Json{{"algebra", a.name()}, {"field", a.field().name()}, {"algebra_dim", a.dim()}};
}

std::string cell_label(const std::string& prefix, const SuperAlgebra& a, const MatrixShape& shape) {
  return prefix + "_" + shape.to_string() + "(" + a.name() + ")";
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(std::ostringstream& out, const Json& obj, const std::string& indent) {
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      out << indent << key << ":\n";
      render(out, value, indent + "  ");
    } else if (value.is_array()) {
      out << indent << key << ":";
      if (value.empty()) out << " (none)";
      out << "\n";
      for (const auto& item : value) out << indent << "  - " << scalar_text(item) << "\n";
    } else {
      out << indent << key << ": " << scalar_text(value) << "\n";
    }
  }
}

void render_report(std::ostringstream& out, const Json& j, const std::string& indent) {
  if (!j["inputs"].empty()) {
    out << indent << "inputs:\n";
    render(out, j["inputs"], indent + "  ");
  }
  if (!j["results"].empty()) {
    out << indent << "results:\n";
    render(out, j["results"], indent + "  ");
  }
  if (!j["checks"].empty()) {
    out << indent << "checks:\n";
    for (const auto& c : j["checks"]) {
      const std::string v = c["verdict"];
      out << indent << "  " << (v == "pass" ? "pass   " : v == "fail" ? "FAIL   " : "skipped") << " " << c["name"].get<std::string>();
      if (c.contains("expected")) out << "  [expected " << scalar_text(c["expected"]) << "]";
      if (c.contains("computed")) out << "  [computed " << scalar_text(c["computed"]) << "]";
      if (c.contains("witness")) out << "\n" << indent << "          witness: " << c["witness"].get<std::string>();
      if (c.contains("reason")) out << "\n" << indent << "          reason: " << c["reason"].get<std::string>();
      out << "\n";
    }
  }
  if (j.contains("sections"))
    for (const auto& s : j["sections"]) {
      out << indent << "[" << s["status"].get<std::string>() << "] " << s["title"].get<std::string>() << "  ("
          << s["runtime_ms"].get<double>() << " ms)\n";
      render_report(out, s, indent + "    ");
    }
}

SuperAlgebra with_table(const SuperAlgebra& a, std::vector<int> parity, std::vector<SparseVec> table) {
  return SuperAlgebra(a.name(), a.field(), a.basis_names(), std::move(parity), a.unit(), std::move(table));
}

std::vector<SparseVec> table_of(const SuperAlgebra& a) {
  std::vector<SparseVec> t;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t.push_back(a.product(i, j));
  return t;
}

std::vector<int> parities_of(const SuperAlgebra& a) {
  std::vector<int> p;
  for (std::size_t i = 0; i < a.dim(); ++i) p.push_back(a.parity(i));
  return p;
}

std::string first_issue(const ValidationReport& v, ValidationIssue::Kind kind) {
  for (const auto& i : v.issues)
    if (i.kind == kind) return i.message;
  return {};
}

// The sl_{m|n}(A) supertrace checks, shared by `sl` and the corpus grid.
void sl_checks(Report& r, const SuperAlgebra& a, const MatrixShape& shape, const std::string& prefix) {
  const GlLayout g(a, shape);
  const SlSpaces s = sl_space(a, shape);
  Json& res = prefix.empty() ? r.results() : r.results()[prefix];
  res["gl_dim"] = g.dim();
  res["derived_dim"] = s.derived.dim();
  res["trace_criterion_dim"] = s.trace_criterion.dim();

  const std::string p = prefix.empty() ? "" : prefix + ": ";
  if (s.equality_claimed)
    r.check(p + "[gl,gl] = {X : str X in [A,A]}", s.equal,
            s.equal ? "" : "dims " + std::to_string(s.derived.dim()) + " vs " + std::to_string(s.trace_criterion.dim()));
  else
    r.check(p + "[gl,gl] = {X : str X in [A,A]}", Verdict::skipped, "m = 0: only containment is claimed");
  r.check(p + "[gl,gl] contained in {X : str X in [A,A]}", s.contained);

  const SubspaceBasis comm = supercommutator_span(a);
  std::string bad;
  for (std::size_t x = 0; x < g.dim() && bad.empty(); ++x)
    for (std::size_t y = 0; y < g.dim(); ++y)
      if (!comm.contains(supertrace(g, gl_unit_bracket(g, x, y)))) {
        bad = "str[" + g.basis_name(x) + ", " + g.basis_name(y) + "] not in [A,A]";
        break;
      }
  r.check(p + "str of every basis bracket lies in [A,A]", bad.empty(), bad);

  // sl = [gl,gl]; perfect iff [sl,sl] spans it again
  const auto& basis = s.derived.vectors();
  SubspaceBasis square(g.dim());
  for (std::size_t i = 0; i < basis.size() && square.dim() < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) square.insert(gl_bracket(g, basis[i], basis[j]));
  res["sl_derived_dim"] = square.dim();
  r.check(p + "sl perfect", square.dim() == s.derived.dim(),
          "dim [sl,sl] = " + std::to_string(square.dim()) + " < " + std::to_string(s.derived.dim()));
}

void st_verify_checks(Report& r, const StModel& model, const std::string& p) {
  const StVerification v = verify_st(model);
  r.check(p + "defining relations of st", v.relations.pass, v.relations.witness);
  r.check(p + "grading, super skew-symmetry, super Jacobi", v.axioms.pass, v.axioms.witness);
  r.check(p + "bracket independent of the expansion index", v.expansion.pass, v.expansion.witness);
  r.check(p + "phi is a homomorphism", v.homomorphism.pass, v.homomorphism.witness);
  r.check(p + "nu is a section on the h-part", v.nu_section.pass, v.nu_section.witness);
}

KernelPhiReport kernel_checks(Report& r, const StModel& model, const std::string& p, Json& res) {
  const KernelPhiReport k = kernel_phi(model);
  res["kernel_dim"] = k.kernel.dim();
  res["hc1_dim"] = k.hc1_dim;
  r.check(p + "Ker phi = mu(HC_1(A))", k.hc1_match,
          "dim Ker phi = " + std::to_string(k.kernel.dim()) + ", dim HC_1 = " + std::to_string(k.hc1_dim));
  r.check(p + "Ker phi central", k.central, "a kernel vector has a nonzero bracket");
  const Check d = diagram_check(model);
  r.check(p + "d nu = str phi", d.pass, d.witness);
  return k;
}

void row_checks(Report& r, const UceVerdict& v, const std::string& p) {
  for (const ClaimRow& row : v.rows) {
    Json extra = Json::object();
    if (row.expected) extra["expected"] = *row.expected;
    if (row.computed) extra["computed"] = *row.computed;
    std::string detail = row.note;
    if (row.verdict == Verdict::fail && row.expected && row.computed)
      detail = "expected " + std::to_string(*row.expected) + ", computed " + std::to_string(*row.computed);
    if (row.verdict == Verdict::skipped && detail.empty()) detail = "no claim";
    r.check(p + row.claim, row.verdict, detail, extra);
  }
}

std::size_t ce_h1(const FinLieSuper& l, std::size_t max_wedge) {
  return l.dim() - rank(ce_boundary(l, 2, max_wedge));
}

}  // namespace

Report::Report(std::string command, std::string title) : command_(std::move(command)), title_(std::move(title)) {}

void Report::check(const std::string& name, Verdict verdict, const std::string& detail, Json extra) {
  Json c{{"name", name}, {"verdict", to_string(verdict)}};
  if (verdict == Verdict::fail) c["witness"] = detail.empty() ? "unspecified" : detail;
  if (verdict == Verdict::skipped) c["reason"] = detail;
  for (auto& [k, v] : extra.items()) c[k] = v;
  checks_.push_back(std::move(c));
}

void Report::add_section(Report section) { sections_.push_back(std::move(section)); }

void Report::absorb(const Report& other, const std::string& prefix) {
  for (Json c : other.checks_) {
    c["name"] = prefix + c["name"].get<std::string>();
    checks_.push_back(std::move(c));
  }
}

bool Report::failed() const {
  for (const auto& c : checks_)
    if (c["verdict"] == "fail") return true;
  return std::any_of(sections_.begin(), sections_.end(), [](const Report& s) { return s.failed(); });
}

Json Report::to_json() const {
  Json j;
  j["tool"] = "superstein";
  j["version"] = SUPERSTEIN_VERSION;
  j["command"] = command_;
  if (!invocation_.empty()) j["invocation"] = invocation_;
  if (!title_.empty()) j["title"] = title_;
  j["inputs"] = inputs_;
  j["results"] = results_;
  j["checks"] = checks_;
  if (!sections_.empty()) {
    j["sections"] = Json::array();
    for (const auto& s : sections_) j["sections"].push_back(s.to_json());
  }
  j["status"] = failed() ? "fail" : "pass";
  j["runtime_ms"] = runtime_ms_;
  return j;
}

std::string Report::to_text() const {
  const Json j = to_json();
  std::ostringstream out;
  out << "superstein " << SUPERSTEIN_VERSION << " " << command_;
  if (!title_.empty()) out << ": " << title_;
  out << "\n";
  if (!invocation_.empty()) out << "invocation: " << invocation_ << "\n";
  render_report(out, j, "");
  out << "status: " << j["status"].get<std::string>() << " (" << runtime_ms_ << " ms)\n";
  return out.str();
}

Report report_validate(const SuperAlgebra& a) {
  return timed([&] {
    Report r("validate");
    r.inputs() = algebra_inputs(a);
    const auto parity = parities_of(a);
    const auto odd = static_cast<std::size_t>(std::count(parity.begin(), parity.end(), 1));
    r.results()["even_dim"] = a.dim() - odd;
    r.results()["odd_dim"] = odd;
    r.results()["unit"] = a.unit() == SuperAlgebra::kNoUnit ? "none" : a.basis_name(a.unit());
    const ValidationReport v = validate(a);
    r.results()["issues"] = v.issues.size();
    for (auto [kind, name] : {std::pair{ValidationIssue::Kind::associativity, "associativity"},
                              std::pair{ValidationIssue::Kind::unit, "unit law"},
                              std::pair{ValidationIssue::Kind::grading, "products respect parity"}}) {
      const std::string w = first_issue(v, kind);
      r.check(name, w.empty(), w);
    }
    return r;
  });
}

Report report_hc(const SuperAlgebra& a, std::size_t degree, const ReportOptions& opt) {
  return timed([&] {
    Report r("hc");
    r.inputs() = algebra_inputs(a);
    r.inputs()["degree"] = degree;
    r.inputs()["max_chain"] = opt.max_chain;
    try {
      r.results()["hc_dim"] = hc_n(a, degree, opt.max_chain);
      if (degree == 1) {
        const HC1CrossCheck x = hc1_crosscheck(a, opt.max_chain);
        r.results()["pairing_route"] = x.pairing_route;
        r.results()["complex_route"] = x.complex_route;
        r.check("HC_1 pairing route = complex route", x.pass(),
                std::to_string(x.pairing_route) + " vs " + std::to_string(x.complex_route));
      }
    } catch (const SizeGuardError& e) {
      r.results()["hc_dim"] = nullptr;
      r.check("HC_" + std::to_string(degree), Verdict::skipped, std::string("size guard: ") + e.what());
    }
    return r;
  });
}

Report report_pairing(const SuperAlgebra& a) {
  return timed([&] {
    Report r("pairing");
    r.inputs() = algebra_inputs(a);
    const PairingModule p(a);
    const HC1Result h = hc1(p);
    std::vector<std::string> names(p.dim());
    for (std::size_t q = 0; q < p.dim(); ++q) {
      const auto [x, y] = p.representative(q);
      names[q] = "<<" + a.basis_name(x) + "," + a.basis_name(y) + ">>";
    }
    r.results()["pairing_dim"] = p.dim();
    r.results()["pairing_basis"] = names;
    r.results()["hc1_dim"] = h.dim;
    Json basis = Json::array();
    bool closed = true;
    for (const auto& v : h.basis.vectors()) {
      basis.push_back(format_vector(v, names));
      closed = closed && p.commutator(v).empty();
    }
    r.results()["hc1_basis"] = basis;
    r.check("commutator map vanishes on the HC_1 basis", closed);
    return r;
  });
}

Report report_sl(const SuperAlgebra& a, const MatrixShape& shape) {
  require_sl_shape(shape);
  return timed([&] {
    Report r("sl");
    r.inputs() = algebra_inputs(a);
    r.inputs()["shape"] = shape.to_string();
    sl_checks(r, a, shape, "");
    return r;
  });
}

Report report_st(const SuperAlgebra& a, const MatrixShape& shape, const ReportOptions& opt) {
  return timed([&] {
    Report r("st");
    r.inputs() = algebra_inputs(a);
    r.inputs()["shape"] = shape.to_string();
    r.inputs()["verify"] = opt.verify;
    const StModel model(a, shape, 1, opt.verify);
    r.results()["dim"] = model.dim();
    r.results()["f_dim"] = model.f_dim();
    r.results()["h_dim"] = model.h_dim();
    r.results()["d_dim"] = model.d_dim();
    r.results()["swapped_to"] = model.swapped() ? Json(model.shape().to_string()) : Json(nullptr);
    if (opt.verify) st_verify_checks(r, model, "");
    return r;
  });
}

Report report_kernel(const SuperAlgebra& a, const MatrixShape& shape) {
  return timed([&] {
    Report r("kernel");
    r.inputs() = algebra_inputs(a);
    r.inputs()["shape"] = shape.to_string();
    const StModel model(a, shape);
    r.results()["st_dim"] = model.dim();
    const KernelPhiReport k = kernel_checks(r, model, "", r.results());
    std::vector<std::string> names;
    for (std::size_t x = 0; x < model.dim(); ++x) names.push_back(model.basis_name(x));
    Json basis = Json::array();
    for (const auto& v : k.kernel.vectors()) basis.push_back(format_vector(v, names));
    r.results()["kernel_basis"] = basis;
    return r;
  });
}

Report report_homology(LieSource target, const SuperAlgebra& a, const MatrixShape& shape, const ReportOptions& opt) {
  return timed([&] {
    Report r("homology");
    r.inputs() = algebra_inputs(a);
    r.inputs()["target"] = to_string(target);
    r.inputs()["shape"] = shape.to_string();
    r.inputs()["max_wedge"] = opt.max_wedge;
    const UceVerdict v = uce_verdict(target, a, shape, opt.max_wedge);
    r.results()["lie"] = v.target;
    r.results()["dim"] = v.dim;
    if (v.report) {
      const HomologyReport& h = *v.report;
      r.results()["wedge2"] = h.wedge2;
      r.results()["wedge3"] = h.wedge3;
      r.results()["rank_d2"] = h.rank_d2;
      r.results()["rank_d3"] = h.rank_d3;
      r.results()["blocks"] = h.blocks;
      r.results()["h1"] = h.h1;
      r.results()["h2"] = h.h2;
    }
    r.results()["assumption"] = v.assumption;
    row_checks(r, v, "");
    return r;
  });
}

Report report_cocycle22(const SuperAlgebra& a) {
  return timed([&] {
    Report r("cocycle22");
    r.inputs() = algebra_inputs(a);
    r.inputs()["shape"] = "2|2";
    const StModel st(a, {2, 2});
    const CocycleTarget w = build_W(a);
    r.results()["st_dim"] = st.dim();
    r.results()["A0_dim"] = w.block_dim();
    r.results()["W_dim"] = w.dim();

    const CocycleVerdict v = verify_cocycle(st, w);
    r.check("psi super skew-symmetric", v.skew, v.message);
    r.check("cocycle identity J = 0", v.jacobi, v.message);

    const auto parity = parities_of(a);
    if (std::count(parity.begin(), parity.end(), 1) == 0 || w.dim() == 0) {
      r.check("sign mutation detected", Verdict::skipped,
              w.dim() == 0 ? "W = 0" : "A has no odd part, so the mutated sign coincides");
    } else {
      const CocycleVerdict m = verify_cocycle(st, w, true);
      r.check("sign mutation detected", !m.pass() && !m.witness.empty(), "mutated cocycle passed");
      if (!m.pass()) r.results()["mutation_witness"] = m.message;
    }

    try {
      const FinLieSuper sharp = build_st_sharp(st, w);
      r.results()["stsharp_dim"] = sharp.dim();
      r.check("st# grading, super skew-symmetry, super Jacobi", true);
      std::string bad;
      for (std::size_t x = st.dim(); x < sharp.dim() && bad.empty(); ++x)
        for (std::size_t y = 0; y < sharp.dim(); ++y)
          if (!sharp.bracket(x, y).empty()) {
            bad = "[" + sharp.basis_name(x) + ", " + sharp.basis_name(y) + "] != 0";
            break;
          }
      r.check("W central in st#", bad.empty(), bad);
    } catch (const ConstructionError& e) {
      r.check("st# grading, super skew-symmetry, super Jacobi", false, e.what());
    }
    return r;
  });
}

const std::vector<std::pair<std::string, std::string>>& invalid_documents() {
  static const std::vector<std::pair<std::string, std::string>> docs{
      {"unknown_name", "name bad\nfield Q\nbasis one:even th:odd\nunit one\nmul th th = 1*eta\n"},
      {"parity_typo", "name bad\nfield Q\nbasis one:even th:od\nunit one\n"},
      {"char2", "name bad\nfield Fp:2\nbasis one:even th:odd\nunit one\n"},
      {"nonassociative",
       "name bad\nfield Q\nbasis one:even x:even y:even\nunit one\nmul x x = 1*x\nmul y y = 1*y\nmul x y = 1*x\n"},
      {"missing_unit", "name bad\nfield Q\nbasis one:even th:odd\nmul one one = 1*one\n"},
  };
  return docs;
}

Json strip_timing(Json j) {
  if (j.is_object()) {
    j.erase("runtime_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

Report report_criterion(int k, const ReportOptions& opt) {
  return timed([&] {
    switch (k) {
      case 1: {
        Report r("criterion", "1. superalgebra corpus validity");
        for (const auto& name : corpus_names()) {
          const SuperAlgebra a = builtin(name);
          const ValidationReport v = validate(a);
          r.check(name + " validates", v.ok(), v.summary());

          // scaling a unit product breaks the unit law
          auto table = table_of(a);
          const std::size_t last = a.dim() - 1;
          table[a.unit() * a.dim() + last].scale(Scalar(2));
          const auto scaled = validate(with_table(a, parities_of(a), table));
          const std::string uw = first_issue(scaled, ValidationIssue::Kind::unit);
          r.check(name + " with 2*unit product rejected", !uw.empty(), "accepted");
          // an odd unit squares into the wrong parity
          auto parity = parities_of(a);
          parity[a.unit()] ^= 1;
          const auto flipped = validate(with_table(a, parity, table_of(a)));
          const std::string gw = first_issue(flipped, ValidationIssue::Kind::grading);
          r.check(name + " with odd unit rejected", !gw.empty(), "accepted");
          r.results()[name] = Json{{"unit_witness", uw}, {"grading_witness", gw}};
        }
        return r;
      }
      case 2: {
        Report r("criterion", "2. HC_1 by the pairing and the complex routes");
        const std::map<std::string, std::size_t> known{
            {"field", 0}, {"dual", 0}, {"trunc(3)", 0}, {"grassmann(1)", 1}, {"mat(2)", 0}};
        for (const auto& name : corpus_names()) {
          try {
            const HC1CrossCheck x = hc1_crosscheck(builtin(name), opt.max_chain);
            r.results()[name] = Json{{"pairing_route", x.pairing_route}, {"complex_route", x.complex_route}};
            r.check("HC_1(" + name + ") routes agree", x.pass(),
                    std::to_string(x.pairing_route) + " vs " + std::to_string(x.complex_route));
            if (auto it = known.find(name); it != known.end())
              r.check("dim HC_1(" + name + ") = " + std::to_string(it->second),
                      x.pairing_route == it->second ? Verdict::pass : Verdict::fail,
                      "computed " + std::to_string(x.pairing_route), Json{{"expected", it->second}, {"computed", x.pairing_route}});
          } catch (const SizeGuardError& e) {
            r.check("HC_1(" + name + ") routes agree", Verdict::skipped, std::string("size guard: ") + e.what());
          }
        }
        return r;
      }
      case 3: {
        Report r("criterion", "3. sl_{m|n}(A) supertrace criterion and perfectness");
        for (const auto& name : corpus_names())
          for (const auto& shape : grid_shapes()) {
            const SuperAlgebra a = builtin(name);
            sl_checks(r, a, shape, cell_label("sl", a, shape));
          }
        return r;
      }
      case 4: {
        Report r("criterion", "4. Steinberg certification (dim st <= 60)");
        for (const auto& name : corpus_names())
          for (const auto& shape : grid_shapes()) {
            const SuperAlgebra a = builtin(name);
            const std::string label = cell_label("st", a, shape);
            const std::size_t dim = StModel(a, shape, 1, false).dim();
            if (dim > kStGridMaxDim) {
              r.check(label, Verdict::skipped, "dim " + std::to_string(dim) + " > " + std::to_string(kStGridMaxDim));
              continue;
            }
            const StModel model(a, shape);
            r.results()[label]["dim"] = dim;
            st_verify_checks(r, model, label + ": ");
            kernel_checks(r, model, label + ": ", r.results()[label]);
          }
        return r;
      }
      case 5: {
        Report r("criterion", "5. st_{2|2} cocycle and st#");
        for (const char* name : {"field", "grassmann(1)"}) {
          const Report c = report_cocycle22(builtin(name));
          r.results()[name] = c.results();
          r.absorb(c, std::string(name) + ": ");
        }
        return r;
      }
      case 6: {
        Report r("criterion", "6. H2 certification matrix");
        struct Row {
          LieSource source;
          const char* algebra;
          MatrixShape shape;
        };
        const std::vector<Row> rows{
            {LieSource::st, "field", {2, 1}},        {LieSource::st, "grassmann(1)", {2, 1}},
            {LieSource::st, "field", {3, 1}},        {LieSource::st, "grassmann(1)", {3, 1}},
            {LieSource::st, "field", {2, 2}},        {LieSource::st_sharp, "field", {2, 2}},
            {LieSource::st, "field", {3, 2}},        {LieSource::sl, "grassmann(1)", {3, 2}},
            // A_0 = 0 here, so W = 0 and st_{2|2} should already be centrally closed
            {LieSource::st, "mat(2)", {2, 2}},
        };
        std::size_t ran = 0;
        for (const Row& row : rows) {
          const SuperAlgebra a = builtin(row.algebra);
          const UceVerdict v = uce_verdict(row.source, a, row.shape, opt.max_wedge);
          if (v.report) {
            ++ran;
            r.results()[v.target] = Json{{"dim", v.dim}, {"h1", v.report->h1}, {"h2", v.report->h2}};
          }
          row_checks(r, v, v.target + ": ");
        }
        // fixed values independent of the claim matrix
        r.check("dim W(field) = 2", build_W(builtin("field")).dim() == 2);
        r.check("dim HC_1(grassmann(1)) = 1", hc1(builtin("grassmann(1)")).dim == 1);
        r.results()["rows_run"] = ran;
        r.check("at least five rows ran", ran >= 5, std::to_string(ran) + " rows ran");
        r.results()["assumption"] = kUceAssumption;
        return r;
      }
      case 7: {
        Report r("criterion", "7. H1 = 0 on perfect corpus Lie superalgebras");
        for (const auto& name : corpus_names())
          for (const auto& shape : grid_shapes()) {
            const SuperAlgebra a = builtin(name);
            for (LieSource s : {LieSource::sl, LieSource::st}) {
              const std::string label = cell_label(to_string(s), a, shape);
              const std::size_t dim =
                  s == LieSource::st ? StModel(a, shape, 1, false).dim() : GlLayout(a, shape).dim() - a.dim() + supercommutator_span(a).dim();
              if (dim > kStGridMaxDim) continue;
              const std::size_t h1 = ce_h1(concretize(s, a, shape), opt.max_wedge);
              r.results()[label] = h1;
              r.check("H1(" + label + ") = 0", h1 == 0, "H1 = " + std::to_string(h1));
            }
          }
        for (const char* name : {"field", "grassmann(1)"}) {
          const std::size_t h1 = ce_h1(build_st_sharp(builtin(name)), opt.max_wedge);
          r.results()[std::string("stsharp_2|2(") + name + ")"] = h1;
          r.check(std::string("H1(stsharp_2|2(") + name + ")) = 0", h1 == 0, "H1 = " + std::to_string(h1));
        }
        const std::size_t gl = ce_h1(concretize_gl(builtin("field"), {2, 1}), opt.max_wedge);
        r.results()["gl_2|1(field)"] = gl;
        r.check("H1(gl_2|1(field)) != 0", gl != 0, "H1 = 0");
        return r;
      }
      case 8: {
        Report r("criterion", "8. algebra document round-trip");
        for (const auto& name : corpus_names()) {
          const SuperAlgebra a = builtin(name);
          const std::string text = serialize_algebra(a);
          std::string problem;
          try {
            const SuperAlgebra b = parse_algebra(text);
            if (serialize_algebra(b) != text) problem = "serialize(parse(text)) differs";
            for (std::size_t i = 0; i < a.dim() && problem.empty(); ++i)
              for (std::size_t j = 0; j < a.dim(); ++j)
                if (!(a.product(i, j) == b.product(i, j)) || a.parity(i) != b.parity(i)) {
                  problem = "product " + a.basis_name(i) + "*" + a.basis_name(j) + " changed";
                  break;
                }
          } catch (const std::exception& e) {
            problem = e.what();
          }
          r.check(name + " round-trips", problem.empty(), problem);
        }
        for (const auto& [label, text] : invalid_documents()) {
          std::string error;
          try {
            parse_algebra(text);
          } catch (const AlgFileError& e) {
            error = e.what();
          }
          r.results()["rejections"][label] = error;
          r.check(label + " document rejected", !error.empty(), "accepted");
        }
        const FinLieSuper l = concretize_sl(builtin("grassmann(1)"), {2, 1});
        const FinLieSuper back = parse_lie(export_lie(l));
        bool same = back.dim() == l.dim();
        for (std::size_t i = 0; i < l.dim() && same; ++i)
          for (std::size_t j = 0; j < l.dim() && same; ++j) same = back.bracket(i, j) == l.bracket(i, j);
        r.check("Lie export of sl_2|1(grassmann(1)) round-trips", same);
        return r;
      }
      default:
        throw std::invalid_argument("criterion must lie in 1.." + std::to_string(kCriteria));
    }
  });
}

Report report_corpus(const ReportOptions& opt) {
  return timed([&] {
    Report r("corpus");
    r.inputs()["algebras"] = corpus_names();
    r.inputs()["max_wedge"] = opt.max_wedge;
    r.inputs()["max_chain"] = opt.max_chain;
    for (int k = 1; k <= kCriteria; ++k) r.add_section(report_criterion(k, opt));
    return r;
  });
}

}  // namespace superstein
