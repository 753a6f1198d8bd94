#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "superstein/cyclic.hpp"
#include "superstein/homology.hpp"
#include "superstein/matrix_superlie.hpp"
#include "superstein/superalgebra.hpp"

namespace superstein {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  std::size_t max_wedge = kDefaultMaxWedge;
  std::size_t max_chain = kDefaultMaxChain;
  bool verify = false;
};

/// Certification report shared by the text and JSON front ends. Every check
/// carries a verdict; failures carry a witness, skips a reason.
class Report {
public:
  explicit Report(std::string command, std::string title = {});

  Json& inputs() { return inputs_; }
  Json& results() { return results_; }
  const Json& results() const { return results_; }
  void check(const std::string& name, Verdict verdict, const std::string& detail = {}, Json extra = Json::object());
  void check(const std::string& name, bool pass, const std::string& witness = {}) {
    check(name, pass ? Verdict::pass : Verdict::fail, witness);
  }
  void add_section(Report section);
  /// Appends the checks of `other`, names prefixed.
  void absorb(const Report& other, const std::string& prefix);
  void set_runtime_ms(double ms) { runtime_ms_ = ms; }
  /// The command line that produced the report, echoed verbatim.
  void set_invocation(std::string line) { invocation_ = std::move(line); }

  const std::string& command() const { return command_; }
  bool failed() const;
  Json to_json() const;
  std::string to_text() const;

private:
  std::string command_, title_, invocation_;
  Json inputs_ = Json::object(), results_ = Json::object(), checks_ = Json::array();
  std::vector<Report> sections_;
  double runtime_ms_ = 0;
};

Report report_validate(const SuperAlgebra& a);
/// HC_n; degree 1 also compares the pairing and complex routes.
Report report_hc(const SuperAlgebra& a, std::size_t degree, const ReportOptions& opt = {});
Report report_pairing(const SuperAlgebra& a);
/// [gl,gl] against the supertrace criterion, str of brackets in [A,A], sl perfect.
Report report_sl(const SuperAlgebra& a, const MatrixShape& shape);
Report report_st(const SuperAlgebra& a, const MatrixShape& shape, const ReportOptions& opt = {});
Report report_kernel(const SuperAlgebra& a, const MatrixShape& shape);
Report report_homology(LieSource target, const SuperAlgebra& a, const MatrixShape& shape,
                       const ReportOptions& opt = {});
Report report_cocycle22(const SuperAlgebra& a);

inline constexpr int kCriteria = 8;
/// One acceptance criterion (1..8) evaluated over the builtin corpus.
Report report_criterion(int k, const ReportOptions& opt = {});
/// All criteria as sections.
Report report_corpus(const ReportOptions& opt = {});

/// Malformed documents every parser must reject: (label, text).
const std::vector<std::pair<std::string, std::string>>& invalid_documents();

/// Drops every "runtime_ms" member, recursively.
Json strip_timing(Json j);

}  // namespace superstein
