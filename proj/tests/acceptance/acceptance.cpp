// Acceptance suite: one PASS/FAIL line per criterion.
//
// A criterion passes when its report has no failed check and it finishes
// inside its time budget. Criterion 8 additionally reads the shipped document
// corpus and runs `superstein corpus` twice, comparing the JSON reports with
// timing fields removed.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "superstein/algfile.hpp"
#include "superstein/report.hpp"

using namespace superstein;
namespace fs = std::filesystem;

namespace {

// milliseconds
constexpr std::array<double, kCriteria + 1> kBudget{0, 1e3, 5e3, 30e3, 120e3, 60e3, 8 * 300e3, 30e3, 60e3};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

// Shipped documents, the negative set, and CLI determinism.
std::vector<std::string> corpus_files_and_cli() {
  std::vector<std::string> problems;
  const fs::path dir = SUPERSTEIN_DATA_DIR;
  std::size_t good = 0, bad = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() != ".alg") continue;
    ++good;
    const std::string text = slurp(entry.path());
    try {
      if (serialize_algebra(parse_algebra(text)) != text) problems.push_back(entry.path().filename().string() + " is not canonical");
    } catch (const std::exception& e) {
      problems.push_back(entry.path().filename().string() + ": " + e.what());
    }
  }
  for (const auto& entry : fs::directory_iterator(dir / "invalid")) {
    ++bad;
    try {
      parse_algebra(slurp(entry.path()));
      problems.push_back(entry.path().filename().string() + " was accepted");
    } catch (const AlgFileError&) {
    }
  }
  if (good != corpus_names().size()) problems.push_back("expected one document per corpus algebra");
  if (bad == 0) problems.push_back("no negative documents");

  const std::string cmd = std::string("\"") + SUPERSTEIN_CLI + "\" corpus --emit json";
  const Run first = run(cmd), second = run(cmd);
  if (first.status != 0 || second.status != 0) {
    problems.push_back("corpus exited with " + std::to_string(first.status) + "/" + std::to_string(second.status));
  } else {
    try {
      if (strip_timing(Json::parse(first.out)) != strip_timing(Json::parse(second.out)))
        problems.push_back("corpus reports differ beyond timing fields");
    } catch (const std::exception& e) {
      problems.push_back(std::string("corpus output is not JSON: ") + e.what());
    }
  }
  return problems;
}

}  // namespace

int main() {
  int failures = 0;
  for (int k = 1; k <= kCriteria; ++k) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> problems;
    std::string title;
    std::size_t checks = 0;
    try {
      const Report r = report_criterion(k);
      const Json j = r.to_json();
      title = j["title"].get<std::string>();
      title = title.substr(title.find(". ") + 2);
      checks = j["checks"].size();
      for (const auto& c : j["checks"])
        if (c["verdict"] == "fail") problems.push_back(c["name"].get<std::string>() + ": " + c["witness"].get<std::string>());
      if (k == 8)
        for (auto& p : corpus_files_and_cli()) problems.push_back(std::move(p));
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    if (ms.count() > kBudget[k]) problems.push_back("over the time budget of " + std::to_string(kBudget[k] / 1e3) + " s");

    std::printf("criterion %d: %s  %s  [%zu checks, %.1f ms]\n", k, problems.empty() ? "PASS" : "FAIL", title.c_str(),
                checks, ms.count());
    for (const auto& p : problems) std::printf("    %s\n", p.c_str());
    failures += !problems.empty();
  }
  std::printf("%d of %d criteria passed\n", kCriteria - failures, kCriteria);
  return failures == 0 ? 0 : 1;
}
