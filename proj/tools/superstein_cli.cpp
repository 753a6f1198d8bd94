// superstein: certification reports for Lie superalgebras over superalgebras.
//
//   superstein <command> [options] [--emit text|json]
//
// Exit status: 0 when no check fails, 1 on a failed check, 2 on bad input.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "superstein/algfile.hpp"
#include "superstein/errors.hpp"
#include "superstein/report.hpp"

using namespace superstein;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Args {
  std::string algebra;
  std::string shape;
  std::string target;
  std::string emit = "text";
  std::size_t degree = 1;
  ReportOptions opt;
};

std::string invocation;

int emit(Report r, const std::string& mode) {
  r.set_invocation(invocation);
  if (mode == "json")
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.failed() ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification toolkit for Lie superalgebras, Steinberg superalgebras and cyclic homology"};
  app.set_version_flag("--version", std::string("superstein ") + SUPERSTEIN_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Args args;
  app.add_option("--emit", args.emit, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-wedge", args.opt.max_wedge, "Largest exterior power the homology routines build")
      ->capture_default_str();
  app.add_option("--max-chain", args.opt.max_chain, "Largest tensor power the cyclic complex builds")
      ->capture_default_str();

  const auto algebra_option = [&](CLI::App* sub) {
    sub->add_option("--algebra", args.algebra, "Algebra document path or builtin:NAME")->required();
  };
  const auto shape_option = [&](CLI::App* sub) {
    sub->add_option("--shape", args.shape, "Matrix shape m|n (or mxn)")->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check associativity, unit law and grading");
  validate_cmd->add_option("source", args.algebra, "Algebra document path or builtin:NAME")->required();

  auto* hc_cmd = app.add_subcommand("hc", "Dimension of HC_n; degree 1 cross-checks both routes");
  algebra_option(hc_cmd);
  hc_cmd->add_option("--degree", args.degree, "Degree n")->capture_default_str();

  auto* pairing_cmd = app.add_subcommand("pairing", "<<A,A>> and a basis of HC_1");
  algebra_option(pairing_cmd);

  auto* sl_cmd = app.add_subcommand("sl", "[gl,gl] against the supertrace criterion");
  algebra_option(sl_cmd);
  shape_option(sl_cmd);

  auto* st_cmd = app.add_subcommand("st", "Steinberg model dimensions");
  algebra_option(st_cmd);
  shape_option(st_cmd);
  st_cmd->add_flag("--verify", args.opt.verify, "Run the relation, Jacobi and expansion-index suites");

  auto* kernel_cmd = app.add_subcommand("kernel", "Ker(st -> sl), HC_1 match and centrality");
  algebra_option(kernel_cmd);
  shape_option(kernel_cmd);

  auto* homology_cmd = app.add_subcommand("homology", "H1 and H2 with the universal central extension claims");
  algebra_option(homology_cmd);
  shape_option(homology_cmd);
  homology_cmd->add_option("--target", args.target, "Lie superalgebra")
      ->required()
      ->check(CLI::IsMember({"gl", "sl", "st", "stsharp", "st_sharp"}));

  auto* cocycle_cmd = app.add_subcommand("cocycle22", "The st_{2|2} cocycle and st#");
  algebra_option(cocycle_cmd);

  auto* corpus_cmd = app.add_subcommand("corpus", "Acceptance matrix over the builtin algebras");

  for (int i = 0; i < argc; ++i) invocation += (i ? " " : "") + std::string(i ? argv[i] : "superstein");
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    const auto shape = [&] { return MatrixShape::parse(args.shape); };
    if (validate_cmd->parsed()) return emit(report_validate(load_algebra(args.algebra, false)), args.emit);
    if (corpus_cmd->parsed()) return emit(report_corpus(args.opt), args.emit);

    const SuperAlgebra a = load_algebra(args.algebra);
    if (hc_cmd->parsed()) return emit(report_hc(a, args.degree, args.opt), args.emit);
    if (pairing_cmd->parsed()) return emit(report_pairing(a), args.emit);
    if (sl_cmd->parsed()) return emit(report_sl(a, shape()), args.emit);
    if (st_cmd->parsed()) return emit(report_st(a, shape(), args.opt), args.emit);
    if (kernel_cmd->parsed()) return emit(report_kernel(a, shape()), args.emit);
    if (homology_cmd->parsed())
      return emit(report_homology(parse_lie_source(args.target), a, shape(), args.opt), args.emit);
    if (cocycle_cmd->parsed()) return emit(report_cocycle22(a), args.emit);
  } catch (const AlgFileError& e) {
    std::cerr << "superstein: " << args.algebra << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const ConstructionError& e) {
    std::cerr << "superstein: construction failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "superstein: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
