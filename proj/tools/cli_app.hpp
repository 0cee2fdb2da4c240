#pragma once

// Command-line front end. Kept as a header with an injectable entry point
// (argument vector plus output streams) so the test suite can drive it
// in-process and compare bytes.
//
// Exit codes: 0 success / check holds, 1 check fails, 2 bad input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lefzeta/lefzeta.hpp"

namespace lefzeta::cli {

inline io::json read_json_input(const std::string& path) {
  if (path == "-") return io::json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  return io::json::parse(in);
}

inline void emit(std::ostream& out, const io::json& j) { out << j.dump() << "\n"; }

inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Exact Lefschetz zeta functions, duality checks, and knot invariants"};
  app.require_subcommand(1);
  int check_rc = 0;

  std::string action_path, zeta_path, boundary_path, triple_path;
  std::string f_path, p_path, lambda_text = "1", braid_text;
  int series_n = 0, terms = 16, chi = 0;

  CLI::App* zeta_cmd = app.add_subcommand("zeta", "Zeta functions of graded actions");
  zeta_cmd->require_subcommand(1);

  CLI::App* compute = zeta_cmd->add_subcommand(
      "compute", "Zeta function of a graded action, as num/den coefficient arrays");
  compute->add_option("action", action_path, "graded action JSON file, or - for stdin")
      ->required();
  compute->add_option("--series", series_n,
                      "also expand the zeta function to this many series terms");
  compute->callback([&] {
    const GradedAction a = io::action_from_json(read_json_input(action_path));
    const ZetaFunction zf = zeta_from_action(a);
    io::json j = io::to_json(zf);
    if (series_n > 0) j["series"] = io::series_to_json(zeta_series_from_action(a, series_n));
    emit(out, j);
  });

  CLI::App* lef = zeta_cmd->add_subcommand(
      "lefschetz", "Lefschetz numbers of the iterates of a graded action");
  lef->add_option("action", action_path, "graded action JSON file, or - for stdin")
      ->required();
  lef->add_option("-k,--terms", terms, "number of iterates (default 16)");
  lef->callback([&] {
    const GradedAction a = io::action_from_json(read_json_input(action_path));
    if (terms <= 0) throw std::invalid_argument("term count must be positive");
    io::json arr = io::json::array();
    for (int k = 1; k <= terms; ++k) arr.push_back(io::to_json(lefschetz_number(a, k)));
    emit(out, arr);
  });

  CLI::App* verify_fe = zeta_cmd->add_subcommand(
      "verify-fe", "Check the boundary functional equation for a zeta pair");
  verify_fe->add_option("zeta", zeta_path, "zeta JSON file, or - for stdin")->required();
  verify_fe->add_option("--boundary", boundary_path, "boundary zeta JSON file")
      ->required();
  verify_fe->add_option("--lambda", lambda_text, "degree, as p/q")->required();
  verify_fe->add_option("--chi", chi, "Euler characteristic")->required();
  verify_fe->callback([&] {
    const ZetaFunction zf = io::zeta_from_json(read_json_input(zeta_path));
    const ZetaFunction zb = io::zeta_from_json(read_json_input(boundary_path));
    const FunctionalEquationReport report =
        verify_functional_equation(zf, zb, parse_rational(lambda_text), chi);
    emit(out, io::to_json(report));
    check_rc = report.holds ? 0 : 1;
  });

  CLI::App* verify_closed = zeta_cmd->add_subcommand(
      "verify-closed", "Check the closed functional equation for a zeta function");
  verify_closed->add_option("zeta", zeta_path, "zeta JSON file, or - for stdin")
      ->required();
  verify_closed->add_option("--lambda", lambda_text, "degree, as p/q")->required();
  verify_closed->add_option("--chi", chi, "Euler characteristic")->required();
  verify_closed->callback([&] {
    const ZetaFunction zf = io::zeta_from_json(read_json_input(zeta_path));
    const FunctionalEquationReport report =
        verify_closed_functional_equation(zf, parse_rational(lambda_text), chi);
    emit(out, io::to_json(report));
    check_rc = report.holds ? 0 : 1;
  });

  CLI::App* duality_cmd = app.add_subcommand("duality", "Pairing adjoints and identities");
  duality_cmd->require_subcommand(1);

  CLI::App* dcheck = duality_cmd->add_subcommand(
      "check", "Check the determinant product and characteristic identities");
  dcheck->add_option("triple", triple_path, "pairing triple JSON file, or - for stdin")
      ->required();
  dcheck->callback([&] {
    const PairingTriple t = io::triple_from_json(read_json_input(triple_path));
    const bool dp = check_det_product(t);
    const bool ci = check_char_identity(t);
    emit(out, io::json{{"holds", dp && ci}, {"det_product", dp}, {"char_identity", ci}});
    check_rc = (dp && ci) ? 0 : 1;
  });

  CLI::App* adjoint = duality_cmd->add_subcommand(
      "adjoint", "Matrix paired to f by a nondegenerate form, as a matrix");
  adjoint->add_option("f", f_path, "matrix JSON file")->required();
  adjoint->add_option("P", p_path, "pairing matrix JSON file")->required();
  adjoint->add_option("--lambda", lambda_text, "degree, as p/q")->required();
  adjoint->callback([&] {
    const RatMatrix f = io::matrix_from_json(read_json_input(f_path));
    const RatMatrix p = io::matrix_from_json(read_json_input(p_path));
    emit(out, io::to_json(pairing_adjoint(f, p, parse_rational(lambda_text))));
  });

  CLI::App* knot_cmd = app.add_subcommand("knot", "Knot invariants from braid words");
  knot_cmd->require_subcommand(1);

  CLI::App* kalex = knot_cmd->add_subcommand(
      "alexander", "Alexander polynomial of a braid closure");
  kalex->add_option("braid", braid_text, "braid word, e.g. \"1 -2 1 -2\"")->required();
  kalex->callback([&] {
    emit(out, io::to_json(alexander_from_braid(parse_braid(braid_text))));
  });

  CLI::App* kzeta = knot_cmd->add_subcommand(
      "zeta", "Zeta function of the covering translation of a braid closure");
  kzeta->add_option("braid", braid_text, "braid word")->required();
  kzeta->callback([&] {
    emit(out, io::to_json(zeta_from_alexander(alexander_from_braid(parse_braid(braid_text)))));
  });

  CLI::App* klef = knot_cmd->add_subcommand(
      "lefschetz", "Lefschetz numbers of covering translation iterates");
  klef->add_option("braid", braid_text, "braid word")->required();
  klef->add_option("-N,--terms", terms, "number of iterates (default 16)");
  klef->callback([&] {
    if (terms <= 0) throw std::invalid_argument("term count must be positive");
    const AlexanderPoly d = alexander_from_braid(parse_braid(braid_text));
    emit(out, io::series_to_json(knot_lefschetz_numbers(d, terms)));
  });

  CLI::App* kverify = knot_cmd->add_subcommand(
      "verify", "Check the functional equation for a braid closure");
  kverify->add_option("braid", braid_text, "braid word")->required();
  kverify->callback([&] {
    const AlexanderPoly d = alexander_from_braid(parse_braid(braid_text));
    const FunctionalEquationReport report = verify_knot_functional_equation(d);
    emit(out, io::to_json(report));
    check_rc = report.holds ? 0 : 1;
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return check_rc;
}

}  // namespace lefzeta::cli
