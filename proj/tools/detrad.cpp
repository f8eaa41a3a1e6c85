// Command-line front end: parse a problem file, run the selected
// construction, print generators and the optional certification report.
#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "detrad/errors.hpp"
#include "detrad/problem.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "detrad: reduced generating sets, up to radical, for determinantal ideals\n"
      "of polynomial matrices with zero or algebraically dependent entries"};

  std::string spec_path;
  app.add_option("spec", spec_path, "problem file (see README for the grammar)")
      ->required();

  std::string mode_text;
  app.add_option("--mode", mode_text,
                 "Generic | TheoremMain | DisjointSets | Antidiagonal | MaxMinor | "
                 "TwoRowReduce (overrides the file)");

  bool certify = false, no_certify = false;
  app.add_flag("--certify", certify,
               "verify radical equality with a Groebner-basis certificate");
  app.add_flag("--no-certify", no_certify, "skip certification");

  std::string field_text = "gf:32003";
  app.add_option("--field", field_text,
                 "certification field: Q or gf:<prime> (default gf:32003)");

  std::string order_text = "degrevlex";
  app.add_option("--order", order_text,
                 "certification monomial order: degrevlex or lex");

  std::size_t budget = 200000;
  app.add_option("--budget", budget, "max Groebner pairs per membership check");

  std::string format_text = "text";
  app.add_option("--format", format_text, "output format: text or records");

  std::string golden_path;
  app.add_option("--golden", golden_path,
                 "compare output against this file and fail on mismatch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : detrad::kExitParse;
  }

  detrad::RunOptions options;
  try {
    if (!mode_text.empty()) {
      auto mode = detrad::mode_from_name(mode_text);
      if (!mode) throw detrad::ParseError("unknown mode '" + mode_text + "'");
      options.mode = mode;
    }
    if (certify && no_certify)
      throw detrad::ParseError("--certify and --no-certify are mutually exclusive");
    if (certify) options.certify = true;
    if (no_certify) options.certify = false;

    if (field_text == "Q") {
      options.cert_field = detrad::CoeffField::rationals();
    } else if (field_text.rfind("gf:", 0) == 0) {
      options.cert_field = detrad::CoeffField::prime(std::stoul(field_text.substr(3)));
    } else {
      throw detrad::ParseError("bad --field '" + field_text + "', expected Q or gf:<prime>");
    }

    if (order_text == "degrevlex")
      options.cert_order = detrad::MonomialOrder::Kind::DegRevLex;
    else if (order_text == "lex")
      options.cert_order = detrad::MonomialOrder::Kind::Lex;
    else
      throw detrad::ParseError("bad --order '" + order_text + "'");

    options.budget.max_pairs = budget;

    if (format_text == "text")
      options.format = detrad::OutputFormat::Text;
    else if (format_text == "records")
      options.format = detrad::OutputFormat::Records;
    else
      throw detrad::ParseError("bad --format '" + format_text + "'");

    if (!golden_path.empty()) options.golden_path = golden_path;

    detrad::ProblemSpec spec = detrad::parse_problem_file(spec_path);
    return detrad::run_problem(spec, options, std::cout, std::cerr);
  } catch (const detrad::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return detrad::kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return detrad::kExitInternal;
  }
}
