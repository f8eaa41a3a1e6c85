#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "detrad/groebner.hpp"
#include "detrad/sparse.hpp"

namespace detrad {

enum class Mode { Generic, TheoremMain, DisjointSets, Antidiagonal, MaxMinor, TwoRowReduce };

std::string mode_name(Mode mode);
std::optional<Mode> mode_from_name(const std::string& name);

struct RelationSpec {
  std::vector<std::pair<int, int>> positions;
  std::string F_text;                    // over y1..yk
  std::vector<std::string> order_names;  // optional elimination order
};

// Parsed problem file: field, declared variables, matrix, minor size, and the
// mode-specific extras. See README for the grammar.
struct ProblemSpec {
  CoeffField field = CoeffField::rationals();
  std::vector<std::string> variable_names;
  int m = 0, n = 0, t = 0;
  std::vector<std::vector<std::string>> matrix_text;
  std::optional<std::vector<std::pair<int, int>>> zeros;
  std::vector<RelationSpec> relations;
  std::optional<Mode> mode;
};

ProblemSpec parse_problem_text(const std::string& text);
ProblemSpec parse_problem_file(const std::string& path);

enum class OutputFormat { Text, Records };

struct RunOptions {
  std::optional<Mode> mode;          // overrides the file's mode
  std::optional<bool> certify;       // default: on for DisjointSets/MaxMinor
  CoeffField cert_field = CoeffField::prime(32003);
  MonomialOrder::Kind cert_order = MonomialOrder::Kind::DegRevLex;
  Budget budget;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> golden_path;  // compare output, fail on mismatch
};

// Exit codes shared by run_problem and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitHypothesis = 3;
inline constexpr int kExitRelation = 4;
inline constexpr int kExitCertification = 5;
inline constexpr int kExitBudget = 6;
inline constexpr int kExitGolden = 7;

// Everything a run produced, for callers that want structure instead of text.
struct RunOutcome {
  Mode mode = Mode::Generic;
  std::shared_ptr<VarPool> pool;
  std::optional<PolyMatrix> X;
  std::optional<PolyMatrix> xprime;  // engaged when a reduction changed X
  RankedGeneratorSet gens;
  bool reduced_labels = false;  // q'_h instead of q_h
  std::optional<RadicalEqualReport> cert;
  std::vector<int> dropped_columns;  // TwoRowReduce only
};

// Serializations of an outcome; both are byte-deterministic.
std::string emit_text(const RunOutcome& outcome);
std::string emit_records(const RunOutcome& outcome);

// Executes a parsed problem. Writes the report to `out` and error text to
// `err`; returns one of the kExit* codes. Never throws for domain errors.
int run_problem(const ProblemSpec& spec, const RunOptions& options,
                std::ostream& out, std::ostream& err);

// As above but also exposes the outcome (on success).
int run_problem(const ProblemSpec& spec, const RunOptions& options,
                std::ostream& out, std::ostream& err,
                std::optional<RunOutcome>* outcome);

}  // namespace detrad
