#include "detrad/problem.hpp"

#include <fstream>
#include <json.hpp>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "detrad/errors.hpp"
#include "detrad/parser.hpp"

namespace detrad {

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::Generic: return "Generic";
    case Mode::TheoremMain: return "TheoremMain";
    case Mode::DisjointSets: return "DisjointSets";
    case Mode::Antidiagonal: return "Antidiagonal";
    case Mode::MaxMinor: return "MaxMinor";
    case Mode::TwoRowReduce: return "TwoRowReduce";
  }
  return "?";
}

std::optional<Mode> mode_from_name(const std::string& name) {
  for (Mode m : {Mode::Generic, Mode::TheoremMain, Mode::DisjointSets,
                 Mode::Antidiagonal, Mode::MaxMinor, Mode::TwoRowReduce})
    if (mode_name(m) == name) return m;
  return std::nullopt;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

CoeffField parse_field_name(const std::string& text) {
  if (text == "Q") return CoeffField::rationals();
  if (text.rfind("gf:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad field '" + text + "', expected Q or gf:<prime>");
    try {
      return CoeffField::prime(std::stoul(digits));
    } catch (const InvalidArgumentError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("bad field '" + text + "', expected Q or gf:<prime>");
}

// "(r,c)" with optional spaces.
std::pair<int, int> parse_position(const std::string& tok) {
  std::string s = strip(tok);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    throw ParseError("bad position '" + tok + "', expected (row,col)");
  std::string inner = s.substr(1, s.size() - 2);
  std::size_t comma = inner.find(',');
  if (comma == std::string::npos)
    throw ParseError("bad position '" + tok + "', expected (row,col)");
  try {
    int r = std::stoi(strip(inner.substr(0, comma)));
    int c = std::stoi(strip(inner.substr(comma + 1)));
    return {r, c};
  } catch (const std::exception&) {
    throw ParseError("bad position '" + tok + "', expected (row,col)");
  }
}

std::vector<std::pair<int, int>> parse_position_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    cur += c;
    if (depth == 0 && c == ')') {
      out.push_back(parse_position(strip(cur)));
      cur.clear();
    }
  }
  if (!strip(cur).empty())
    throw ParseError("trailing text in position list: '" + strip(cur) + "'");
  if (depth != 0) throw ParseError("unbalanced parentheses in position list");
  return out;
}

}  // namespace

ProblemSpec parse_problem_text(const std::string& text) {
  ProblemSpec spec;
  bool saw_field = false, saw_t = false, saw_vars = false, saw_matrix = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };

  std::vector<std::string> pending_matrix;
  bool in_matrix = false;
  int matrix_m = 0, matrix_n = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    if (in_matrix) {
      if (line == "end") {
        in_matrix = false;
        if (static_cast<int>(pending_matrix.size()) != matrix_m)
          fail("matrix declared " + std::to_string(matrix_m) + " rows, got " +
               std::to_string(pending_matrix.size()));
        for (const std::string& row_text : pending_matrix) {
          std::vector<std::string> row;
          std::string cur;
          for (char c : row_text) {
            if (c == ',') {
              row.push_back(strip(cur));
              cur.clear();
            } else {
              cur += c;
            }
          }
          row.push_back(strip(cur));
          if (static_cast<int>(row.size()) != matrix_n)
            fail("matrix row has " + std::to_string(row.size()) +
                 " entries, expected " + std::to_string(matrix_n));
          spec.matrix_text.push_back(std::move(row));
        }
        spec.m = matrix_m;
        spec.n = matrix_n;
        saw_matrix = true;
      } else {
        pending_matrix.push_back(line);
      }
      continue;
    }

    std::size_t sp = line.find_first_of(" \t");
    std::string key = sp == std::string::npos ? line : line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : strip(line.substr(sp));

    if (key == "field") {
      spec.field = parse_field_name(rest);
      saw_field = true;
    } else if (key == "t") {
      try {
        spec.t = std::stoi(rest);
      } catch (const std::exception&) {
        fail("bad t '" + rest + "'");
      }
      saw_t = true;
    } else if (key == "variables") {
      spec.variable_names = split_ws(rest);
      if (spec.variable_names.empty()) fail("empty variable list");
      saw_vars = true;
    } else if (key == "mode") {
      auto m = mode_from_name(rest);
      if (!m) fail("unknown mode '" + rest + "'");
      spec.mode = m;
    } else if (key == "matrix") {
      auto dims = split_ws(rest);
      if (dims.size() != 2) fail("expected 'matrix <m> <n>'");
      try {
        matrix_m = std::stoi(dims[0]);
        matrix_n = std::stoi(dims[1]);
      } catch (const std::exception&) {
        fail("bad matrix dimensions");
      }
      if (matrix_m < 1 || matrix_n < 1) fail("matrix dimensions must be positive");
      in_matrix = true;
      pending_matrix.clear();
    } else if (key == "zeros") {
      spec.zeros = parse_position_list(rest);
    } else if (key == "relation") {
      // relation (r,c) (r,c) ... : F [: elimination order]
      std::size_t colon = rest.find(':');
      if (colon == std::string::npos)
        fail("expected 'relation <positions> : <F> [: <order>]'");
      RelationSpec rel;
      rel.positions = parse_position_list(strip(rest.substr(0, colon)));
      if (rel.positions.empty()) fail("relation needs at least one position");
      std::string tail = rest.substr(colon + 1);
      std::size_t colon2 = tail.find(':');
      if (colon2 == std::string::npos) {
        rel.F_text = strip(tail);
      } else {
        rel.F_text = strip(tail.substr(0, colon2));
        rel.order_names = split_ws(strip(tail.substr(colon2 + 1)));
      }
      if (rel.F_text.empty()) fail("relation polynomial is empty");
      spec.relations.push_back(std::move(rel));
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (in_matrix) throw ParseError("matrix block not closed with 'end'");
  if (!saw_vars) throw ParseError("missing 'variables' line");
  if (!saw_t) throw ParseError("missing 't' line");
  if (!saw_matrix) throw ParseError("missing 'matrix' block");
  (void)saw_field;  // field defaults to Q
  return spec;
}

ProblemSpec parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

namespace {

std::string matrix_lines(const PolyMatrix& X, const VarPool& pool,
                         const std::string& indent) {
  std::string out;
  for (int r = 1; r <= X.rows(); ++r) {
    out += indent + "[";
    for (int c = 1; c <= X.cols(); ++c) {
      if (c > 1) out += ", ";
      out += X.entry(r, c).to_string(pool);
    }
    out += "]\n";
  }
  return out;
}

std::string minor_sum_label(const RankedGenerator& g) {
  std::string out;
  for (std::size_t i = 0; i < g.summands.size(); ++i) {
    if (i) out += " + ";
    out += g.summands[i].to_string();
  }
  return out;
}

std::string cert_lines(const RadicalEqualReport& report) {
  std::string out;
  out += "certification: field " + report.field.to_string() + ", order " +
         report.order_name + "\n";
  for (const auto& rec : report.forward)
    out += "  " + rec.label + " in radical(generators): " +
           (rec.member ? "yes" : "NO") + " (basis " + std::to_string(rec.basis_size) +
           ", pairs " + std::to_string(rec.pairs) + ")\n";
  for (const auto& rec : report.backward)
    out += "  " + rec.label + " in radical(minors): " +
           (rec.member ? "yes" : "NO") + " (basis " + std::to_string(rec.basis_size) +
           ", pairs " + std::to_string(rec.pairs) + ")\n";
  out += "  result: " + std::string(report.equal ? "equal" : "NOT equal") + "\n";
  return out;
}

}  // namespace

std::string emit_text(const RunOutcome& outcome) {
  const VarPool& pool = *outcome.pool;
  std::string out;
  out += "mode: " + mode_name(outcome.mode) + "\n";
  out += "field: " + outcome.X->field().to_string() + "\n";
  out += "matrix: " + std::to_string(outcome.X->rows()) + " x " +
         std::to_string(outcome.X->cols()) +
         ", t = " + std::to_string(outcome.X->minor_size()) + "\n";
  out += "X:\n" + matrix_lines(*outcome.X, pool, "  ");
  if (!outcome.dropped_columns.empty()) {
    out += "dropped zero columns:";
    for (int c : outcome.dropped_columns) out += " " + std::to_string(c);
    out += "\n";
  }
  if (outcome.xprime) {
    out += "X':\n" + matrix_lines(*outcome.xprime, pool, "  ");
  }
  const std::string label = outcome.reduced_labels ? "q'_" : "q_";
  out += "generators (" + std::to_string(outcome.gens.items.size()) + "):";
  if (outcome.gens.items.empty()) {
    out += " none\n";
  } else {
    out += "\n";
    for (const auto& g : outcome.gens.items)
      out += "  " + label + std::to_string(g.rank) + " = " + minor_sum_label(g) +
             " = " + g.poly.to_string(pool) + "\n";
  }
  if (outcome.cert) out += cert_lines(*outcome.cert);
  return out;
}

std::string emit_records(const RunOutcome& outcome) {
  using json = nlohmann::ordered_json;
  const VarPool& pool = *outcome.pool;
  json doc;
  doc["mode"] = mode_name(outcome.mode);
  doc["field"] = outcome.X->field().to_string();
  doc["m"] = outcome.X->rows();
  doc["n"] = outcome.X->cols();
  doc["t"] = outcome.X->minor_size();
  auto matrix_json = [&pool](const PolyMatrix& M) {
    json rows = json::array();
    for (int r = 1; r <= M.rows(); ++r) {
      json row = json::array();
      for (int c = 1; c <= M.cols(); ++c) row.push_back(M.entry(r, c).to_string(pool));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  doc["matrix"] = matrix_json(*outcome.X);
  if (!outcome.dropped_columns.empty())
    doc["dropped_columns"] = outcome.dropped_columns;
  if (outcome.xprime) doc["xprime"] = matrix_json(*outcome.xprime);
  json gens = json::array();
  for (const auto& g : outcome.gens.items) {
    json item;
    item["rank"] = g.rank;
    json minors = json::array();
    for (const auto& d : g.summands) {
      json m;
      m["rows"] = d.row_indices();
      m["cols"] = d.col_indices();
      minors.push_back(std::move(m));
    }
    item["minors"] = std::move(minors);
    item["minor_sum"] = minor_sum_label(g);
    item["poly"] = g.poly.to_string(pool);
    gens.push_back(std::move(item));
  }
  doc["generators"] = std::move(gens);
  if (outcome.cert) {
    json cert;
    cert["field"] = outcome.cert->field.to_string();
    cert["order"] = outcome.cert->order_name;
    cert["equal"] = outcome.cert->equal;
    auto records_json = [](const std::vector<MembershipRecord>& records) {
      json arr = json::array();
      for (const auto& rec : records) {
        json r;
        r["label"] = rec.label;
        r["member"] = rec.member;
        r["basis"] = rec.basis_size;
        r["pairs"] = rec.pairs;
        arr.push_back(std::move(r));
      }
      return arr;
    };
    cert["forward"] = records_json(outcome.cert->forward);
    cert["backward"] = records_json(outcome.cert->backward);
    doc["certification"] = std::move(cert);
  }
  return doc.dump(2) + "\n";
}

namespace {

struct BuiltProblem {
  std::shared_ptr<VarPool> pool;
  PolyMatrix X;
  std::vector<DependenceRelation> relations;
  std::vector<std::vector<Variable>> elimination_orders;
  ZeroPattern zeros;
};

BuiltProblem build_problem(const ProblemSpec& spec) {
  auto pool = std::make_shared<VarPool>();
  for (const std::string& name : spec.variable_names) pool->intern(name);
  if (pool->size() != spec.variable_names.size())
    throw ParseError("duplicate variable declarations");

  VarResolver matrix_vars = declared_vars(*pool);
  std::vector<std::vector<Polynomial>> grid;
  grid.reserve(spec.matrix_text.size());
  for (const auto& row_text : spec.matrix_text) {
    std::vector<Polynomial> row;
    row.reserve(row_text.size());
    for (const std::string& cell : row_text)
      row.push_back(parse_polynomial(cell, spec.field, matrix_vars));
    grid.push_back(std::move(row));
  }
  PolyMatrix X(spec.m, spec.n, spec.t, std::move(grid));

  BuiltProblem built{pool, std::move(X), {}, {}, {}};

  for (const RelationSpec& rs : spec.relations) {
    std::map<std::string, Variable> names;
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < rs.positions.size(); ++i) {
      std::string yname = "y" + std::to_string(i + 1);
      Variable v = pool->fresh(yname);
      names.emplace(yname, v);
      vars.push_back(v);
    }
    VarResolver relation_vars = [&names, &rs](const std::string& name) {
      auto it = names.find(name);
      if (it == names.end())
        throw ParseError("relation polynomial may only use y1..y" +
                         std::to_string(rs.positions.size()) + ", got '" + name + "'");
      return it->second;
    };
    Polynomial F = parse_polynomial(rs.F_text, spec.field, relation_vars);
    std::vector<Variable> order;
    for (const std::string& name : rs.order_names) {
      auto it = names.find(name);
      if (it == names.end())
        throw ParseError("elimination order names an unknown relation variable '" +
                         name + "'");
      order.push_back(it->second);
    }
    built.relations.push_back(DependenceRelation{rs.positions, std::move(vars), std::move(F)});
    built.elimination_orders.push_back(std::move(order));
  }

  if (spec.zeros) {
    built.zeros.zeros = *spec.zeros;
  } else {
    for (int r = 1; r <= built.X.rows(); ++r)
      for (int c = 1; c <= built.X.cols(); ++c)
        if (built.X.entry(r, c).is_zero()) built.zeros.zeros.push_back({r, c});
  }
  return built;
}

bool inside_tworow_corner(const std::pair<int, int>& pos, const PolyMatrix& X) {
  return pos.second >= X.cols() - 1;
}

RunOutcome dispatch(Mode mode, const BuiltProblem& built) {
  RunOutcome outcome;
  outcome.mode = mode;
  outcome.pool = built.pool;
  outcome.X = built.X;
  const PolyMatrix& X = built.X;

  switch (mode) {
    case Mode::Generic: {
      outcome.gens = rank_slice_prefix(context_of(X).top_rank(), X);
      outcome.reduced_labels = false;
      break;
    }
    case Mode::TheoremMain: {
      if (built.relations.size() != 1)
        throw RelationError("mode TheoremMain needs exactly one relation, got " +
                            std::to_string(built.relations.size()));
      ReduceResult r = reduce_single_dependence(X, built.relations[0],
                                                built.elimination_orders[0]);
      outcome.xprime = std::move(r.xprime);
      outcome.gens = std::move(r.gens);
      outcome.reduced_labels = true;
      break;
    }
    case Mode::DisjointSets: {
      if (built.relations.empty())
        throw RelationError("mode DisjointSets needs at least one relation");
      ReduceResult r = reduce_disjoint_dependences(X, built.relations,
                                                   built.elimination_orders);
      outcome.xprime = std::move(r.xprime);
      outcome.gens = std::move(r.gens);
      outcome.reduced_labels = true;
      break;
    }
    case Mode::Antidiagonal: {
      ReduceResult r = antidiagonal_reduce(X, built.zeros);
      outcome.xprime = std::move(r.xprime);
      outcome.gens = std::move(r.gens);
      outcome.reduced_labels = true;
      break;
    }
    case Mode::MaxMinor: {
      ReduceResult r = maxminor_reduce(X, built.zeros);
      outcome.xprime = std::move(r.xprime);
      outcome.gens = std::move(r.gens);
      outcome.reduced_labels = true;
      break;
    }
    case Mode::TwoRowReduce: {
      if (X.rows() != 2 || X.minor_size() != 2)
        throw HypothesisError("mode TwoRowReduce requires m = t = 2, got m=" +
                              std::to_string(X.rows()) + ", t=" +
                              std::to_string(X.minor_size()));
      for (const auto& pos : built.zeros.zeros)
        if (inside_tworow_corner(pos, X))
          throw HypothesisError("zero at (" + std::to_string(pos.first) + "," +
                                std::to_string(pos.second) +
                                ") lies inside the corner minor [1 2 | " +
                                std::to_string(X.cols() - 1) + " " +
                                std::to_string(X.cols()) + "]");
      PolyMatrix reduced = drop_zero_columns(X);
      // remap zero pattern to the surviving columns
      std::vector<int> col_map(static_cast<std::size_t>(X.cols()) + 1, 0);
      {
        int next = 1;
        for (int c = 1; c <= X.cols(); ++c) {
          bool zero = true;
          for (int r = 1; r <= X.rows(); ++r)
            if (!X.entry(r, c).is_zero()) zero = false;
          if (!zero)
            col_map[static_cast<std::size_t>(c)] = next++;
          else
            outcome.dropped_columns.push_back(c);
        }
      }
      ZeroPattern remaining;
      for (const auto& [r, c] : built.zeros.zeros)
        if (col_map[static_cast<std::size_t>(c)] != 0)
          remaining.zeros.push_back({r, col_map[static_cast<std::size_t>(c)]});
      ReduceResult res = maxminor_reduce(reduced, remaining);
      outcome.xprime = std::move(res.xprime);
      outcome.gens = std::move(res.gens);
      outcome.reduced_labels = true;
      break;
    }
  }
  return outcome;
}

void certify(RunOutcome& outcome, const RunOptions& options) {
  const PolyMatrix& X = *outcome.X;
  PosetContext ctx = context_of(X);
  std::vector<Polynomial> minors;
  std::vector<std::string> minor_labels;
  for (const MinorIndex& d : minors_of_size(ctx.t, ctx)) {
    Polynomial det = X.submatrix_det(d.row_indices(), d.col_indices());
    if (det.is_zero()) continue;  // zero minors contribute nothing
    minors.push_back(std::move(det));
    minor_labels.push_back(d.to_string());
  }
  std::vector<Polynomial> gens;
  std::vector<std::string> gen_labels;
  const std::string label = outcome.reduced_labels ? "q'_" : "q_";
  for (const auto& g : outcome.gens.items) {
    gens.push_back(g.poly);
    gen_labels.push_back(label + std::to_string(g.rank));
  }
  Ideal I(X.field(), std::move(minors));
  Ideal J(X.field(), std::move(gens));
  if (options.cert_field != X.field()) {
    I = I.map_field(options.cert_field);
    J = J.map_field(options.cert_field);
  }
  outcome.cert = radical_equal_report(I, J, *outcome.pool, options.budget,
                                      options.cert_order, minor_labels, gen_labels);
}

}  // namespace

int run_problem(const ProblemSpec& spec, const RunOptions& options,
                std::ostream& out, std::ostream& err,
                std::optional<RunOutcome>* outcome_out) {
  try {
    Mode mode;
    if (options.mode)
      mode = *options.mode;
    else if (spec.mode)
      mode = *spec.mode;
    else
      throw ParseError("no mode given (set 'mode' in the file or pass --mode)");

    BuiltProblem built = build_problem(spec);
    RunOutcome outcome = dispatch(mode, built);

    bool certify_default =
        mode == Mode::DisjointSets || mode == Mode::MaxMinor || mode == Mode::TwoRowReduce;
    bool do_certify = options.certify.value_or(certify_default);
    if (do_certify) certify(outcome, options);

    std::string text = options.format == OutputFormat::Text ? emit_text(outcome)
                                                            : emit_records(outcome);
    if (options.golden_path) {
      std::ifstream golden(*options.golden_path);
      if (!golden) {
        err << "error: cannot open golden file '" << *options.golden_path << "'\n";
        return kExitGolden;
      }
      std::ostringstream buf;
      buf << golden.rdbuf();
      if (buf.str() != text) {
        out << text;
        err << "error: output differs from golden file '" << *options.golden_path
            << "'\n";
        return kExitGolden;
      }
    }
    out << text;
    if (outcome_out) *outcome_out = outcome;
    if (outcome.cert && !outcome.cert->equal) {
      err << "error: certification failed; the radicals differ\n";
      return kExitCertification;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const HypothesisError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const RelationError& e) {
    err << "relation error: " << e.what() << "\n";
    return kExitRelation;
  } catch (const BudgetError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int run_problem(const ProblemSpec& spec, const RunOptions& options,
                std::ostream& out, std::ostream& err) {
  return run_problem(spec, options, out, err, nullptr);
}

}  // namespace detrad
