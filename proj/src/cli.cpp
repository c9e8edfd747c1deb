#include "rrefkit/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rrefkit/error.hpp"
#include "rrefkit/gauche.hpp"
#include "rrefkit/nullspace.hpp"
#include "rrefkit/row_reduction.hpp"
#include "rrefkit/systems.hpp"
#include "rrefkit/text.hpp"

namespace rrefkit::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr Subcommand kAllSubcommands[] = {
    Subcommand::Rref,  Subcommand::Pivots, Subcommand::Basis,  Subcommand::Null,  Subcommand::Graph,
    Subcommand::Check, Subcommand::Equiv,  Subcommand::Script, Subcommand::Solve, Subcommand::Syseq,
};

std::string_view describe(Subcommand s) {
  switch (s) {
    case Subcommand::Rref: return "print the reduced row echelon form";
    case Subcommand::Pivots: return "print the pivot column indices";
    case Subcommand::Basis: return "print the keeper columns, one per line";
    case Subcommand::Null: return "print the null space basis, one vector per line";
    case Subcommand::Graph: return "print the null space as pivot-variable relations";
    case Subcommand::Check: return "test whether the matrix is already in RREF";
    case Subcommand::Equiv: return "test whether two matrices are row equivalent";
    case Subcommand::Script: return "print row operations reducing the matrix";
    case Subcommand::Solve: return "solve an augmented system";
    case Subcommand::Syseq: return "test whether two systems are solution equivalent";
  }
  return "";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json scalars_json(std::span<const Scalar> entries) {
  json out = json::array();
  for (const Scalar& s : entries) out.push_back(format_scalar(s));
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(scalars_json(m.row(r)));
  return rows;
}

json op_json(const RowOp& op) {
  if (const auto* s = std::get_if<Swap>(&op)) return {{"op", "swap"}, {"i", s->i}, {"j", s->j}};
  if (const auto* s = std::get_if<Scale>(&op)) return {{"op", "scale"}, {"i", s->i}, {"c", format_scalar(s->c)}};
  const auto& a = std::get<Axpy>(op);
  return {{"op", "axpy"}, {"i", a.target}, {"j", a.source}, {"c", format_scalar(a.c)}};
}

std::string join_indices(const std::vector<Index>& indices) {
  std::string out;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(indices[k]);
  }
  return out;
}

// Output of one subcommand, in both renderings.
struct Outcome {
  std::string plain;
  json data;
  int status = kSuccess;
};

Outcome verdict(bool value, std::string_view yes, std::string_view no, const char* key) {
  return {std::string(value ? yes : no) + "\n", {{key, value}}, value ? kSuccess : kFalseVerdict};
}

Outcome execute(const CliConfig& config) {
  const FieldSpec& field = config.field;
  const auto matrix_input = [&](std::size_t k) { return parse_matrix(read_file(config.inputs[k]), field); };
  const auto system_input = [&](std::size_t k) { return parse_system(read_file(config.inputs[k]), field); };

  switch (config.subcommand) {
    case Subcommand::Rref: {
      const GaucheResult g = gauche_rref(matrix_input(0));
      return {format_matrix(g.rref), {{"field", field.name()}, {"rref", matrix_json(g.rref)}, {"pivots", g.pivot_set}}};
    }
    case Subcommand::Pivots: {
      const auto pivots = gauche_basis(matrix_input(0));
      return {join_indices(pivots) + "\n", {{"pivots", pivots}}};
    }
    case Subcommand::Basis: {
      const Matrix m = matrix_input(0);
      const auto indices = gauche_basis(m);
      Outcome o{{}, {{"basis_indices", indices}, {"columns", json::array()}}};
      for (Index j : indices) {
        const Vector col = column(m, j);
        o.plain += format_vector(col) + "\n";
        o.data["columns"].push_back(scalars_json(col.entries()));
      }
      return o;
    }
    case Subcommand::Null: {
      const NullBasis nb = null_basis(matrix_input(0));
      Outcome o{{}, {{"free_indices", nb.free_indices}, {"basis", json::array()}}};
      for (const Vector& v : nb.basis) {
        o.plain += format_vector(v) + "\n";
        o.data["basis"].push_back(scalars_json(v.entries()));
      }
      return o;
    }
    case Subcommand::Graph: {
      const GraphRelations rel = graph_relations(matrix_input(0));
      Outcome o{{}, {{"free_indices", rel.free_indices}, {"relations", json::array()}}};
      for (std::size_t i = 0; i < rel.pivot_exprs.size(); ++i) {
        const std::string line = format_relation(rel.pivot_exprs[i], rel.free_indices);
        o.plain += line + "\n";
        o.data["relations"].push_back({{"pivot", rel.pivot_exprs[i].pivot},
                                       {"coefficients", scalars_json(rel.pivot_exprs[i].coefficients)},
                                       {"text", line}});
      }
      return o;
    }
    case Subcommand::Check: {
      const RrefCheck check = is_rref(matrix_input(0));
      if (check.ok()) return {"RREF\n", {{"rref", true}, {"violated", nullptr}}};
      const std::string name(condition_name(*check.violated));
      return {"NOT RREF: " + name + "\n", {{"rref", false}, {"violated", name}}, kFalseVerdict};
    }
    case Subcommand::Equiv:
      return verdict(row_equivalent(matrix_input(0), matrix_input(1)), "ROW-EQUIVALENT",
                     "NOT ROW-EQUIVALENT", "row_equivalent");
    case Subcommand::Script: {
      const auto ops = equivalence_script(matrix_input(0));
      Outcome o{{}, {{"ops", json::array()}}};
      for (const RowOp& op : ops) {
        o.plain += format_row_op(op) + "\n";
        o.data["ops"].push_back(op_json(op));
      }
      return o;
    }
    case Subcommand::Solve: {
      const SolutionSet solution = solve(system_input(0));
      if (std::holds_alternative<Inconsistent>(solution)) {
        return {"INCONSISTENT\n", {{"consistent", false}}, kFalseVerdict};
      }
      const auto& affine = std::get<Affine>(solution);
      Outcome o{"CONSISTENT\nparticular: " + format_vector(affine.particular) + "\n",
                {{"consistent", true},
                 {"particular", scalars_json(affine.particular.entries())},
                 {"free_indices", affine.homogeneous.free_indices},
                 {"homogeneous", json::array()}}};
      for (const Vector& h : affine.homogeneous.basis) {
        o.plain += "homogeneous: " + format_vector(h) + "\n";
        o.data["homogeneous"].push_back(scalars_json(h.entries()));
      }
      return o;
    }
    case Subcommand::Syseq:
      return verdict(solution_equivalent(system_input(0), system_input(1)), "SOLUTION-EQUIVALENT",
                     "NOT SOLUTION-EQUIVALENT", "solution_equivalent");
  }
  throw InvalidOperation("unknown subcommand");
}

}  // namespace

std::string_view subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::Rref: return "rref";
    case Subcommand::Pivots: return "pivots";
    case Subcommand::Basis: return "basis";
    case Subcommand::Null: return "null";
    case Subcommand::Graph: return "graph";
    case Subcommand::Check: return "check";
    case Subcommand::Equiv: return "equiv";
    case Subcommand::Script: return "script";
    case Subcommand::Solve: return "solve";
    case Subcommand::Syseq: return "syseq";
  }
  return "";
}

std::size_t input_count(Subcommand s) {
  return s == Subcommand::Equiv || s == Subcommand::Syseq ? 2 : 1;
}

FieldSpec parse_field_flag(std::string_view flag) {
  if (flag == "q" || flag == "Q") return FieldSpec::rationals();
  constexpr std::string_view prefix = "gf:";
  if (flag.substr(0, prefix.size()) != prefix) {
    throw ParseError("field must be 'q' or 'gf:<p>', got '" + std::string(flag) + "'");
  }
  const std::string_view digits = flag.substr(prefix.size());
  std::uint64_t p = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed modulus in '" + std::string(flag) + "'");
  }
  return FieldSpec::prime_field(p);
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  if (config.inputs.size() != input_count(config.subcommand)) {
    err << "error: " << subcommand_name(config.subcommand) << " takes "
        << input_count(config.subcommand) << " input file(s)\n";
    return kUsageError;
  }
  try {
    const Outcome outcome = execute(config);
    if (config.format == OutputFormat::Json) {
      out << outcome.data.dump(2) << "\n";
    } else {
      out << outcome.plain;
    }
    return outcome.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reduced row echelon forms, null spaces and linear systems", "rrefkit"};
  app.require_subcommand(1);

  std::string field_flag = "q";
  std::string format_flag = "plain";
  app.add_option("--field", field_flag, "q (rationals) or gf:<p> (integers mod a prime p)");
  app.add_option("--format", format_flag, "output format")
      ->check(CLI::IsMember({"plain", "json"}));

  CliConfig config;
  std::map<const CLI::App*, Subcommand> commands;
  for (Subcommand s : kAllSubcommands) {
    CLI::App* sub = app.add_subcommand(std::string(subcommand_name(s)), std::string(describe(s)));
    sub->fallthrough();
    const int n = static_cast<int>(input_count(s));
    sub->add_option("inputs", config.inputs, n == 1 ? "matrix or system file" : "two input files")
        ->required()
        ->expected(n);
    commands[sub] = s;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  config.subcommand = commands.at(app.get_subcommands().front());
  config.format = format_flag == "json" ? OutputFormat::Json : OutputFormat::Plain;
  try {
    config.field = parse_field_flag(field_flag);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return run(config, out, err);
}

}  // namespace rrefkit::cli
