#pragma once

// Command-line front end. Exit codes: 0 success or affirmative verdict,
// 1 negative verdict, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "vsemi/vsemi.hpp"

namespace vsemi::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

inline constexpr std::size_t kDefaultMaxNodes = 64;

/// Thrown for bad user input; the message goes to the error stream.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builtin names win over file paths; "./t3" forces a file lookup.
inline FiniteSemiring load_algebra(const std::string& source) {
  for (const auto& name : builtin_names())
    if (source == name) return builtin(source);
  return read_algebra_file(source);
}

inline Term parse_capped(const std::string& text, std::size_t max_nodes) {
  Term t = parse(text);
  if (t.size() > max_nodes)
    throw InputError("term has " + std::to_string(t.size()) + " nodes; limit is " +
                     std::to_string(max_nodes) + " (see --max-nodes)");
  return t;
}

/// "x1=a, y=0" -> {1: a, 2: 0}. The empty string binds nothing.
inline Assignment parse_assignment(const FiniteSemiring& a, std::string_view text) {
  Assignment sigma;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return sigma;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = trim(text.substr(start, comma - start));
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw InputError("malformed binding '" + std::string(item) + "' (expected var=label)");
    const std::string var_text(trim(item.substr(0, eq)));
    const std::string label(trim(item.substr(eq + 1)));
    Term var;
    try {
      var = parse(var_text);
    } catch (const ParseError&) {
      throw InputError("malformed variable '" + var_text + "'");
    }
    if (var.kind() != TermKind::Var) throw InputError("malformed variable '" + var_text + "'");
    const auto value = a.find(label);
    if (!value) throw InputError("unknown element '" + label + "' in algebra " + a.name());
    if (!sigma.emplace(var.var_index(), *value).second)
      throw InputError("variable " + var_text + " bound twice");
    start = comma + 1;
  }
  return sigma;
}

inline std::string format_witness(const FiniteSemiring& a, const std::vector<Element>& values) {
  static constexpr const char* names[] = {"x", "y", "z"};
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += (i < 3 ? std::string(names[i]) : "x" + std::to_string(i + 1)) + "=" + a.label(values[i]);
  }
  return out;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal forms, word problem and finite models for the semiring variety V"};
  app.name("vsemi");
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t max_nodes = kDefaultMaxNodes;
  app.add_option("--max-nodes", max_nodes, "Largest accepted term size for normalize/eq")
      ->check(CLI::PositiveNumber);

  std::string term_a;
  std::string term_b;
  std::string algebra;
  std::string assignment;
  std::string identity;
  std::size_t max_vars = kDefaultMaxVars;
  unsigned arity = 0;
  unsigned max_arity = kDefaultMaxArity;
  bool list = false;
  unsigned lattice_rank = 0;
  std::string output_path;

  auto* normalize_cmd = app.add_subcommand("normalize", "Print the reduced normal form of a term");
  normalize_cmd->add_option("term", term_a, "Term, e.g. 'x+y+x*y*z'")->required();

  auto* eq_cmd = app.add_subcommand("eq", "Decide whether two terms are equal in V");
  eq_cmd->add_option("t", term_a)->required();
  eq_cmd->add_option("u", term_b)->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term in a finite semiring");
  eval_cmd->add_option("algebra", algebra, "Builtin name or algebra file")->required();
  eval_cmd->add_option("term", term_a)->required();
  eval_cmd->add_option("assignment", assignment, "Bindings such as 'x1=a,x2=0'");

  auto* check_cmd = app.add_subcommand("check", "Check an identity 't = u' in a finite semiring");
  check_cmd->add_option("algebra", algebra)->required();
  check_cmd->add_option("identity", identity)->required();
  check_cmd->add_option("--max-vars", max_vars, "Largest accepted number of variables");

  auto* axioms_cmd = app.add_subcommand("axioms", "Report semiring laws and variety membership");
  axioms_cmd->add_option("algebra", algebra)->required();

  auto* si_cmd = app.add_subcommand("si", "Test subdirect irreducibility");
  si_cmd->add_option("algebra", algebra)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Count (and list) the n-ary terms of V");
  enumerate_cmd->add_option("-n", arity, "Arity")->required();
  enumerate_cmd->add_flag("--list", list, "Print every normal form");
  enumerate_cmd->add_option("--max-arity", max_arity, "Arity cap")
      ->check(CLI::Range(0u, kHardMaxArity));

  auto* lplus1_cmd = app.add_subcommand("build-lplus1", "Write the algebra file of B_k (+) 1");
  lplus1_cmd->add_option("-k", lattice_rank, "Rank of the Boolean lattice (1..4)")->required();
  lplus1_cmd->add_option("-o,--output", output_path, "Write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "vsemi: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*normalize_cmd) {
      out << to_string(normalize(parse_capped(term_a, max_nodes))) << "\n";
      return kOk;
    }
    if (*eq_cmd) {
      const auto t = normalize(parse_capped(term_a, max_nodes));
      const auto u = normalize(parse_capped(term_b, max_nodes));
      if (t == u) {
        out << "equal\n";
        return kOk;
      }
      out << "distinct\n" << to_string(t) << "\n" << to_string(u) << "\n";
      return kNegative;
    }
    if (*eval_cmd) {
      const auto a = load_algebra(algebra);
      const Term t = parse(term_a);
      const auto sigma = parse_assignment(a, assignment);
      out << a.label(eval_term(a, t, sigma)) << "\n";
      return kOk;
    }
    if (*check_cmd) {
      const auto a = load_algebra(algebra);
      const auto result = holds(a, parse_identity(identity), max_vars);
      if (result.holds) {
        out << "holds\n";
        return kOk;
      }
      const auto& w = *result.witness;
      out << "fails at " << format_assignment(a, w.assignment) << " (lhs " << a.label(w.lhs_value)
          << ", rhs " << a.label(w.rhs_value) << ")\n";
      return kNegative;
    }
    if (*axioms_cmd) {
      const auto a = load_algebra(algebra);
      const auto report = check_axioms(a);
      for (const auto& r : report.results()) {
        out << r.name << ": ";
        if (r.holds)
          out << "holds\n";
        else
          out << "fails at " << format_witness(a, r.witness) << "\n";
      }
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      out << "semiring: " << yn(report.is_semiring()) << "\n"
          << "C: " << yn(report.in_c()) << "\n"
          << "B: " << yn(report.in_b()) << "\n"
          << "V: " << yn(report.in_v()) << "\n"
          << "D: " << yn(report.in_d()) << "\n";
      return kOk;
    }
    if (*si_cmd) {
      const auto a = load_algebra(algebra);
      const auto result = is_subdirectly_irreducible(a);
      if (result.irreducible) {
        out << "subdirectly irreducible; monolith: " << format_partition(a, *result.monolith) << "\n";
        return kOk;
      }
      out << "not subdirectly irreducible\n";
      return kNegative;
    }
    if (*enumerate_cmd) {
      const auto entry = free_spectrum(arity, list, max_arity);
      out << entry.count << "\n";
      if (entry.reps)
        for (const auto& rep : *entry.reps) out << to_string(rep) << "\n";
      return kOk;
    }
    if (*lplus1_cmd) {
      const std::string text = write_algebra(lplus1(boolean_lattice(lattice_rank)));
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file || !(file << text)) throw InputError("cannot write '" + output_path + "'");
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "vsemi: syntax error " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "vsemi: " << e.what() << "\n";
    return kInputError;
  }
  err << "vsemi: no subcommand\n";
  return kInputError;
}

}  // namespace vsemi::cli
