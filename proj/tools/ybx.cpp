// ybx — exact verification and transformation of braid-equation solutions
// on finite-dimensional cocommutative coalgebras.
//
// Exit codes: 0 success / all verified, 1 verification failure (JSON witness
// on stdout), 2 input error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "ybx/extension.hpp"
#include "ybx/gallery.hpp"
#include "ybx/hopf.hpp"
#include "ybx/json_io.hpp"
#include "ybx/presentation.hpp"
#include "ybx/primitive.hpp"
#include "ybx/rack.hpp"

using namespace ybx;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  bool json = false;
  int threads = 1;
};

void print_report(const VerificationReport& rep, const Options& opt) {
  if (opt.json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
    return;
  }
  size_t width = 0;
  for (const auto& c : rep.checks()) width = std::max(width, c.name.size());
  for (const auto& c : rep.checks()) {
    std::cout << "  " << c.name << std::string(width - c.name.size() + 2, ' ')
              << (c.pass ? "ok" : "FAIL");
    if (!c.pass && c.witness) std::cout << "  (witness index " << *c.witness << ")";
    if (!c.note.empty()) std::cout << "  [" << c.note << "]";
    std::cout << "\n";
  }
}

void write_output(const json& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << doc.dump(2) << "\n";
}

Field parse_field_flag(const std::string& s) {
  if (s == "q" || s == "Q") return Field::rationals();
  if ((s.size() > 1 && (s[0] == 'f' || s[0] == 'F'))) {
    long p = std::stol(s.substr(1));
    return Field::mod(static_cast<std::uint32_t>(p));
  }
  throw Error("unknown field '" + s + "' (use q, f2, f3, ...)");
}

int cmd_verify(const std::string& file, const Options& opt) {
  auto [x, r] = raw_pair_from_json(load_json_file(file));
  VerificationReport rep = verify_pair(x, r);
  if (opt.json) {
    print_report(rep, opt);
  } else {
    // involutivity, non-degeneracy and unitarity are verdicts, not axioms
    auto is_verdict = [](const std::string& n) {
      return n == "involutive" || n == "non-degenerate" || n == "unitary";
    };
    size_t width = 0;
    for (const auto& c : rep.checks()) width = std::max(width, c.name.size());
    for (const auto& c : rep.checks()) {
      std::cout << "  " << c.name << std::string(width - c.name.size() + 2, ' ')
                << (is_verdict(c.name) ? (c.pass ? "yes" : "no")
                                       : (c.pass ? "ok" : "FAIL"));
      if (!c.pass && c.witness) std::cout << "  (witness index " << *c.witness << ")";
      if (!c.note.empty()) std::cout << "  [" << c.note << "]";
      std::cout << "\n";
    }
  }
  bool core_ok = rep.find("coalgebra-automorphism")->pass && rep.find("braid")->pass;
  for (const auto& c : rep.checks())
    if (c.name.rfind("coalgebra-", 0) == 0 && !c.pass) core_ok = false;
  if (!core_ok && !opt.json) {
    for (const auto& c : rep.checks())
      if (!c.pass && c.witness) {
        json w{{"check", c.name}, {"witness", *c.witness}};
        std::cout << w.dump() << "\n";
        break;
      }
  }
  return core_ok ? kExitOk : kExitFail;
}

int cmd_derive(const std::string& file, const Options& opt) {
  BraidedPair p = pair_from_json(load_json_file(file));
  BraidVerdict braid = check_braid(p);
  if (!braid.pass) {
    json w{{"check", "braid"}, {"witness", *braid.witness}};
    std::cout << w.dump() << "\n";
    return kExitFail;
  }
  DerivedSolution d = solution_to_rack(p);
  json out{{"s", linmap_to_json(d.s)},
           {"rack", linmap_to_json(d.rack.tri())},
           {"involutive_collapse", d.involutive_collapse}};
  (void)opt;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_jmap(const std::string& file, long n, const Options& opt) {
  BraidedPair p = pair_from_json(load_json_file(file));
  GuitarTower t = guitar(p, n);
  json j_list = json::array(), a_list = json::array(), q_list = json::array();
  for (long k = 1; k <= n; ++k) j_list.push_back(linmap_to_json(t.j(k)));
  for (long k = 2; k <= n; ++k) {
    a_list.push_back(linmap_to_json(t.alpha(k)));
    q_list.push_back(linmap_to_json(t.q(k)));
  }
  json out{{"n", n}, {"j", j_list}, {"alpha", a_list}, {"q", q_list}};
  (void)opt;
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_braidrep(const std::string& file, long n, const Options& opt) {
  BraidedPair p = pair_from_json(load_json_file(file));
  std::vector<LinMap> gens = braid_rep(p, n);
  json out = json::array();
  for (const auto& g : gens) out.push_back(linmap_to_json(g));
  (void)opt;
  std::cout << json{{"n", n}, {"generators", out}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_extend(const std::string& file, const std::string& out_path, const Options&) {
  BraidedPair p = pair_from_json(load_json_file(file));
  DoubledSolution d = extend(p);
  write_output(doubled_to_json(d), out_path);
  return kExitOk;
}

int cmd_brace_verify(const std::string& file, const Options& opt) {
  Brace b = brace_from_json(load_json_file(file));
  VerificationReport rep = check_brace(b);
  print_report(rep, opt);
  return rep.all_pass() ? kExitOk : kExitFail;
}

int cmd_brace_to_op(const std::string& file, const std::string& out_path,
                    const Options&) {
  Brace b = brace_from_json(load_json_file(file));
  BraidingOperator o = brace_to_operator(b);
  write_output(operator_to_json(o), out_path);
  return kExitOk;
}

int cmd_op_to_brace(const std::string& file, const std::string& out_path,
                    const Options&) {
  BraidingOperator o = operator_from_json(load_json_file(file));
  Brace b = operator_to_brace(o);
  write_output(brace_to_json(b), out_path);
  return kExitOk;
}

int cmd_brace_to_cocycle(const std::string& file, const std::string& out_path,
                         const Options&) {
  Brace b = brace_from_json(load_json_file(file));
  Cocycle k = brace_to_cocycle(b);
  write_output(cocycle_to_json(k), out_path);
  return kExitOk;
}

int cmd_prim_check(const std::string& file, const Options& opt) {
  PrimParams p = prim_from_json(load_json_file(file));
  PrimConditions conds = check_conditions(p);
  VerificationReport rep;
  for (const auto& c : conds.condition) rep.add(c.name, c.pass, c.witness, c.note);
  if (conds.remark_sigma)
    rep.add(conds.remark_sigma->name, conds.remark_sigma->pass,
            conds.remark_sigma->witness, "remark reformulation");
  if (conds.remark_tau)
    rep.add(conds.remark_tau->name, conds.remark_tau->pass, conds.remark_tau->witness,
            "remark reformulation");
  print_report(rep, opt);
  return conds.all() ? kExitOk : kExitFail;
}

int cmd_prim_solve(const std::string& file, const std::string& out_path,
                   const Options&) {
  PrimParams p = prim_from_json(load_json_file(file));
  BraidedPair pair = prim_to_solution(p);
  write_output(pair_to_json(pair), out_path);
  return kExitOk;
}

struct UsageError : Error {
  using Error::Error;
};

int cmd_prim_search(const std::string& field_flag, long d, bool exhaustive,
                    std::uint64_t samples, std::uint64_t seed, bool seed_set,
                    const Options& opt) {
  Field f = parse_field_flag(field_flag);
  SearchOptions so;
  so.exhaustive = exhaustive;
  so.threads = opt.threads;
  if (!exhaustive) {
    if (samples == 0) throw UsageError("sampling mode needs --sample N");
    if (!seed_set) throw UsageError("sampling mode needs an explicit --seed");
    so.samples = samples;
    so.seed = seed;
  }
  search_primitive(f, d, so, [&](const PrimParams& p, std::uint64_t index) {
    json doc = prim_to_json(p);
    doc["index"] = index;
    std::cout << doc.dump() << "\n";
    return true;
  });
  return kExitOk;
}

int cmd_present(const std::string& file, const Options& opt) {
  BraidedPair p = pair_from_json(load_json_file(file));
  Presentation pres = emit_presentation(p);
  if (opt.json) {
    std::cout << presentation_to_json(pres).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "generators:";
  for (const auto& g : pres.generators) std::cout << " " << g;
  std::cout << "\nrelations:\n";
  for (const auto& [lhs, rhs] : pres.relations) {
    std::cout << "  ";
    for (size_t i = 0; i < lhs.size(); ++i) std::cout << (i ? "*" : "") << lhs[i];
    std::cout << " = ";
    for (size_t i = 0; i < rhs.size(); ++i) std::cout << (i ? "*" : "") << rhs[i];
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solutions of the braid equation on coalgebras"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--threads", opt.threads, "worker threads for parallel paths")
      ->default_val(1);

  std::string file, out_path, field_flag = "f2";
  long n = 3, dim = 1;
  bool exhaustive = false;
  std::uint64_t samples = 0, seed = 0;

  auto* verify = app.add_subcommand("verify", "verdict table for a pair (X, r)");
  verify->add_option("file", file)->required();
  auto* derive = app.add_subcommand("derive", "derived map and rack of a solution");
  derive->add_option("file", file)->required();
  auto* jmap = app.add_subcommand("jmap", "guitar-map towers");
  jmap->add_option("file", file)->required();
  jmap->add_option("--n", n, "tower height")->default_val(3);
  auto* braidrep = app.add_subcommand("braidrep", "braid-group generators on X^n");
  braidrep->add_option("file", file)->required();
  braidrep->add_option("--n", n, "number of strands")->default_val(3);
  auto* extend_cmd = app.add_subcommand("extend", "double a solution on X (+) SX");
  extend_cmd->add_option("file", file)->required();
  extend_cmd->add_option("-o,--output", out_path, "output file");
  auto* brace_verify = app.add_subcommand("brace-verify", "brace axiom report");
  brace_verify->add_option("file", file)->required();
  auto* brace_to_op = app.add_subcommand("brace-to-op", "brace to braiding operator");
  brace_to_op->add_option("file", file)->required();
  brace_to_op->add_option("-o,--output", out_path, "output file");
  auto* op_to_brace = app.add_subcommand("op-to-brace", "braiding operator to brace");
  op_to_brace->add_option("file", file)->required();
  op_to_brace->add_option("-o,--output", out_path, "output file");
  auto* brace_to_cocycle =
      app.add_subcommand("brace-to-cocycle", "brace to invertible 1-cocycle");
  brace_to_cocycle->add_option("file", file)->required();
  brace_to_cocycle->add_option("-o,--output", out_path, "output file");
  auto* prim_check = app.add_subcommand("prim-check", "conditions (1)-(8) on k(+)V data");
  prim_check->add_option("file", file)->required();
  auto* prim_solve = app.add_subcommand("prim-solve", "build the k(+)V solution");
  prim_solve->add_option("file", file)->required();
  prim_solve->add_option("-o,--output", out_path, "output file");
  auto* prim_search = app.add_subcommand("prim-search", "search parameter tuples");
  prim_search->add_option("--field", field_flag, "ground field (f2, f3, ...)")
      ->required();
  prim_search->add_option("--dim", dim, "dimension of V")->required();
  auto* ex_flag = prim_search->add_flag("--exhaustive", exhaustive, "full sweep");
  auto* sample_opt = prim_search->add_option("--sample", samples, "number of samples");
  auto* seed_opt = prim_search->add_option("--seed", seed, "RNG seed (sampling)");
  sample_opt->excludes(ex_flag);
  auto* present = app.add_subcommand("present", "structure-monoid presentation");
  present->add_option("file", file)->required();

  // allow the global --json/--threads flags after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (verify->parsed()) return cmd_verify(file, opt);
    if (derive->parsed()) return cmd_derive(file, opt);
    if (jmap->parsed()) return cmd_jmap(file, n, opt);
    if (braidrep->parsed()) return cmd_braidrep(file, n, opt);
    if (extend_cmd->parsed()) return cmd_extend(file, out_path, opt);
    if (brace_verify->parsed()) return cmd_brace_verify(file, opt);
    if (brace_to_op->parsed()) return cmd_brace_to_op(file, out_path, opt);
    if (op_to_brace->parsed()) return cmd_op_to_brace(file, out_path, opt);
    if (brace_to_cocycle->parsed()) return cmd_brace_to_cocycle(file, out_path, opt);
    if (prim_check->parsed()) return cmd_prim_check(file, opt);
    if (prim_solve->parsed()) return cmd_prim_solve(file, out_path, opt);
    if (prim_search->parsed())
      return cmd_prim_search(field_flag, dim, exhaustive, samples, seed,
                             seed_opt->count() > 0, opt);
    if (present->parsed()) return cmd_present(file, opt);
  } catch (const JsonError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UsageError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotSetTheoretic& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}
