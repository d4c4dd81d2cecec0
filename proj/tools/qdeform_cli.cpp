// qdeform command-line front end; talks to the library through the C API only.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/qdeform.h"

namespace {

enum Exit { ok = 0, verify_failed = 1, undefined_result = 2, usage = 64, internal = 70, io = 74 };

struct Failure {
  int code;
  std::string message;
};

void check(qd_status s) {
  if (s == QD_OK) return;
  const std::string msg = std::string(qd_status_name(s)) + ": " + qd_last_error();
  throw Failure{s == QD_ERR_INTERNAL ? internal : usage, msg};
}

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string show(const qd_value& v) {
  switch (v.kind) {
    case QD_FINITE: return number(v.value);
    case QD_POS_INF: return "inf";
    case QD_NEG_INF: return "-inf";
    default: return std::string("undefined (reason: ") + qd_reason_name(v.reason) + ")";
  }
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Failure{io, "failed writing to stdout"};
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure{io, "cannot open " + path};
  f << text;
  f.close();
  if (!f) throw Failure{io, "failed writing " + path};
}

// "name:min:max:steps"
struct GridArg {
  std::string name;
  qd_grid grid;
};

GridArg parse_grid(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ':') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 4) throw Failure{usage, "grid must be name:min:max:steps, got " + s};
  try {
    std::size_t used = 0;
    GridArg g{parts[0], {std::stod(parts[1], &used), 0.0, 0}};
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    g.grid.max = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    g.grid.steps = std::stoi(parts[3], &used);
    if (used != parts[3].size()) throw std::invalid_argument(parts[3]);
    if (g.grid.steps < 2 || !(g.grid.min < g.grid.max)) throw std::invalid_argument(s);
    return g;
  } catch (const std::logic_error&) {
    throw Failure{usage, "bad grid " + s + " (need min < max and steps >= 2)"};
  }
}

std::map<std::string, qd_grid> grids_of(const std::vector<std::string>& specs) {
  std::map<std::string, qd_grid> out;
  for (const auto& s : specs) {
    const GridArg g = parse_grid(s);
    out[g.name] = g.grid;
  }
  return out;
}

qd_grid grid_or(const std::map<std::string, qd_grid>& grids, const std::string& name, qd_grid fallback) {
  const auto it = grids.find(name);
  return it == grids.end() ? fallback : it->second;
}

std::vector<qd_class> classes_of(const std::vector<std::string>& names) {
  std::vector<qd_class> out;
  const std::vector<std::string> all = {"ile", "ole", "iel", "oel"};
  for (const auto& n : names.empty() ? all : names) {
    qd_class c;
    check(qd_class_from_name(n.c_str(), &c));
    out.push_back(c);
  }
  return out;
}

// explicit --q values, then a q grid if given, else the default panel
std::vector<double> qs_of(const std::vector<double>& qs, const std::map<std::string, qd_grid>& grids) {
  std::vector<double> out = qs;
  if (const auto it = grids.find("q"); it != grids.end()) {
    const qd_grid g = it->second;
    for (int i = 0; i < g.steps; ++i) out.push_back(i == g.steps - 1 ? g.max : g.min + (g.max - g.min) * i / (g.steps - 1));
  }
  if (out.empty()) out = {-1.0, 0.5, 1.0, 2.0, 3.0};
  return out;
}

qd_format format_of(const std::string& f) { return f == "json" ? QD_JSON : QD_CSV; }

int finish(qd_report* r, const std::string& out) {
  const std::string text = qd_report_text(r);
  const int passed = qd_report_passed(r);
  qd_report_destroy(r);
  write_out(out, text);
  return passed ? ok : verify_failed;
}

int run_eval(const std::string& cls, const std::string& op, double q, const std::vector<double>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw Failure{usage, op + " takes " + std::to_string(n) + " operand(s), got " + std::to_string(args.size())};
    }
  };
  qd_value v{};
  if (cls == "q") {
    need(1);
    if (op == "ln") {
      check(qd_ln_q(q, args[0], &v));
    } else if (op == "exp") {
      check(qd_exp_q(q, args[0], &v));
    } else {
      throw Failure{usage, "unknown operator for q: " + op + " (ln, exp)"};
    }
  } else {
    qd_class c;
    check(qd_class_from_name(cls.c_str(), &c));
    qd_op o;
    if (qd_op_from_name(op.c_str(), &o) == QD_OK) {
      need(2);
      check(qd_op_closed(c, o, q, args[0], args[1], &v));
    } else if (op.rfind("rule_", 0) == 0 && qd_op_from_name(op.substr(5).c_str(), &o) == QD_OK) {
      need(2);
      check(qd_op_rule(c, o, q, args[0], args[1], &v));
    } else if (op == "deform") {
      need(1);
      check(qd_deform(c, q, args[0], &v));
    } else if (op == "undeform") {
      need(1);
      check(qd_undeform(c, q, args[0], &v));
    } else if (op == "neg") {
      need(1);
      check(qd_neg(c, q, args[0], &v));
    } else if (op == "inv") {
      need(1);
      check(qd_inv(c, q, args[0], &v));
    } else if (op == "pow") {
      need(2);
      check(qd_tpow(c, q, args[0], args[1], &v));
    } else if (op == "dot") {
      need(2);
      check(qd_dot(c, q, args[0], args[1], &v));
    } else if (op == "dot_one") {
      need(1);
      check(qd_dot_one(c, q, args[0], &v));
    } else if (op == "h") {
      need(1);
      check(qd_h(c, q, args[0], &v));
    } else {
      throw Failure{usage, "unknown operator: " + op};
    }
  }
  std::cout << show(v) << '\n';
  return v.kind == QD_UNDEFINED ? undefined_result : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qdeform: q-deformed numbers, arithmetics, calculus and entropies"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qdeform 1.0");

  std::string out, format = "csv";
  std::vector<std::string> grid_specs, class_names;
  std::vector<double> q_list;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out, "Output path (default stdout)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_grid = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--grid", grid_specs, help)->allow_extra_args(false)->take_all();
  };
  auto add_panel = [&](CLI::App* sub) {
    sub->add_option("--class", class_names, "Class (repeatable; default all four)")
        ->check(CLI::IsMember({"ile", "ole", "iel", "oel"}))
        ->allow_extra_args(false)
        ->take_all();
    sub->add_option("--q", q_list, "q value (repeatable; default -1 0.5 1 2 3)")->allow_extra_args(false)->take_all();
  };

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one operator");
  std::string eval_class, eval_op;
  double eval_q = 1.0;
  std::vector<double> eval_args;
  eval->add_option("class", eval_class, "ile, ole, iel, oel, or q for ln/exp")->required();
  eval->add_option("op", eval_op,
                   "add sub mul div rule_<op> deform undeform neg inv pow dot dot_one h (class) or ln exp (q)")
      ->required();
  eval->add_option("--q", eval_q, "Deformation parameter")->required();
  eval->add_option("operands", eval_args, "Operands");

  // numbers
  auto* numbers = app.add_subcommand("numbers", "Deformed-number curves with region tags");
  add_common(numbers);
  add_panel(numbers);
  add_grid(numbers, "x:min:max:steps (default x:-3:3:121), q:min:max:steps adds q values");
  bool asymptotes = false;
  numbers->add_flag("--asymptotes", asymptotes, "Emit the asymptote table instead of the curves");

  // cutoff-map
  auto* cutoff = app.add_subcommand("cutoff-map", "Cutoff regions of a deformed operation over an (x, y) grid");
  add_common(cutoff);
  add_grid(cutoff, "x:min:max:steps and y:min:max:steps (default -3:3:121 each)");
  std::string cut_op = "mul", cut_class = "oel";
  double cut_q = 0.5;
  cutoff->add_option("--op", cut_op, "add or mul")->check(CLI::IsMember({"add", "mul"}));
  cutoff->add_option("--class", cut_class, "ile or oel")->check(CLI::IsMember({"ile", "oel"}));
  cutoff->add_option("--q", cut_q, "Deformation parameter")->required();

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Entropy scans");
  add_common(entropy);
  add_panel(entropy);
  add_grid(entropy, "p:min:max:steps (two_state, default p:0:1:101), w:min:max:steps (vs_w, default w:1:1e6:61)");
  std::string task;
  int resolution = 1001;
  entropy->add_option("task", task, "two_state, vs_w or admissibility")
      ->required()
      ->check(CLI::IsMember({"two_state", "vs_w", "admissibility"}));
  entropy->add_option("--resolution", resolution, "Two-state grid size for admissibility")->check(CLI::Range(5, 1000000));

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites; JSON report");
  verify->add_option("--out", out, "Output path (default stdout)");
  std::string suite = "all";
  qd_verify_options vo;
  qd_verify_options_default(&vo);
  std::vector<double> q_range, x_range;
  verify->add_option("suite", suite, "qfun, arith, calc, entropy or all")
      ->check(CLI::IsMember({"qfun", "arith", "calc", "entropy", "all"}));
  verify->add_option("--seed", vo.seed, "RNG seed");
  verify->add_option("--count", vo.count, "Samples per law");
  verify->add_option("--calc-count", vo.calc_count, "Samples per calculus law");
  verify->add_option("--q-range", q_range, "q sampling range")->expected(2);
  verify->add_option("--x-range", x_range, "x sampling range")->expected(2);
  verify->add_option("--exclusion", vo.exclusion, "Collar around cutoff borders, poles and zeros");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    const auto grids = grids_of(grid_specs);
    if (eval->parsed()) return run_eval(eval_class, eval_op, eval_q, eval_args);

    if (numbers->parsed()) {
      const auto cs = classes_of(class_names);
      const auto qs = qs_of(q_list, grids);
      qd_report* r = nullptr;
      if (asymptotes) {
        check(qd_dataset_asymptotes(cs.data(), cs.size(), qs.data(), qs.size(), format_of(format), &r));
      } else {
        const qd_grid x = grid_or(grids, "x", {-3.0, 3.0, 121});
        check(qd_dataset_numbers(cs.data(), cs.size(), qs.data(), qs.size(), x, format_of(format), &r));
      }
      return finish(r, out);
    }

    if (cutoff->parsed()) {
      qd_class c;
      qd_op o;
      check(qd_class_from_name(cut_class.c_str(), &c));
      check(qd_op_from_name(cut_op.c_str(), &o));
      const qd_grid x = grid_or(grids, "x", {-3.0, 3.0, 121}), y = grid_or(grids, "y", {-3.0, 3.0, 121});
      qd_report* r = nullptr;
      check(qd_dataset_cutoff_map(c, o, cut_q, x, y, format_of(format), &r));
      return finish(r, out);
    }

    if (entropy->parsed()) {
      const auto cs = classes_of(class_names);
      const auto qs = qs_of(q_list, grids);
      qd_report* r = nullptr;
      if (task == "two_state") {
        const qd_grid p = grid_or(grids, "p", {0.0, 1.0, 101});
        check(qd_dataset_two_state(cs.data(), cs.size(), qs.data(), qs.size(), p, format_of(format), &r));
      } else if (task == "vs_w") {
        const qd_grid w = grid_or(grids, "w", {1.0, 1e6, 61});
        check(qd_dataset_vs_w(cs.data(), cs.size(), qs.data(), qs.size(), w, format_of(format), &r));
      } else {
        check(qd_dataset_admissibility(cs.data(), cs.size(), qs.data(), qs.size(), resolution, &r));
      }
      return finish(r, out);
    }

    if (verify->parsed()) {
      if (!q_range.empty()) {
        vo.q_lo = q_range[0];
        vo.q_hi = q_range[1];
      }
      if (!x_range.empty()) {
        vo.x_lo = x_range[0];
        vo.x_hi = x_range[1];
      }
      qd_report* r = nullptr;
      check(qd_verify(suite.c_str(), &vo, &r));
      return finish(r, out);
    }
  } catch (const Failure& f) {
    std::cerr << "qdeform: " << f.message << '\n';
    return f.code;
  }
  return usage;
}
