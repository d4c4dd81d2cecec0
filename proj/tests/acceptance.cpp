// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: qdeform_acceptance <path-to-qdeform-cli>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdeform/arith.hpp"
#include "qdeform/calculus.hpp"
#include "qdeform/datasets.hpp"
#include "qdeform/entropy.hpp"
#include "qdeform/qfun.hpp"
#include "qdeform/verify.hpp"

using namespace qdeform;

namespace {

std::string cli;

struct Check {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!note.empty()) note += "; ";
      note += what;
    }
  }
};

std::string run(const std::string& args, int* status = nullptr) {
  const std::string cmd = "\"" + cli + "\" " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> p(popen(cmd.c_str(), "r"), pclose);
  if (!p) return {};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p.get())) > 0) out.append(buf.data(), n);
  const int rc = pclose(p.release());
  if (status) *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

void laws(Check& c, const VerifyResult& r, const std::function<bool(const LawReport&)>& pick, double tol,
          std::size_t min_laws) {
  std::size_t n = 0;
  for (const auto& l : r.laws) {
    if (!pick(l)) continue;
    ++n;
    c.require(l.passed(), l.scope + " " + l.law + " failed (max " + std::to_string(l.max_residual) + ")");
    if (!l.expect_counterexample) c.require(l.tolerance <= tol, l.scope + " " + l.law + " tolerance too loose");
  }
  c.require(n >= min_laws, "expected at least " + std::to_string(min_laws) + " laws, saw " + std::to_string(n));
}

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }
bool is_class(const std::string& s) { return s == "ile" || s == "ole" || s == "iel" || s == "oel"; }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <qdeform-cli>\n", argv[0]);
    return 64;
  }
  cli = argv[1];

  SampleDomain dom;  // q in [-2,3], 1e4 samples, 1e3 calculus samples, seed 42
  const VerifyResult all = verify_all(dom);
  SampleDomain big = dom;
  big.count = 100000;
  const VerifyResult qf = verify_qfun(big);

  std::vector<std::pair<std::string, Check>> out;
  auto add = [&](const std::string& title, Check c) { out.emplace_back(title, std::move(c)); };

  {
    Check c;
    laws(c, qf, [](const LawReport& l) { return starts(l.law, "round_trip/"); }, 1e-12, 2);
    for (const auto& l : qf.laws)
      if (starts(l.law, "round_trip/")) c.require(l.samples == 100000, "sample count");
    add("core round trips exp_q/ln_q on 1e5 samples <= 1e-12", c);
  }
  {
    Check c;
    laws(c, all, [](const LawReport& l) { return starts(l.law, "op_rule_vs_closed/"); }, 1e-11, 16);
    add("generating rule equals closed form, 4 classes x 4 operators <= 1e-11", c);
  }
  {
    Check c;
    const auto spot = [&](const char* what, const ExtReal& v, double want) {
      c.require(v.is_finite() && std::abs(v.value() - want) <= 1e-12, what);
    };
    spot("ole add", op_closed(Deform::ole, Op::add, 0.5, 1, 1), 2.5);
    spot("oel mul", op_closed(Deform::oel, Op::mul, 0.5, 4, 9), 16);
    spot("oel pow", tpow(Deform::oel, 0.5, 4, 3), 16);
    spot("ole dot", dot_mul(Deform::ole, 0.0, 3, 1), 7);
    add("spot values ole add, oel mul, oel pow, ole dot <= 1e-12 absolute", c);
  }
  {
    Check c;
    laws(c, all,
         [](const LawReport& l) {
           return is_class(l.scope) && (starts(l.law, "commutative/") || starts(l.law, "associative/") ||
                                        l.law == "distributive");
         },
         1e-10, 20);
    const LawReport* d = all.find("distributive", "oel");
    c.require(d && d->skip_reasons.count("cutoff") && d->skip_reasons.at("cutoff") > 0, "oel cutoff skips recorded");
    add("commutativity, associativity, distributivity per class <= 1e-10", c);
  }
  {
    Check c;
    laws(c, all,
         [](const LawReport& l) { return (is_class(l.scope) && l.law == "round_trip") || l.scope == "numbers"; }, 1e-10,
         12);
    add("inverse-number relations and number identities <= 1e-10", c);
  }
  {
    Check c;
    laws(c, all,
         [](const LawReport& l) {
           return l.law == "eigenfunction" || l.law == "qexp_slope" || l.law == "qlog_slope" ||
                  l.law == "duality" || starts(l.law, "power_rule/") || starts(l.law, "product_rule/");
         },
         1e-6, 4 + 2 + 4 + 6 + 8);
    for (const auto& l : all.laws)
      if (l.law == "eigenfunction") c.require(l.samples == 1000, "calculus sample count");
    add("calculus: eigenfunctions, slopes, duality, power and product rules <= 1e-6", c);
  }
  {
    Check c;
    for (double q : {-1.0, 0.5, 2.0, 3.0})
      for (double x : {0.5, 2.0, 4.0, 10.0}) {
        const ExtReal v = qlog_integral(q, x);
        c.require(v.is_finite() && std::abs(v.value() - ln_q(q, x).value()) <= 1e-8,
                  "q=" + std::to_string(q) + " x=" + std::to_string(x));
      }
    add("integral of t^-q from 1 to x equals ln_q x <= 1e-8", c);
  }
  {
    Check c;
    laws(c, all, [](const LawReport& l) { return starts(l.law, "fundamental_theorem"); }, 1e-7, 8);
    std::size_t counter = 0;
    for (const auto& l : all.laws)
      if (l.law == "nonlinear_fundamental_theorem_fails" && l.max_residual > 1e-3 && l.failures > 0) ++counter;
    c.require(counter > 0, "no pinned nonlinear counterexample above 1e-3");
    add("fundamental theorem for linear integrals <= 1e-7 and nonlinear counterexample > 1e-3", c);
  }
  {
    Check c;
    laws(c, all,
         [](const LawReport& l) {
           return l.law == "jackson" || l.law == "generator_vs_closed" || starts(l.law, "collapse/");
         },
         1e-6, 1 + 4 + 8);
    const LawReport* j = all.find("jackson", "entropy");
    c.require(j && j->tolerance <= 1e-10, "jackson tolerance");
    add("entropy: Jackson route, generator route, eight collapsed derivatives", c);
  }
  {
    Check c;
    laws(c, all, [](const LawReport& l) { return starts(l.law, "admissibility/"); }, 0.0, 12);
    c.require(admissibility_report(Deform::ile, 2.4, 1001).curvature == Curvature::indefinite, "ile q=2.4");
    c.require(admissibility_report(Deform::ole, 2.3, 1001).curvature == Curvature::indefinite, "ole q=2.3");
    const LawReport* t = all.find("oel_is_tsallis", "entropy");
    c.require(t && t->passed() && t->tolerance == 0.0 && t->max_residual == 0.0, "oel equals Tsallis exactly");
    add("admissibility reproduction and oel equals Tsallis", c);
  }
  {
    Check c;
    for (double q : {0.25, 0.5, 0.75})
      for (double w : {2.0, 4.0, 9.0})
        for (double n : {2.0, 3.0, 10.0}) {
          const Extensivity e = extensivity_demo(q, w, n);
          c.require(e.lhs.is_finite() && residual(e.lhs, e.rhs).value() <= 1e-10,
                    "q=" + std::to_string(q) + " W=" + std::to_string(w) + " N=" + std::to_string(n));
        }
    add("extensivity of ln_q under oel power <= 1e-10", c);
  }
  {
    Check c;
    for (double q : {-1.0, 3.0}) {
      int rc = -1;
      const auto rows = csv(run("cutoff-map --class oel --op mul --q " + std::to_string(q) +
                                    " --grid x:-3:3:61 --grid y:-3:3:61",
                                &rc));
      c.require(rc == 0, "cutoff-map exit status");
      const double omq = 1.0 - q, step = 0.1;
      const auto inside = [&](double a, double b) {
        return std::pow(std::abs(a), omq) + std::pow(std::abs(b), omq) <= 1.0;
      };
      std::size_t checked = 0;
      for (const auto& r : rows) {
        if (r.size() != 4 || r[0] != "cell") continue;
        const double x = std::stod(r[1]), y = std::stod(r[2]);
        bool adjacent = false;
        for (double dx : {-step, 0.0, step})
          for (double dy : {-step, 0.0, step}) adjacent |= inside(x + dx, y + dy) != inside(x, y);
        if (adjacent || x == 0.0 || y == 0.0) continue;
        ++checked;
        if ((r[3] == "1") != inside(x, y)) {
          c.require(false, "q=" + std::to_string(q) + " cell " + r[1] + "," + r[2]);
          break;
        }
      }
      c.require(checked > 1000, "too few cells checked");
    }
    int rc = -1;
    const auto asym = csv(run("numbers --asymptotes --class ile --class ole --q 3 --q -1", &rc));
    std::map<std::string, std::vector<std::string>> tag;
    for (const auto& r : asym) tag[r[0] + " " + r[1]] = r;
    c.require(rc == 0 && tag.count("ile 3") && tag["ile 3"][2] == "vertical" && std::stod(tag["ile 3"][3]) == 0.5,
              "ile q=3 vertical asymptote at 0.5");
    c.require(tag.count("ole -1") && tag["ole -1"][2] == "horizontal" && std::stod(tag["ole -1"][4]) == -0.5,
              "ole q=-1 horizontal asymptote at -0.5");
    const auto div = csv(run("numbers --class ile --q 3 --grid x:0:1:11"));
    for (const auto& r : div) {
      const double x = std::stod(r[2]);
      c.require((r[4] == "divergent") == (x >= 0.5), "ile q=3 tag at x=" + r[2]);
    }
    const auto vs = csv(run("entropy vs_w --class oel --q 1", &rc));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : vs) {
      const double x = std::stod(r[3]), y = std::stod(r[4]);
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double n = static_cast<double>(vs.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    c.require(rc == 0 && n > 10 && std::abs(slope - 1.0) <= 1e-9, "vs_w slope " + std::to_string(slope));
    add("figure datasets: cutoff map border, asymptote tags, vs_w slope", c);
  }
  {
    Check c;
    int r1 = -1, r2 = -1;
    const std::string a = run("verify all --seed 42", &r1);
    const std::string b = run("verify all --seed 42", &r2);
    c.require(r1 == 0 && r2 == 0, "verify exit status");
    c.require(!a.empty() && a == b, "outputs differ");
    c.require(nlohmann::json::parse(a, nullptr, false).is_object(), "not JSON");
    add("determinism: verify all --seed 42 twice is byte-identical", c);
  }

  int failed = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& [title, c] = out[i];
    std::printf("%-4s %2zu  %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, title.c_str(), c.ok ? "" : "  -- ",
                c.ok ? "" : c.note.c_str());
    failed += !c.ok;
  }
  std::printf("%zu/%zu criteria passed\n", out.size() - failed, out.size());
  return failed ? 1 : 0;
}
