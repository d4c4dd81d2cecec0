#include "qdeform/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include <json.hpp>

#include "qdeform/arith.hpp"
#include "qdeform/calculus.hpp"
#include "qdeform/entropy.hpp"
#include "qdeform/numbers.hpp"
#include "qdeform/qfun.hpp"

namespace qdeform {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform(double lo, double hi) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

void LawReport::record(const std::vector<double>& point, const ExtReal& r) {
  ++samples;
  const double v = r.value();
  if (r.is_finite() && v <= tolerance) {
    ++passes;
  } else {
    ++failures;
    if (counterexamples.size() < 5) counterexamples.push_back({point, r});
  }
  if (!(v <= max_residual)) max_residual = v;
}

void LawReport::skip(const std::string& reason) {
  ++samples;
  ++skips;
  ++skip_reasons[reason];
}

bool VerifyResult::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawReport& l) { return l.passed(); });
}

const LawReport* VerifyResult::find(const std::string& law, const std::string& scope) const {
  for (const auto& l : laws) {
    if (l.law == law && l.scope == scope) return &l;
  }
  return nullptr;
}

namespace {

using Point = std::vector<double>;

struct Outcome {
  ExtReal residual;
  std::string skip;
};

Outcome skipped(std::string why) { return {ExtReal::undefined(Reason::none), std::move(why)}; }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

using Draw = std::function<std::optional<Point>(SplitMix64&, std::size_t)>;
using Eval = std::function<Outcome(const Point&)>;

LawReport run(const std::string& law, const std::string& scope, double tol, std::size_t n, std::uint64_t seed,
              const Draw& draw, const Eval& eval, bool expect_counterexample = false) {
  LawReport rep;
  rep.law = law;
  rep.scope = scope;
  rep.tolerance = tol;
  rep.expect_counterexample = expect_counterexample;
  SplitMix64 rng(seed ^ fnv1a(scope + "/" + law));
  for (std::size_t i = 0; i < n; ++i) {
    const std::optional<Point> p = draw(rng, i);
    if (!p) {
      rep.skip("domain");
      continue;
    }
    const Outcome o = eval(*p);
    if (!o.skip.empty()) {
      rep.skip(o.skip);
    } else if (o.residual.is_undefined()) {
      rep.skip(std::string(reason_name(o.residual.reason())));
    } else {
      rep.record(*p, o.residual);
    }
  }
  return rep;
}

Outcome judged(const ExtReal& r) { return {r, {}}; }

// Skip for an intermediate that is undefined or infinite.
Outcome unusable(const ExtReal& v) {
  if (v.is_undefined()) return skipped(std::string(reason_name(v.reason())));
  return skipped("nonfinite");
}

ExtReal worst(std::initializer_list<ExtReal> rs) {
  ExtReal w = 0.0;
  for (const auto& r : rs) {
    if (r.is_undefined()) return r;
    if (!(r.value() <= w.value())) w = r;
  }
  return w;
}

double positive_hi(const SampleDomain& d) { return std::max(std::abs(d.x_lo), std::abs(d.x_hi)); }

// Operand admissibility for class d: the complement number of v must sit clear of
// its bracket edge and of zero.
bool input_ok(Deform d, QParam q, double v, double collar) {
  if (!std::isfinite(v)) return false;
  const double omq = q.omq();
  switch (d) {
    case Deform::ile: return std::abs(omq * v) < 700.0;
    case Deform::ole: return 1.0 + omq * v > collar;
    case Deform::iel: {
      const double b = 1.0 + omq * std::log(std::abs(v));
      return std::abs(v) > collar && b > collar && std::abs(std::log(b) / omq) < 700.0;
    }
    case Deform::oel: {
      const double l = std::log(std::abs(v));
      return std::abs(v) > collar && std::abs(omq * l) < 700.0 && std::abs(std::expm1(omq * l) / omq) < 700.0;
    }
  }
  return false;
}

// Argument s handed to deform(d, .) by the generating rule must be clear of the edges.
bool output_ok(Deform d, QParam q, const ExtReal& s, double collar) {
  if (!s.is_finite()) return false;
  const double omq = q.omq(), v = s.value();
  switch (d) {
    case Deform::ile: return 1.0 + omq * v > collar;
    case Deform::ole: return std::abs(omq * v) < 700.0;
    case Deform::iel: return std::abs(v) > collar;
    case Deform::oel: return std::abs(v) > collar && 1.0 + omq * std::log(std::abs(v)) > collar;
  }
  return false;
}

// Relative condition number of deform(d, .) at v.
double kappa(Deform d, QParam q, double v) {
  const double omq = q.omq();
  if (omq == 0.0 || v == 0.0) return 1.0;
  double k = 1.0;
  switch (d) {
    case Deform::ile: {
      const double u = omq * v;
      k = u / ((1.0 + u) * std::log1p(u));
      break;
    }
    case Deform::ole: {
      const double u = omq * v;
      k = u * std::exp(u) / std::expm1(u);
      break;
    }
    case Deform::iel: k = std::pow(std::abs(v), omq); break;
    case Deform::oel: k = 1.0 / (1.0 + omq * std::log(std::abs(v))); break;
  }
  k = std::abs(k);
  return std::isfinite(k) ? std::max(k, 1.0) : 1e300;
}

// Chains longer than this amplify rounding past the law tolerances.
constexpr double kappa_limit = 1e4;

// Evaluates closed-form operations, flagging any step that lands in a collar or
// whose accumulated condition number exceeds kappa_limit.
struct Arena {
  Deform d;
  QParam q;
  double collar;
  std::string bad;
  double cond = 1.0;

  ExtReal op(Op o, const ExtReal& a, const ExtReal& b) {
    if (!bad.empty()) return ExtReal::undefined(Reason::cutoff);
    if (!a.is_finite() || !b.is_finite()) return flag("nonfinite");
    if (!input_ok(d, q, a.value(), collar) || !input_ok(d, q, b.value(), collar)) return flag("collar");
    const Deform c = complement(d);
    const ExtReal ca = deform(c, q, a), cb = deform(c, q, b);
    if (o == Op::div && !(std::abs(cb.value()) > collar)) return flag("collar");
    ExtReal s;
    switch (o) {
      case Op::add: s = ca + cb; break;
      case Op::sub: s = ca - cb; break;
      case Op::mul: s = ca * cb; break;
      case Op::div: s = ca / cb; break;
    }
    if (in_cutoff(d, o, q, a.value(), b.value())) return flag("cutoff");
    if (!output_ok(d, q, s, collar)) return flag("collar");
    double k = std::max(kappa(c, q, a.value()), kappa(c, q, b.value())) * kappa(d, q, s.value());
    if (o == Op::add || o == Op::sub) k *= (std::abs(ca.value()) + std::abs(cb.value())) / std::abs(s.value());
    cond *= k;
    if (!(cond <= kappa_limit)) return flag("ill_conditioned");
    if (printed_sign_differs(d, o, q, a.value(), b.value())) return flag("printed_sign");
    const ExtReal r = op_closed(d, o, q, a.value(), b.value());
    if (!r.is_finite()) return flag("nonfinite");
    return r;
  }

  ExtReal flag(const char* why) {
    bad = why;
    return ExtReal::undefined(Reason::cutoff);
  }

  Outcome judge(const ExtReal& a, const ExtReal& b) const {
    if (!bad.empty()) return skipped(bad);
    return judged(residual(a, b));
  }
};

bool tpow_ok(Deform d, QParam q, double base, double e, double collar) {
  if (!(base > collar)) return false;
  if (!input_ok(d, q, base, collar)) return false;
  const ExtReal c = deform(complement(d), q, base);
  return output_ok(d, q, ext::pow(c, e), collar);
}

void arith_class(Deform d, const SampleDomain& dom, std::vector<LawReport>& out) {
  const std::string scope(name(d));
  const double collar = dom.exclusion;
  const std::size_t n = dom.count;
  const Draw draw = [=](SplitMix64& r, std::size_t) -> std::optional<Point> {
    for (int attempt = 0; attempt < 100; ++attempt) {
      const double q = r.uniform(dom.q_lo, dom.q_hi);
      const double x = r.uniform(dom.x_lo, dom.x_hi), y = r.uniform(dom.x_lo, dom.x_hi);
      const double z = r.uniform(dom.x_lo, dom.x_hi), u = r.uniform(0.0, 1.0);
      if (input_ok(d, q, x, collar) && input_ok(d, q, y, collar) && input_ok(d, q, z, collar)) {
        return Point{q, x, y, z, u};
      }
    }
    return std::nullopt;
  };
  auto arena = [=](const Point& p) { return Arena{d, QParam(p[0]), collar, {}}; };
  auto add = [&](const std::string& law, double tol, const Eval& e, bool expect = false) {
    out.push_back(run(law, scope, tol, n, dom.seed, draw, e, expect));
  };

  for (Op o : all_ops) {
    add("op_rule_vs_closed/" + std::string(name(o)), 1e-11, [=](const Point& p) {
      Arena a = arena(p);
      const ExtReal closed = a.op(o, p[1], p[2]);
      if (!a.bad.empty()) return skipped(a.bad);
      return judged(residual(op_rule(d, o, a.q, p[1], p[2]), closed));
    });
  }
  for (Op o : {Op::add, Op::mul}) {
    add("commutative/" + std::string(name(o)), 1e-10, [=](const Point& p) {
      Arena a = arena(p);
      const ExtReal l = a.op(o, p[1], p[2]), r = a.op(o, p[2], p[1]);
      return a.judge(l, r);
    });
    add("associative/" + std::string(name(o)), 1e-10, [=](const Point& p) {
      Arena a = arena(p);
      const ExtReal l = a.op(o, a.op(o, p[1], p[2]), p[3]);
      const ExtReal r = a.op(o, p[1], a.op(o, p[2], p[3]));
      return a.judge(l, r);
    });
  }
  add("distributive", 1e-10, [=](const Point& p) {
    Arena a = arena(p);
    const ExtReal l = a.op(Op::mul, p[1], a.op(Op::add, p[2], p[3]));
    const ExtReal r = a.op(Op::add, a.op(Op::mul, p[1], p[2]), a.op(Op::mul, p[1], p[3]));
    return a.judge(l, r);
  });
  add("neutral/add", 1e-10, [=](const Point& p) {
    const QParam q(p[0]);
    const Element e = neutral_add(d, q);
    if (!e.exists()) return skipped("no_element");
    const double nv = e.kind == Element::Kind::interval ? e.bound * (2.0 * p[4] - 1.0) : e.value;
    return judged(residual(op_closed(d, Op::add, q, p[1], nv), p[1]));
  });
  add("neutral/mul", 1e-10, [=](const Point& p) {
    const QParam q(p[0]);
    const Element e = neutral_mul(d, q);
    if (!e.exists()) return skipped("no_element");
    return judged(residual(op_closed(d, Op::mul, q, p[1], e.value), p[1]));
  });
  add("absorbing", 1e-10, [=](const Point& p) {
    const QParam q(p[0]);
    const Element e = absorbing(d, q);
    if (!e.applies_to(p[1])) return skipped("conditional");
    if (e.kind == Element::Kind::interval) {
      const ExtReal r = op_closed(d, Op::mul, q, p[1], e.bound * (2.0 * p[4] - 1.0));
      if (!r.is_finite()) return judged(r);
      return judged(std::max(0.0, std::abs(r.value()) - e.bound) / std::max(1.0, e.bound));
    }
    return judged(residual(op_closed(d, Op::mul, q, p[1], e.value), e.value));
  });
  add("opposite", 1e-10, [=](const Point& p) {
    const QParam q(p[0]);
    const ExtReal m = neg(d, q, p[1]);
    if (!m.is_finite()) return unusable(m);
    if (!input_ok(d, q, m.value(), collar)) return skipped("collar");
    const Element e = neutral_add(d, q);
    const ExtReal r = op_closed(d, Op::add, q, p[1], m.value());
    if (!r.is_finite()) return judged(r);
    if (e.kind == Element::Kind::interval) {
      return judged(std::max(0.0, std::abs(r.value()) - e.bound) / std::max(1.0, e.bound));
    }
    return judged(residual(r, e.value));
  });
  add("inverse", 1e-10, [=](const Point& p) {
    const QParam q(p[0]);
    const Element e = neutral_mul(d, q);
    if (!e.exists()) return skipped("no_element");
    const ExtReal iv = inv(d, q, p[1]);
    if (!iv.is_finite()) return unusable(iv);
    if (d == Deform::oel && iv.value() == 0.0) return skipped("no_element");
    if (!input_ok(d, q, iv.value(), collar)) return skipped("collar");
    return judged(residual(op_closed(d, Op::mul, q, p[1], iv.value()), e.value));
  });
  add("sub_is_add_opposite", 1e-10, [=](const Point& p) {
    Arena a = arena(p);
    const ExtReal m = neg(d, a.q, p[2]);
    if (!m.is_finite()) return unusable(m);
    const ExtReal l = a.op(Op::sub, p[1], p[2]), r = a.op(Op::add, p[1], m);
    return a.judge(l, r);
  });
  add("div_is_mul_inverse", 1e-10, [=](const Point& p) {
    Arena a = arena(p);
    const ExtReal iv = inv(d, a.q, p[2]);
    if (!iv.is_finite()) return unusable(iv);
    if (d == Deform::oel && iv.value() == 0.0) return skipped("no_element");
    const ExtReal l = a.op(Op::div, p[1], p[2]), r = a.op(Op::mul, p[1], iv);
    return a.judge(l, r);
  });
  add("tpow_closed_vs_rule", 1e-10, [=](const Point& p) {
    const QParam q(p[0]);
    const double base = std::abs(p[1]);
    if (!tpow_ok(d, q, base, p[2], collar)) return skipped("collar");
    return judged(residual(tpow(d, q, base, p[2]), tpow_rule(d, q, base, p[2])));
  });
  add("dot_closed_vs_rule", 1e-10, [=](const Point& p) {
    const QParam q(p[0]);
    const double reps = std::abs(p[1]);
    const ExtReal inner = ExtReal(reps) * deform(complement(d), q, p[2]);
    if (!output_ok(d, q, inner, collar) || !(reps > collar)) return skipped("collar");
    return judged(residual(dot_mul(d, q, reps, p[2]), dot_rule(d, q, reps, p[2])));
  });
  add("tpow_repetition", 1e-10, [=](const Point& p) {
    Arena a = arena(p);
    const int k = static_cast<int>(p[4] * 4.0);
    const double base = std::abs(p[1]);
    if (!(base > collar)) return skipped("collar");
    ExtReal r;
    if (k == 0) {
      const Element e = neutral_mul(d, a.q);
      if (!e.exists()) return skipped("no_element");
      r = e.value;
    } else {
      r = base;
      for (int i = 1; i < k; ++i) r = a.op(Op::mul, r, base);
    }
    if (k > 0 && !tpow_ok(d, a.q, base, k, collar)) return skipped("collar");
    return a.judge(tpow(d, a.q, base, k), r);
  });
  add("dot_repetition", 1e-10, [=](const Point& p) {
    Arena a = arena(p);
    const int k = 1 + static_cast<int>(p[4] * 4.0);
    ExtReal r = p[2];
    for (int i = 1; i < k; ++i) r = a.op(Op::add, r, p[2]);
    return a.judge(dot_mul(d, a.q, k, p[2]), r);
  });
  add("tpow_distributive", 1e-10, [=](const Point& p) {
    Arena a = arena(p);
    const double bx = std::abs(p[1]), by = std::abs(p[2]), e = p[3];
    const ExtReal prod = a.op(Op::mul, bx, by);
    if (!a.bad.empty()) return skipped(a.bad);
    if (!tpow_ok(d, a.q, bx, e, collar) || !tpow_ok(d, a.q, by, e, collar) ||
        !tpow_ok(d, a.q, prod.value(), e, collar)) {
      return skipped("collar");
    }
    const ExtReal l = tpow(d, a.q, prod.value(), e);
    const ExtReal r = a.op(Op::mul, tpow(d, a.q, bx, e), tpow(d, a.q, by, e));
    return a.judge(l, r);
  });
  add("round_trip", 1e-12, [=](const Point& p) {
    const QParam q(p[0]);
    const double x = p[1];
    if (family(d) == Family::el && !(std::abs(x) > collar)) return skipped("collar");
    if ((d == Deform::ile || d == Deform::oel) && !(bracket(d, q, x) > collar)) return skipped("collar");
    const ExtReal y = deform(d, q, x);
    if (!y.is_finite() || !input_ok(d, q, y.value(), collar)) return skipped("collar");
    const ExtReal fwd = undeform(d, q, y);
    const ExtReal back = deform(d, q, undeform(d, q, y));
    return judged(worst({residual(fwd, x), residual(back, y)}));
  });
}

void numbers_identities(const SampleDomain& dom, std::vector<LawReport>& out) {
  const double collar = dom.exclusion;
  for (Identity id : all_identities) {
    const bool logarithmic = id == Identity::log_ile || id == Identity::log_ole || id == Identity::qlog_ile ||
                             id == Identity::qlog_ole;
    const Draw draw = [=](SplitMix64& r, std::size_t) -> std::optional<Point> {
      const double q = r.uniform(dom.q_lo, dom.q_hi);
      const double x = logarithmic ? r.uniform(collar, positive_hi(dom)) : r.uniform(dom.x_lo, dom.x_hi);
      return Point{q, x};
    };
    out.push_back(run("identity/" + std::string(name(id)), "numbers", 1e-10, dom.count, dom.seed, draw,
                      [=](const Point& p) {
                        const QParam q(p[0]);
                        const double b = logarithmic ? 1.0 + q.omq() * std::log(p[1]) : 1.0 + q.omq() * p[1];
                        if (!(b > collar)) return skipped("collar");
                        const ExtReal r = identity_residual(id, q, p[1]);
                        if (r.kind() == ExtReal::Kind::pos_inf) return skipped("nonfinite");
                        return judged(r);
                      }));
  }
}

}  // namespace

VerifyResult verify_qfun(const SampleDomain& dom) {
  VerifyResult res{"qfun", dom, {}};
  const double collar = dom.exclusion;
  const Draw qx = [=](SplitMix64& r, std::size_t) -> std::optional<Point> {
    return Point{r.uniform(dom.q_lo, dom.q_hi), std::exp(r.uniform(-7.0, 7.0))};
  };
  res.laws.push_back(run("round_trip/exp_ln", "qfun", 1e-12, dom.count, dom.seed, qx, [](const Point& p) {
    const QParam q(p[0]);
    // exp_q has condition number 1/x^(1-q) here; keep it below 1e-12/eps
    if (!(std::exp(q.omq() * std::log(p[1])) > 1e-3)) return skipped("collar");
    return judged(residual(exp_q(q, ln_q(q, p[1])), p[1]));
  }));
  const Draw qy = [=](SplitMix64& r, std::size_t) -> std::optional<Point> {
    return Point{r.uniform(dom.q_lo, dom.q_hi), r.uniform(dom.x_lo, dom.x_hi)};
  };
  res.laws.push_back(run("round_trip/ln_exp", "qfun", 1e-12, dom.count, dom.seed, qy, [=](const Point& p) {
    const QParam q(p[0]);
    if (!(1.0 + q.omq() * p[1] > collar)) return skipped("collar");
    return judged(residual(ln_q(q, exp_q(q, p[1])), p[1]));
  }));
  const Draw qxy = [=](SplitMix64& r, std::size_t) -> std::optional<Point> {
    return Point{r.uniform(dom.q_lo, dom.q_hi), r.uniform(collar, 10.0), r.uniform(collar, 10.0)};
  };
  res.laws.push_back(run("nonadditivity", "qfun", 1e-12, dom.count, dom.seed, qxy, [](const Point& p) {
    const QParam q(p[0]);
    const ExtReal raw = nonadditivity_residual(q, p[1], p[2]);
    const ExtReal whole = ln_q(q, p[1] * p[2]);
    if (!raw.is_finite() || !whole.is_finite()) return judged(raw);
    return judged(std::abs(raw.value()) / std::max(1.0, std::abs(whole.value())));
  }));
  return res;
}

VerifyResult verify_arith(const SampleDomain& dom) {
  VerifyResult res{"arith", dom, {}};
  for (Deform d : all_deforms) arith_class(d, dom, res.laws);
  numbers_identities(dom, res.laws);
  return res;
}

VerifyResult verify_calc(const SampleDomain& dom) {
  VerifyResult res{"calc", dom, {}};
  const std::size_t n = dom.calc_count;
  const double collar = dom.exclusion;
  const double hi = positive_hi(dom);
  auto draw_for = [=](bool positive) -> Draw {
    return [=](SplitMix64& r, std::size_t) -> std::optional<Point> {
      const double q = r.uniform(dom.q_lo, dom.q_hi);
      const double x = positive ? r.uniform(collar, hi) : r.uniform(dom.x_lo, dom.x_hi);
      return Point{q, x, r.uniform(0.0, 1.0)};
    };
  };
  auto& laws = res.laws;
  const RealFn expf([](double t) { return std::exp(t); });
  const RealFn logf([](double t) { return std::log(t); }, Interval{0.0});
  const RealFn bump([](double t) { return 1.0 + 0.5 * t * t; });
  const RealFn wave([](double t) { return 2.0 + std::sin(t); }, [](double t) { return std::cos(t); });
  const RealFn wave_fd([](double t) { return 2.0 + std::sin(t); });
  const RealFn para([](double t) { return 1.0 + t * t; });

  for (Deform d : all_deforms) {
    const std::string scope(name(d));
    const bool el = family(d) == Family::el;
    const Draw draw = draw_for(el);
    laws.push_back(run("eigenfunction", scope, 1e-6, n, dom.seed, draw,
                       [=](const Point& p) { return judged(eigen_residual(d, p[0], p[1])); }));
    laws.push_back(run("duality", scope, 1e-6, n, dom.seed, draw, [=](const Point& p) {
      return judged(duality_residual(d, p[0], expf, logf, p[1]));
    }));
    laws.push_back(run("log_law", scope, 1e-6, n, dom.seed, draw_for(true),
                       [=](const Point& p) { return judged(log_law_residual(d, p[0], p[1])); }));
    for (bool linear : {true, false}) {
      laws.push_back(run(linear ? "product_rule/linear" : "product_rule/nonlinear", scope, 1e-6, n, dom.seed, draw,
                         [=](const Point& p) {
                           return judged(product_rule_residual(d, linear, p[0], wave, para, p[1]));
                         }));
    }
    laws.push_back(run("equivalence", scope, 1e-6, n, dom.seed, draw,
                       [=](const Point& p) { return judged(equivalence_residual(d, p[0], p[1])); }));
    laws.push_back(run("fundamental_theorem", scope, 1e-7, n, dom.seed, draw, [=](const Point& p) {
      const double a = el ? 0.5 * p[1] : p[1] - 0.5;
      return judged(ft_linear_residual(d, p[0], bump, a, p[1]));
    }));
    laws.push_back(run("fundamental_theorem_second", scope, 1e-7, n, dom.seed, draw, [=](const Point& p) {
      const double a = el ? 0.5 * p[1] : p[1] - 0.5;
      return judged(ft_linear_second_residual(d, p[0], wave_fd, a, p[1]));
    }));
    laws.push_back(run("nonlinear_fundamental_theorem_fails", scope, 1e-3, n, dom.seed, draw,
                       [=](const Point& p) {
                         const double a = el ? 0.5 * p[1] : p[1] - 0.5;
                         return judged(ft_nonlinear_residual(d, p[0], bump, a, p[1]));
                       },
                       true));
  }
  for (Side s : {Side::i, Side::o}) {
    const std::string scope = s == Side::i ? "i" : "o";
    for (int mode = 0; mode < 3; ++mode) {
      const bool linear = mode != 1, exact = mode == 2;
      const std::string law = mode == 0 ? "power_rule/linear" : mode == 1 ? "power_rule/nonlinear"
                                                                           : "power_rule/linear_exact";
      laws.push_back(run(law, scope, exact ? 1e-10 : 1e-6, n, dom.seed, draw_for(true), [=](const Point& p) {
        const int k = 1 + static_cast<int>(p[2] * 4.0);
        return judged(power_rule_residual(s, linear, p[0], k, p[1], exact));
      }));
    }
  }
  laws.push_back(run("qexp_slope", "qfun", 1e-6, n, dom.seed, draw_for(false), [=](const Point& p) {
    const QParam q(p[0]);
    if (!(1.0 + q.omq() * p[1] > 0.05)) return skipped("collar");
    return judged(qexp_slope_residual(q, p[1]));
  }));
  laws.push_back(run("qlog_slope", "qfun", 1e-6, n, dom.seed, draw_for(true),
                     [=](const Point& p) { return judged(qlog_slope_residual(p[0], p[1])); }));
  laws.push_back(run("qlog_integral", "qfun", 1e-8, n, dom.seed, draw_for(true), [=](const Point& p) {
    const QParam q(p[0]);
    return judged(residual(qlog_integral(q, p[1]), ln_q(q, p[1])));
  }));
  laws.push_back(run("nobre/nonlinear", "qfun", 1e-6, n, dom.seed, draw_for(false), [=](const Point& p) {
    const QParam q(p[0]);
    if (!(1.0 + q.omq() * p[1] > 0.05)) return skipped("collar");
    const RealFn e([q](double t) { return exp_q(q, t).value(); });
    const Derivative dv = d_nobre_nonlinear(q, e, p[1]);
    if (dv.error > 1e-7 * std::max(1.0, std::abs(dv.value.value()))) return skipped("not_resolved");
    return judged(residual(dv.value, exp_q(q, p[1])));
  }));
  laws.push_back(run("nobre/linear", "qfun", 1e-6, n, dom.seed, draw_for(true), [=](const Point& p) {
    const QParam q(p[0]);
    const RealFn l([q](double t) { return ln_q(q, t).value(); }, Interval{0.0});
    const Derivative dv = d_nobre_linear(q, l, p[1]);
    if (dv.error > 1e-7 * std::max(1.0, std::abs(dv.value.value()))) return skipped("not_resolved");
    return judged(residual(dv.value, 1.0 / p[1]));
  }));
  return res;
}

namespace {

// Random distribution over 2..6 states; every p satisfies accept(p).
std::optional<Distribution> draw_distribution(SplitMix64& r, const std::function<bool(double)>& accept) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    const int w = 2 + static_cast<int>(r.uniform(0.0, 5.0));
    std::vector<double> p(w);
    for (double& v : p) v = r.uniform(0.05, 1.0);
    const double s = neumaier_sum(p);
    for (double& v : p) v /= s;
    if (std::all_of(p.begin(), p.end(), accept)) return Distribution(p);
  }
  return std::nullopt;
}

Point pack(double q, const Distribution& d) {
  Point p{q};
  p.insert(p.end(), d.probs().begin(), d.probs().end());
  return p;
}

Distribution unpack(const Point& p) { return Distribution(std::vector<double>(p.begin() + 1, p.end())); }

bool entropy_domain(Deform d, QParam q, double p, double collar) {
  const double omq = q.omq();
  if (d == Deform::iel) return 1.0 + omq * std::log(p) > collar;
  if (d == Deform::ole) return 1.0 + omq * p > collar;
  return true;
}

struct Claim {
  const char* law;
  Deform d;
  double q;
  std::function<bool(const AdmissibilityReport&)> holds;
};

}  // namespace

VerifyResult verify_entropy(const SampleDomain& dom) {
  VerifyResult res{"entropy", dom, {}};
  auto& laws = res.laws;
  const std::size_t n = dom.count;
  const double collar = dom.exclusion;
  auto draw_for = [=](std::function<bool(QParam, double)> accept) -> Draw {
    return [=](SplitMix64& r, std::size_t) -> std::optional<Point> {
      const double q = r.uniform(dom.q_lo, dom.q_hi);
      const auto dist = draw_distribution(r, [&](double p) { return accept(q, p); });
      if (!dist) return std::nullopt;
      return pack(q, *dist);
    };
  };
  const Draw any = draw_for([](QParam, double) { return true; });

  laws.push_back(run("tsallis_forms", "entropy", 1e-12, n, dom.seed, any, [](const Point& p) {
    const QParam q(p[0]);
    const Distribution dist = unpack(p);
    double alt = 0.0;
    for (double v : dist.probs()) alt += v * ln_q(q, 1.0 / v).value();
    return judged(residual(s_tsallis(dist, q), alt));
  }));
  laws.push_back(run("jackson", "entropy", 1e-10, n, dom.seed, any, [](const Point& p) {
    const QParam q(p[0]);
    const Distribution dist = unpack(p);
    return judged(residual(s_via_jackson(dist, q), s_tsallis(dist, q)));
  }));
  laws.push_back(run("renyi_relation", "entropy", 1e-10, n, dom.seed, any, [](const Point& p) {
    return judged(renyi_relation_residual(unpack(p), p[0]));
  }));
  laws.push_back(run("oel_is_tsallis", "entropy", 0.0, n, dom.seed, any, [](const Point& p) {
    const QParam q(p[0]);
    const Distribution dist = unpack(p);
    return judged(residual(s_delta_closed(Deform::oel, q, dist), s_tsallis(dist, q)));
  }));
  for (Deform d : all_deforms) {
    const std::string scope(name(d));
    const Draw draw = draw_for([=](QParam q, double p) { return entropy_domain(d, q, p, collar); });
    laws.push_back(run("generator_vs_closed", scope, 1e-6, n, dom.seed, draw, [=](const Point& p) {
      const QParam q(p[0]);
      const Distribution dist = unpack(p);
      return judged(residual(s_delta_via_generator(d, q, dist), s_delta_closed(d, q, dist)));
    }));
    for (bool linear : {true, false}) {
      laws.push_back(run(linear ? "collapse/linear" : "collapse/nonlinear", scope, 1e-6, n, dom.seed, any,
                         [=](const Point& p) { return judged(collapse_residual(d, linear, p[0], unpack(p))); }));
    }
  }

  const Draw grid = [](SplitMix64&, std::size_t i) -> std::optional<Point> {
    constexpr double qs[] = {0.25, 0.5, 0.75}, ws[] = {2.0, 4.0, 9.0}, ns[] = {2.0, 3.0, 10.0};
    return Point{qs[i / 9 % 3], ws[i / 3 % 3], ns[i % 3]};
  };
  laws.push_back(run("extensivity", "entropy", 1e-10, 27, dom.seed, grid, [](const Point& p) {
    const Extensivity e = extensivity_demo(p[0], p[1], p[2]);
    return judged(residual(e.lhs, e.rhs));
  }));

  const std::vector<std::string> ids = identity_ids();
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const bool logarithmic = ids[k].rfind("qlog", 0) == 0 || ids[k].rfind("log", 0) == 0;
    const bool power = ids[k].find("power") != std::string::npos;
    const Draw draw = [=](SplitMix64& r, std::size_t) -> std::optional<Point> {
      const double q = r.uniform(dom.q_lo, dom.q_hi);
      const double x = logarithmic ? r.uniform(collar, positive_hi(dom)) : r.uniform(dom.x_lo, dom.x_hi);
      const double y = logarithmic && !power ? r.uniform(collar, positive_hi(dom)) : r.uniform(dom.x_lo, dom.x_hi);
      return Point{q, x, y};
    };
    laws.push_back(run("identity/" + ids[k], "identities", 1e-10, n, dom.seed, draw, [=](const Point& p) {
      const IdentityResult r = identity_suite(p[0], p[1], p[2])[k];
      if (r.skipped) return skipped(r.skip_reason);
      return judged(r.residual);
    }));
  }

  const Claim claims[] = {
      {"certainty_nonzero", Deform::ile, 2.0, [](const AdmissibilityReport& r) { return !r.certainty_zero; }},
      {"certainty_nonzero", Deform::ole, 0.5, [](const AdmissibilityReport& r) { return !r.certainty_zero; }},
      {"negative_values", Deform::ile, 0.5, [](const AdmissibilityReport& r) { return !r.nonnegative; }},
      {"negative_values", Deform::ole, 2.0, [](const AdmissibilityReport& r) { return !r.nonnegative; }},
      {"indefinite", Deform::ile, 2.4,
       [](const AdmissibilityReport& r) { return r.curvature == Curvature::indefinite; }},
      {"indefinite", Deform::ole, 2.3,
       [](const AdmissibilityReport& r) { return r.curvature == Curvature::indefinite; }},
      {"nonnegative", Deform::iel, 2.0, [](const AdmissibilityReport& r) { return r.nonnegative; }},
      {"certainty_zero", Deform::iel, 2.0, [](const AdmissibilityReport& r) { return r.certainty_zero; }},
      {"expansible", Deform::iel, 2.0, [](const AdmissibilityReport& r) { return r.expansible; }},
      {"not_expansible", Deform::iel, 0.5, [](const AdmissibilityReport& r) { return !r.expansible; }},
      {"concave", Deform::oel, 2.0, [](const AdmissibilityReport& r) { return r.curvature == Curvature::concave; }},
      {"convex", Deform::oel, -1.0, [](const AdmissibilityReport& r) { return r.curvature == Curvature::convex; }},
  };
  for (const Claim& c : claims) {
    const AdmissibilityReport rep = admissibility_report(c.d, c.q);
    const bool ok = c.holds(rep);
    char scope[48];
    std::snprintf(scope, sizeof scope, "%s q=%g", std::string(name(c.d)).c_str(), c.q);
    const Draw one = [q = c.q](SplitMix64&, std::size_t) -> std::optional<Point> { return Point{q}; };
    laws.push_back(run(std::string("admissibility/") + c.law, scope, 0.0, 1, dom.seed, one,
                       [ok](const Point&) { return judged(ok ? ExtReal(0.0) : ExtReal::pos_inf()); }));
  }
  return res;
}

VerifyResult verify_all(const SampleDomain& dom) {
  VerifyResult res{"all", dom, {}};
  for (auto* suite : {verify_qfun, verify_arith, verify_calc, verify_entropy}) {
    VerifyResult part = suite(dom);
    res.laws.insert(res.laws.end(), std::make_move_iterator(part.laws.begin()),
                    std::make_move_iterator(part.laws.end()));
  }
  return res;
}

VerifyResult verify_suite(const std::string& suite, const SampleDomain& dom) {
  if (suite == "qfun") return verify_qfun(dom);
  if (suite == "arith") return verify_arith(dom);
  if (suite == "calc") return verify_calc(dom);
  if (suite == "entropy") return verify_entropy(dom);
  if (suite == "all") return verify_all(dom);
  throw std::invalid_argument("unknown suite: " + suite);
}

namespace {

nlohmann::ordered_json number(const ExtReal& v) {
  switch (v.kind()) {
    case ExtReal::Kind::finite: return v.value();
    case ExtReal::Kind::pos_inf: return "inf";
    case ExtReal::Kind::neg_inf: return "-inf";
    default: return "undefined";
  }
}

}  // namespace

std::string report_json(const VerifyResult& result) {
  using nlohmann::ordered_json;
  ordered_json j;
  const SampleDomain& d = result.domain;
  j["suite"] = result.suite;
  j["seed"] = d.seed;
  j["count"] = d.count;
  j["calc_count"] = d.calc_count;
  j["q_range"] = {d.q_lo, d.q_hi};
  j["x_range"] = {d.x_lo, d.x_hi};
  j["exclusion"] = d.exclusion;
  j["passed"] = result.passed();
  j["laws_total"] = result.laws.size();
  j["laws_failed"] = std::count_if(result.laws.begin(), result.laws.end(), [](const LawReport& l) { return !l.passed(); });
  ordered_json laws = ordered_json::array();
  for (const auto& l : result.laws) {
    ordered_json e;
    e["law"] = l.law;
    e["scope"] = l.scope;
    e["passed"] = l.passed();
    e["tolerance"] = l.tolerance;
    e["expect_counterexample"] = l.expect_counterexample;
    e["samples"] = l.samples;
    e["passes"] = l.passes;
    e["failures"] = l.failures;
    e["skips"] = l.skips;
    e["max_residual"] = number(l.max_residual);
    ordered_json reasons = ordered_json::object();
    for (const auto& [k, v] : l.skip_reasons) reasons[k] = v;
    e["skip_reasons"] = reasons;
    ordered_json ces = ordered_json::array();
    for (const auto& c : l.counterexamples) {
      ces.push_back({{"point", c.point}, {"residual", number(c.residual)}});
    }
    e["counterexamples"] = ces;
    laws.push_back(e);
  }
  j["laws"] = laws;
  return j.dump(2) + "\n";
}

}  // namespace qdeform
