#include "qdeform/qdeform.h"

#include <memory>
#include <stdexcept>
#include <string>

#include "qdeform/arith.hpp"
#include "qdeform/calculus.hpp"
#include "qdeform/datasets.hpp"
#include "qdeform/entropy.hpp"
#include "qdeform/numbers.hpp"
#include "qdeform/qfun.hpp"
#include "qdeform/verify.hpp"

using namespace qdeform;

struct qd_function {
  RealFn fn;
};

struct qd_distribution {
  Distribution dist;
};

struct qd_report {
  std::string text;
  bool passed = true;
};

namespace {

thread_local std::string last_error;

struct NullArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownName : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
qd_status guard(F&& f) {
  last_error.clear();
  try {
    f();
    return QD_OK;
  } catch (const NullArgument& e) {
    last_error = e.what();
    return QD_ERR_NULL;
  } catch (const UnknownName& e) {
    last_error = e.what();
    return QD_ERR_UNKNOWN_NAME;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return QD_ERR_INVALID;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QD_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return QD_ERR_INTERNAL;
  }
}

template <class... P>
void need(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullArgument("null pointer argument");
}

Deform to_deform(qd_class c) {
  if (c < QD_ILE || c > QD_OEL) throw std::invalid_argument("class out of range");
  return static_cast<Deform>(c);
}

Op to_op(qd_op op) {
  if (op < QD_ADD || op > QD_DIV) throw std::invalid_argument("operation out of range");
  return static_cast<Op>(op);
}

qd_value to_c(const ExtReal& v) {
  qd_value out;
  out.kind = static_cast<qd_kind>(v.kind());
  out.value = v.value();
  out.reason = static_cast<int>(v.reason());
  return out;
}

qd_element to_c(const Element& e) {
  return {static_cast<qd_element_kind>(e.kind), e.value, e.bound};
}

Grid to_grid(qd_grid g) {
  Grid out{g.min, g.max, g.steps};
  out.validate();
  return out;
}

std::vector<Deform> classes_of(const qd_class* cs, size_t n) {
  if (n == 0) throw std::invalid_argument("no classes given");
  need(cs);
  std::vector<Deform> out;
  for (size_t i = 0; i < n; ++i) out.push_back(to_deform(cs[i]));
  return out;
}

std::vector<double> qs_of(const double* qs, size_t n) {
  if (n == 0) throw std::invalid_argument("no q values given");
  need(qs);
  std::vector<double> out(qs, qs + n);
  for (double q : out) QParam{q};
  return out;
}

void emit(qd_report** out, std::string text, bool passed = true) {
  *out = new qd_report{std::move(text), passed};
}

std::string render(const Table& t, qd_format fmt) {
  if (fmt == QD_CSV) return t.csv();
  if (fmt == QD_JSON) return t.json();
  throw std::invalid_argument("format out of range");
}

}  // namespace

extern "C" {

const char* qd_last_error(void) { return last_error.c_str(); }

const char* qd_reason_name(int reason) {
  if (reason < 0 || reason > static_cast<int>(Reason::not_resolved)) return "unknown";
  return reason_name(static_cast<Reason>(reason)).data();
}

const char* qd_status_name(qd_status s) {
  switch (s) {
    case QD_OK: return "ok";
    case QD_ERR_NULL: return "null_argument";
    case QD_ERR_INVALID: return "invalid_argument";
    case QD_ERR_UNKNOWN_NAME: return "unknown_name";
    case QD_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

qd_status qd_class_from_name(const char* name, qd_class* out) {
  return guard([&] {
    need(name, out);
    const auto d = parse_deform(name);
    if (!d) throw UnknownName(std::string("unknown class: ") + name);
    *out = static_cast<qd_class>(*d);
  });
}

qd_status qd_op_from_name(const char* name, qd_op* out) {
  return guard([&] {
    need(name, out);
    const auto op = parse_op(name);
    if (!op) throw UnknownName(std::string("unknown operation: ") + name);
    *out = static_cast<qd_op>(*op);
  });
}

const char* qd_class_name(qd_class c) {
  if (c < QD_ILE || c > QD_OEL) return "unknown";
  return name(static_cast<Deform>(c)).data();
}

const char* qd_op_name(qd_op op) {
  if (op < QD_ADD || op > QD_DIV) return "unknown";
  return name(static_cast<Op>(op)).data();
}

qd_status qd_ln_q(double q, double x, qd_value* out) {
  return guard([&] { need(out); *out = to_c(ln_q(q, x)); });
}

qd_status qd_exp_q(double q, double x, qd_value* out) {
  return guard([&] { need(out); *out = to_c(exp_q(q, x)); });
}

qd_status qd_deform(qd_class c, double q, double x, qd_value* out) {
  return guard([&] { need(out); *out = to_c(deform(to_deform(c), q, x)); });
}

qd_status qd_deform_composed(qd_class c, double q, double x, qd_value* out) {
  return guard([&] { need(out); *out = to_c(deform_composed(to_deform(c), q, x)); });
}

qd_status qd_undeform(qd_class c, double q, double y, qd_value* out) {
  return guard([&] { need(out); *out = to_c(undeform(to_deform(c), q, y)); });
}

qd_status qd_op_closed(qd_class c, qd_op op, double q, double x, double y, qd_value* out) {
  return guard([&] { need(out); *out = to_c(op_closed(to_deform(c), to_op(op), q, x, y)); });
}

qd_status qd_op_rule(qd_class c, qd_op op, double q, double x, double y, qd_value* out) {
  return guard([&] { need(out); *out = to_c(op_rule(to_deform(c), to_op(op), q, x, y)); });
}

qd_status qd_in_cutoff(qd_class c, qd_op op, double q, double x, double y, int* out) {
  return guard([&] { need(out); *out = in_cutoff(to_deform(c), to_op(op), q, x, y) ? 1 : 0; });
}

qd_status qd_neg(qd_class c, double q, double y, qd_value* out) {
  return guard([&] { need(out); *out = to_c(neg(to_deform(c), q, y)); });
}

qd_status qd_inv(qd_class c, double q, double y, qd_value* out) {
  return guard([&] { need(out); *out = to_c(inv(to_deform(c), q, y)); });
}

qd_status qd_tpow(qd_class c, double q, double x, double y, qd_value* out) {
  return guard([&] { need(out); *out = to_c(tpow(to_deform(c), q, x, y)); });
}

qd_status qd_dot(qd_class c, double q, double x, double y, qd_value* out) {
  return guard([&] { need(out); *out = to_c(dot_mul(to_deform(c), q, x, y)); });
}

qd_status qd_dot_one(qd_class c, double q, double x, qd_value* out) {
  return guard([&] { need(out); *out = to_c(dot_one(to_deform(c), q, x)); });
}

qd_status qd_neutral_add(qd_class c, double q, qd_element* out) {
  return guard([&] { need(out); *out = to_c(neutral_add(to_deform(c), q)); });
}

qd_status qd_neutral_mul(qd_class c, double q, qd_element* out) {
  return guard([&] { need(out); *out = to_c(neutral_mul(to_deform(c), q)); });
}

qd_status qd_absorbing(qd_class c, double q, qd_element* out) {
  return guard([&] { need(out); *out = to_c(absorbing(to_deform(c), q)); });
}

qd_status qd_function_create(qd_real_fn f, qd_real_fn df, void* user, double lo, double hi, qd_function** out) {
  return guard([&] {
    need(out);
    if (f == nullptr) throw NullArgument("function callback is null");
    if (!(lo < hi)) throw std::invalid_argument("domain needs lo < hi");
    const Interval dom{lo, hi};
    RealFn::Fn fn = [f, user](double x) { return f(x, user); };
    if (df != nullptr) {
      RealFn::Fn dfn = [df, user](double x) { return df(x, user); };
      *out = new qd_function{RealFn(fn, dfn, dom)};
    } else {
      *out = new qd_function{RealFn(fn, dom)};
    }
  });
}

void qd_function_destroy(qd_function* fn) { delete fn; }

qd_status qd_h(qd_class c, double q, double x, qd_value* out) {
  return guard([&] { need(out); *out = to_c(h(to_deform(c), q, x)); });
}

qd_status qd_d_linear(qd_class c, double q, const qd_function* f, double x, qd_value* out, double* error) {
  return guard([&] {
    need(f, out);
    const Derivative d = d_linear(to_deform(c), q, f->fn, x);
    *out = to_c(d.value);
    if (error) *error = d.error;
  });
}

qd_status qd_d_nonlinear(qd_class c, double q, const qd_function* f, double x, qd_value* out, double* error) {
  return guard([&] {
    need(f, out);
    const Derivative d = d_nonlinear(to_deform(c), q, f->fn, x);
    *out = to_c(d.value);
    if (error) *error = d.error;
  });
}

qd_status qd_int_linear(qd_class c, double q, const qd_function* f, double a, double b, qd_value* out) {
  return guard([&] { need(f, out); *out = to_c(int_linear(to_deform(c), q, f->fn, a, b)); });
}

qd_status qd_int_nonlinear(qd_class c, double q, const qd_function* f, double a, double b, qd_value* out) {
  return guard([&] { need(f, out); *out = to_c(int_nonlinear(to_deform(c), q, f->fn, a, b)); });
}

qd_status qd_qlog_integral(double q, double x, qd_value* out) {
  return guard([&] { need(out); *out = to_c(qlog_integral(q, x)); });
}

qd_status qd_distribution_create(const double* p, size_t n, double k, qd_distribution** out) {
  return guard([&] {
    need(p, out);
    *out = new qd_distribution{Distribution(std::vector<double>(p, p + n), k)};
  });
}

void qd_distribution_destroy(qd_distribution* d) { delete d; }

qd_status qd_s1(const qd_distribution* d, double* out) {
  return guard([&] { need(d, out); *out = s1(d->dist); });
}

qd_status qd_s_tsallis(const qd_distribution* d, double q, double* out) {
  return guard([&] { need(d, out); *out = s_tsallis(d->dist, q); });
}

qd_status qd_renyi(const qd_distribution* d, double q, double* out) {
  return guard([&] { need(d, out); *out = renyi(d->dist, q); });
}

qd_status qd_s_delta(qd_class c, double q, const qd_distribution* d, qd_value* out) {
  return guard([&] { need(d, out); *out = to_c(s_delta_closed(to_deform(c), q, d->dist)); });
}

qd_status qd_s_delta_generator(qd_class c, double q, const qd_distribution* d, qd_value* out) {
  return guard([&] { need(d, out); *out = to_c(s_delta_via_generator(to_deform(c), q, d->dist)); });
}

const char* qd_report_text(const qd_report* r) { return r ? r->text.c_str() : ""; }

int qd_report_passed(const qd_report* r) { return r && r->passed ? 1 : 0; }

void qd_report_destroy(qd_report* r) { delete r; }

void qd_verify_options_default(qd_verify_options* o) {
  if (!o) return;
  const SampleDomain d;
  *o = {d.q_lo, d.q_hi, d.x_lo, d.x_hi, d.exclusion, d.count, d.calc_count, d.seed};
}

qd_status qd_verify(const char* suite, const qd_verify_options* o, qd_report** out) {
  return guard([&] {
    need(suite, o, out);
    const std::string s(suite);
    if (s != "qfun" && s != "arith" && s != "calc" && s != "entropy" && s != "all") {
      throw UnknownName("unknown suite: " + s);
    }
    if (!(o->q_lo <= o->q_hi) || !(o->x_lo < o->x_hi) || !(o->exclusion >= 0.0)) {
      throw std::invalid_argument("invalid sampling ranges");
    }
    SampleDomain dom;
    dom.q_lo = o->q_lo;
    dom.q_hi = o->q_hi;
    dom.x_lo = o->x_lo;
    dom.x_hi = o->x_hi;
    dom.exclusion = o->exclusion;
    dom.count = o->count;
    dom.calc_count = o->calc_count;
    dom.seed = o->seed;
    const VerifyResult r = verify_suite(s, dom);
    emit(out, report_json(r), r.passed());
  });
}

qd_status qd_dataset_numbers(const qd_class* classes, size_t nclasses, const double* qs, size_t nqs, qd_grid x,
                             qd_format fmt, qd_report** out) {
  return guard([&] {
    need(out);
    emit(out, render(numbers_table(classes_of(classes, nclasses), qs_of(qs, nqs), to_grid(x)), fmt));
  });
}

qd_status qd_dataset_asymptotes(const qd_class* classes, size_t nclasses, const double* qs, size_t nqs,
                                qd_format fmt, qd_report** out) {
  return guard([&] {
    need(out);
    emit(out, render(asymptote_table(classes_of(classes, nclasses), qs_of(qs, nqs)), fmt));
  });
}

qd_status qd_dataset_cutoff_map(qd_class c, qd_op op, double q, qd_grid x, qd_grid y, qd_format fmt,
                                qd_report** out) {
  return guard([&] {
    need(out);
    emit(out, render(cutoff_map(to_deform(c), to_op(op), q, to_grid(x), to_grid(y)), fmt));
  });
}

qd_status qd_dataset_two_state(const qd_class* classes, size_t nclasses, const double* qs, size_t nqs, qd_grid p,
                               qd_format fmt, qd_report** out) {
  return guard([&] {
    need(out);
    emit(out, render(two_state_table(classes_of(classes, nclasses), qs_of(qs, nqs), to_grid(p)), fmt));
  });
}

qd_status qd_dataset_vs_w(const qd_class* classes, size_t nclasses, const double* qs, size_t nqs, qd_grid w,
                          qd_format fmt, qd_report** out) {
  return guard([&] {
    need(out);
    emit(out, render(vs_w_table(classes_of(classes, nclasses), qs_of(qs, nqs), to_grid(w)), fmt));
  });
}

qd_status qd_dataset_admissibility(const qd_class* classes, size_t nclasses, const double* qs, size_t nqs,
                                   int resolution, qd_report** out) {
  return guard([&] {
    need(out);
    emit(out, admissibility_json(classes_of(classes, nclasses), qs_of(qs, nqs), resolution));
  });
}

}  // extern "C"
