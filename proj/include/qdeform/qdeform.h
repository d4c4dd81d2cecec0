#ifndef QDEFORM_QDEFORM_H
#define QDEFORM_QDEFORM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QD_API __declspec(dllexport)
#else
#define QD_API __attribute__((visibility("default")))
#endif

typedef enum {
  QD_OK = 0,
  QD_ERR_NULL = 1,         /* required pointer argument was NULL */
  QD_ERR_INVALID = 2,      /* argument out of range (non-finite q, bad grid, bad distribution) */
  QD_ERR_UNKNOWN_NAME = 3, /* unknown class, operation or suite name */
  QD_ERR_INTERNAL = 4
} qd_status;

typedef enum { QD_FINITE = 0, QD_POS_INF = 1, QD_NEG_INF = 2, QD_UNDEFINED = 3 } qd_kind;

/* value is the IEEE view: +-inf for infinities, NaN when undefined */
typedef struct {
  qd_kind kind;
  double value;
  int reason;
} qd_value;

typedef enum { QD_ILE = 0, QD_OLE = 1, QD_IEL = 2, QD_OEL = 3 } qd_class;
typedef enum { QD_ADD = 0, QD_SUB = 1, QD_MUL = 2, QD_DIV = 3 } qd_op;

typedef enum { QD_POINT = 0, QD_INTERVAL = 1, QD_NONE = 2, QD_CONDITIONAL = 3 } qd_element_kind;

typedef struct {
  qd_element_kind kind;
  double value;
  double bound;
} qd_element;

/* Message of the last failing call on this thread; empty if none. */
QD_API const char* qd_last_error(void);
QD_API const char* qd_reason_name(int reason);
QD_API const char* qd_status_name(qd_status s);

QD_API qd_status qd_class_from_name(const char* name, qd_class* out);
QD_API qd_status qd_op_from_name(const char* name, qd_op* out);
QD_API const char* qd_class_name(qd_class c);
QD_API const char* qd_op_name(qd_op op);

/* q-logarithm and q-exponential */
QD_API qd_status qd_ln_q(double q, double x, qd_value* out);
QD_API qd_status qd_exp_q(double q, double x, qd_value* out);

/* deformed numbers */
QD_API qd_status qd_deform(qd_class c, double q, double x, qd_value* out);
QD_API qd_status qd_deform_composed(qd_class c, double q, double x, qd_value* out);
QD_API qd_status qd_undeform(qd_class c, double q, double y, qd_value* out);

/* deformed arithmetic */
QD_API qd_status qd_op_closed(qd_class c, qd_op op, double q, double x, double y, qd_value* out);
QD_API qd_status qd_op_rule(qd_class c, qd_op op, double q, double x, double y, qd_value* out);
QD_API qd_status qd_in_cutoff(qd_class c, qd_op op, double q, double x, double y, int* out);
QD_API qd_status qd_neg(qd_class c, double q, double y, qd_value* out);
QD_API qd_status qd_inv(qd_class c, double q, double y, qd_value* out);
QD_API qd_status qd_tpow(qd_class c, double q, double x, double y, qd_value* out);
QD_API qd_status qd_dot(qd_class c, double q, double x, double y, qd_value* out);
QD_API qd_status qd_dot_one(qd_class c, double q, double x, qd_value* out);
QD_API qd_status qd_neutral_add(qd_class c, double q, qd_element* out);
QD_API qd_status qd_neutral_mul(qd_class c, double q, qd_element* out);
QD_API qd_status qd_absorbing(qd_class c, double q, qd_element* out);

/* calculus */
typedef double (*qd_real_fn)(double x, void* user);
typedef struct qd_function qd_function;

/* df may be NULL (finite differences are used); domain is [lo, hi], infinities allowed */
QD_API qd_status qd_function_create(qd_real_fn f, qd_real_fn df, void* user, double lo, double hi, qd_function** out);
QD_API void qd_function_destroy(qd_function* fn);

QD_API qd_status qd_h(qd_class c, double q, double x, qd_value* out);
/* error receives the finite-difference error estimate; may be NULL */
QD_API qd_status qd_d_linear(qd_class c, double q, const qd_function* f, double x, qd_value* out, double* error);
QD_API qd_status qd_d_nonlinear(qd_class c, double q, const qd_function* f, double x, qd_value* out, double* error);
QD_API qd_status qd_int_linear(qd_class c, double q, const qd_function* f, double a, double b, qd_value* out);
QD_API qd_status qd_int_nonlinear(qd_class c, double q, const qd_function* f, double a, double b, qd_value* out);
QD_API qd_status qd_qlog_integral(double q, double x, qd_value* out);

/* entropy */
typedef struct qd_distribution qd_distribution;

QD_API qd_status qd_distribution_create(const double* p, size_t n, double k, qd_distribution** out);
QD_API void qd_distribution_destroy(qd_distribution* d);
QD_API qd_status qd_s1(const qd_distribution* d, double* out);
QD_API qd_status qd_s_tsallis(const qd_distribution* d, double q, double* out);
QD_API qd_status qd_renyi(const qd_distribution* d, double q, double* out);
QD_API qd_status qd_s_delta(qd_class c, double q, const qd_distribution* d, qd_value* out);
QD_API qd_status qd_s_delta_generator(qd_class c, double q, const qd_distribution* d, qd_value* out);

/* text reports: verification results and datasets */
typedef struct qd_report qd_report;

QD_API const char* qd_report_text(const qd_report* r);
/* 1 when every law passed (verification) or always 1 (datasets) */
QD_API int qd_report_passed(const qd_report* r);
QD_API void qd_report_destroy(qd_report* r);

typedef struct {
  double q_lo, q_hi;
  double x_lo, x_hi;
  double exclusion;
  uint64_t count;
  uint64_t calc_count;
  uint64_t seed;
} qd_verify_options;

QD_API void qd_verify_options_default(qd_verify_options* o);
/* suite: qfun, arith, calc, entropy or all; report text is JSON */
QD_API qd_status qd_verify(const char* suite, const qd_verify_options* o, qd_report** out);

typedef struct {
  double min;
  double max;
  int steps;
} qd_grid;

typedef enum { QD_CSV = 0, QD_JSON = 1 } qd_format;

QD_API qd_status qd_dataset_numbers(const qd_class* classes, size_t nclasses, const double* qs, size_t nqs,
                                    qd_grid x, qd_format fmt, qd_report** out);
QD_API qd_status qd_dataset_asymptotes(const qd_class* classes, size_t nclasses, const double* qs, size_t nqs,
                                       qd_format fmt, qd_report** out);
QD_API qd_status qd_dataset_cutoff_map(qd_class c, qd_op op, double q, qd_grid x, qd_grid y, qd_format fmt,
                                       qd_report** out);
QD_API qd_status qd_dataset_two_state(const qd_class* classes, size_t nclasses, const double* qs, size_t nqs,
                                      qd_grid p, qd_format fmt, qd_report** out);
QD_API qd_status qd_dataset_vs_w(const qd_class* classes, size_t nclasses, const double* qs, size_t nqs, qd_grid w,
                                 qd_format fmt, qd_report** out);
/* always JSON */
QD_API qd_status qd_dataset_admissibility(const qd_class* classes, size_t nclasses, const double* qs, size_t nqs,
                                          int resolution, qd_report** out);

#ifdef __cplusplus
}
#endif

#endif
