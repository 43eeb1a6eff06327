#include "ortholab.h"

#include <cstring>
#include <string>

#include "../core/experiments.hpp"
#include "../core/json_io.hpp"

using namespace ortholab;

struct ol_bv {
  BVFunction f;
};

struct ol_plan {
  WeightPlan p;
};

struct ol_table {
  ScanTable t;
};

namespace {

thread_local std::string g_last_error;

ol_status map_code(errc c) {
  switch (c) {
    case errc::ok: return OL_OK;
    case errc::invalid_argument: return OL_E_INVALID;
    case errc::domain: return OL_E_DOMAIN;
    case errc::bad_index: return OL_E_INDEX;
    case errc::unsupported: return OL_E_UNSUPPORTED;
    case errc::insufficient_weights: return OL_E_INSUFFICIENT_WEIGHTS;
    case errc::not_absolutely_continuous: return OL_E_NOT_AC;
    case errc::degenerate: return OL_E_DEGENERATE;
    case errc::parse: return OL_E_PARSE;
    case errc::io: return OL_E_IO;
    case errc::internal: return OL_E_INTERNAL;
  }
  return OL_E_INTERNAL;
}

template <typename Fn>
ol_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return OL_OK;
  } catch (const error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OL_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return OL_E_INTERNAL;
  }
}

ol_status need(const void* p, const char* what) {
  if (p) return OL_OK;
  g_last_error = std::string("null ") + what;
  return OL_E_INVALID;
}

SystemKind to_system(ol_system s) {
  switch (s) {
    case OL_SYSTEM_TRIG: return SystemKind::Trigonometric;
    case OL_SYSTEM_WALSH: return SystemKind::WalshPaley;
    case OL_SYSTEM_HAAR: return SystemKind::Haar;
  }
  fail(errc::invalid_argument, "unknown system id");
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<long> to_schedule(const int64_t* schedule, size_t len) {
  require(schedule != nullptr || len == 0, errc::invalid_argument, "null schedule");
  return std::vector<long>(schedule, schedule + len);
}

}  // namespace

extern "C" {

const char* ol_last_error(void) { return g_last_error.c_str(); }

void ol_string_free(char* s) { delete[] s; }

/* ---- orthonormal systems ---- */

ol_status ol_basis_eval(ol_system s, int64_t k, double x, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  return wrap([&] { *out = basis_eval(to_system(s), k, x); });
}

ol_status ol_basis_primitive(ol_system s, int64_t k, double x, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  return wrap([&] { *out = basis_primitive(to_system(s), k, x); });
}

ol_status ol_basis_primitive_sup(ol_system s, int64_t k, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  return wrap([&] { *out = basis_primitive_sup(to_system(s), k); });
}

ol_status ol_basis_breakpoints(ol_system s, int64_t k, double* buf, size_t cap, size_t* len) {
  if (ol_status st = need(len, "length output"); st != OL_OK) return st;
  return wrap([&] {
    std::vector<double> pts = basis_breakpoints(to_system(s), k);
    *len = pts.size();
    if (buf) {
      require(cap >= pts.size(), errc::invalid_argument, "breakpoint buffer too small");
      std::memcpy(buf, pts.data(), pts.size() * sizeof(double));
    }
  });
}

ol_status ol_basis_inner_product(ol_system s, int64_t k, int64_t l, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  return wrap([&] { *out = basis_inner_product(to_system(s), k, l); });
}

/* ---- bounded-variation functions ---- */

ol_status ol_bv_new(const double* segments, size_t nseg, double value_at_1, ol_bv** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(segments, "segments"); st != OL_OK) return st;
  return wrap([&] {
    std::vector<Segment> segs(nseg);
    for (size_t i = 0; i < nseg; ++i)
      segs[i] = {segments[4 * i], segments[4 * i + 1], segments[4 * i + 2],
                 segments[4 * i + 3]};
    *out = new ol_bv{BVFunction(std::move(segs), value_at_1)};
  });
}

ol_status ol_bv_builtin(const char* name, ol_bv** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(name, "name"); st != OL_OK) return st;
  return wrap([&] { *out = new ol_bv{BVFunction::builtin(name)}; });
}

ol_status ol_bv_from_json(const char* json, ol_bv** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(json, "json"); st != OL_OK) return st;
  return wrap([&] { *out = new ol_bv{bv_from_json(json)}; });
}

ol_status ol_bv_to_json(const ol_bv* f, char** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  return wrap([&] { *out = dup_string(bv_to_json(f->f)); });
}

void ol_bv_free(ol_bv* f) { delete f; }

ol_status ol_bv_eval(const ol_bv* f, double x, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  return wrap([&] { *out = f->f(x); });
}

ol_status ol_bv_total_variation(const ol_bv* f, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  return wrap([&] { *out = f->f.total_variation(); });
}

ol_status ol_bv_norm_a(const ol_bv* f, double* variation, double* sup_norm, double* a_norm) {
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  return wrap([&] {
    NormReport r = f->f.norm_a();
    if (variation) *variation = r.variation;
    if (sup_norm) *sup_norm = r.sup_norm;
    if (a_norm) *a_norm = r.a_norm;
  });
}

ol_status ol_bv_integrate_against(const ol_bv* f, ol_system s, int64_t k, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  return wrap([&] { *out = integrate_against(f->f, to_system(s), k); });
}

ol_status ol_bv_list_from_json(const char* json, size_t* count, ol_bv** handles, char** names,
                               size_t cap) {
  if (ol_status st = need(count, "count output"); st != OL_OK) return st;
  if (ol_status st = need(json, "json"); st != OL_OK) return st;
  return wrap([&] {
    auto fns = functions_from_json(json);
    *count = fns.size();
    if (!handles) return;
    require(cap >= fns.size(), errc::invalid_argument, "function buffer too small");
    for (size_t i = 0; i < fns.size(); ++i) {
      handles[i] = new ol_bv{std::move(fns[i].second)};
      if (names) names[i] = dup_string(fns[i].first);
    }
  });
}

/* ---- weight plans ---- */

ol_status ol_plan_preset(const char* d_name, const char* a_name, int64_t length_hint,
                         ol_plan** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(d_name, "d name"); st != OL_OK) return st;
  if (ol_status st = need(a_name, "a name"); st != OL_OK) return st;
  return wrap([&] { *out = new ol_plan{WeightPlan::preset(d_name, a_name, length_hint)}; });
}

ol_status ol_plan_from_json(const char* json, int64_t length_hint, ol_plan** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(json, "json"); st != OL_OK) return st;
  return wrap([&] { *out = new ol_plan{plan_from_json(json, length_hint)}; });
}

ol_status ol_plan_to_json(const ol_plan* plan, char** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] { *out = dup_string(plan_to_json(plan->p)); });
}

void ol_plan_free(ol_plan* plan) { delete plan; }

ol_status ol_admissibility_statistic(const ol_plan* plan, int64_t n, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] { *out = admissibility_statistic(plan->p, n); });
}

/* ---- functionals ---- */

ol_status ol_fourier_coefficient(const ol_bv* f, ol_system s, int64_t k, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  return wrap([&] { *out = fourier_coefficient(f->f, to_system(s), k); });
}

ol_status ol_kernel_value(const ol_plan* plan, ol_system s, int64_t n, double x, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] { *out = kernel_value(plan->p, to_system(s), n, x); });
}

ol_status ol_kernel_prefix(const ol_plan* plan, ol_system s, int64_t n, double x, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] { *out = kernel_prefix(plan->p, to_system(s), n, x); });
}

ol_status ol_prefix_max(const ol_plan* plan, ol_system s, int64_t n, double* value,
                        int64_t* argmax) {
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] {
    PrefixMax pm = boundedness_statistic(plan->p, to_system(s), n);
    if (value) *value = pm.value;
    if (argmax) *argmax = pm.argmax;
  });
}

ol_status ol_functional(const ol_bv* f, const ol_plan* plan, ol_system s, int64_t n,
                        double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] { *out = functional_value(f->f, plan->p, to_system(s), n); });
}

ol_status ol_functional_direct(const ol_bv* f, const ol_plan* plan, ol_system s, int64_t n,
                               double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] { *out = functional_value_direct(f->f, plan->p, to_system(s), n); });
}

ol_status ol_weighted_coeff_sum(const ol_bv* f, const ol_plan* plan, ol_system s, int64_t n,
                                double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] { *out = weighted_coeff_sum(f->f, plan->p, to_system(s), n); });
}

ol_status ol_mr_sum(const double* c, size_t len, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(c, "coefficients"); st != OL_OK) return st;
  return wrap([&] { *out = mr_sum(std::span<const double>(c, len)); });
}

/* ---- grid decomposition and sharpness ---- */

ol_status ol_decompose_basis(const ol_bv* f, ol_system s, int64_t k, int64_t n, double* a1,
                             double* a2, double* a3, double* lhs) {
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  return wrap([&] {
    Decomposition dec = decompose(f->f, Kernel::single_basis(to_system(s), k), n);
    if (a1) *a1 = dec.a1;
    if (a2) *a2 = dec.a2;
    if (a3) *a3 = dec.a3;
    if (lhs) *lhs = dec.lhs;
  });
}

ol_status ol_decompose_weighted(const ol_bv* f, const ol_plan* plan, ol_system s,
                                int64_t kernel_n, int64_t grid_n, double* a1, double* a2,
                                double* a3, double* lhs) {
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] {
    Decomposition dec =
        decompose(f->f, weighted_kernel(plan->p, to_system(s), kernel_n), grid_n);
    if (a1) *a1 = dec.a1;
    if (a2) *a2 = dec.a2;
    if (a3) *a3 = dec.a3;
    if (lhs) *lhs = dec.lhs;
  });
}

ol_status ol_sharpness_ramp(int64_t n, int64_t i_n, ol_bv** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  return wrap([&] { *out = new ol_bv{sharpness_ramp(n, i_n)}; });
}

ol_status ol_sharpness_probe(const ol_plan* plan, ol_system s, int64_t n, double* b_n,
                             int64_t* argmax_i, double* u_n, double* slack) {
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] {
    SharpnessProbe p = sharpness_probe(plan->p, to_system(s), n);
    if (b_n) *b_n = p.report.b_n;
    if (argmax_i) *argmax_i = p.report.argmax_i;
    if (u_n) *u_n = p.report.u_n;
    if (slack) *slack = p.report.slack;
  });
}

/* ---- scans ---- */

ol_status ol_scan_bounded(ol_system s, const ol_plan* plan, const int64_t* schedule,
                          size_t schedule_len, const ol_bv* const* functions,
                          const char* const* names, size_t nfunctions, ol_table** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] {
    require(functions != nullptr || nfunctions == 0, errc::invalid_argument, "null functions");
    ScanConfig config;
    config.system = to_system(s);
    config.plan = plan->p;
    config.schedule = to_schedule(schedule, schedule_len);
    for (size_t i = 0; i < nfunctions; ++i) {
      require(functions[i] != nullptr, errc::invalid_argument, "null function handle");
      std::string name = (names && names[i]) ? names[i] : ("f" + std::to_string(i));
      config.functions.emplace_back(name, functions[i]->f);
    }
    *out = new ol_table{run_boundedness_scan(config)};
  });
}

ol_status ol_scan_decay(ol_system s, int64_t k_max, ol_table** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  return wrap([&] { *out = new ol_table{run_decay_scan(to_system(s), k_max)}; });
}

ol_status ol_scan_sharpness(ol_system s, const ol_plan* plan, const int64_t* schedule,
                            size_t schedule_len, ol_table** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] {
    ScanConfig config;
    config.system = to_system(s);
    config.plan = plan->p;
    config.schedule = to_schedule(schedule, schedule_len);
    *out = new ol_table{run_sharpness_scan(config)};
  });
}

ol_status ol_criteria_json(const ol_bv* f, const ol_plan* plan, ol_system s,
                           const int64_t* schedule, size_t schedule_len, char** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(f, "function"); st != OL_OK) return st;
  if (ol_status st = need(plan, "plan"); st != OL_OK) return st;
  return wrap([&] {
    ScanConfig config;
    config.system = to_system(s);
    config.plan = plan->p;
    config.schedule = to_schedule(schedule, schedule_len);
    *out = dup_string(criteria_to_json(run_criteria(f->f, config)));
  });
}

ol_status ol_identity_check(uint64_t seed, int64_t cases, int64_t* failures,
                            double* max_rel_residual) {
  return wrap([&] {
    IdentityCheck c = identity_check(seed, cases);
    if (failures) *failures = c.failures;
    if (max_rel_residual) *max_rel_residual = c.max_rel_residual;
  });
}

/* ---- tables ---- */

size_t ol_table_num_rows(const ol_table* t) { return t ? t->t.num_rows() : 0; }

size_t ol_table_num_columns(const ol_table* t) { return t ? t->t.columns().size() : 0; }

const char* ol_table_column_name(const ol_table* t, size_t i) {
  if (!t || i >= t->t.columns().size()) return "";
  return t->t.columns()[i].c_str();
}

ol_status ol_table_value(const ol_table* t, size_t row, const char* column, double* out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(t, "table"); st != OL_OK) return st;
  if (ol_status st = need(column, "column"); st != OL_OK) return st;
  return wrap([&] { *out = t->t.value(row, std::string(column)); });
}

const char* ol_table_label(const ol_table* t, size_t row) {
  if (!t || !t->t.has_labels() || row >= t->t.num_rows()) return "";
  return t->t.label(row).c_str();
}

size_t ol_table_num_meta(const ol_table* t) { return t ? t->t.metadata().size() : 0; }

const char* ol_table_meta_key(const ol_table* t, size_t i) {
  if (!t || i >= t->t.metadata().size()) return "";
  return t->t.metadata()[i].first.c_str();
}

const char* ol_table_meta_value(const ol_table* t, size_t i) {
  if (!t || i >= t->t.metadata().size()) return "";
  return t->t.metadata()[i].second.c_str();
}

ol_status ol_table_render(const ol_table* t, ol_format f, char** out) {
  if (ol_status st = need(out, "output"); st != OL_OK) return st;
  if (ol_status st = need(t, "table"); st != OL_OK) return st;
  return wrap([&] {
    *out = dup_string(t->t.render(f == OL_FORMAT_CSV ? OutputFormat::CSV : OutputFormat::JSON));
  });
}

ol_status ol_table_write(const ol_table* t, ol_format f, const char* path) {
  if (ol_status st = need(t, "table"); st != OL_OK) return st;
  if (ol_status st = need(path, "path"); st != OL_OK) return st;
  return wrap([&] {
    t->t.write(path, f == OL_FORMAT_CSV ? OutputFormat::CSV : OutputFormat::JSON);
  });
}

void ol_table_free(ol_table* t) { delete t; }

}  // extern "C"
