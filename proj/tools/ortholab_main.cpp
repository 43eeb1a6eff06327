// ortholab command-line laboratory. Links the C API of libortholab; all
// computation happens behind it.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ortholab.h"

namespace {

int die(const std::string& where) {
  std::fprintf(stderr, "ortholab: %s: %s\n", where.c_str(), ol_last_error());
  return 1;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream is(path, std::ios::binary);
  if (!is.good()) return false;
  std::ostringstream ss;
  ss << is.rdbuf();
  out = ss.str();
  return true;
}

ol_system parse_system(const std::string& name) {
  if (name == "trig") return OL_SYSTEM_TRIG;
  if (name == "walsh") return OL_SYSTEM_WALSH;
  return OL_SYSTEM_HAAR;
}

std::vector<int64_t> dyadic_schedule(int64_t nmax) {
  std::vector<int64_t> s;
  for (int64_t n = 2; n <= nmax; n *= 2) s.push_back(n);
  return s;
}

ol_format parse_format(const std::string& format, const std::string& out_path) {
  if (format == "json") return OL_FORMAT_JSON;
  if (format == "csv") return OL_FORMAT_CSV;
  // infer from the output extension
  if (out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json")
    return OL_FORMAT_JSON;
  return OL_FORMAT_CSV;
}

struct PlanHandle {
  ol_plan* p = nullptr;
  ~PlanHandle() { ol_plan_free(p); }
};

// --plan is optional; the defaults are the extremal d and the canonical
// square-summable a.
bool load_plan(const std::string& path, int64_t length_hint, PlanHandle& plan,
               std::string& err) {
  if (path.empty()) {
    if (ol_plan_preset("maximal", "inverse_k", length_hint, &plan.p) != OL_OK) {
      err = "default plan";
      return false;
    }
    return true;
  }
  std::string text;
  if (!read_file(path, text)) {
    err = "cannot read " + path;
    return false;
  }
  if (ol_plan_from_json(text.c_str(), length_hint, &plan.p) != OL_OK) {
    err = "parsing " + path;
    return false;
  }
  return true;
}

void print_meta(const ol_table* t) {
  for (size_t i = 0; i < ol_table_num_meta(t); ++i)
    std::printf("%s = %s\n", ol_table_meta_key(t, i), ol_table_meta_value(t, i));
}

int cmd_scan_bounded(const std::string& system, const std::string& plan_path,
                     const std::string& functions_path, const std::string& out_path,
                     int64_t nmax, const std::string& format) {
  std::vector<int64_t> schedule = dyadic_schedule(nmax);
  PlanHandle plan;
  std::string err;
  if (!load_plan(plan_path, nmax, plan, err)) return die(err);

  std::vector<ol_bv*> handles;
  std::vector<std::string> name_storage;
  if (functions_path.empty()) {
    for (const char* name : {"x", "ramp", "step2"}) {
      ol_bv* f = nullptr;
      if (ol_bv_builtin(name, &f) != OL_OK) return die("builtin function");
      handles.push_back(f);
      name_storage.push_back(name);
    }
  } else {
    std::string text;
    if (!read_file(functions_path, text)) return die("cannot read " + functions_path);
    size_t count = 0;
    if (ol_bv_list_from_json(text.c_str(), &count, nullptr, nullptr, 0) != OL_OK)
      return die("parsing " + functions_path);
    handles.resize(count);
    std::vector<char*> raw_names(count);
    if (ol_bv_list_from_json(text.c_str(), &count, handles.data(), raw_names.data(), count) !=
        OL_OK)
      return die("parsing " + functions_path);
    for (char* n : raw_names) {
      name_storage.push_back(n ? n : "");
      ol_string_free(n);
    }
  }
  std::vector<const char*> names;
  for (const std::string& n : name_storage) names.push_back(n.c_str());

  ol_table* table = nullptr;
  ol_status st = ol_scan_bounded(parse_system(system), plan.p, schedule.data(), schedule.size(),
                                 handles.data(), names.data(), handles.size(), &table);
  for (ol_bv* f : handles) ol_bv_free(f);
  if (st != OL_OK) return die("scan-bounded");

  if (ol_table_write(table, parse_format(format, out_path), out_path.c_str()) != OL_OK) {
    ol_table_free(table);
    return die("writing " + out_path);
  }
  std::printf("scan-bounded: %zu rows -> %s\n", ol_table_num_rows(table), out_path.c_str());
  print_meta(table);
  ol_table_free(table);
  return 0;
}

int cmd_decay(const std::string& system, int64_t kmax, const std::string& out_path,
              const std::string& format) {
  ol_table* table = nullptr;
  if (ol_scan_decay(parse_system(system), kmax, &table) != OL_OK) return die("decay");
  if (ol_table_write(table, parse_format(format, out_path), out_path.c_str()) != OL_OK) {
    ol_table_free(table);
    return die("writing " + out_path);
  }
  std::printf("decay: %zu rows -> %s\n", ol_table_num_rows(table), out_path.c_str());
  print_meta(table);
  ol_table_free(table);
  return 0;
}

int cmd_sharpness(const std::string& system, const std::string& plan_path,
                  const std::string& out_path, int64_t nmax, const std::string& format) {
  std::vector<int64_t> schedule = dyadic_schedule(nmax);
  PlanHandle plan;
  std::string err;
  if (!load_plan(plan_path, nmax, plan, err)) return die(err);
  ol_table* table = nullptr;
  if (ol_scan_sharpness(parse_system(system), plan.p, schedule.data(), schedule.size(),
                        &table) != OL_OK)
    return die("sharpness");
  if (ol_table_write(table, parse_format(format, out_path), out_path.c_str()) != OL_OK) {
    ol_table_free(table);
    return die("writing " + out_path);
  }
  std::printf("sharpness: %zu rows -> %s\n", ol_table_num_rows(table), out_path.c_str());
  print_meta(table);
  ol_table_free(table);
  return 0;
}

int cmd_criteria(const std::string& system, const std::string& function_arg,
                 const std::string& plan_path, const std::string& out_path, int64_t nmax) {
  std::vector<int64_t> schedule = dyadic_schedule(nmax);
  PlanHandle plan;
  std::string err;
  if (!load_plan(plan_path, nmax, plan, err)) return die(err);

  ol_bv* f = nullptr;
  std::string text;
  if (read_file(function_arg, text)) {
    if (ol_bv_from_json(text.c_str(), &f) != OL_OK) return die("parsing " + function_arg);
  } else if (ol_bv_builtin(function_arg.c_str(), &f) != OL_OK) {
    return die("function " + function_arg);
  }

  char* json = nullptr;
  ol_status st = ol_criteria_json(f, plan.p, parse_system(system), schedule.data(),
                                  schedule.size(), &json);
  ol_bv_free(f);
  if (st != OL_OK) return die("criteria");

  std::ofstream os(out_path, std::ios::binary);
  if (!os.good()) {
    ol_string_free(json);
    return die("writing " + out_path);
  }
  os << json;
  ol_string_free(json);
  std::printf("criteria -> %s\n", out_path.c_str());
  return 0;
}

int cmd_lemma_check(uint64_t seed, int64_t cases) {
  int64_t failures = 0;
  double max_rel = 0.0;
  if (ol_identity_check(seed, cases, &failures, &max_rel) != OL_OK) return die("lemma-check");
  std::printf("lemma-check: %lld cases, %lld failures, max relative residual %.3e\n",
              static_cast<long long>(cases), static_cast<long long>(failures), max_rel);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale scans of weighted partial-sum functionals on BV functions"};
  app.require_subcommand(1);

  std::string system = "trig", plan_path, functions_path, function_arg, out_path, format;
  int64_t nmax = 4096, kmax = 1024, cases = 200;
  uint64_t seed = 42;

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", system, "trig|walsh|haar")
        ->check(CLI::IsMember({"trig", "walsh", "haar"}));
  };

  CLI::App* scan = app.add_subcommand("scan-bounded", "functional scan over a dyadic schedule");
  add_system(scan);
  scan->add_option("--plan", plan_path, "weight plan JSON (default maximal/inverse_k)");
  scan->add_option("--functions", functions_path, "function list JSON (default builtins)");
  scan->add_option("--nmax", nmax, "largest n of the dyadic schedule");
  scan->add_option("--format", format, "csv|json (default by extension)");
  scan->add_option("--out", out_path, "output table path")->required();

  CLI::App* decay = app.add_subcommand("decay", "primitive decay profile of a system");
  add_system(decay);
  decay->add_option("--kmax", kmax, "largest basis index");
  decay->add_option("--format", format, "csv|json (default by extension)");
  decay->add_option("--out", out_path, "output table path")->required();

  CLI::App* sharp = app.add_subcommand("sharpness", "ramp-witness scan over a dyadic schedule");
  add_system(sharp);
  sharp->add_option("--plan", plan_path, "weight plan JSON (default maximal/inverse_k)");
  sharp->add_option("--nmax", nmax, "largest n of the dyadic schedule");
  sharp->add_option("--format", format, "csv|json (default by extension)");
  sharp->add_option("--out", out_path, "output table path")->required();

  CLI::App* crit = app.add_subcommand("criteria", "coefficient-sum partial sums and flags");
  add_system(crit);
  crit->add_option("--function", function_arg, "function JSON path or builtin name")->required();
  crit->add_option("--plan", plan_path, "weight plan JSON (default maximal/inverse_k)");
  crit->add_option("--nmax", nmax, "largest N of the dyadic schedule");
  crit->add_option("--out", out_path, "output JSON path")->required();

  CLI::App* lemma = app.add_subcommand("lemma-check", "randomized three-term identity check");
  lemma->add_option("--seed", seed, "RNG seed");
  lemma->add_option("--cases", cases, "number of cases");

  CLI11_PARSE(app, argc, argv);

  if (scan->parsed())
    return cmd_scan_bounded(system, plan_path, functions_path, out_path, nmax, format);
  if (decay->parsed()) return cmd_decay(system, kmax, out_path, format);
  if (sharp->parsed()) return cmd_sharpness(system, plan_path, out_path, nmax, format);
  if (crit->parsed()) return cmd_criteria(system, function_arg, plan_path, out_path, nmax);
  if (lemma->parsed()) return cmd_lemma_check(seed, cases);
  return 1;
}
