#include "subalg.h"

#include <new>
#include <string>

#include "subalg/report.hpp"

using namespace subalg;

struct subalg_problem {
  ProblemFile pf;
};

struct subalg_result {
  int status;
  std::string text;
};

namespace {

thread_local std::string g_error;
thread_local int g_error_line = 0;
thread_local int g_error_col = 0;

void set_error(const std::string& msg, int line = 0, int col = 0) {
  g_error = msg;
  g_error_line = line;
  g_error_col = col;
}

int guard_parse(subalg_problem** out, ProblemFile (*fn)(const std::string&), const char* arg) {
  *out = nullptr;
  if (arg == nullptr) {
    set_error("null argument");
    return SUBALG_PARSE_ERROR;
  }
  try {
    ProblemFile pf = fn(arg);
    *out = new subalg_problem{std::move(pf)};
    return SUBALG_OK;
  } catch (const ParseError& e) {
    set_error(e.what(), e.line, e.column);
    return SUBALG_PARSE_ERROR;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SUBALG_PARSE_ERROR;
  }
}

}  // namespace

extern "C" {

int subalg_problem_parse(const char* text, subalg_problem** out) {
  return guard_parse(out, &parse_problem, text);
}

int subalg_problem_parse_file(const char* path, subalg_problem** out) {
  return guard_parse(out, &parse_problem_file, path);
}

void subalg_problem_free(subalg_problem* p) { delete p; }

int subalg_run(const subalg_problem* p, const char* command, const subalg_options* opts,
               subalg_result** out) {
  if (out == nullptr) return SUBALG_INTERNAL_ERROR;
  *out = nullptr;
  if (p == nullptr || command == nullptr) {
    set_error("null argument");
    return SUBALG_PARSE_ERROR;
  }
  RunOptions ro;
  if (opts != nullptr) {
    ro.json = opts->json != 0;
    ro.trail = opts->trail != 0;
    ro.certificates = opts->certificates != 0;
    ro.max_passes = opts->max_passes;
    if (opts->poly != nullptr) ro.poly = opts->poly;
  }
  try {
    RunResult r = run_command(p->pf, command, ro);
    *out = new subalg_result{r.status, std::move(r.text)};
    return r.status == 0 ? SUBALG_OK : SUBALG_ITERATION_CAP;
  } catch (const ParseError& e) {
    set_error(e.what(), e.line, e.column);
    return SUBALG_PARSE_ERROR;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return SUBALG_PARSE_ERROR;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SUBALG_INTERNAL_ERROR;
  } catch (...) {
    set_error("unknown error");
    return SUBALG_INTERNAL_ERROR;
  }
}

const char* subalg_result_text(const subalg_result* r) {
  return r == nullptr ? "" : r->text.c_str();
}

int subalg_result_status(const subalg_result* r) { return r == nullptr ? SUBALG_INTERNAL_ERROR : r->status; }

void subalg_result_free(subalg_result* r) { delete r; }

const char* subalg_last_error(void) { return g_error.c_str(); }
int subalg_last_error_line(void) { return g_error_line; }
int subalg_last_error_column(void) { return g_error_col; }

const char* subalg_version(void) { return "0.1.0"; }

}  // extern "C"
