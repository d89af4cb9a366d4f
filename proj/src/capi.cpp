#include "devlab.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "devlab/checks.hpp"
#include "devlab/error.hpp"
#include "devlab/essential.hpp"
#include "devlab/metrics.hpp"
#include "devlab/oracle.hpp"
#include "devlab/reduction.hpp"
#include "devlab/strategy.hpp"
#include "devlab/syntax.hpp"
#include "devlab/term.hpp"

struct devlab_term {
  devlab::Term value;
};

struct devlab_trace {
  devlab::Trace value;
};

struct devlab_paths {
  std::vector<std::string> rendered;
};

struct devlab_report {
  devlab::CheckReport value;
};

namespace {

thread_local std::string t_error_message;
thread_local devlab::SourceSpan t_error_span;
thread_local bool t_error_has_span = false;

void clear_error() {
  t_error_message.clear();
  t_error_has_span = false;
}

devlab_status status_of(devlab::ErrorCode code) {
  switch (code) {
    case devlab::ErrorCode::Syntax: return DEVLAB_ERR_SYNTAX;
    case devlab::ErrorCode::InvalidPath: return DEVLAB_ERR_INVALID_PATH;
    case devlab::ErrorCode::AlreadyNormal: return DEVLAB_ERR_ALREADY_NORMAL;
    case devlab::ErrorCode::LimitExceeded: return DEVLAB_ERR_LIMIT;
    case devlab::ErrorCode::BadArgument: return DEVLAB_ERR_BAD_ARGUMENT;
    case devlab::ErrorCode::Cycle:
    case devlab::ErrorCode::Internal: return DEVLAB_ERR_INTERNAL;
  }
  return DEVLAB_ERR_INTERNAL;
}

devlab_status set_error(devlab_status status, const std::string& message) {
  t_error_message = message;
  t_error_has_span = false;
  return status;
}

// Runs the body, translating exceptions into statuses + last-error state.
template <typename F>
devlab_status guarded(F&& body) {
  clear_error();
  try {
    return body();
  } catch (const devlab::SyntaxError& e) {
    t_error_message = e.what();
    t_error_span = e.span();
    t_error_has_span = true;
    return DEVLAB_ERR_SYNTAX;
  } catch (const devlab::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::exception& e) {
    return set_error(DEVLAB_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

devlab::GenParams convert(const devlab_gen_params& p) {
  devlab::GenParams out;
  out.max_size = p.max_size;
  out.max_redexes = p.max_redexes;
  out.seed = p.seed;
  out.p_var = p.p_var;
  out.p_lam = p.p_lam;
  out.p_app = p.p_app;
  out.p_red = p.p_red;
  return out;
}

std::uint64_t effective_limit(uint64_t state_limit) {
  return state_limit == 0 ? devlab::kDefaultStateLimit : state_limit;
}

}  // namespace

extern "C" {

const char* devlab_last_error(void) { return t_error_message.c_str(); }

int devlab_last_error_span(size_t* start, size_t* end) {
  if (!t_error_has_span) return 0;
  if (start != nullptr) *start = t_error_span.start;
  if (end != nullptr) *end = t_error_span.end;
  return 1;
}

void devlab_string_free(char* s) { std::free(s); }

devlab_status devlab_parse(const char* text, devlab_term** out) {
  if (text == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&]() {
    *out = new devlab_term{devlab::parse(text)};
    return DEVLAB_OK;
  });
}

devlab_status devlab_term_from_json(const char* json, devlab_term** out) {
  if (json == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&]() {
    *out = new devlab_term{devlab::term_from_json(json)};
    return DEVLAB_OK;
  });
}

void devlab_term_free(devlab_term* t) { delete t; }

char* devlab_print(const devlab_term* t) {
  if (t == nullptr) return nullptr;
  return dup_string(devlab::print(t->value));
}

char* devlab_term_to_json(const devlab_term* t) {
  if (t == nullptr) return nullptr;
  return dup_string(devlab::term_to_json(t->value));
}

uint64_t devlab_term_size(const devlab_term* t) {
  return t == nullptr ? 0 : devlab::term_size(t->value);
}

int devlab_term_is_normal(const devlab_term* t) {
  return (t != nullptr && devlab::is_nf(t->value)) ? 1 : 0;
}

int devlab_term_alpha_eq(const devlab_term* a, const devlab_term* b) {
  if (a == nullptr || b == nullptr) return 0;
  return devlab::alpha_eq(a->value, b->value) ? 1 : 0;
}

devlab_status devlab_subterm(const devlab_term* t, const char* path, devlab_term** out) {
  if (t == nullptr || path == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&]() {
    const devlab::Path p = devlab::path_from_string(t->value, path);
    *out = new devlab_term{devlab::subterm_at(t->value, p)};
    return DEVLAB_OK;
  });
}

char* devlab_shortest_length(const devlab_term* t) {
  if (t == nullptr) return nullptr;
  return dup_string(devlab::shortest_dev_length(t->value).str());
}

char* devlab_longest_length(const devlab_term* t) {
  if (t == nullptr) return nullptr;
  return dup_string(devlab::longest_dev_length(t->value).str());
}

devlab_status devlab_copies(const devlab_term* t, const char* var, int maximal, char** out) {
  if (t == nullptr || var == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  if (!devlab::is_valid_var_name(var))
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, std::string("invalid variable name: ") + var);
  return guarded([&]() {
    const devlab::VarName x{var};
    const devlab::Count c =
        maximal ? devlab::max_copies(x, t->value) : devlab::min_copies(x, t->value);
    *out = dup_string(c.str());
    return DEVLAB_OK;
  });
}

static devlab_status make_trace(const devlab_term* t, devlab_trace** out, bool minimal) {
  if (t == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&]() {
    *out = new devlab_trace{minimal ? devlab::shortest_trace(t->value)
                                    : devlab::longest_trace(t->value)};
    return DEVLAB_OK;
  });
}

devlab_status devlab_trace_shortest(const devlab_term* t, devlab_trace** out) {
  return make_trace(t, out, true);
}

devlab_status devlab_trace_longest(const devlab_term* t, devlab_trace** out) {
  return make_trace(t, out, false);
}

size_t devlab_trace_steps(const devlab_trace* tr) {
  return tr == nullptr ? 0 : tr->value.steps.size();
}

char* devlab_trace_step_path(const devlab_trace* tr, size_t i) {
  if (tr == nullptr || i >= tr->value.steps.size()) return nullptr;
  return dup_string(devlab::path_to_string(tr->value.steps[i].redex));
}

devlab_term* devlab_trace_step_term(const devlab_trace* tr, size_t i) {
  if (tr == nullptr || i >= tr->value.steps.size()) return nullptr;
  return new devlab_term{tr->value.steps[i].result};
}

void devlab_trace_free(devlab_trace* tr) { delete tr; }

static devlab_paths* render_paths(const std::vector<devlab::Path>& paths) {
  auto* out = new devlab_paths;
  out->rendered.reserve(paths.size());
  for (const devlab::Path& p : paths) out->rendered.push_back(devlab::path_to_string(p));
  return out;
}

devlab_status devlab_redexes(const devlab_term* t, devlab_paths** out) {
  if (t == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&]() {
    *out = render_paths(devlab::redex_positions(t->value));
    return DEVLAB_OK;
  });
}

devlab_status devlab_essential_set(const devlab_term* t, devlab_paths** out) {
  if (t == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&]() {
    *out = render_paths(devlab::essential_set(t->value));
    return DEVLAB_OK;
  });
}

size_t devlab_paths_count(const devlab_paths* ps) {
  return ps == nullptr ? 0 : ps->rendered.size();
}

char* devlab_paths_get(const devlab_paths* ps, size_t i) {
  if (ps == nullptr || i >= ps->rendered.size()) return nullptr;
  return dup_string(ps->rendered[i]);
}

void devlab_paths_free(devlab_paths* ps) { delete ps; }

devlab_status devlab_is_essential(const devlab_term* t, const char* path, int* out) {
  if (t == nullptr || path == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&]() {
    const devlab::Path p = devlab::path_from_string(t->value, path);
    *out = devlab::is_essential(t->value, p) ? 1 : 0;
    return DEVLAB_OK;
  });
}

devlab_status devlab_oracle_stats(const devlab_term* t, uint64_t state_limit,
                                  devlab_dev_stats* out) {
  if (t == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&]() {
    const devlab::DevStats stats = devlab::dev_stats(t->value, effective_limit(state_limit));
    out->complete = stats.complete ? 1 : 0;
    out->states = stats.states;
    out->shortest = stats.shortest ? dup_string(stats.shortest->str()) : nullptr;
    out->longest = stats.longest ? dup_string(stats.longest->str()) : nullptr;
    return DEVLAB_OK;
  });
}

void devlab_dev_stats_clear(devlab_dev_stats* s) {
  if (s == nullptr) return;
  std::free(s->shortest);
  std::free(s->longest);
  s->shortest = nullptr;
  s->longest = nullptr;
  s->states = 0;
  s->complete = 0;
}

devlab_status devlab_oracle_essential(const devlab_term* t, const char* path,
                                      uint64_t state_limit, int* out) {
  if (t == nullptr || path == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&]() {
    const devlab::Path p = devlab::path_from_string(t->value, path);
    *out = devlab::essential_oracle(t->value, p, effective_limit(state_limit)) ? 1 : 0;
    return DEVLAB_OK;
  });
}

void devlab_gen_params_init(devlab_gen_params* p) {
  if (p == nullptr) return;
  const devlab::GenParams defaults;
  p->max_size = defaults.max_size;
  p->max_redexes = defaults.max_redexes;
  p->seed = defaults.seed;
  p->p_var = defaults.p_var;
  p->p_lam = defaults.p_lam;
  p->p_app = defaults.p_app;
  p->p_red = defaults.p_red;
}

devlab_status devlab_generate(const devlab_gen_params* p, devlab_term** out) {
  if (p == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&]() {
    *out = new devlab_term{devlab::gen_term(convert(*p))};
    return DEVLAB_OK;
  });
}

devlab_status devlab_run_checks(const devlab_gen_params* p, uint64_t count, uint64_t state_limit,
                                devlab_report** out) {
  if (p == nullptr || out == nullptr)
    return set_error(DEVLAB_ERR_BAD_ARGUMENT, "NULL argument");
  return guarded([&]() {
    *out = new devlab_report{
        devlab::run_checks(convert(*p), count, effective_limit(state_limit))};
    return DEVLAB_OK;
  });
}

size_t devlab_report_rows(const devlab_report* r) {
  return r == nullptr ? 0 : r->value.properties.size();
}

const char* devlab_report_row_name(const devlab_report* r, size_t i) {
  if (r == nullptr || i >= r->value.properties.size()) return nullptr;
  return r->value.properties[i].name.c_str();
}

uint64_t devlab_report_row_pass(const devlab_report* r, size_t i) {
  if (r == nullptr || i >= r->value.properties.size()) return 0;
  return r->value.properties[i].pass;
}

uint64_t devlab_report_row_fail(const devlab_report* r, size_t i) {
  if (r == nullptr || i >= r->value.properties.size()) return 0;
  return r->value.properties[i].fail;
}

uint64_t devlab_report_row_skip(const devlab_report* r, size_t i) {
  if (r == nullptr || i >= r->value.properties.size()) return 0;
  return r->value.properties[i].skip;
}

uint64_t devlab_report_terms(const devlab_report* r) {
  return r == nullptr ? 0 : r->value.terms;
}

uint64_t devlab_report_failures(const devlab_report* r) {
  return r == nullptr ? 0 : r->value.failures;
}

const char* devlab_report_counterexample(const devlab_report* r) {
  if (r == nullptr || !r->value.counterexample) return nullptr;
  return r->value.counterexample->c_str();
}

const char* devlab_report_failed_property(const devlab_report* r) {
  if (r == nullptr || !r->value.failed_property) return nullptr;
  return r->value.failed_property->c_str();
}

void devlab_report_free(devlab_report* r) { delete r; }

}  // extern "C"
