// Command-line front end. Everything goes through the C interface of the
// shared library; no core headers are included here.

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "devlab.h"

namespace {

using nlohmann::json;

// Exit codes: 0 ok, 1 property failure, 2 bad input (syntax or usage),
// 3 internal invariant violation, 4 resource limit.
constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitLimit = 4;

int exit_code_of(devlab_status status) {
  switch (status) {
    case DEVLAB_OK: return kExitOk;
    case DEVLAB_ERR_LIMIT: return kExitLimit;
    case DEVLAB_ERR_INTERNAL: return kExitInternal;
    case DEVLAB_ERR_SYNTAX:
    case DEVLAB_ERR_INVALID_PATH:
    case DEVLAB_ERR_ALREADY_NORMAL:
    case DEVLAB_ERR_BAD_ARGUMENT: return kExitBadInput;
  }
  return kExitInternal;
}

const char* status_name(devlab_status status) {
  switch (status) {
    case DEVLAB_OK: return "ok";
    case DEVLAB_ERR_SYNTAX: return "syntax";
    case DEVLAB_ERR_INVALID_PATH: return "invalid-path";
    case DEVLAB_ERR_ALREADY_NORMAL: return "already-normal";
    case DEVLAB_ERR_LIMIT: return "limit";
    case DEVLAB_ERR_BAD_ARGUMENT: return "bad-argument";
    case DEVLAB_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

// Takes ownership of a C string from the library, NULL-safe.
std::string take(char* s) {
  if (s == nullptr) return {};
  std::string out(s);
  devlab_string_free(s);
  return out;
}

struct TermHandle {
  devlab_term* ptr = nullptr;
  ~TermHandle() { devlab_term_free(ptr); }
  TermHandle() = default;
  TermHandle(const TermHandle&) = delete;
  TermHandle& operator=(const TermHandle&) = delete;
};

struct TraceHandle {
  devlab_trace* ptr = nullptr;
  ~TraceHandle() { devlab_trace_free(ptr); }
};

struct PathsHandle {
  devlab_paths* ptr = nullptr;
  ~PathsHandle() { devlab_paths_free(ptr); }
};

struct ReportHandle {
  devlab_report* ptr = nullptr;
  ~ReportHandle() { devlab_report_free(ptr); }
};

// Per-invocation output sink. Human mode prints as reports arrive; machine
// mode collects every report and emits one JSON document at the end.
struct Output {
  bool machine = false;
  std::vector<json> reports;

  void add(json report) {
    if (machine) reports.push_back(std::move(report));
  }

  void flush(bool batch) {
    if (!machine) return;
    if (batch) {
      std::cout << json(reports).dump() << "\n";
    } else {
      std::cout << (reports.empty() ? json::object() : reports.front()).dump() << "\n";
    }
  }
};

json error_json(const std::string& command, const std::string& input, devlab_status status) {
  json err{{"status", status_name(status)}, {"message", devlab_last_error()}};
  size_t start = 0;
  size_t end = 0;
  if (devlab_last_error_span(&start, &end)) err["span"] = {start, end};
  return json{{"command", command}, {"input", input}, {"error", std::move(err)}};
}

// Reports a failed library call: stderr in human mode, a JSON report in
// machine mode. Returns the process exit code for the failure.
int report_error(Output& out, const std::string& command, const std::string& input,
                 devlab_status status) {
  if (out.machine) {
    out.add(error_json(command, input, status));
  } else {
    std::cerr << "error: " << devlab_last_error() << "\n";
    size_t start = 0;
    size_t end = 0;
    if (devlab_last_error_span(&start, &end) && !input.empty()) {
      std::cerr << "  " << input << "\n  ";
      for (size_t i = 0; i < start && i < input.size(); ++i) std::cerr << ' ';
      for (size_t i = start; i < end && i < input.size(); ++i) std::cerr << '^';
      if (start >= input.size()) std::cerr << '^';  // error at end of input
      std::cerr << "\n";
    }
  }
  return exit_code_of(status);
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               since)
      .count();
}

// --- subcommand handlers, one term at a time -----------------------------

int run_metrics(Output& out, const std::string& input, const std::string& var) {
  TermHandle term;
  if (const devlab_status st = devlab_parse(input.c_str(), &term.ptr); st != DEVLAB_OK)
    return report_error(out, "metrics", input, st);

  const std::string printed = take(devlab_print(term.ptr));
  const std::string h = take(devlab_shortest_length(term.ptr));
  const std::string g = take(devlab_longest_length(term.ptr));

  std::string m;
  std::string n;
  if (!var.empty()) {
    char* value = nullptr;
    if (const devlab_status st = devlab_copies(term.ptr, var.c_str(), 0, &value);
        st != DEVLAB_OK)
      return report_error(out, "metrics", input, st);
    m = take(value);
    if (const devlab_status st = devlab_copies(term.ptr, var.c_str(), 1, &value);
        st != DEVLAB_OK)
      return report_error(out, "metrics", input, st);
    n = take(value);
  }

  if (out.machine) {
    json report{{"command", "metrics"}, {"input", printed}, {"h", h}, {"g", g}};
    if (!var.empty()) {
      report["var"] = var;
      report["m"] = m;
      report["n"] = n;
    }
    out.add(std::move(report));
  } else {
    std::cout << "h=" << h << " g=" << g;
    if (!var.empty()) std::cout << " m_" << var << "=" << m << " n_" << var << "=" << n;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_trace(Output& out, const std::string& input, const std::string& mode) {
  const bool shortest = mode == "shortest";
  TermHandle term;
  if (const devlab_status st = devlab_parse(input.c_str(), &term.ptr); st != DEVLAB_OK)
    return report_error(out, "trace", input, st);

  const std::string printed = take(devlab_print(term.ptr));
  const std::string expected = shortest ? take(devlab_shortest_length(term.ptr))
                                        : take(devlab_longest_length(term.ptr));

  TraceHandle trace;
  const devlab_status st = shortest ? devlab_trace_shortest(term.ptr, &trace.ptr)
                                    : devlab_trace_longest(term.ptr, &trace.ptr);
  if (st != DEVLAB_OK) return report_error(out, "trace", input, st);

  const size_t steps = devlab_trace_steps(trace.ptr);
  const bool ok = std::to_string(steps) == expected;

  json step_list = json::array();
  if (!out.machine) std::cout << "start: " << printed << "\n";
  for (size_t i = 0; i < steps; ++i) {
    const std::string path = take(devlab_trace_step_path(trace.ptr, i));
    devlab_term* raw = devlab_trace_step_term(trace.ptr, i);
    TermHandle step_term;
    step_term.ptr = raw;
    const std::string text = take(devlab_print(step_term.ptr));
    if (out.machine) {
      step_list.push_back(json{{"path", path}, {"term", text}});
    } else {
      std::cout << (i + 1) << ": " << path << " -> " << text << "\n";
    }
  }

  if (out.machine) {
    out.add(json{{"command", "trace"},
                 {"mode", mode},
                 {"input", printed},
                 {"steps", std::move(step_list)},
                 {"length", std::to_string(steps)},
                 {"expected", expected},
                 {"ok", ok}});
  } else {
    std::cout << "length=" << steps << " expected=" << expected << (ok ? " ok" : " MISMATCH")
              << "\n";
  }
  if (!ok) {
    if (!out.machine)
      std::cerr << "error: trace length disagrees with the computed development length\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_essential(Output& out, const std::string& input) {
  TermHandle term;
  if (const devlab_status st = devlab_parse(input.c_str(), &term.ptr); st != DEVLAB_OK)
    return report_error(out, "essential", input, st);

  const std::string printed = take(devlab_print(term.ptr));
  const std::string h = take(devlab_shortest_length(term.ptr));

  PathsHandle paths;
  if (const devlab_status st = devlab_essential_set(term.ptr, &paths.ptr); st != DEVLAB_OK)
    return report_error(out, "essential", input, st);

  const size_t count = devlab_paths_count(paths.ptr);
  const bool ok = std::to_string(count) == h;

  json list = json::array();
  for (size_t i = 0; i < count; ++i) {
    const std::string path = take(devlab_paths_get(paths.ptr, i));
    TermHandle at;
    if (const devlab_status st = devlab_subterm(term.ptr, path.c_str(), &at.ptr);
        st != DEVLAB_OK)
      return report_error(out, "essential", input, st);
    const std::string text = take(devlab_print(at.ptr));
    if (out.machine) {
      list.push_back(json{{"path", path}, {"term", text}});
    } else {
      std::cout << path << ": " << text << "\n";
    }
  }

  if (out.machine) {
    out.add(json{{"command", "essential"},
                 {"input", printed},
                 {"essential", std::move(list)},
                 {"count", std::to_string(count)},
                 {"h", h},
                 {"ok", ok}});
  } else {
    std::cout << "count=" << count << " h=" << h << (ok ? " ok" : " MISMATCH") << "\n";
  }
  if (!ok) {
    if (!out.machine)
      std::cerr << "error: essential-redex count disagrees with the development length\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_oracle(Output& out, const std::string& input, uint64_t state_limit) {
  const auto started = std::chrono::steady_clock::now();
  TermHandle term;
  if (const devlab_status st = devlab_parse(input.c_str(), &term.ptr); st != DEVLAB_OK)
    return report_error(out, "oracle", input, st);

  const std::string printed = take(devlab_print(term.ptr));
  const std::string h = take(devlab_shortest_length(term.ptr));
  const std::string g = take(devlab_longest_length(term.ptr));

  devlab_dev_stats stats{};
  if (const devlab_status st = devlab_oracle_stats(term.ptr, state_limit, &stats);
      st != DEVLAB_OK)
    return report_error(out, "oracle", input, st);

  const std::string shortest = take(stats.shortest);
  const std::string longest = take(stats.longest);
  stats.shortest = nullptr;
  stats.longest = nullptr;
  const bool complete = stats.complete != 0;
  const bool agree = complete && shortest == h && longest == g;

  if (out.machine) {
    json report{{"command", "oracle"},
                {"input", printed},
                {"complete", complete},
                {"states", stats.states},
                {"h", h},
                {"g", g},
                {"diagnostics", json{{"ms", elapsed_ms(started)}}}};
    if (complete) {
      report["shortest"] = shortest;
      report["longest"] = longest;
      report["agree"] = agree;
    }
    out.add(std::move(report));
  } else if (complete) {
    std::cout << "shortest=" << shortest << " longest=" << longest << " states=" << stats.states
              << " agree=" << (agree ? "yes" : "NO") << "\n";
  } else {
    std::cout << "complete=no states=" << stats.states << "\n";
  }

  if (!complete) {
    if (!out.machine) std::cerr << "error: state limit exceeded before the search finished\n";
    return kExitLimit;
  }
  if (!agree) {
    if (!out.machine)
      std::cerr << "error: oracle lengths disagree with the computed development lengths\n";
    return kExitInternal;
  }
  return kExitOk;
}

int run_check(Output& out, const devlab_gen_params& params, uint64_t count,
              uint64_t state_limit) {
  const auto started = std::chrono::steady_clock::now();
  ReportHandle report;
  if (const devlab_status st = devlab_run_checks(&params, count, state_limit, &report.ptr);
      st != DEVLAB_OK)
    return report_error(out, "check", "", st);

  const uint64_t failures = devlab_report_failures(report.ptr);
  const size_t rows = devlab_report_rows(report.ptr);

  if (out.machine) {
    json props = json::array();
    for (size_t i = 0; i < rows; ++i) {
      props.push_back(json{{"property", devlab_report_row_name(report.ptr, i)},
                           {"pass", devlab_report_row_pass(report.ptr, i)},
                           {"fail", devlab_report_row_fail(report.ptr, i)},
                           {"skip", devlab_report_row_skip(report.ptr, i)}});
    }
    json doc{{"command", "check"},
             {"terms", devlab_report_terms(report.ptr)},
             {"seed", params.seed},
             {"max_size", params.max_size},
             {"max_redexes", params.max_redexes},
             {"properties", std::move(props)},
             {"failures", failures},
             {"diagnostics", json{{"ms", elapsed_ms(started)}}}};
    if (const char* ce = devlab_report_counterexample(report.ptr)) {
      doc["counterexample"] = ce;
      doc["failed_property"] = devlab_report_failed_property(report.ptr);
    }
    out.add(std::move(doc));
  } else {
    std::printf("checked %" PRIu64 " terms (seed=%" PRIu64 " max_size=%" PRIu64
                " max_redexes=%" PRIu64 ")\n",
                devlab_report_terms(report.ptr), params.seed, params.max_size,
                params.max_redexes);
    std::printf("%-28s %6s %6s %6s\n", "property", "pass", "fail", "skip");
    for (size_t i = 0; i < rows; ++i) {
      std::printf("%-28s %6" PRIu64 " %6" PRIu64 " %6" PRIu64 "\n",
                  devlab_report_row_name(report.ptr, i), devlab_report_row_pass(report.ptr, i),
                  devlab_report_row_fail(report.ptr, i), devlab_report_row_skip(report.ptr, i));
    }
    std::printf("failures: %" PRIu64 " (%" PRId64 " ms)\n", failures, elapsed_ms(started));
    if (const char* ce = devlab_report_counterexample(report.ptr)) {
      std::printf("first counterexample (%s): %s\n", devlab_report_failed_property(report.ptr),
                  ce);
    }
  }
  return failures == 0 ? kExitOk : kExitPropertyFailure;
}

// --- input plumbing -------------------------------------------------------

// Collects the terms to operate on: the positional argument, or the lines of
// the -f file (blank lines skipped). Exactly one source must be given.
bool gather_inputs(const std::string& positional, const std::string& file,
                   std::vector<std::string>& out, std::string& problem) {
  if (!positional.empty() && !file.empty()) {
    problem = "give either a term or -f FILE, not both";
    return false;
  }
  if (positional.empty() && file.empty()) {
    problem = "no input term (positional argument or -f FILE)";
    return false;
  }
  if (!positional.empty()) {
    out.push_back(positional);
    return true;
  }
  std::ifstream in(file);
  if (!in) {
    problem = "cannot open file: " + file;
    return false;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return true;
}

uint64_t state_limit_from_env() {
  const char* env = std::getenv("DEVLAB_STATE_LIMIT");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) {
    std::cerr << "warning: ignoring invalid DEVLAB_STATE_LIMIT: " << env << "\n";
    return 0;
  }
  return static_cast<uint64_t>(value);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for shortest and longest developments of marked lambda terms"};
  app.require_subcommand(1);

  std::string term_text;
  std::string file;
  std::string var;
  std::string mode = "shortest";
  bool machine = false;
  uint64_t state_limit_flag = 0;
  uint64_t check_count = 500;
  devlab_gen_params gen_params;
  devlab_gen_params_init(&gen_params);

  const auto add_common = [&](CLI::App* cmd, bool with_file) {
    cmd->add_flag("--machine", machine, "emit one JSON document instead of text");
    if (with_file) {
      cmd->add_option("term", term_text, "term in concrete syntax");
      cmd->add_option("-f,--file", file, "read terms from a file, one per line");
    }
  };

  CLI::App* metrics = app.add_subcommand("metrics", "development lengths h and g");
  add_common(metrics, true);
  metrics->add_option("--var", var, "also print the copy multiplicities m/n of this variable");

  CLI::App* trace = app.add_subcommand("trace", "step-by-step complete development");
  add_common(trace, true);
  trace->add_option("--mode", mode, "shortest or longest")
      ->check(CLI::IsMember({"shortest", "longest"}));

  CLI::App* essential = app.add_subcommand("essential", "redexes every development contracts");
  add_common(essential, true);

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive development-graph search");
  add_common(oracle, true);
  oracle->add_option("--state-limit", state_limit_flag, "max distinct states to visit");

  CLI::App* check = app.add_subcommand("check", "generate terms and verify every invariant");
  check->add_flag("--machine", machine, "emit one JSON document instead of text");
  check->add_option("--count", check_count, "number of terms to generate");
  check->add_option("--seed", gen_params.seed, "generator seed");
  check->add_option("--max-size", gen_params.max_size, "term size budget");
  check->add_option("--max-redexes", gen_params.max_redexes, "marked-redex budget");
  check->add_option("--state-limit", state_limit_flag, "max distinct states per oracle query");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitBadInput;
  }

  // Limit resolution: explicit flag, then environment, then built-in default
  // (the library treats 0 as "use the default").
  uint64_t state_limit = state_limit_flag;
  if (state_limit == 0) state_limit = state_limit_from_env();

  Output out;
  out.machine = machine;

  if (app.got_subcommand(check)) {
    const int code = run_check(out, gen_params, check_count, state_limit);
    out.flush(false);
    return code;
  }

  std::vector<std::string> inputs;
  std::string problem;
  if (!gather_inputs(term_text, file, inputs, problem)) {
    std::cerr << "error: " << problem << "\n";
    return kExitBadInput;
  }
  const bool batch = !file.empty();

  int exit_code = kExitOk;
  for (const std::string& input : inputs) {
    int code = kExitOk;
    if (app.got_subcommand(metrics)) {
      code = run_metrics(out, input, var);
    } else if (app.got_subcommand(trace)) {
      code = run_trace(out, input, mode);
    } else if (app.got_subcommand(essential)) {
      code = run_essential(out, input);
    } else {
      code = run_oracle(out, input, state_limit);
    }
    if (exit_code == kExitOk) exit_code = code;  // keep the first problem
  }
  out.flush(batch);
  return exit_code;
}
