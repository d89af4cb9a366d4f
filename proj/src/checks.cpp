#include "devlab/checks.hpp"

#include <algorithm>
#include <set>

#include "devlab/error.hpp"
#include "devlab/essential.hpp"
#include "devlab/metrics.hpp"
#include "devlab/reduction.hpp"
#include "devlab/strategy.hpp"
#include "devlab/syntax.hpp"
#include "devlab/term.hpp"

namespace devlab {

namespace {

// The definitional essentiality search enumerates avoiding developments and
// is far costlier than a length computation; keep it to few-redex terms.
constexpr std::uint64_t kEssentialOracleMaxRedexes = 5;

const VarName kPool[] = {VarName{"a"}, VarName{"b"}, VarName{"c"}, VarName{"d"}, VarName{"e"}};
constexpr std::size_t kPoolSize = sizeof(kPool) / sizeof(kPool[0]);

enum PropId : std::size_t {
  kParsePrintRoundtrip,
  kPrintStability,
  kHLeG,
  kZeroIffNormal,
  kShortestTraceLength,
  kLongestTraceLength,
  kTracesValid,
  kStepDecrements,
  kStrategyPicksEssential,
  kEssentialCount,
  kEssentialVsOracle,
  kOracleAgrees,
  kSubstLaws,
  kFreeVarsAfterSubst,
  kMonotoneReducts,
  kNumProps
};

const char* const kPropNames[kNumProps] = {
    "parse_print_roundtrip",
    "print_stability",
    "h_le_g",
    "zero_iff_normal",
    "shortest_trace_length",
    "longest_trace_length",
    "traces_valid",
    "step_decrements",
    "strategy_picks_essential",
    "essential_count",
    "essential_vs_oracle",
    "oracle_agrees",
    "subst_laws",
    "free_vars_after_subst",
    "monotone_reducts",
};

enum class Outcome { Pass, Fail, Skip };

class Recorder {
 public:
  explicit Recorder(CheckReport& report) : report_(report) {}

  void operator()(PropId id, Outcome outcome, const std::string& term_text) {
    PropertyStat& stat = report_.properties[id];
    switch (outcome) {
      case Outcome::Pass:
        ++stat.pass;
        break;
      case Outcome::Skip:
        ++stat.skip;
        break;
      case Outcome::Fail:
        ++stat.fail;
        if (!report_.counterexample) {
          report_.counterexample = term_text;
          report_.failed_property = stat.name;
        }
        break;
    }
  }

  void operator()(PropId id, bool ok, const std::string& term_text) {
    (*this)(id, ok ? Outcome::Pass : Outcome::Fail, term_text);
  }

 private:
  CheckReport& report_;
};

bool is_path_prefix(const Path& prefix, const Path& path) {
  return prefix.steps.size() <= path.steps.size() &&
         std::equal(prefix.steps.begin(), prefix.steps.end(), path.steps.begin());
}

void check_one(const Term& m, const VarName& x, const Term& n, std::uint64_t state_limit,
               Recorder& record) {
  const std::string text = print(m);

  record(kParsePrintRoundtrip, alpha_eq(parse(text), m), text);
  record(kPrintStability, print(parse(text)) == text, text);

  const Count h = shortest_dev_length(m);
  const Count g = longest_dev_length(m);
  record(kHLeG, h <= g, text);
  record(kZeroIffNormal, (h.is_zero() == is_nf(m)) && (g.is_zero() == is_nf(m)), text);

  const Trace shortest = shortest_trace(m);
  const Trace longest = longest_trace(m);
  record(kShortestTraceLength, Count(shortest.length()) == h, text);
  record(kLongestTraceLength, Count(longest.length()) == g, text);
  record(kTracesValid,
         validate_trace(shortest) && is_complete(shortest) && validate_trace(longest) &&
             is_complete(longest),
         text);

  const std::vector<Path> essentials = essential_set(m);

  if (is_nf(m)) {
    record(kStepDecrements, Outcome::Skip, text);
    record(kStrategyPicksEssential, Outcome::Skip, text);
  } else {
    const StepChoice hstep = shortest_step(m);
    const StepChoice gstep = longest_step(m);
    record(kStepDecrements,
           shortest_dev_length(hstep.result) + Count(1) == h &&
               longest_dev_length(gstep.result) + Count(1) == g,
           text);

    // The redex the shortest strategy picks must itself be essential, and its
    // argument may not harbor any essential redex (that work, if needed,
    // happens before the head is contracted).
    const bool chosen_essential =
        std::find(essentials.begin(), essentials.end(), hstep.redex) != essentials.end();
    Path arg_prefix = hstep.redex;
    arg_prefix.steps.push_back(Step::RedArg);
    const bool none_inside_arg =
        std::none_of(essentials.begin(), essentials.end(),
                     [&](const Path& p) { return is_path_prefix(arg_prefix, p); });
    record(kStrategyPicksEssential, chosen_essential && none_inside_arg, text);
  }

  record(kEssentialCount, Count(essentials.size()) == h, text);

  const std::vector<Path> redexes = redex_positions(m);
  if (redexes.size() > kEssentialOracleMaxRedexes) {
    record(kEssentialVsOracle, Outcome::Skip, text);
  } else {
    try {
      bool agree = true;
      for (const Path& p : redexes) {
        if (is_essential(m, p) != essential_oracle(m, p, state_limit)) {
          agree = false;
          break;
        }
      }
      record(kEssentialVsOracle, agree, text);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LimitExceeded) throw;
      record(kEssentialVsOracle, Outcome::Skip, text);
    }
  }

  const DevStats stats = dev_stats(m, state_limit);
  if (!stats.complete) {
    record(kOracleAgrees, Outcome::Skip, text);
  } else {
    record(kOracleAgrees, *stats.shortest == h && *stats.longest == g, text);
  }

  const Term sub = subst(m, x, n);
  bool laws = shortest_dev_length(sub) == h + shortest_dev_length(n) * min_copies(x, m) &&
              longest_dev_length(sub) == g + longest_dev_length(n) * max_copies(x, m);
  for (const VarName& y : kPool) {
    if (y == x) continue;
    laws = laws &&
           min_copies(y, sub) == min_copies(y, m) + min_copies(y, n) * min_copies(x, m) &&
           max_copies(y, sub) == max_copies(y, m) + max_copies(y, n) * max_copies(x, m);
  }
  record(kSubstLaws, laws, text);

  std::set<VarName> expected_free = free_vars(m);
  if (expected_free.erase(x) > 0) {
    const std::set<VarName> fv_n = free_vars(n);
    expected_free.insert(fv_n.begin(), fv_n.end());
  }
  record(kFreeVarsAfterSubst, free_vars(sub) == expected_free, text);

  bool monotone = true;
  for (const Reduct& r : one_step_all(m)) {
    monotone = monotone && h <= shortest_dev_length(r.result) + Count(1) &&
               g >= longest_dev_length(r.result) + Count(1);
    for (const VarName& v : kPool) {
      monotone = monotone && min_copies(v, m) <= min_copies(v, r.result) &&
                 max_copies(v, m) >= max_copies(v, r.result);
    }
  }
  record(kMonotoneReducts, monotone, text);
}

}  // namespace

CheckReport run_checks(const GenParams& params, std::uint64_t count, std::uint64_t state_limit) {
  CheckReport report;
  report.properties.resize(kNumProps);
  for (std::size_t i = 0; i < kNumProps; ++i) report.properties[i].name = kPropNames[i];
  Recorder record(report);

  for (std::uint64_t i = 0; i < count; ++i) {
    GenParams term_params = params;
    term_params.seed = params.seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    const Term m = gen_term(term_params);

    // Companion pieces for the substitution laws, drawn from a related but
    // distinct stream so they do not mirror the main term.
    GenParams arg_params = params;
    arg_params.seed = term_params.seed ^ 0xd1b54a32d192ed03ULL;
    arg_params.max_size = std::min<std::uint64_t>(params.max_size, 12);
    const Term n = gen_term(arg_params);
    const VarName& x = kPool[i % kPoolSize];

    check_one(m, x, n, state_limit, record);
  }

  report.terms = count;
  for (const PropertyStat& p : report.properties) report.failures += p.fail;
  return report;
}

}  // namespace devlab
