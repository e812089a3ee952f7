// Command-line surface for the parking-function toolkit. Every subcommand is
// deterministic given its flags (and seed) and emits machine-readable JSON by
// default; enumerate also speaks CSV.
//
// Exit codes: 0 success or verified, 1 predicate/verification failure,
// 2 usage or parse error, 3 enumeration limit exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "parkfn/expectation.hpp"
#include "parkfn/genfun.hpp"
#include "parkfn/json_io.hpp"
#include "parkfn/lukas.hpp"
#include "parkfn/parking.hpp"
#include "parkfn/qsym.hpp"

using json = nlohmann::json;
using namespace parkfn;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct GlobalOptions {
  int limit = kDefaultEnumLimit;
  bool limit_set = false;
  std::string output_path;
};

int resolve_limit(const GlobalOptions& opts) {
  if (opts.limit_set) return opts.limit;
  if (const char* env = std::getenv("PARKFN_LIMIT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw InvalidInput("PARKFN_LIMIT is not an integer");
    }
  }
  return kDefaultEnumLimit;
}

// Output sink: stdout unless --output was given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidInput("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_check(const std::string& prefs, bool want_prime, const GlobalOptions& opts) {
  PrefVector p = PrefVector::parse(prefs);
  bool parking = is_parking_function(p);
  bool prime = parking && is_prime_parking_function(p);
  json verdict{{"parking", parking},
               {"prime", prime},
               {"displacement", nullptr},
               {"stats", stat_profile_to_json(stat_profile(p))}};
  if (parking) verdict["displacement"] = displacement(p);
  Sink sink(opts.output_path);
  sink.out() << verdict.dump() << "\n";
  bool requested = want_prime ? prime : parking;
  return requested ? kExitPass : kExitFail;
}

int run_enumerate(int n, bool prime, const std::string& format,
                  const std::vector<std::string>& stats, const GlobalOptions& opts) {
  bool want_disp = false, want_sets = false, want_fdiff = false;
  for (const std::string& s : stats) {
    if (s == "displacement")
      want_disp = true;
    else if (s == "sets")
      want_sets = true;
    else if (s == "fdiff")
      want_fdiff = true;
    else
      throw InvalidInput("unknown statistic \"" + s + "\" (use displacement, sets or fdiff)");
  }
  Sink sink(opts.output_path);
  std::ostream& out = sink.out();
  const bool csv = format == "csv";
  if (csv) {
    out << "prefs";
    if (want_disp) out << ",displacement";
    if (want_sets) out << ",des,asc,tie";
    if (want_fdiff) out << ",fdiff";
    out << "\n";
  }
  auto emit = [&](const std::vector<int>& a) {
    if (csv) {
      out << '"' << PrefVector(a).str() << '"';
      if (want_disp) out << ',' << detail::displacement_entries(a);
      if (want_sets) {
        detail::StatCounts c = detail::stat_counts(a);
        out << ',' << c.descents << ',' << c.ascents << ',' << c.ties;
      }
      if (want_fdiff) {
        out << ",\"";
        std::vector<int> res = detail::forward_residues(a);
        for (std::size_t i = 0; i < res.size(); ++i) out << (i ? "," : "") << res[i];
        out << '"';
      }
      out << "\n";
    } else {
      json row{{"prefs", a}};
      if (want_disp) row["displacement"] = detail::displacement_entries(a);
      if (want_sets) {
        detail::StatCounts c = detail::stat_counts(a);
        row["des"] = c.descents;
        row["asc"] = c.ascents;
        row["tie"] = c.ties;
      }
      if (want_fdiff) row["fdiff"] = detail::forward_residues(a);
      out << row.dump() << "\n";
    }
  };
  int limit = resolve_limit(opts);
  if (prime)
    for_each_ppf(n, emit, limit);
  else
    for_each_pf(n, emit, limit);
  return kExitPass;
}

int run_count(int n, bool prime, int first, int ones, const GlobalOptions& opts) {
  Integer result;
  json params{{"n", n}, {"prime", prime}};
  if (first > 0 && ones > 0) {
    if (prime)
      throw InvalidInput("joint first/ones counts are available for plain parking functions only");
    params["first"] = first;
    params["ones"] = ones;
    result = f_n_jk(n, first, ones);
  } else if (first > 0) {
    params["first"] = first;
    result = prime ? count_ppf_first(n, first) : count_pf_first(n, first);
  } else if (ones > 0) {
    if (prime) throw InvalidInput("ones counts are available for plain parking functions only");
    params["ones"] = ones;
    result = count_pf_ones(n, ones);
  } else {
    result = prime ? count_ppf(n) : count_pf(n);
  }
  Sink sink(opts.output_path);
  sink.out() << json{{"params", params}, {"count", result.get_str()}}.dump() << "\n";
  return kExitPass;
}

int run_sample(int n, long long samples, std::uint64_t seed, bool report,
               const GlobalOptions& opts) {
  Sink sink(opts.output_path);
  SampleConfig cfg{n, samples, seed};
  if (report) {
    sink.out() << report_to_json(monte_carlo_report(cfg)).dump() << "\n";
  } else {
    kalikow_sample(cfg, [&](const PrefVector& p) { sink.out() << p.str() << "\n"; });
  }
  return kExitPass;
}

int run_expect(int n, bool asymptotic, const GlobalOptions& opts) {
  json out{{"n", n}};
  if (n <= kDefaultExactLimit) {
    Rational pi1 = expected_pi1_exact(n);
    Rational disp = expected_displacement_exact(n);
    out["pi1"] = {{"exact", pi1.get_str()}, {"decimal", pi1.get_d()}};
    out["displacement"] = {{"exact", disp.get_str()}, {"decimal", disp.get_d()}};
  } else {
    out["pi1"] = {{"decimal", expected_pi1_value(n)}};
    out["displacement"] = {{"decimal", expected_displacement_value(n)}};
  }
  if (asymptotic) {
    double pi1_asym = expected_pi1_asymptotic(n);
    double disp_asym = expected_displacement_asymptotic(n);
    out["pi1"]["asymptotic"] = pi1_asym;
    out["pi1"]["abs_error"] = std::abs(expected_pi1_value(n) - pi1_asym);
    out["displacement"]["asymptotic"] = disp_asym;
    out["displacement"]["abs_error"] = std::abs(expected_displacement_value(n) - disp_asym);
  }
  Sink sink(opts.output_path);
  sink.out() << out.dump() << "\n";
  return kExitPass;
}

int run_disp_enum(int n, const std::string& method, const GlobalOptions& opts) {
  int limit = resolve_limit(opts);
  UniPoly poly;
  if (method == "brute")
    poly = displacement_enumerator_brute(n, limit);
  else if (method == "paths")
    poly = displacement_enumerator_paths(n, limit);
  else if (method == "prime-paths")
    poly = displacement_enumerator_prime_paths(n, limit);
  else
    throw InvalidInput("unknown method \"" + method + "\" (use brute, paths or prime-paths)");
  Sink sink(opts.output_path);
  sink.out() << json{{"n", n}, {"method", method}, {"poly", poly_to_json(poly)}}.dump() << "\n";
  return kExitPass;
}

int run_genfun(int n, int ell, int m, bool mixed, const GlobalOptions& opts) {
  int limit = resolve_limit(opts);
  json out{{"n", n}, {"ell", ell}};
  bool equal;
  if (mixed) {
    out["m"] = m;
    BiPoly brute = mixed_genfun(n, ell, m, limit);
    BiPoly closed = mixed_genfun_closed(n);
    equal = brute == closed;
    out["brute"] = bipoly_to_json(brute);
    out["closed"] = bipoly_to_json(closed);
  } else {
    UniPoly brute = ell_genfun(n, ell, limit);
    UniPoly closed = ell_genfun_closed(n);
    equal = brute == closed;
    out["brute"] = poly_to_json(brute);
    out["closed"] = poly_to_json(closed);
  }
  out["equal"] = equal;
  Sink sink(opts.output_path);
  sink.out() << out.dump() << "\n";
  return equal ? kExitPass : kExitFail;
}

int run_bijection(const std::string& prefs, const GlobalOptions& opts) {
  PrefVector p = PrefVector::parse(prefs);
  if (!is_parking_function(p)) {
    std::cerr << "not a parking function: " << p.str() << "\n";
    return kExitFail;
  }
  LabeledLukasiewiczPath path = labeled_path_from_pf(p);
  LabeledDyckPath dyck = dyck_from_labeled_lukas(path);
  bool roundtrip = pf_from_labeled_path(path) == p && pf_from_labeled_dyck(dyck) == p;
  json out{{"prefs", p.entries()},
           {"lukas", labeled_path_to_json(path)},
           {"heights", height_sequence(path.word())},
           {"area", area(path.word())},
           {"alpha", alpha_permutation(path)},
           {"dyck", dyck_to_json(dyck)},
           {"roundtrip", roundtrip}};
  Sink sink(opts.output_path);
  sink.out() << out.dump() << "\n";
  return roundtrip ? kExitPass : kExitFail;
}

int run_abel(int n, const std::string& x, const std::string& y, long p, long q,
             const GlobalOptions& opts) {
  Rational value = abel_sum(n, rational_parse(x), rational_parse(y), p, q);
  Sink sink(opts.output_path);
  sink.out() << json{{"n", n}, {"x", x},     {"y", y},
                     {"p", p}, {"q", q},     {"value", value.get_str()}}
                    .dump()
             << "\n";
  return kExitPass;
}

// --- verify: one dispatcher per documented theorem id ------------------------

json verify_displacement_enum(int n, int limit) {
  UniPoly brute = displacement_enumerator_brute(n, limit);
  UniPoly paths = displacement_enumerator_paths(n, limit);
  UniPoly prime_paths = displacement_enumerator_prime_paths(n, limit);
  return json{{"pass", brute == paths && brute == prime_paths},
              {"lhs", poly_to_json(brute)},
              {"rhs", poly_to_json(paths)},
              {"prime_paths", poly_to_json(prime_paths)}};
}

json verify_ell_genfun(int n, int ell, int limit) {
  UniPoly brute = ell_genfun(n, ell, limit);
  UniPoly closed = ell_genfun_closed(n);
  return json{{"pass", brute == closed},
              {"lhs", poly_to_json(brute)},
              {"rhs", poly_to_json(closed)}};
}

json verify_mixed_genfun(int n, int ell, int m, int limit) {
  BiPoly brute = mixed_genfun(n, ell, m, limit);
  BiPoly closed = mixed_genfun_closed(n);
  return json{{"pass", brute == closed},
              {"lhs", bipoly_to_json(brute)},
              {"rhs", bipoly_to_json(closed)}};
}

json verify_tie_count(int n, int ell, int limit) {
  std::map<std::uint32_t, long> hist;
  for_each_ppf(
      n,
      [&](const std::vector<int>& a) {
        std::uint32_t mask = 0;
        std::vector<int> res = detail::forward_residues(a);
        for (std::size_t i = 0; i < res.size(); ++i)
          if (res[i] == ell) mask |= 1u << i;
        ++hist[mask];
      },
      limit);
  long checked = 0, failures = 0;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> positions;
    for (int i = 1; i <= n - 1; ++i)
      if (mask & (1u << (i - 1))) positions.push_back(i);
    Integer closed = count_forward_diff_set(n, ell, positions);
    Integer brute = to_integer(static_cast<long long>(hist.count(mask) ? hist[mask] : 0));
    ++checked;
    if (closed != brute) ++failures;
  }
  return json{{"pass", failures == 0},
              {"lhs", "enumerated set counts"},
              {"rhs", "(n-2)^(n-1-|S|)"},
              {"subsets_checked", checked}};
}

json verify_tie_count_mixed(int n, int ell, int m, int limit) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, long> hist;
  for_each_ppf(
      n,
      [&](const std::vector<int>& a) {
        std::uint32_t mask_l = 0, mask_m = 0;
        std::vector<int> res = detail::forward_residues(a);
        for (std::size_t i = 0; i < res.size(); ++i) {
          if (res[i] == ell) mask_l |= 1u << i;
          if (res[i] == m) mask_m |= 1u << i;
        }
        ++hist[{mask_l, mask_m}];
      },
      limit);
  long checked = 0, failures = 0;
  for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
    for (std::uint32_t t = 0; t < (1u << (n - 1)); ++t) {
      if (s & t) continue;
      std::vector<int> sset, tset;
      for (int i = 1; i <= n - 1; ++i) {
        if (s & (1u << (i - 1))) sset.push_back(i);
        if (t & (1u << (i - 1))) tset.push_back(i);
      }
      Integer closed = count_forward_diff_set_pair(n, ell, m, sset, tset);
      auto it = hist.find({s, t});
      Integer brute = to_integer(static_cast<long long>(it == hist.end() ? 0 : it->second));
      ++checked;
      if (closed != brute) ++failures;
    }
  }
  return json{{"pass", failures == 0},
              {"lhs", "enumerated joint set counts"},
              {"rhs", "(n-3)^(n-1-|S|-|T|)"},
              {"pairs_checked", checked}};
}

json verify_quasisym_cmd(int n, int vars, int limit) {
  QuasisymCheck check = verify_quasisym(n, vars, limit);
  return json{{"pass", check.equal},
              {"lhs", mvpoly_to_json(check.lhs)},
              {"rhs", mvpoly_to_json(check.rhs)}};
}

json verify_quasisym_corr_cmd(int n, int ell, int m, int vars, int limit) {
  QuasisymCorrCheck check = verify_quasisym_corr(n, ell, m, vars, limit);
  return json{{"pass", check.eq1 && check.eq2},
              {"eq1", check.eq1},
              {"eq2", check.eq2},
              {"lhs", mvpoly_to_json(check.lhs1)},
              {"rhs", mvpoly_to_json(check.rhs1)},
              {"lhs_mixed", mvpoly_to_json(check.lhs2)},
              {"rhs_mixed", mvpoly_to_json(check.rhs2)}};
}

json verify_abel(int max_n, int trials, std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto draw = [&](int n) -> Rational {
    for (;;) {
      long num = static_cast<long>(bounded(rng, 19)) - 9;
      long den = static_cast<long>(bounded(rng, 9)) + 1;
      Rational r = make_rational(num, den);
      if (r.get_den() == 1) {
        long v = static_cast<long>(r.get_num().get_si());
        if (v >= -(n + 2) && v <= 1) continue;  // keep shifted bases away from poles
      }
      return r;
    }
  };
  long checked = 0, failures = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int trial = 0; trial < trials; ++trial) {
      Rational x = draw(n);
      Rational y = draw(n);
      long p = static_cast<long>(bounded(rng, 3)) - 1;
      long q = static_cast<long>(bounded(rng, 3)) - 1;
      ++checked;
      if (!abel_check_split(n, x, y, p, q) || !abel_check_convolution(n, x, y, p, q) ||
          !abel_check_power_identity(n, x, y) || !abel_check_factorial_identity(n, x, y))
        ++failures;
    }
  }
  return json{{"pass", failures == 0},
              {"lhs", "recurrences and special cases"},
              {"rhs", "direct exact evaluation"},
              {"trials", checked},
              {"failures", failures}};
}

json verify_bijection(int n, int limit) {
  long cases = 0, failures = 0;
  for_each_pf(
      n,
      [&](const std::vector<int>& a) {
        PrefVector p(a);
        LabeledLukasiewiczPath path = labeled_path_from_pf(p);
        LabeledDyckPath dyck = dyck_from_labeled_lukas(path);
        ++cases;
        if (!(pf_from_labeled_path(path) == p) || !(pf_from_labeled_dyck(dyck) == p))
          ++failures;
      },
      limit);
  return json{{"pass", failures == 0},
              {"lhs", "round-tripped objects"},
              {"rhs", "identity"},
              {"cases", cases}};
}

json verify_path_counts(int n, int limit) {
  Integer plain = labeled_path_count(n, false, limit);
  Integer prime = labeled_path_count(n, true, limit);
  bool pass = plain == count_pf(n) && prime == count_ppf(n);
  return json{
      {"pass", pass},
      {"lhs", json{{"plain", plain.get_str()}, {"prime", prime.get_str()}}},
      {"rhs", json{{"plain", count_pf(n).get_str()}, {"prime", count_ppf(n).get_str()}}}};
}

int run_verify(const std::string& theorem, int n, int ell, int m, int vars,
               std::uint64_t seed, const GlobalOptions& opts) {
  int limit = resolve_limit(opts);
  json result;
  json params{{"n", n}};
  if (theorem == "displacement-enum") {
    result = verify_displacement_enum(n, limit);
  } else if (theorem == "ell-genfun") {
    params["ell"] = ell;
    result = verify_ell_genfun(n, ell, limit);
  } else if (theorem == "mixed-genfun") {
    params["ell"] = ell;
    params["m"] = m;
    result = verify_mixed_genfun(n, ell, m, limit);
  } else if (theorem == "tie-count") {
    params["ell"] = ell;
    result = verify_tie_count(n, ell, limit);
  } else if (theorem == "tie-count-mixed") {
    params["ell"] = ell;
    params["m"] = m;
    result = verify_tie_count_mixed(n, ell, m, limit);
  } else if (theorem == "quasisym") {
    int k = vars > 0 ? vars : n;
    params["vars"] = k;
    result = verify_quasisym_cmd(n, k, limit);
  } else if (theorem == "quasisym-corr") {
    int k = vars > 0 ? vars : n;
    params["ell"] = ell;
    params["m"] = m;
    params["vars"] = k;
    result = verify_quasisym_corr_cmd(n, ell, m, k, limit);
  } else if (theorem == "abel") {
    params["seed"] = seed;
    result = verify_abel(n, 50, seed);
  } else if (theorem == "bijection") {
    result = verify_bijection(n, limit);
  } else if (theorem == "path-counts") {
    result = verify_path_counts(n, limit);
  } else {
    std::cerr << "unknown theorem id \"" << theorem << "\"\n";
    return kExitUsage;
  }
  bool pass = result.at("pass").get<bool>();
  json out{{"theorem", theorem}, {"params", params}, {"pass", pass}};
  for (auto& [key, value] : result.items())
    if (key != "pass") out[key] = value;
  Sink sink(opts.output_path);
  sink.out() << out.dump() << "\n";
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for parking functions and their prime refinement"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--limit", opts.limit, "override the enumeration bound")
      ->each([&opts](const std::string&) { opts.limit_set = true; });
  app.add_option("-o,--output", opts.output_path, "write output to a file instead of stdout");

  std::string check_prefs;
  bool check_prime = false;
  auto* check = app.add_subcommand("check", "classify a preference sequence");
  check->add_option("prefs", check_prefs, "comma-separated preferences")->required();
  check->add_flag("--prime", check_prime, "require the prime property for exit status 0");

  int enum_n = 1;
  bool enum_prime = false;
  std::string enum_format = "json";
  std::vector<std::string> enum_stats;
  auto* enumerate = app.add_subcommand("enumerate", "stream objects in lexicographic order");
  enumerate->add_option("--n", enum_n, "sequence length")->required();
  enumerate->add_flag("--prime", enum_prime, "restrict to prime parking functions");
  enumerate->add_option("--format", enum_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_option("--stat", enum_stats,
                        "statistic columns: displacement, sets, fdiff (repeatable)");

  int count_n = 1, count_first = 0, count_ones = 0;
  bool count_prime = false;
  auto* count = app.add_subcommand("count", "closed-form counts");
  count->add_option("--n", count_n, "sequence length")->required();
  count->add_flag("--prime", count_prime, "count prime parking functions");
  count->add_option("--first", count_first, "restrict to a fixed first entry");
  count->add_option("--ones", count_ones, "restrict to a fixed number of ones");

  int sample_n = 2;
  long long sample_count = 1;
  std::uint64_t sample_seed = 0;
  bool sample_report = false;
  auto* sample = app.add_subcommand("sample", "seeded uniform sampling of prime sequences");
  sample->add_option("--n", sample_n, "sequence length")->required();
  sample->add_option("--samples", sample_count, "number of samples");
  sample->add_option("--seed", sample_seed, "master seed");
  sample->add_flag("--report", sample_report, "emit a summary with exact comparison columns");

  int expect_n = 1;
  bool expect_asym = false;
  auto* expect =
      app.add_subcommand("expect", "expectations for prime sequences of length n+1");
  expect->add_option("--n", expect_n, "parameter n (sequence length n+1)")->required();
  expect->add_flag("--asymptotic", expect_asym, "include asymptotic values and errors");

  int de_n = 2;
  std::string de_method = "brute";
  auto* de = app.add_subcommand("disp-enum", "displacement enumerator polynomial");
  de->add_option("--n", de_n, "prime sequence length")->required();
  de->add_option("--method", de_method, "brute, paths or prime-paths");

  int gf_n = 2, gf_ell = 0, gf_m = -1;
  auto* gf = app.add_subcommand("genfun", "residue-count generating functions");
  gf->add_option("--n", gf_n, "sequence length")->required();
  gf->add_option("--ell", gf_ell, "residue marked by q");
  auto* gf_m_opt = gf->add_option("--m", gf_m, "second residue marked by t");

  std::string bij_prefs;
  auto* bij = app.add_subcommand("bijection", "path correspondences for one sequence");
  bij->add_option("prefs", bij_prefs, "comma-separated preferences")->required();

  std::string verify_theorem;
  int verify_n = 4, verify_ell = 0, verify_m = 1, verify_vars = 0;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "check one identity and report lhs/rhs");
  verify->add_option("--theorem", verify_theorem,
                     "one of: displacement-enum, ell-genfun, mixed-genfun, tie-count, "
                     "tie-count-mixed, quasisym, quasisym-corr, abel, bijection, path-counts")
      ->required();
  verify->add_option("--n", verify_n, "size parameter");
  verify->add_option("--ell", verify_ell, "first residue");
  verify->add_option("--m", verify_m, "second residue");
  verify->add_option("--vars", verify_vars, "variable count (defaults to n)");
  verify->add_option("--seed", verify_seed, "seed for randomized checks");

  int abel_n = 0;
  std::string abel_x = "1", abel_y = "1";
  long abel_p = 0, abel_q = 0;
  auto* abel = app.add_subcommand("abel", "evaluate an Abel binomial sum exactly");
  abel->add_option("--n", abel_n, "summation length")->required();
  abel->add_option("--x", abel_x, "rational x as a/b");
  abel->add_option("--y", abel_y, "rational y as a/b");
  abel->add_option("--p", abel_p, "exponent offset p");
  abel->add_option("--q", abel_q, "exponent offset q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(check_prefs, check_prime, opts);
    if (enumerate->parsed())
      return run_enumerate(enum_n, enum_prime, enum_format, enum_stats, opts);
    if (count->parsed()) return run_count(count_n, count_prime, count_first, count_ones, opts);
    if (sample->parsed())
      return run_sample(sample_n, sample_count, sample_seed, sample_report, opts);
    if (expect->parsed()) return run_expect(expect_n, expect_asym, opts);
    if (de->parsed()) return run_disp_enum(de_n, de_method, opts);
    if (gf->parsed()) return run_genfun(gf_n, gf_ell, gf_m, gf_m_opt->count() > 0, opts);
    if (bij->parsed()) return run_bijection(bij_prefs, opts);
    if (verify->parsed())
      return run_verify(verify_theorem, verify_n, verify_ell, verify_m, verify_vars,
                        verify_seed, opts);
    if (abel->parsed()) return run_abel(abel_n, abel_x, abel_y, abel_p, abel_q, opts);
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
