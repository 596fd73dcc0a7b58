// mea: command-line front end for the multiple-ergodic-average toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
// MEA_SEED sets the default seed for sampling commands.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "mea/mea.hpp"
#include "mea/output_record.hpp"
#include "mea/verify.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MEA_SEED")) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      throw UsageError("MEA_SEED is not an unsigned integer: " + std::string(env));
    }
  }
  return 0;
}

void emit(const mea::OutputRecord& record, const std::string& format) {
  if (format == "json") {
    std::cout << mea::to_json(record).dump(2) << '\n';
  } else if (format == "csv") {
    mea::write_csv(std::cout, record);
  } else {
    mea::write_table(std::cout, record);
  }
}

mea::OutputRecord cmd_spectrum(int ell, double theta_min, double theta_max, int steps) {
  if (steps < 1) throw UsageError("--steps must be >= 1");
  if (!(theta_min >= -1.0 && theta_max <= 1.0 && theta_min <= theta_max))
    throw UsageError("theta range must satisfy -1 <= theta-min <= theta-max <= 1");
  mea::OutputRecord r;
  r.command = "spectrum";
  r.precision = 15;
  r.parameters = {{"ell", std::to_string(ell)},
                  {"theta_min", r.real(theta_min)},
                  {"theta_max", r.real(theta_max)},
                  {"steps", std::to_string(steps)}};
  r.columns = {"theta", "dimension"};
  for (int i = 0; i <= steps; ++i) {
    // Endpoints are hit exactly; interior points are min + i (max - min) / steps.
    const double theta = i == steps ? theta_max : theta_min + (theta_max - theta_min) * i / steps;
    r.rows.push_back({r.real(theta), r.real(mea::hausdorff_dimension_B(ell, theta).value)});
  }
  return r;
}

mea::OutputRecord cmd_empirical(std::uint64_t n, int ell) {
  mea::OutputRecord r;
  r.command = "empirical";
  r.precision = 12;
  r.parameters = {{"n", std::to_string(n)}, {"ell", std::to_string(ell)}};
  r.columns = {"s", "theta", "rate", "dimension"};
  for (const auto& p : mea::empirical_spectrum(n, ell))
    r.rows.push_back({std::to_string(p.s), r.real(p.theta), r.real(p.rate),
                      r.real(mea::hausdorff_dimension_B(ell, p.theta).value)});
  return r;
}

mea::OutputRecord cmd_count(std::uint64_t n, const std::string& mode) {
  if (n < 1) throw UsageError("--n must be >= 1");
  mea::OutputRecord r;
  r.command = "count";
  r.precision = 9;
  r.parameters = {{"n", std::to_string(n)}, {"mode", mode}};
  if (mode == "exact") {
    r.results["count"] = mea::to_decimal(mea::count_exact(n));
  } else if (mode == "brute") {
    if (n > mea::kBruteForceMaxLength)
      throw UsageError("brute mode enumerates 2^n words; n must be <= " + std::to_string(mea::kBruteForceMaxLength));
    r.results["count"] = mea::to_decimal(mea::count_brute_force(n));
  } else {
    r.results["log2rate"] = r.real(mea::normalized_log_count(n));
  }
  return r;
}

mea::OutputRecord cmd_boxdim(std::size_t terms) {
  if (terms < 1) throw UsageError("--terms must be >= 1");
  const auto d = mea::box_dimension_X0(terms);
  mea::OutputRecord r;
  r.command = "boxdim";
  r.precision = 16;
  r.parameters = {{"terms", std::to_string(terms)}};
  r.results = {{"value", r.real(d.value)}, {"tail_bound", r.real(d.tail_bound)}};
  return r;
}

mea::OutputRecord cmd_sample(int ell, double theta, std::size_t length, std::size_t count, std::uint64_t seed,
                             bool stats) {
  const mea::RieszParams params(ell, theta);
  mea::OutputRecord r;
  r.command = "sample";
  r.precision = 12;
  r.seed = std::to_string(seed);
  r.parameters = {{"ell", std::to_string(ell)},
                  {"theta", r.real(theta)},
                  {"length", std::to_string(length)},
                  {"count", std::to_string(count)},
                  {"stats", stats ? "true" : "false"}};
  if (stats) {
    const std::size_t n = length / static_cast<std::size_t>(ell);
    if (n < 1) throw UsageError("--stats needs length >= ell");
    const auto rep = mea::lln_experiment(params, n, count, seed);
    r.results = {{"trials", std::to_string(rep.trials)},
                 {"n", std::to_string(rep.n)},
                 {"theta", r.real(rep.theta)},
                 {"mean_of_averages", r.real(rep.mean_of_averages)},
                 {"rms_deviation", r.real(rep.rms_deviation)},
                 {"max_deviation", r.real(rep.max_deviation)}};
    return r;
  }
  r.columns = {"index", "word"};
  for (std::size_t i = 0; i < count; ++i)
    r.rows.push_back({std::to_string(i), mea::sample(params, length, mea::derive_seed(seed, i)).to_string()});
  return r;
}

mea::OutputRecord cmd_mass(int ell, double theta, const std::string& word_text) {
  const mea::RieszParams params(ell, theta);
  const auto word = mea::SignWord::parse(word_text);
  mea::OutputRecord r;
  r.command = "mass";
  r.precision = 17;
  r.parameters = {{"ell", std::to_string(ell)}, {"theta", r.real(theta)}, {"word", word.to_string()}};
  const double log_mass = mea::log2_cylinder_mass(params, word);
  r.results = {{"mass", r.real(mea::cylinder_mass(params, word))},
               {"log2_mass", r.real(log_mass)},
               {"diameter_log2", std::to_string(mea::Cylinder{word}.diameter_log2())}};
  if (std::isfinite(log_mass)) {
    r.results["next_plus"] = r.real(mea::conditional_prob_next(params, word, 1));
    r.results["next_minus"] = r.real(mea::conditional_prob_next(params, word, -1));
    if (word.size() >= static_cast<std::size_t>(ell))
      r.results["local_dimension"] = r.real(mea::local_dimension_estimate(params, word));
  }
  return r;
}

mea::OutputRecord cmd_fourier(int ell, double theta, std::uint64_t index) {
  const mea::RieszParams params(ell, theta);
  const mea::DyadicCharacter ch(index);
  mea::OutputRecord r;
  r.command = "fourier";
  r.precision = 17;
  r.parameters = {{"ell", std::to_string(ell)}, {"theta", r.real(theta)}, {"index", std::to_string(index)}};
  std::string freqs;
  for (int f : ch.frequencies()) freqs += (freqs.empty() ? "" : " ") + std::to_string(f);
  r.results = {{"coefficient", r.real(mea::fourier_coefficient(params, ch))}, {"frequencies", freqs}};
  return r;
}

mea::OutputRecord cmd_levelset(std::uint64_t n, int ell, long long s) {
  mea::OutputRecord r;
  r.command = "levelset";
  r.precision = 12;
  r.parameters = {{"n", std::to_string(n)}, {"ell", std::to_string(ell)}, {"s", std::to_string(s)}};
  const auto count = mea::level_set_count(n, ell, s);
  r.results = {{"count", mea::to_decimal(count)},
               {"log2_count_per_n", r.real(mea::log2_big(count) / static_cast<double>(n))}};
  return r;
}

mea::OutputRecord cmd_average(const std::string& word_text, int ell) {
  const auto word = mea::SignWord::parse(word_text);
  const auto trace = mea::multiple_average(word, ell);
  mea::OutputRecord r;
  r.command = "average";
  r.precision = 12;
  r.parameters = {{"ell", std::to_string(ell)}, {"word", word.to_string()}};
  r.columns = {"m", "average"};
  for (std::size_t m = 1; m <= trace.partial_averages.size(); ++m)
    r.rows.push_back({std::to_string(m), r.real(trace.partial_averages[m - 1])});
  return r;
}

mea::OutputRecord cmd_verify(const std::string& level, bool& all_passed) {
  const auto start = std::chrono::steady_clock::now();
  const auto checks = mea::verify::run(level == "full" ? mea::verify::Level::full : mea::verify::Level::quick);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  mea::OutputRecord r;
  r.command = "verify";
  r.precision = 4;
  r.parameters = {{"level", level}};
  r.columns = {"check", "tolerance", "observed", "status", "failure"};
  all_passed = true;
  for (const auto& c : checks) {
    all_passed = all_passed && c.passed;
    r.rows.push_back({c.name, c.tolerance, c.observed, c.passed ? "PASS" : "FAIL", c.failure});
  }
  r.results = {{"status", all_passed ? "PASS" : "FAIL"}, {"seconds", r.real(seconds)}};
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple ergodic averages on {+1,-1}^N: Riesz products, dimension spectra, constrained word counts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mea::kVersion);

  std::string format = "table";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  };

  int ell = 2;
  double theta = 0.5;
  double theta_min = -1.0;
  double theta_max = 1.0;
  int steps = 20;
  std::uint64_t n = 8;
  std::string mode = "exact";
  std::size_t terms = 64;
  std::size_t length = 16;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  bool stats = false;
  std::string word;
  std::uint64_t index = 0;
  long long s = 0;
  std::string level = "quick";

  auto* spectrum = app.add_subcommand("spectrum", "Closed-form dimension of the level set B_theta on a theta grid");
  spectrum->add_option("--ell", ell, "Multiplicity ell >= 1")->check(CLI::PositiveNumber);
  spectrum->add_option("--theta-min", theta_min, "Grid start");
  spectrum->add_option("--theta-max", theta_max, "Grid end");
  spectrum->add_option("--steps", steps, "Number of grid intervals");
  add_format(spectrum);

  auto* empirical = app.add_subcommand("empirical", "Finite-n level-set counting rates log2(count)/n");
  empirical->add_option("--n", n, "Word length")->required();
  empirical->add_option("--ell", ell, "Multiplicity ell >= 1")->check(CLI::PositiveNumber);
  add_format(empirical);

  auto* count_cmd = app.add_subcommand("count", "Count words in {0,1}^n with x_l x_{2l} = 0");
  count_cmd->add_option("--n", n, "Word length")->required();
  count_cmd->add_option("--mode", mode, "exact | brute | log2rate")
      ->check(CLI::IsMember({"exact", "brute", "log2rate"}));
  add_format(count_cmd);

  auto* boxdim = app.add_subcommand("boxdim", "Box dimension series with rigorous tail bound");
  boxdim->add_option("--terms", terms, "Number of series terms");
  add_format(boxdim);

  auto* sample_cmd = app.add_subcommand("sample", "Draw words from the Riesz product P_theta");
  sample_cmd->add_option("--ell", ell, "Multiplicity ell >= 1")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--theta", theta, "Level theta in [-1, 1]")->check(CLI::Range(-1.0, 1.0));
  sample_cmd->add_option("--length", length, "Word length")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--count", count, "Number of words (trials with --stats)")->check(CLI::PositiveNumber);
  auto* seed_opt = sample_cmd->add_option("--seed", seed, "64-bit seed (default: $MEA_SEED or 0)");
  sample_cmd->add_flag("--stats", stats, "Report law-of-large-numbers statistics instead of words");
  add_format(sample_cmd);

  auto* mass = app.add_subcommand("mass", "Cylinder mass, conditional probabilities and local dimension");
  mass->add_option("--ell", ell, "Multiplicity ell >= 1")->check(CLI::PositiveNumber);
  mass->add_option("--theta", theta, "Level theta in [-1, 1]")->check(CLI::Range(-1.0, 1.0));
  mass->add_option("--word", word, "Prefix as +/- or 0/1 string")->required();
  add_format(mass);

  auto* fourier = app.add_subcommand("fourier", "Fourier-Walsh coefficient of P_theta");
  fourier->add_option("--ell", ell, "Multiplicity ell >= 1")->check(CLI::PositiveNumber);
  fourier->add_option("--theta", theta, "Level theta in [-1, 1]")->check(CLI::Range(-1.0, 1.0));
  fourier->add_option("--index", index, "Walsh index n")->required();
  add_format(fourier);

  auto* levelset = app.add_subcommand("levelset", "Exact number of words with xi_1 + ... + xi_m = s");
  levelset->add_option("--n", n, "Word length")->required();
  levelset->add_option("--ell", ell, "Multiplicity ell >= 1")->check(CLI::PositiveNumber);
  levelset->add_option("--s", s, "Target sum")->required();
  add_format(levelset);

  auto* average = app.add_subcommand("average", "Partial multiple ergodic averages along a word");
  average->add_option("--word", word, "Word as +/- or 0/1 string")->required();
  average->add_option("--ell", ell, "Multiplicity ell >= 1")->check(CLI::PositiveNumber);
  add_format(average);

  auto* verify = app.add_subcommand("verify", "Run the oracle cross-check suites");
  verify->add_option("--level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    mea::OutputRecord record;
    int status = 0;
    if (*spectrum) {
      record = cmd_spectrum(ell, theta_min, theta_max, steps);
    } else if (*empirical) {
      record = cmd_empirical(n, ell);
    } else if (*count_cmd) {
      record = cmd_count(n, mode);
    } else if (*boxdim) {
      record = cmd_boxdim(terms);
    } else if (*sample_cmd) {
      if (seed_opt->count() == 0) seed = default_seed();
      record = cmd_sample(ell, theta, length, count, seed, stats);
    } else if (*mass) {
      record = cmd_mass(ell, theta, word);
    } else if (*fourier) {
      record = cmd_fourier(ell, theta, index);
    } else if (*levelset) {
      record = cmd_levelset(n, ell, s);
    } else if (*average) {
      record = cmd_average(word, ell);
    } else if (*verify) {
      bool passed = true;
      record = cmd_verify(level, passed);
      status = passed ? 0 : kExitVerifyFailed;
    }
    emit(record, format);
    return status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
