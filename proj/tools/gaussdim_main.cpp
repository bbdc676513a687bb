// Command-line front end: closed-form dimension queries, parameter sweeps,
// verification suites, schedule sampling, counting-bound queries and
// covering-root estimates.  All output is deterministic CSV on stdout or a
// file; GAUSSDIM_OUT_DIR prefixes relative output paths.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaussdim/counting.hpp"
#include "gaussdim/covering.hpp"
#include "gaussdim/csv.hpp"
#include "gaussdim/dimension.hpp"
#include "gaussdim/ifs.hpp"
#include "gaussdim/verify.hpp"

namespace gd = gaussdim;

namespace {

gd::Potential parse_potential(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::domain_error("potential spec must look like power:1.5");
  std::string kind = spec.substr(0, colon);
  double v = std::stod(spec.substr(colon + 1));
  if (kind == "power") return gd::Potential::power_law(v);
  if (kind == "logpower") return gd::Potential::log_power(v);
  if (kind == "stretched") return gd::Potential::stretched_exp(v);
  throw std::domain_error("unknown potential kind: " + kind);
}

gd::GrowthRate parse_growth(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::domain_error("growth spec must look like polyexp:0.8");
  std::string kind = spec.substr(0, colon);
  double v = std::stod(spec.substr(colon + 1));
  if (kind == "polyexp") return gd::GrowthRate::poly_exp(v);
  if (kind == "superexp") return gd::GrowthRate::super_exp(v);
  if (kind == "doubleexp") return gd::GrowthRate::double_exp(v);
  throw std::domain_error("unknown growth kind: " + kind);
}

// Shared schedule flags for sample / root / verify lemA.
struct ScheduleOpts {
  std::string schedule;
  double a = 1.0, b = 2.0, c = 0.5;
  double alpha = 1.3, beta = 2.0, gamma = 2.0;
  double eps = 1.0 / 6.0;
  bool lower = false;
  double eps_rate = 2.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--schedule", schedule,
                    "one of t1-ii, t1-i2a, t1-i2b, t2-ii, t2-i2a, t2-i2b, "
                    "t3-i2, t3-ii, t3-iii, benchmark")
        ->required();
    cmd->add_option("--a", a, "power-law exponent");
    cmd->add_option("--b", b, "log-power exponent");
    cmd->add_option("--c", c, "stretched-exponential exponent");
    cmd->add_option("--alpha", alpha, "e^{n^alpha} growth parameter");
    cmd->add_option("--beta", beta, "e^{beta^n} growth parameter");
    cmd->add_option("--gamma", gamma, "e^{e^{gamma^n}} growth parameter");
    cmd->add_option("--eps", eps, "fixed window width parameter");
    cmd->add_flag("--lower", lower, "use the vanishing eps_n window");
    cmd->add_option("--eps-rate", eps_rate, "eps_n = n^-rate when --lower");
  }

  struct Built {
    gd::DigitSchedule schedule;
    std::optional<gd::Potential> potential;
    std::optional<gd::GrowthRate> growth;
  };

  Built build() const {
    if (schedule == "benchmark" || schedule == "geometric")
      return Built{gd::benchmark_schedule(), std::nullopt, std::nullopt};
    gd::EpsilonPolicy pol = lower ? gd::EpsilonPolicy::vanishing_power(eps_rate)
                                  : gd::EpsilonPolicy::fixed(eps);
    auto mk = [&](gd::Potential p, gd::GrowthRate g, gd::RegimeTag t) {
      return Built{gd::theorem_schedule(p, g, t, pol), p, g};
    };
    if (schedule == "t1-ii")
      return mk(gd::Potential::power_law(a), gd::GrowthRate::super_exp(beta),
                gd::RegimeTag::T1_II);
    if (schedule == "t1-i2a" || schedule == "t1-i2b")
      return mk(gd::Potential::power_law(a), gd::GrowthRate::poly_exp(alpha),
                gd::RegimeTag::T1_I2);
    if (schedule == "t2-ii")
      return mk(gd::Potential::log_power(b), gd::GrowthRate::super_exp(beta),
                gd::RegimeTag::T2_II);
    if (schedule == "t2-i2a" || schedule == "t2-i2b")
      return mk(gd::Potential::log_power(b), gd::GrowthRate::poly_exp(alpha),
                gd::RegimeTag::T2_I2);
    if (schedule == "t3-i2")
      return mk(gd::Potential::stretched_exp(c), gd::GrowthRate::poly_exp(alpha),
                gd::RegimeTag::T3_I2);
    if (schedule == "t3-ii")
      return mk(gd::Potential::stretched_exp(c), gd::GrowthRate::super_exp(beta),
                gd::RegimeTag::T3_II);
    if (schedule == "t3-iii")
      return mk(gd::Potential::stretched_exp(c), gd::GrowthRate::double_exp(gamma),
                gd::RegimeTag::T3_III);
    throw std::domain_error("unknown schedule: " + schedule);
  }

  void echo(gd::CsvWriter& csv) const {
    csv.comment("schedule", schedule);
    csv.comment("a", gd::format_number(a));
    csv.comment("b", gd::format_number(b));
    csv.comment("c", gd::format_number(c));
    csv.comment("alpha", gd::format_number(alpha));
    csv.comment("beta", gd::format_number(beta));
    csv.comment("gamma", gd::format_number(gamma));
    csv.comment("eps", gd::format_number(eps));
    csv.comment("lower", lower ? "1" : "0");
    csv.comment("eps_rate", gd::format_number(eps_rate));
  }
};

// Output sink honoring GAUSSDIM_OUT_DIR for relative paths.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (path.empty()) return;
    std::filesystem::path p(path);
    if (p.is_relative()) {
      if (const char* dir = std::getenv("GAUSSDIM_OUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    file_ = std::make_unique<std::ofstream>(p);
    if (!*file_) throw std::runtime_error("cannot open output file " + p.string());
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void preamble(gd::CsvWriter& csv, const std::string& command) {
  csv.comment("version", gd::kVersion);
  csv.comment("command", command);
}

int run_dimension(const std::string& pot, const std::string& gro, double d,
                  const std::string& out) {
  gd::Potential p = parse_potential(pot);
  gd::GrowthRate g = parse_growth(gro);
  gd::DimensionResult res = gd::closed_form_dimension(p, g, d);
  OutputSink sink(out);
  gd::CsvWriter csv(sink.stream());
  preamble(csv, "dimension");
  csv.comment("potential", pot);
  csv.comment("growth", gro);
  csv.comment("d", gd::format_number(d));
  csv.header({"potential", "growth", "d", "regime", "value", "requires_distortion"});
  csv.row({pot, gro, gd::CsvWriter::field(d), gd::regime_name(res.regime.tag),
           gd::CsvWriter::field(res.value), gd::CsvWriter::field(res.requires_distortion)});
  return res.value ? 0 : 2;
}

int run_sweep(const std::string& pot, const std::string& gro, double d,
              const std::string& var, double from, double to, double step,
              const std::string& out) {
  if (step <= 0.0 || to < from) throw std::domain_error("sweep: empty range");
  OutputSink sink(out);
  gd::CsvWriter csv(sink.stream());
  preamble(csv, "sweep");
  csv.comment("potential", pot);
  csv.comment("growth", gro);
  csv.comment("d", gd::format_number(d));
  csv.comment("var", var);
  csv.comment("from", gd::format_number(from));
  csv.comment("to", gd::format_number(to));
  csv.comment("step", gd::format_number(step));
  csv.header({var, "regime", "value", "requires_distortion"});

  const bool on_growth = var == "alpha" || var == "beta" || var == "gamma";
  const bool on_potential = var == "c" || var == "a" || var == "b";
  if (!on_growth && !on_potential && var != "d")
    throw std::domain_error("sweep: unknown variable " + var);

  long steps = static_cast<long>((to - from) / step + 1e-9);
  std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(steps) + 1);
  bool failed = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long i = 0; i <= steps; ++i) {
    double v = from + static_cast<double>(i) * step;
    std::string ps = pot, gs = gro;
    double dd = d;
    auto sub = [&](std::string& spec, double val) {
      spec = spec.substr(0, spec.find(':') + 1) + gd::format_number(val);
    };
    if (on_growth)
      sub(gs, v);
    else if (on_potential)
      sub(ps, v);
    else
      dd = v;
    try {
      gd::DimensionResult res =
          gd::closed_form_dimension(parse_potential(ps), parse_growth(gs), dd);
      rows[static_cast<std::size_t>(i)] = {
          gd::format_number(v), gd::regime_name(res.regime.tag),
          gd::CsvWriter::field(res.value), gd::CsvWriter::field(res.requires_distortion)};
    } catch (const std::exception&) {
      rows[static_cast<std::size_t>(i)] = {gd::format_number(v), "INVALID", "", "0"};
      failed = true;
    }
  }
  for (const auto& r : rows) csv.row(r);
  return failed ? 1 : 0;
}

int run_verify(const std::string& suite, const ScheduleOpts& sopts, bool targeted,
               double d, int n_max, const std::string& out) {
  OutputSink sink(out);
  gd::CsvWriter csv(sink.stream());
  preamble(csv, "verify");
  csv.comment("suite", suite);
  std::vector<gd::Check> checks;
  if (targeted && (suite == "lemA" || suite == "lema")) {
    // single-schedule check against its closed form
    sopts.echo(csv);
    auto built = sopts.build();
    if (!built.potential)
      throw std::domain_error("verify lemA: the benchmark schedule has no closed form");
    gd::LiminfSeries series = gd::lemA_liminf(built.schedule, d, n_max);
    double cf = *gd::closed_form_dimension(*built.potential, *built.growth, d).value;
    double rel = std::abs(series.tail_min - cf) / cf;
    checks.push_back({"lemA", built.schedule.name() + " tail vs closed form", rel <= 0.02,
                      "tail=" + gd::format_number(series.tail_min) +
                          " closed=" + gd::format_number(cf) +
                          " rel=" + gd::format_number(rel)});
  } else {
    checks = gd::verify_suite(suite);
  }
  csv.header({"suite", "check", "pass", "detail"});
  for (const auto& c : checks)
    csv.row({c.suite, c.name, gd::CsvWriter::field(c.pass), c.detail});
  return gd::all_pass(checks) ? 0 : 2;
}

int run_sample(const ScheduleOpts& sopts, int depth, std::uint64_t seed,
               const std::string& out) {
  auto built = sopts.build();
  gd::SamplePoint pt = gd::sample_word(built.schedule, depth, seed);
  std::optional<gd::ConvergenceProfile> prof;
  if (built.potential)
    prof = gd::convergence_profile(*built.potential, *built.growth, pt, depth);
  OutputSink sink(out);
  gd::CsvWriter csv(sink.stream());
  preamble(csv, "sample");
  sopts.echo(csv);
  csv.comment("depth", std::to_string(depth));
  csv.comment("seed", std::to_string(seed));
  if (prof)
    csv.comment("deviation_scale",
                prof->scale == gd::LogScale::Log ? "log" : "loglog");
  csv.header({"n", "log_s", "log_t", "log_digit", "exact_digit", "delta"});
  for (int n = 1; n <= depth; ++n) {
    std::size_t i = static_cast<std::size_t>(n - 1);
    csv.row({gd::CsvWriter::field(n),
             gd::CsvWriter::field(built.schedule.log_s(n)),
             gd::CsvWriter::field(built.schedule.log_t(n)),
             gd::CsvWriter::field(pt.log_digits[i]),
             i < pt.exact_prefix.size()
                 ? gd::CsvWriter::field(static_cast<unsigned long long>(pt.exact_prefix[i]))
                 : std::string(),
             prof ? gd::CsvWriter::field(prof->deviations[i]) : std::string()});
  }
  return 0;
}

int run_counting(double m, int n, std::optional<double> a, std::optional<double> b,
                 double eps, double d, double s, bool closed, const std::string& out) {
  if (a.has_value() == b.has_value())
    throw std::domain_error("counting: give exactly one of --a or --b");
  gd::TupleShape shape = a ? gd::TupleShape::PowerLaw : gd::TupleShape::LogPower;
  gd::TupleConstraint c{m, n, shape, a ? *a : *b, eps, closed};
  gd::WeightedSum sum = a ? gd::g_sum(c, d, s) : gd::ghat_sum(c, d, s);
  gd::BoundResult bound = a ? gd::g_bound(c, d, s) : gd::ghat_bound(c, d, s);
  OutputSink sink(out);
  gd::CsvWriter csv(sink.stream());
  preamble(csv, "counting");
  csv.comment("shape", a ? "powerlaw" : "logpower");
  csv.comment("closed_interval", closed ? "1" : "0");
  csv.header({"m", "n", "shape_param", "eps", "d", "s", "count", "sum", "bound",
              "window_low", "valid", "nodes"});
  csv.row({gd::CsvWriter::field(m), gd::CsvWriter::field(n),
           gd::CsvWriter::field(a ? *a : *b), gd::CsvWriter::field(eps),
           gd::CsvWriter::field(d), gd::CsvWriter::field(s),
           gd::CsvWriter::field(sum.count), gd::CsvWriter::field(sum.value),
           gd::CsvWriter::field(bound.value), gd::CsvWriter::field(bound.window_low),
           gd::CsvWriter::field(bound.valid), gd::CsvWriter::field(sum.stats.nodes)});
  return 0;
}

int run_root(const ScheduleOpts& sopts, double d, int depth, double tol, int every,
             const std::string& out) {
  auto built = sopts.build();
  gd::IfsSystem sys = gd::IfsSystem::affine_power_law(d);
  gd::LiminfSeries series = gd::lemA_liminf(built.schedule, d, depth);
  OutputSink sink(out);
  gd::CsvWriter csv(sink.stream());
  preamble(csv, "root");
  sopts.echo(csv);
  csv.comment("d", gd::format_number(d));
  csv.comment("depth", std::to_string(depth));
  csv.comment("tol", gd::format_number(tol));
  csv.header({"depth", "root", "lemA_partial", "gap", "above_one"});
  for (int n = every; n <= depth; n += every) {
    gd::RootResult r = gd::dimension_root(sys, built.schedule, n, tol);
    double q = series.q[static_cast<std::size_t>(n - 1)];
    csv.row({gd::CsvWriter::field(n), gd::CsvWriter::field(r.root),
             gd::CsvWriter::field(q), gd::CsvWriter::field(r.root - q),
             gd::CsvWriter::field(r.above_one)});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"level-set dimension calculator for Gauss-like systems"};
  app.set_version_flag("--version", std::string(gd::kVersion));
  app.require_subcommand(1);

  std::string pot = "power:1", gro = "superexp:2", out, var = "beta", suite;
  double d = 2.0, from = 1.01, to = 4.0, step = 0.01, tol = 1e-6;
  double cm = 10.0, cs = 1.0, ceps = 0.3;
  std::optional<double> ca, cb;
  int depth = 30, n_max = 200, cn = 2, every = 5;
  std::uint64_t seed = 1;
  bool closed = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "output file, stdout when absent");
    cmd->set_config("--config", "", "flat key=value configuration file");
  };

  CLI::App* cmd_dim = app.add_subcommand("dimension", "closed-form dimension for one pair");
  cmd_dim->add_option("--potential", pot)->required();
  cmd_dim->add_option("--growth", gro)->required();
  cmd_dim->add_option("--d", d);
  add_common(cmd_dim);

  CLI::App* cmd_sweep = app.add_subcommand("sweep", "dimension curve along one parameter");
  cmd_sweep->add_option("--potential", pot)->required();
  cmd_sweep->add_option("--growth", gro)->required();
  cmd_sweep->add_option("--d", d);
  cmd_sweep->add_option("--var", var)->required();
  cmd_sweep->add_option("--from", from)->required();
  cmd_sweep->add_option("--to", to)->required();
  cmd_sweep->add_option("--step", step)->required();
  add_common(cmd_sweep);

  ScheduleOpts vopts, sopts, ropts;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("suite", suite, "axioms|counting|lemA|covering|schedules")
      ->required();
  vopts.attach(cmd_verify);
  cmd_verify->get_option("--schedule")->required(false);
  cmd_verify->add_option("--d", d);
  cmd_verify->add_option("--nmax", n_max);
  add_common(cmd_verify);

  CLI::App* cmd_sample = app.add_subcommand("sample", "sample digits and deviations");
  sopts.attach(cmd_sample);
  cmd_sample->add_option("--depth", depth);
  cmd_sample->add_option("--seed", seed);
  add_common(cmd_sample);

  CLI::App* cmd_count = app.add_subcommand("counting", "window sums and bounds");
  cmd_count->add_option("--m", cm)->required();
  cmd_count->add_option("--n", cn)->required();
  cmd_count->add_option("--a", ca);
  cmd_count->add_option("--b", cb);
  cmd_count->add_option("--eps", ceps)->required();
  cmd_count->add_option("--d", d);
  cmd_count->add_option("--s", cs)->required();
  cmd_count->add_flag("--closed", closed, "use the closed window [m, m(1+eps)]");
  add_common(cmd_count);

  CLI::App* cmd_root = app.add_subcommand("root", "covering-sum dimension roots");
  ropts.attach(cmd_root);
  cmd_root->add_option("--d", d);
  cmd_root->add_option("--depth", depth);
  cmd_root->add_option("--tol", tol);
  cmd_root->add_option("--every", every, "emit a row every k depths");
  add_common(cmd_root);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(cmd_dim)) return run_dimension(pot, gro, d, out);
    if (app.got_subcommand(cmd_sweep))
      return run_sweep(pot, gro, d, var, from, to, step, out);
    if (app.got_subcommand(cmd_verify))
      return run_verify(suite, vopts, cmd_verify->count("--schedule") > 0, d, n_max, out);
    if (app.got_subcommand(cmd_sample)) return run_sample(sopts, depth, seed, out);
    if (app.got_subcommand(cmd_count))
      return run_counting(cm, cn, ca, cb, ceps, d, cs, closed, out);
    if (app.got_subcommand(cmd_root)) return run_root(ropts, d, depth, tol, every, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
