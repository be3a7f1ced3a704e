#include "esdmem/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>

#include "esdmem/csv.hpp"
#include "esdmem/errors.hpp"
#include "esdmem/esd.hpp"
#include "esdmem/validation.hpp"

namespace esdmem::cli {

namespace {

using std::numbers::pi;

struct RunConfig {
  std::string code = "dfs4";
  std::string channel = "dephasing";
  std::string metric = "neg:1";
  std::string a = "0";
  std::string b = "0";
  std::string p = "0";
  std::string out;
  std::string out_dir = ".";
  int figure = 0;
  int jobs = 0;
  int a_points = 64;
  int p_points = 256;
  std::uint64_t seed = 1;
};

// Writes to --out when given, otherwise to the command's standard output.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ArgumentError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

double single_value(const std::string& text, const char* flag) {
  const auto grid = parse_grid(text);
  if (grid.size() != 1) throw ArgumentError(std::string(flag) + " takes a single value");
  return grid.front();
}

int cmd_fidelity(const RunConfig& cfg, std::ostream& out) {
  const LogicalCode code = LogicalCode::make(parse_code_name(cfg.code));
  const NoiseModel noise = parse_noise_model(cfg.channel);
  const StoredQubit q{single_value(cfg.a, "--a"), single_value(cfg.b, "--b")};
  const double p = single_value(cfg.p, "--p");
  const double simulated = reference_fidelity(code, evolve(code, noise, q, p), q);

  const bool has_closed_form = (code.name() == CodeName::dfs4 || code.name() == CodeName::ns3) &&
                               noise.scope == NoiseScope::independent;
  out << "simulated=" << format_number(simulated);
  if (has_closed_form) {
    const double closed = closed_form_fidelity(code.name(), noise.kind, q, p);
    out << " closed_form=" << format_number(closed)
        << " |diff|=" << format_number(std::abs(simulated - closed));
  } else {
    out << " closed_form=n/a |diff|=n/a";
  }
  out << '\n';
  return kSuccess;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  SweepSpec spec;
  spec.code = parse_code_name(cfg.code);
  spec.noise = parse_noise_model(cfg.channel);
  spec.metric = MetricId::parse(cfg.metric);
  spec.a_grid = parse_grid(cfg.a);
  spec.b_grid = parse_grid(cfg.b);
  spec.p_grid = parse_grid(cfg.p);
  const auto rows = sweep(spec, cfg.jobs);
  Sink sink(cfg.out, out);
  write_sweep_csv(sink.stream(), rows, spec.metric);
  return kSuccess;
}

int cmd_threshold(const RunConfig& cfg, std::ostream& out) {
  const LogicalCode code = LogicalCode::make(parse_code_name(cfg.code));
  const NoiseModel noise = parse_noise_model(cfg.channel);
  const MetricId metric = MetricId::parse(cfg.metric);
  const StoredQubit q{single_value(cfg.a, "--a"), single_value(cfg.b, "--b")};
  const ThresholdResult r = esd_threshold(code, noise, q, metric);
  std::optional<double> fidelity;
  if (r.status == ThresholdStatus::crossing) {
    fidelity = reference_fidelity(code, evolve(code, noise, q, r.p_star), q);
  }
  Sink sink(cfg.out, out);
  write_threshold(sink.stream(), r, fidelity);
  return kSuccess;
}

int cmd_contour(const RunConfig& cfg, std::ostream& out) {
  const LogicalCode code = LogicalCode::make(parse_code_name(cfg.code));
  const auto points = zero_contour(code, parse_noise_model(cfg.channel), MetricId::parse(cfg.metric),
                                   single_value(cfg.b, "--b"), parse_grid(cfg.a), cfg.jobs);
  Sink sink(cfg.out, out);
  write_contour_csv(sink.stream(), points);
  return kSuccess;
}

struct FigureWriter {
  std::filesystem::path dir;
  int figure;
  std::ostream& log;

  std::ofstream open(const std::string& panel) {
    const auto path = dir / ("fig" + std::to_string(figure) + "_" + panel + ".csv");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ArgumentError("cannot write '" + path.string() + "'");
    log << path.string() << '\n';
    return f;
  }
};

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
  if (cfg.figure < 1 || cfg.figure > 3) throw ArgumentError("--figure must be 1, 2 or 3");
  if (cfg.a_points < 2 || cfg.p_points < 2) throw ArgumentError("grids need at least two points");
  std::filesystem::create_directories(cfg.out_dir);
  FigureWriter writer{cfg.out_dir, cfg.figure, out};

  const auto a_grid = linspace(0.0, pi / 2.0, cfg.a_points);
  const auto p_grid = linspace(0.0, 1.0, cfg.p_points);
  const NoiseModel noise{cfg.figure == 1 ? NoiseKind::dephasing : NoiseKind::depolarizing,
                         NoiseScope::independent};
  const CodeName code_name = cfg.figure == 3 ? CodeName::ns3 : CodeName::dfs4;
  const LogicalCode code = LogicalCode::make(code_name);

  auto surface = [&](const std::string& panel, const MetricId& metric, std::vector<double> b_grid) {
    auto f = writer.open(panel);
    write_sweep_csv(f, sweep({code_name, noise, metric, a_grid, std::move(b_grid), p_grid}, cfg.jobs),
                    metric);
  };
  auto contours = [&](const std::string& panel, const std::vector<MetricId>& metrics,
                      const std::vector<double>& b_values) {
    auto f = writer.open(panel);
    bool header = true;
    for (const auto& metric : metrics) {
      for (const double b : b_values) {
        write_contour_csv(f, zero_contour(code, noise, metric, b, a_grid, cfg.jobs), metric, header);
        header = false;
      }
    }
  };

  if (cfg.figure == 3) {
    surface("fidelity", MetricId::stored_fidelity(), {0.0});
    surface("neg3", MetricId::negativity({3}), {0.0});
    surface("conc12", MetricId::concurrence(1, 2), {0.0});
    contours("thresholds",
             {MetricId::concurrence(1, 2), MetricId::concurrence(1, 3), MetricId::negativity({3}),
              MetricId::negativity({1})},
             {0.0});
  } else {
    surface("neg1", MetricId::negativity({1}), {0.0});
    surface("neg12", MetricId::negativity({1, 2}), {0.0});
    contours("concurrence",
             {MetricId::concurrence(1, 2), MetricId::concurrence(1, 3), MetricId::concurrence(1, 4)},
             {pi / 2.0, pi / 3.0, 0.0});
    surface("n3", MetricId::n3(), {0.0, pi / 2.0});
    surface("fidelity", MetricId::state_fidelity(), {0.0});
  }
  return kSuccess;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  ValidationOptions options;
  options.seed = cfg.seed;
  options.jobs = cfg.jobs;
  return print_report(out, run_validation(options)) ? kSuccess : kValidationFailure;
}

}  // namespace

double parse_angle(std::string_view text) {
  if (text == "pi") return pi;
  if (text == "2pi") return 2.0 * pi;
  if (text == "pi/2") return pi / 2.0;
  if (text == "pi/3") return pi / 3.0;
  if (text == "pi/4") return pi / 4.0;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ArgumentError("cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_grid(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) return {parse_angle(text)};
  const auto second = text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw ArgumentError("grid must be start:stop:count, got '" + std::string(text) + "'");
  }
  const double start = parse_angle(text.substr(0, first));
  const double stop = parse_angle(text.substr(first + 1, second - first - 1));
  const std::string_view count_text = text.substr(second + 1);
  int count = 0;
  const auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
  if (ec != std::errc{} || ptr != count_text.data() + count_text.size() || count < 2) {
    throw ArgumentError("grid count must be an integer >= 2, got '" + std::string(count_text) + "'");
  }
  if (!(stop > start)) throw ArgumentError("grid stop must exceed start");
  return linspace(start, stop, count);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement sudden death in protected quantum memories", "esdmem"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--code", cfg.code, "dfs4 | ns3 | dfs2 | parity-ns2")->capture_default_str();
    sub->add_option("--channel", cfg.channel, "dephasing | depolarizing | collective-depolarizing")
        ->capture_default_str();
  };
  auto add_jobs = [&cfg](CLI::App* sub) {
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = hardware concurrency)");
  };

  auto* fidelity = app.add_subcommand("fidelity", "simulated vs closed-form fidelity at one point");
  add_common(fidelity);
  fidelity->add_option("--a", cfg.a, "state angle a");
  fidelity->add_option("--b", cfg.b, "relative phase b");
  fidelity->add_option("--p", cfg.p, "decoherence strength");

  auto* sweep_cmd = app.add_subcommand("sweep", "metric over an (a, b, p) grid as CSV");
  add_common(sweep_cmd);
  add_jobs(sweep_cmd);
  sweep_cmd->add_option("--metric", cfg.metric, "neg:<i>[,<j>..] | conc:<i>,<j> | n3[:trace<k>] | fid | sfid");
  sweep_cmd->add_option("--a", cfg.a, "grid start:stop:count or value");
  sweep_cmd->add_option("--b", cfg.b, "grid start:stop:count or value");
  sweep_cmd->add_option("--p", cfg.p, "grid start:stop:count or value");
  sweep_cmd->add_option("--out", cfg.out, "output path (default stdout)");

  auto* threshold = app.add_subcommand("threshold", "locate the ESD point of one metric");
  add_common(threshold);
  threshold->add_option("--metric", cfg.metric, "entanglement metric");
  threshold->add_option("--a", cfg.a, "state angle a");
  threshold->add_option("--b", cfg.b, "relative phase b");
  threshold->add_option("--out", cfg.out, "output path (default stdout)");

  auto* contour = app.add_subcommand("contour", "ESD point for every a at fixed b");
  add_common(contour);
  add_jobs(contour);
  contour->add_option("--metric", cfg.metric, "entanglement metric");
  contour->add_option("--a", cfg.a, "a grid (default 0:pi/2:64)");
  contour->add_option("--b", cfg.b, "relative phase b");
  contour->add_option("--out", cfg.out, "output path (default stdout)");

  auto* reproduce = app.add_subcommand("reproduce", "write the CSV panels of a figure");
  add_jobs(reproduce);
  reproduce->add_option("--figure", cfg.figure, "1 (DFS4 dephasing), 2 (DFS4 depolarizing), 3 (NS3 depolarizing)")
      ->required();
  reproduce->add_option("--out-dir", cfg.out_dir, "directory for fig<k>_<panel>.csv")->capture_default_str();
  reproduce->add_option("--a-points", cfg.a_points, "points on the a axis")->capture_default_str();
  reproduce->add_option("--p-points", cfg.p_points, "points on the p axis")->capture_default_str();

  auto* validate = app.add_subcommand("validate", "run the built-in oracle suites");
  add_jobs(validate);
  validate->add_option("--seed", cfg.seed, "seed for randomized cases")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kArgumentError;
  }

  // Subcommand-specific defaults that differ from the shared RunConfig defaults.
  if (sweep_cmd->parsed()) {
    if (sweep_cmd->count("--a") == 0) cfg.a = "0:pi/2:64";
    if (sweep_cmd->count("--p") == 0) cfg.p = "0:1:256";
  }
  if (contour->parsed() && contour->count("--a") == 0) cfg.a = "0:pi/2:64";

  try {
    if (fidelity->parsed()) return cmd_fidelity(cfg, out);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, out);
    if (threshold->parsed()) return cmd_threshold(cfg, out);
    if (contour->parsed()) return cmd_contour(cfg, out);
    if (reproduce->parsed()) return cmd_reproduce(cfg, out);
    if (validate->parsed()) return cmd_validate(cfg, out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kArgumentError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const NoThresholdError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kArgumentError;
}

}  // namespace esdmem::cli
