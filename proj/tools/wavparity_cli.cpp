// Command-line front end: run the parity experiment, inspect intermediate
// stages, plot scores and sweep configurations.

#include <openssl/evp.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavparity/wavparity.hpp"

namespace fs = std::filesystem;
using namespace wavparity;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw IoError("sha256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("write failed for " + path.string());
}

// Options shared by subcommands that build a RunConfig. Values stay strings
// so a flag is applied only when given and overrides the config file.
struct ConfigFlags {
  std::map<std::string, std::string> values;
  bool include_approx = false;
  std::vector<std::pair<std::string, CLI::Option*>> options;
  CLI::Option* include_approx_opt = nullptr;

  void add(CLI::App* app, const std::string& key, const std::string& help) {
    const std::string flag = "--" + key;
    options.emplace_back(key, app->add_option(flag, values[key], help));
  }

  void apply(RunConfig& config) const {
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) apply_setting(config, key, values.at(key));
    }
    if (include_approx_opt != nullptr && include_approx_opt->count() > 0) {
      config.include_approx = include_approx;
    }
  }
};

void add_pipeline_flags(CLI::App* app, ConfigFlags& flags, bool full) {
  flags.add(app, "range", "Inclusive integer range START:END (default 0:10000)");
  flags.add(app, "wavelet", "Filter bank: haar or db4 (default haar)");
  flags.add(app, "levels", "Decomposition depth J (default 3)");
  flags.add(app, "bit-order", "lsb_first or msb_first (default lsb_first)");
  flags.include_approx_opt =
      app->add_flag("--include-approx", flags.include_approx,
                    "Add the final approximation as an extra feature level");
  if (!full) return;
  flags.add(app, "weights", "Comma-separated level weights (default 1.0,1.1,1.2,...)");
  flags.add(app, "threshold", "Decision threshold on the oddness score (default 0.5)");
  flags.add(app, "tolerance", "k-means centroid tolerance (default 1e-9)");
  flags.add(app, "max-iterations", "k-means iteration cap (default 300)");
  flags.add(app, "init", "k-means initialization: minmax or random[:SEED] (default minmax)");
  flags.add(app, "bucket-size", "Magnitude bucket width for error analysis (default 1000)");
  flags.add(app, "band", "Half-width of the boundary band around 0.5 (default 0.05)");
}

struct Globals {
  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
};

RunConfig load_config(const Globals& g, const ConfigFlags& flags) {
  RunConfig config;
  if (!g.config_path.empty()) config = parse_run_config(read_file(g.config_path));
  flags.apply(config);
  if (g.seed_opt != nullptr && g.seed_opt->count() > 0) config.kmeans.seed = g.seed;
  config.validate();
  return config;
}

ordered_json artifact(const std::string& kind, const fs::path& path, const std::string& content) {
  ordered_json j;
  j["kind"] = kind;
  j["path"] = path.filename().string();
  j["sha256"] = sha256_hex(content);
  return j;
}

std::vector<ScoreRow> rows_in_range(const std::vector<ScoreRow>& rows, std::uint64_t lo,
                                    std::uint64_t hi) {
  std::vector<ScoreRow> out;
  for (const auto& r : rows) {
    if (r.n >= lo && r.n <= hi) out.push_back(r);
  }
  return out;
}

int cmd_run(const Globals& g, const ConfigFlags& flags, bool emit_svg, const std::string& plot_range) {
  const RunConfig config = load_config(g, flags);
  const auto [plot_lo, plot_hi] = parse_range(plot_range);
  const auto result = run_pipeline(config);
  const auto report = evaluate(result, config);

  const fs::path out_dir = g.out_dir;
  const fs::path scores_path = out_dir / "scores.csv";
  const fs::path svg_path = out_dir / "scatter.svg";
  const fs::path report_path = out_dir / "report.json";

  const std::string scores = scores_csv(result);
  write_file(scores_path, scores);

  ordered_json artifacts = ordered_json::array();
  artifacts.push_back(artifact("scores_csv", scores_path, scores));
  if (emit_svg) {
    const auto rows = rows_in_range(parse_scores_csv(scores), plot_lo, plot_hi);
    const std::string svg = scatter_svg(rows, ScatterStyle{.threshold = config.threshold});
    write_file(svg_path, svg);
    artifacts.push_back(artifact("scatter_svg", svg_path, svg));
  }

  auto json = to_json(report);
  json["artifacts"] = artifacts;
  write_file(report_path, json.dump(2) + "\n");

  std::cout << "accuracy: " << format_double(report.overall_accuracy) << "\n"
            << "delta_to_reference: " << format_double(report.delta_to_reference()) << "\n"
            << "report: " << report_path.string() << "\n";
  return 0;
}

int cmd_encode(std::uint64_t n, std::size_t length, const std::string& order) {
  const std::size_t len = length == 0 ? pad_length(n) : length;
  const auto signal = encode(n, len, parse_bit_order(order));
  std::string line;
  for (std::size_t i = 0; i < signal.length(); ++i) {
    if (i) line += ',';
    line += signal.samples[i] == 1.0 ? '1' : '0';
  }
  std::cout << line << "\n";
  return 0;
}

int cmd_dwt(std::uint64_t n, const std::string& wavelet, std::size_t levels, std::size_t length,
            const std::string& order) {
  const std::size_t len =
      length != 0 ? length : std::max(pad_length(n), levels < 63 ? std::size_t{1} << levels : 0);
  const auto signal = encode(n, len, parse_bit_order(order));
  const auto decomp = wavedec(signal.samples, filter_by_name(wavelet), levels);
  std::cout << coefficients_csv(decomp);
  return 0;
}

int cmd_features(const Globals& g, const ConfigFlags& flags, const std::string& out) {
  const RunConfig config = load_config(g, flags);
  const auto decomps =
      decompose_range(config.range_start, config.range_end, config.signal_length(),
                      filter_by_name(config.wavelet), config.num_levels, config.bit_order);
  const auto tensor = build_feature_tensor(decomps, config.include_approx);
  const auto dataset = make_dataset(config.range_start, config.range_end);
  const std::string csv = features_csv(dataset.integers, tensor);
  if (out.empty()) {
    std::cout << csv;
  } else {
    write_file(out, csv);
  }
  return 0;
}

int cmd_plot(const Globals& g, const std::string& csv_path, const std::string& range,
             const std::string& out) {
  auto rows = parse_scores_csv(read_file(csv_path));
  if (!range.empty()) {
    const auto [lo, hi] = parse_range(range);
    rows = rows_in_range(rows, lo, hi);
  }
  const fs::path path = out.empty() ? fs::path(g.out_dir) / "scatter.svg" : fs::path(out);
  const std::string svg = scatter_svg(rows);
  write_file(path, svg);
  std::cout << "points: " << rows.size() << "\n"
            << "svg: " << path.string() << "\n"
            << "sha256: " << sha256_hex(svg) << "\n";
  return 0;
}

// Grid file: same flat format as configs. The axis keys wavelet, bit_order,
// include_approx and levels take comma-separated lists; weights takes a
// '|'-separated list of comma-separated vectors, where "default" selects the
// per-level defaults. Every other key sets the base config.
SweepGrid parse_grid(const std::string& text, RunConfig& base) {
  SweepGrid grid;
  for (auto [key, value] : parse_key_values(text)) {
    std::replace(key.begin(), key.end(), '-', '_');
    if (key == "wavelet") {
      grid.wavelets = detail::split(value, ',');
    } else if (key == "bit_order") {
      for (const auto& v : detail::split(value, ',')) grid.bit_orders.push_back(parse_bit_order(v));
    } else if (key == "include_approx") {
      for (const auto& v : detail::split(value, ',')) {
        grid.include_approx.push_back(detail::parse_bool(key, v));
      }
    } else if (key == "levels" || key == "num_levels") {
      for (const auto& v : detail::split(value, ',')) {
        grid.num_levels.push_back(detail::parse_number<std::size_t>(key, v));
      }
    } else if (key == "weights") {
      for (const auto& v : detail::split(value, '|')) {
        grid.weights.push_back(v == "default" ? std::vector<double>{} : parse_weights(v));
      }
    } else {
      apply_setting(base, key, value);
    }
  }
  return grid;
}

int cmd_sweep(const Globals& g, const ConfigFlags& flags, const std::string& grid_path) {
  RunConfig base = load_config(g, flags);
  SweepGrid grid = grid_path.empty() ? default_sweep_grid(base) : parse_grid(read_file(grid_path), base);
  flags.apply(base);
  base.validate();

  const auto entries = sweep(base, grid);
  const fs::path path = fs::path(g.out_dir) / "sweep.json";
  const std::string json = to_json(entries).dump(2) + "\n";
  write_file(path, json);

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    std::cout << i + 1 << ". " << config_key(e.config) << "  ";
    if (e.ok()) {
      std::cout << "accuracy " << format_double(e.report->overall_accuracy) << "\n";
    } else {
      std::cout << "failed: " << e.error << "\n";
    }
  }
  std::cout << "sweep: " << path.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unsupervised parity detection from wavelet features of binary expansions"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config_path, "Flat key = value config file; flags override it");
  app.add_option("--out-dir", g.out_dir, "Directory for generated artifacts (default .)");
  g.seed_opt = app.add_option("--seed", g.seed, "Seed used when --init random is selected");

  auto* run = app.add_subcommand("run", "Run the full pipeline and write scores, report and plot");
  ConfigFlags run_flags;
  add_pipeline_flags(run, run_flags, true);
  bool no_svg = false;
  std::string plot_range = "0:1000";
  run->add_flag("--no-svg", no_svg, "Skip the scatter plot");
  run->add_option("--plot-range", plot_range, "Integer range drawn in scatter.svg (default 0:1000)");

  auto* enc = app.add_subcommand("encode", "Print the binary sample sequence of an integer");
  std::uint64_t enc_n = 0;
  std::size_t enc_len = 0;
  std::string enc_order = "lsb_first";
  enc->add_option("n", enc_n, "Nonnegative integer")->required();
  enc->add_option("--length", enc_len, "Power-of-two sample count (default: minimal)");
  enc->add_option("--bit-order", enc_order, "lsb_first or msb_first");

  auto* dwt = app.add_subcommand("dwt", "Print multilevel wavelet coefficients as CSV");
  std::uint64_t dwt_n = 0;
  std::string dwt_wavelet = "haar";
  std::size_t dwt_levels = 3;
  std::size_t dwt_len = 0;
  std::string dwt_order = "lsb_first";
  dwt->add_option("n", dwt_n, "Nonnegative integer")->required();
  dwt->add_option("--wavelet", dwt_wavelet, "haar or db4");
  dwt->add_option("--levels", dwt_levels, "Decomposition depth");
  dwt->add_option("--length", dwt_len, "Signal length (default: smallest that fits n and depth)");
  dwt->add_option("--bit-order", dwt_order, "lsb_first or msb_first");

  auto* feat = app.add_subcommand("features", "Print the per-level feature table as CSV");
  ConfigFlags feat_flags;
  add_pipeline_flags(feat, feat_flags, false);
  std::string feat_out;
  feat->add_option("--out", feat_out, "Write to this file instead of standard output");

  auto* plot = app.add_subcommand("plot", "Render a scores CSV as an SVG scatter plot");
  std::string plot_csv;
  std::string plot_only;
  std::string plot_out;
  plot->add_option("scores_csv", plot_csv, "Scores CSV produced by run")->required();
  plot->add_option("--range", plot_only, "Only plot integers in START:END");
  plot->add_option("--out", plot_out, "Output SVG path (default <out-dir>/scatter.svg)");

  auto* sw = app.add_subcommand("sweep", "Run the pipeline over a configuration grid and rank it");
  ConfigFlags sweep_flags;
  add_pipeline_flags(sw, sweep_flags, true);
  std::string grid_path;
  sw->add_option("grid", grid_path, "Grid file (default: bit order x approx x weights x wavelet)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return cmd_run(g, run_flags, !no_svg, plot_range);
    if (*enc) return cmd_encode(enc_n, enc_len, enc_order);
    if (*dwt) return cmd_dwt(dwt_n, dwt_wavelet, dwt_levels, dwt_len, dwt_order);
    if (*feat) return cmd_features(g, feat_flags, feat_out);
    if (*plot) return cmd_plot(g, plot_csv, plot_only, plot_out);
    if (*sw) return cmd_sweep(g, sweep_flags, grid_path);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
