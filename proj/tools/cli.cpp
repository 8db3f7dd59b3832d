#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gridspectra/closed_form.hpp"
#include "gridspectra/error.hpp"
#include "gridspectra/oracle.hpp"
#include "gridspectra/shift_solver.hpp"

namespace gridspectra::cli {

namespace {

using nlohmann::json;

template <typename T>
std::vector<T> parse_list(std::string_view text, std::string_view flag) {
  std::vector<T> values;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto token = text.substr(start, end - start);
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw DomainError(std::string(flag) + ": cannot parse '" + std::string(text) + "'");
    }
    values.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  return values;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(';');
    out += std::to_string(values[i]);
  }
  return out;
}

std::string join_reals(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(';');
    out += format_real(values[i]);
  }
  return out;
}

json spec_json(const GridSpec& spec) { return json{{"dims", spec.dims()}, {"weights", spec.weights()}}; }

GridSpec make_spec(const CliConfig& config) {
  auto weights = config.weights;
  if (weights.empty()) weights.assign(config.dims.size(), 1.0);
  if (weights.size() != config.dims.size()) {
    throw DomainError("--weights: expected " + std::to_string(config.dims.size()) + " values, got " +
                      std::to_string(weights.size()));
  }
  return GridSpec(config.dims, std::move(weights));
}

SpectrumOptions spectrum_options(const CliConfig& config) {
  SpectrumOptions options;
  options.threads = config.threads;
  return options;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

std::string run_spectrum(const CliConfig& config) {
  const auto spec = make_spec(config);
  const auto entries = analytic_spectrum(spec, config.kind, spectrum_options(config));
  SpectrumSummary summary{spec, config.kind, {}, 0.0, 0.0};
  for (const auto& e : entries) summary.values.push_back(e.lambda);
  std::sort(summary.values.begin(), summary.values.end());
  summary.fiedler = summary.values.at(1);
  summary.max = summary.values.back();
  if (config.format == OutputFormat::Json) return render(spectrum_to_json(summary, entries));
  std::ostringstream os;
  write_spectrum_csv(os, entries);
  return os.str();
}

std::string run_eigenvector(const CliConfig& config) {
  const auto spec = make_spec(config);
  if (config.z.empty()) throw DomainError("--z: eigen index required");
  const auto z = parse_eigen_index(config.z);
  if (!is_canonical(z, spec)) throw DomainError("--z: index [" + config.z + "] is not canonical for the grid");
  const auto pair = eigenpair(spec, config.kind, z, config.normalize);
  if (config.format == OutputFormat::Json) {
    json doc{{"spec", spec_json(spec)},
             {"kind", to_string(config.kind)},
             {"z", z.z},
             {"lambda", pair.lambda},
             {"vector", pair.vector}};
    if (pair.shifts) doc["delta"] = pair.shifts->deltas;
    return render(doc);
  }
  std::ostringstream os;
  os << "node,x,value\n";
  for (std::size_t i = 0; i < pair.vector.size(); ++i) {
    os << i + 1 << ',' << join_ints(node_vector_from_id(i + 1, spec).coords) << ',' << format_real(pair.vector[i])
       << '\n';
  }
  return os.str();
}

struct VerifyOutcome {
  std::string text;
  bool pass = false;
};

VerifyOutcome run_verify(const CliConfig& config) {
  const auto spec = make_spec(config);
  const auto options = spectrum_options(config);
  std::optional<SpectrumComparison> comparison;
  if (spec.node_count() <= config.dense_cap) {
    comparison = spectrum_compare(spec, config.kind, config.tol, config.dense_cap, options);
  }
  const auto entries = analytic_spectrum(spec, config.kind, options);
  double max_residual = 0.0;
  for (const auto& e : entries) {
    EigenPair pair{config.kind, e.z, e.lambda, {}, e.shifts};
    switch (config.kind) {
      case LaplacianKind::Combinatorial: pair.vector = comb_eigenvector(e.z, spec, true); break;
      case LaplacianKind::Unoriented: pair.vector = unoriented_eigenvector(e.z, spec, true); break;
      case LaplacianKind::Normalized: pair.vector = normalized_eigenvector(e.z, *e.shifts, spec, true); break;
      case LaplacianKind::RandomWalk: pair.vector = randomwalk_eigenvector(e.z, *e.shifts, spec, true); break;
    }
    max_residual = std::max(max_residual, residual_norm(spec, config.kind, pair));
  }
  const bool residual_ok = max_residual <= config.tol;
  const bool spectrum_ok = !comparison || comparison->pass;
  VerifyOutcome outcome{{}, residual_ok && spectrum_ok};

  if (config.format == OutputFormat::Json) {
    json doc{{"spec", spec_json(spec)},
             {"kind", to_string(config.kind)},
             {"tolerance", config.tol},
             {"max_residual", max_residual},
             {"pass", outcome.pass}};
    doc["max_deviation"] = comparison ? json(comparison->max_deviation) : json(nullptr);
    outcome.text = render(doc);
  } else {
    std::ostringstream os;
    os << "check,value,tolerance,pass\n";
    if (comparison) {
      os << "spectrum_deviation," << format_real(comparison->max_deviation) << ',' << format_real(config.tol) << ','
         << (comparison->pass ? "true" : "false") << '\n';
    }
    os << "max_residual," << format_real(max_residual) << ',' << format_real(config.tol) << ','
       << (residual_ok ? "true" : "false") << '\n';
    outcome.text = os.str();
  }
  return outcome;
}

std::string run_analyze(const CliConfig& config) {
  const auto spec = make_spec(config);
  const auto summary = full_spectrum(spec, config.kind, spectrum_options(config));
  const double range = config.range.value_or(default_range(spec, config.kind));
  const auto report = analyze_distribution(summary.values, config.bins, range);
  const double width = range / static_cast<double>(report.bins.size());
  if (config.format == OutputFormat::Json) {
    json bins = json::array();
    for (std::size_t b = 0; b < report.bins.size(); ++b) {
      bins.push_back({{"lo", width * static_cast<double>(b)}, {"hi", width * static_cast<double>(b + 1)},
                      {"count", report.bins[b]}});
    }
    json cdf = json::array();
    for (const auto& p : report.cdf) cdf.push_back({{"value", p.value}, {"fraction", p.fraction}});
    return render(json{{"spec", spec_json(spec)},
                       {"kind", to_string(config.kind)},
                       {"range", range},
                       {"histogram", bins},
                       {"cdf", cdf},
                       {"ks_statistic", report.ks_statistic},
                       {"summary", {{"fiedler", summary.fiedler}, {"max", summary.max}}}});
  }
  std::ostringstream os;
  os << "section,x,y\n";
  for (std::size_t b = 0; b < report.bins.size(); ++b) {
    os << "histogram," << format_real(width * static_cast<double>(b)) << ',' << report.bins[b] << '\n';
  }
  for (const auto& p : report.cdf) os << "cdf," << format_real(p.value) << ',' << format_real(p.fraction) << '\n';
  os << "ks_statistic,," << format_real(report.ks_statistic) << '\n';
  os << "fiedler,," << format_real(summary.fiedler) << '\n';
  os << "max,," << format_real(summary.max) << '\n';
  return os.str();
}

std::string run_limit_cdf(const CliConfig& config) {
  const auto samples = limit_cdf_combinatorial(config.d, config.resolution);
  if (config.format == OutputFormat::Json) {
    json points = json::array();
    for (const auto& p : samples) points.push_back({{"value", p.value}, {"fraction", p.fraction}});
    return render(json{{"d", config.d}, {"resolution", config.resolution}, {"cdf", points}});
  }
  std::ostringstream os;
  os << "value,fraction\n";
  for (const auto& p : samples) os << format_real(p.value) << ',' << format_real(p.fraction) << '\n';
  return os.str();
}

void add_grid_options(CLI::App* sub, std::string& dims, std::string& weights, std::string& kind) {
  sub->add_option("--dims", dims, "Layer counts per dimension, comma separated")->required();
  sub->add_option("--weights", weights, "Direction weights, comma separated (default all 1)");
  sub->add_option("--laplacian", kind, "combinatorial | unoriented | normalized | random-walk")
      ->default_val("combinatorial");
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text, std::string_view flag) { return parse_list<int>(text, flag); }

std::vector<double> parse_real_list(std::string_view text, std::string_view flag) {
  return parse_list<double>(text, flag);
}

unsigned threads_from_environment() {
  const char* value = std::getenv("GRIDSPECTRA_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  const std::string_view text(value);
  unsigned threads = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), threads);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw DomainError("GRIDSPECTRA_THREADS: expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return threads;
}

std::string format_real(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  return std::string(buffer, ptr);
}

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumEntry>& entries) {
  os << "index,z,lambda,delta\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    os << i << ',' << join_ints(e.z.z) << ',' << format_real(e.lambda) << ',';
    if (e.shifts) os << join_reals(e.shifts->deltas);
    os << '\n';
  }
}

json spectrum_to_json(const SpectrumSummary& summary, const std::vector<SpectrumEntry>& entries) {
  json eigenvalues = json::array();
  for (const auto& e : entries) {
    json item{{"z", e.z.z}, {"lambda", e.lambda}};
    if (e.shifts) item["delta"] = e.shifts->deltas;
    eigenvalues.push_back(std::move(item));
  }
  return json{{"spec", spec_json(summary.spec)},
              {"kind", to_string(summary.kind)},
              {"eigenvalues", std::move(eigenvalues)},
              {"summary", {{"fiedler", summary.fiedler}, {"max", summary.max}}}};
}

SpectrumSummary summary_from_json(const json& doc) {
  GridSpec spec(doc.at("spec").at("dims").get<std::vector<int>>(),
                doc.at("spec").at("weights").get<std::vector<double>>());
  SpectrumSummary summary{std::move(spec), parse_laplacian_kind(doc.at("kind").get<std::string>()), {}, 0.0, 0.0};
  for (const auto& item : doc.at("eigenvalues")) summary.values.push_back(item.at("lambda").get<double>());
  std::sort(summary.values.begin(), summary.values.end());
  summary.fiedler = doc.at("summary").at("fiedler").get<double>();
  summary.max = doc.at("summary").at("max").get<double>();
  return summary;
}

void write_file_atomically(const std::string& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open '" + temp.string() + "' for writing");
    file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!file) throw std::runtime_error("failed writing '" + temp.string() + "'");
  }
  fs::rename(temp, target);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analytic eigensystems of weighted grid-graph Laplacians"};
  app.require_subcommand(1);

  CliConfig config;
  std::string dims, weights, kind = "combinatorial", format = "csv", z;
  std::optional<std::string> out_path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv | json")->default_val("csv");
    sub->add_option("--out", out_path, "Output file (default: standard output)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "All eigenvalues (with shifts for normalized kinds)");
  add_grid_options(spectrum, dims, weights, kind);
  common(spectrum);

  auto* eigenvector = app.add_subcommand("eigenvector", "One eigenvalue and its eigenvector");
  add_grid_options(eigenvector, dims, weights, kind);
  eigenvector->add_option("--z", config.z, "Eigen index, e.g. 1;2")->required();
  eigenvector->add_flag("--normalize", config.normalize, "Scale the eigenvector to unit length");
  common(eigenvector);

  auto* verify = app.add_subcommand("verify", "Compare against the dense oracle and check residuals");
  add_grid_options(verify, dims, weights, kind);
  verify->add_option("--tol", config.tol, "Tolerance")->default_val(1e-8);
  verify->add_option("--dense-cap", config.dense_cap, "Largest grid for the dense comparison")
      ->default_val(kDefaultDenseCap);
  common(verify);

  auto* analyze = app.add_subcommand("analyze", "Histogram, empirical CDF and uniformity statistic");
  add_grid_options(analyze, dims, weights, kind);
  analyze->add_option("--bins", config.bins, "Histogram bins")->default_val(50);
  analyze->add_option("--range", config.range, "Histogram / uniform range (default per kind)");
  common(analyze);

  auto* limit = app.add_subcommand("limit-cdf", "Limiting eigenvalue CDF of the combinatorial Laplacian");
  limit->add_option("--d", config.d, "Grid dimension")->default_val(1);
  limit->add_option("--resolution", config.resolution, "Quadrature nodes per axis")->default_val(256);
  common(limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Validation);
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    if (format == "csv") {
      config.format = OutputFormat::Csv;
    } else if (format == "json") {
      config.format = OutputFormat::Json;
    } else {
      throw DomainError("--format: expected csv or json, got '" + format + "'");
    }
    if (config.command != "limit-cdf") {
      config.dims = parse_int_list(dims, "--dims");
      if (!weights.empty()) config.weights = parse_real_list(weights, "--weights");
      config.kind = parse_laplacian_kind(kind);
    }
    if (!(config.tol > 0.0)) throw DomainError("--tol: must be positive");
    if (config.bins < 1) throw DomainError("--bins: must be at least 1");
    config.out = out_path;
    config.threads = threads_from_environment();

    std::string text;
    bool pass = true;
    if (config.command == "spectrum") {
      text = run_spectrum(config);
    } else if (config.command == "eigenvector") {
      text = run_eigenvector(config);
    } else if (config.command == "verify") {
      auto outcome = run_verify(config);
      text = std::move(outcome.text);
      pass = outcome.pass;
    } else if (config.command == "analyze") {
      text = run_analyze(config);
    } else {
      text = run_limit_cdf(config);
    }

    if (config.out) {
      write_file_atomically(*config.out, text);
    } else {
      out << text;
    }
    if (!pass) {
      err << "verification failed\n";
      return static_cast<int>(ExitCode::Failure);
    }
    return static_cast<int>(ExitCode::Ok);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Validation);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Validation);
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Failure);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::Failure);
  }
}

}  // namespace gridspectra::cli
