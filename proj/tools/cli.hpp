#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gridspectra/analysis.hpp"
#include "gridspectra/eigensystem.hpp"
#include "gridspectra/grid.hpp"
#include "gridspectra/oracle.hpp"

namespace gridspectra::cli {

enum class ExitCode : int { Ok = 0, Validation = 2, Failure = 3 };

enum class OutputFormat { Csv, Json };

struct CliConfig {
  std::string command;
  std::vector<int> dims;
  std::vector<double> weights;  // empty until defaulted to all 1
  LaplacianKind kind = LaplacianKind::Combinatorial;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> out;
  double tol = 1e-8;
  std::size_t bins = 50;
  std::optional<double> range;
  std::string z;
  bool normalize = false;
  int d = 1;
  int resolution = 256;
  std::size_t dense_cap = kDefaultDenseCap;
  unsigned threads = 0;
};

/// Entry point behind the `gridspectra` executable. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::vector<int> parse_int_list(std::string_view text, std::string_view flag);
std::vector<double> parse_real_list(std::string_view text, std::string_view flag);

/// Reads GRIDSPECTRA_THREADS (unset or 0 = automatic).
unsigned threads_from_environment();

/// Shortest text with 17 significant digits, '.' as decimal separator.
std::string format_real(double value);

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumEntry>& entries);
nlohmann::json spectrum_to_json(const SpectrumSummary& summary, const std::vector<SpectrumEntry>& entries);
SpectrumSummary summary_from_json(const nlohmann::json& doc);

/// Writes to `path` through a temporary file in the same directory and a rename.
void write_file_atomically(const std::string& path, std::string_view contents);

}  // namespace gridspectra::cli
