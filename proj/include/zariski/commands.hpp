#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "zariski/error.hpp"

namespace zariski::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIoOrParse = 1,
  kExitValidation = 2,
  kExitInternal = 3,
};

int exit_code_for(ErrorKind kind);

enum class OutputFormat { Text, Json };

/// How G is chosen for classify: unset uses the file's "G" key when present
/// and the fundamental cycle otherwise; "fund" forces the fundamental cycle;
/// anything else is a path to a G file.
using GOption = std::optional<std::string>;

struct BatchOptions {
  std::size_t jobs = 1;
  // Defaults to <dir>/reports.
  std::optional<std::filesystem::path> out_dir;
};

int cmd_check(const std::filesystem::path& path, OutputFormat format, std::ostream& out,
              std::ostream& err);
int cmd_decompose(const std::filesystem::path& path, bool oracle, OutputFormat format,
                  std::ostream& out, std::ostream& err);
int cmd_classify(const std::filesystem::path& path, const GOption& g, OutputFormat format,
                 std::ostream& out, std::ostream& err);
int cmd_fundcycle(const std::filesystem::path& path, OutputFormat format, std::ostream& out,
                  std::ostream& err);

/// Classifies every *.json file directly inside dir, writing
/// <out_dir>/<stem>.report.json per success and one summary line per file
/// (in filename order) to out. Returns the largest per-file exit code.
int cmd_batch(const std::filesystem::path& dir, const BatchOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace zariski::cli
