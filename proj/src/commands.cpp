#include "zariski/commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include "zariski/classify.hpp"
#include "zariski/config_io.hpp"
#include "zariski/cycles.hpp"
#include "zariski/decomposition.hpp"
#include "zariski/lattice.hpp"
#include "zariski/report.hpp"

namespace zariski::cli {

namespace {

namespace fs = std::filesystem;

void emit_json(const nlohmann::json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

// Runs body, turning library errors into diagnostics and exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

GSource choose_g(const ConfigDocument& doc, const GOption& g) {
  if (!g) {
    if (doc.g) return UserSupplied{*doc.g};
    return FromFundamentalCycle{};
  }
  if (*g == "fund") return FromFundamentalCycle{};
  return UserSupplied{load_g_file(*g)};
}

void write_atomically(const fs::path& target, const std::string& contents) {
  fs::path temporary = target;
  temporary += ".tmp";
  {
    std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + temporary.string());
    out << contents;
    if (!out.flush()) throw Error(ErrorKind::Io, "cannot write " + temporary.string());
  }
  std::error_code ec;
  fs::rename(temporary, target, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot rename onto " + target.string() + ": " + ec.message());
}

struct BatchResult {
  int code = kExitOk;
  std::string summary;
};

BatchResult classify_one(const fs::path& input, const fs::path& out_dir) {
  BatchResult result;
  std::ostringstream err;
  std::string summary;
  result.code = guarded(err, [&] {
    const ConfigDocument doc = load_config(input);
    const ValidatedConfig cfg = validate_config(doc.config);
    const ClassificationReport report = classify(cfg, doc.divisor, choose_g(doc, std::nullopt));
    write_atomically(out_dir / (input.stem().string() + ".report.json"),
                     report_json(cfg, report).dump(2) + "\n");
    summary = "ok spread=" + std::string(spread_name(report.spread)) +
              " alpha=" + to_string(report.hilbert.alpha);
    return kExitOk;
  });
  std::string diagnostic = err.str();
  if (!diagnostic.empty() && diagnostic.back() == '\n') diagnostic.pop_back();
  result.summary = input.filename().string() + ": " +
                   (result.code == kExitOk
                        ? summary
                        : "error(" + std::to_string(result.code) + ") " + diagnostic);
  return result;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io:
    case ErrorKind::Parse:
      return kExitIoOrParse;
    case ErrorKind::NoFeasibleSupport:
    case ErrorKind::FuseExceeded:
    case ErrorKind::OracleDisagreement:
      return kExitInternal;
    default:
      return kExitValidation;
  }
}

int cmd_check(const fs::path& path, OutputFormat format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ValidatedConfig cfg = validate_config(load_config(path).config);
    if (format == OutputFormat::Json) {
      emit_json(check_json(cfg), out);
    } else {
      out << check_text(cfg);
    }
    return kExitOk;
  });
}

int cmd_decompose(const fs::path& path, bool oracle, OutputFormat format, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const ConfigDocument doc = load_config(path);
    const ValidatedConfig cfg = validate_config(doc.config);
    const ZariskiDecomposition dec = zariski_decompose(cfg, doc.divisor);
    nlohmann::json report = decomposition_json(cfg, dec);
    if (oracle) {
      const ZariskiDecomposition check = oracle_decompose(cfg, doc.divisor);
      if (check.delta != dec.delta || check.b != dec.b) {
        throw Error(ErrorKind::OracleDisagreement,
                    "active set gave B = " + format_divisor(dec.b) + ", oracle gave B = " +
                        format_divisor(check.b));
      }
      report["oracle_agreement"] = true;
    }
    if (format == OutputFormat::Json) {
      emit_json(report, out);
    } else {
      out << decomposition_text(dec);
      if (oracle) out << "oracle agreement: yes\n";
    }
    return kExitOk;
  });
}

int cmd_classify(const fs::path& path, const GOption& g, OutputFormat format, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const ConfigDocument doc = load_config(path);
    const ValidatedConfig cfg = validate_config(doc.config);
    const ClassificationReport report = classify(cfg, doc.divisor, choose_g(doc, g));
    if (format == OutputFormat::Json) {
      emit_json(report_json(cfg, report), out);
    } else {
      out << report_text(report);
    }
    return kExitOk;
  });
}

int cmd_fundcycle(const fs::path& path, OutputFormat format, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const ValidatedConfig cfg = validate_config(load_config(path).config);
    const FundamentalCycle cycle = fundamental_cycle(cfg);
    if (format == OutputFormat::Json) {
      emit_json(fundamental_cycle_json(cycle), out);
    } else {
      out << fundamental_cycle_text(cycle);
    }
    return kExitOk;
  });
}

int cmd_batch(const fs::path& dir, const BatchOptions& options, std::ostream& out,
              std::ostream& err) {
  std::vector<fs::path> inputs;
  fs::path out_dir;
  const int listed = guarded(err, [&] {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw Error(ErrorKind::Io, dir.string() + " is not a directory");
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        inputs.push_back(entry.path());
      }
    }
    std::sort(inputs.begin(), inputs.end());
    out_dir = options.out_dir.value_or(dir / "reports");
    fs::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + out_dir.string() + ": " + ec.message());
    return kExitOk;
  });
  if (listed != kExitOk) return listed;

  std::vector<BatchResult> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      results[i] = classify_one(inputs[i], out_dir);
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(1, inputs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();

  int code = kExitOk;
  std::size_t failed = 0;
  for (const auto& result : results) {
    out << result.summary << "\n";
    code = std::max(code, result.code);
    if (result.code != kExitOk) ++failed;
  }
  out << inputs.size() << " processed, " << failed << " failed\n";
  return code;
}

}  // namespace zariski::cli
