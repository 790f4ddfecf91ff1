#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "circstab/conditions.hpp"

namespace circstab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitIo = 4;

enum class Format { json, csv, text };

struct CliConfig {
  std::string command;
  std::vector<std::string> literals;
  std::string input_file;
  int min_n = 1;
  int max_n = 1;
  unsigned jobs = 1;
  Format format = Format::text;
  std::string out;
  bool extended = false;
  std::string cache_dir;
  bool force_canonical = false;
  bool progress = false;
};

int cmd_analyze(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_census(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_paper(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv, dispatches, and maps library errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string render_report_text(const StabilityReport& report);

}  // namespace circstab::cli
