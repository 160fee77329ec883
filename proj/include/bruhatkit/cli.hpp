#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bruhatkit/rational.hpp"
#include "bruhatkit/weyl.hpp"

namespace bruhatkit::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum class Task { grade, stratify, criterion, identities, lowrank_suite };
std::string to_string(Task t);
Task parse_task(std::string_view name);  // ValidationError on unknown names

struct JobConfig {
  std::optional<std::string> type_label;
  std::optional<std::vector<std::vector<int>>> cartan;
  RationalVector elliptic_coeffs;
  std::optional<std::vector<std::int64_t>> involution_coweight;
  std::vector<Task> tasks;
  std::size_t weyl_cap = kDefaultWeylCap;
  std::uint64_t seed = 0;
  std::optional<std::string> output;
};

// Flat YAML mapping. JSON is accepted too, so an echoed config can be fed back.
JobConfig parse_config(std::string_view text);
JobConfig load_config(const std::filesystem::path& path);
// Throws ValidationError: no tasks, criterion without an involution, missing
// or conflicting root data, coefficient vectors of the wrong length.
void validate(const JobConfig& config);

nlohmann::ordered_json config_to_json(const JobConfig& config);

struct RunResult {
  nlohmann::ordered_json report;
  bool identity_failure = false;  // counterexamples are listed in the report
};

// Runs every requested task. Throws ValidationError or CapExceeded.
RunResult run(const JobConfig& config);

std::string render_text(const nlohmann::ordered_json& report);

// temp file + rename in the destination directory.
void write_atomically(const std::filesystem::path& path, std::string_view contents);

enum ExitCode : int { kOk = 0, kValidation = 2, kCapExceeded = 3, kIdentityFailure = 4 };

}  // namespace bruhatkit::cli
