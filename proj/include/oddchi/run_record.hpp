#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace oddchi::cli {

// Every parameter that affects numerics, already formatted as text.
using ParamMap = std::map<std::string, std::string>;

struct RunRecord {
  std::string command;
  std::string config_hash;
  std::string timestamp;  // ISO-8601, UTC
  std::vector<std::string> outputs;
  std::map<std::string, std::string> summary;
};

/// 64-bit FNV-1a over "command\n" followed by "key=value\n" for each
/// parameter in key order, as 16 lowercase hex digits.
std::string config_hash(const std::string& command, const ParamMap& params);

std::string iso8601_utc(std::chrono::system_clock::time_point t);

RunRecord make_run_record(const std::string& command, const ParamMap& params,
                          std::vector<std::string> outputs,
                          std::map<std::string, std::string> summary);

nlohmann::ordered_json to_json(const RunRecord& record, const ParamMap& params);

/// Throws IoError when the file cannot be written.
void write_run_record(const std::string& path, const RunRecord& record, const ParamMap& params);

}  // namespace oddchi::cli
