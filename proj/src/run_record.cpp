#include "oddchi/run_record.hpp"

#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "oddchi/errors.hpp"

namespace oddchi::cli {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv_mix(std::uint64_t& h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
}

}  // namespace

std::string config_hash(const std::string& command, const ParamMap& params) {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, command + "\n");
  for (const auto& [key, value] : params) fnv_mix(h, key + "=" + value + "\n");
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string iso8601_utc(std::chrono::system_clock::time_point t) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm parts{};
  gmtime_r(&secs, &parts);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

RunRecord make_run_record(const std::string& command, const ParamMap& params,
                          std::vector<std::string> outputs,
                          std::map<std::string, std::string> summary) {
  RunRecord rec;
  rec.command = command;
  rec.config_hash = config_hash(command, params);
  rec.timestamp = iso8601_utc(std::chrono::system_clock::now());
  rec.outputs = std::move(outputs);
  rec.summary = std::move(summary);
  return rec;
}

nlohmann::ordered_json to_json(const RunRecord& record, const ParamMap& params) {
  nlohmann::ordered_json j;
  j["command"] = record.command;
  j["config_hash"] = record.config_hash;
  j["timestamp"] = record.timestamp;
  j["parameters"] = params;
  j["outputs"] = record.outputs;
  j["summary"] = record.summary;
  return j;
}

void write_run_record(const std::string& path, const RunRecord& record, const ParamMap& params) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open run record '" + path + "' for writing");
  f << to_json(record, params).dump(2) << "\n";
  if (!f.flush()) throw IoError("failed writing run record '" + path + "'");
}

}  // namespace oddchi::cli
