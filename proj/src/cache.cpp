#include "staircase/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "staircase/reduction.hpp"  // fnv1a64

namespace staircase {

ResultCache::ResultCache(const std::string& dir) : path_(dir + "/cache.jsonl") {
  std::ifstream in(path_);
  if (!in) return;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  // A final line not terminated by '\n' is a truncated append; getline still
  // returns it, so check the raw tail byte.
  bool truncated_tail = false;
  {
    std::ifstream raw(path_, std::ios::binary);
    raw.seekg(0, std::ios::end);
    if (raw.tellg() > 0) {
      raw.seekg(-1, std::ios::end);
      char last = 0;
      raw.get(last);
      truncated_tail = last != '\n';
    }
  }
  for (size_t i = 0; i < lines.size(); ++i) {
    const bool is_final = i + 1 == lines.size();
    nlohmann::json j = nlohmann::json::parse(lines[i], nullptr, false);
    const bool usable = !j.is_discarded() && j.is_object() && j.contains("key") &&
                        j["key"].is_string() && j.contains("value") && j["value"].is_object() &&
                        j["value"].contains("output") && j["value"]["output"].is_string() &&
                        j["value"].contains("exit") &&
                        j["value"]["exit"].is_number_integer();
    if (usable) {
      entries_[j["key"].get<std::string>()] =
          Entry{j["value"]["output"].get<std::string>(), j["value"]["exit"].get<int>()};
      continue;
    }
    if (is_final && truncated_tail) continue;  // tolerated silently
    std::fprintf(stderr, "warning: ignoring corrupt cache line %zu in %s\n", i + 1,
                 path_.c_str());
  }
}

std::optional<ResultCache::Entry> ResultCache::get(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::put(const std::string& key, const Entry& entry) {
  std::lock_guard<std::mutex> lock(mu_);
  nlohmann::ordered_json j;
  j["key"] = key;
  j["value"] = nlohmann::ordered_json{{"output", entry.output}, {"exit", entry.exit_code}};
  std::ofstream out(path_, std::ios::app);
  if (!out) throw IoError("cannot open cache file " + path_);
  out << j.dump() << "\n";
  out.flush();
  if (!out) throw IoError("cache write failed: " + path_);
  entries_[key] = entry;
}

std::string ResultCache::make_key(const std::string& canonical, const std::string& command,
                                  const std::string& params) {
  std::ostringstream key;
  key << canonical << "|" << command << "|" << std::hex << fnv1a64(params);
  return key.str();
}

}  // namespace staircase
