#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>

namespace staircase {

// Filesystem-level failure (unreadable/unwritable file); commands map this to
// their I/O exit code.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Append-only JSONL result cache: one {"key": ..., "value": {"output": ...,
// "exit": ...}} object per line in <dir>/cache.jsonl.  The loader tolerates a
// truncated final line (a crash mid-append) silently and skips corrupt
// non-final lines with a warning on stderr.  Replayed values are returned
// byte-for-byte.
class ResultCache {
 public:
  struct Entry {
    std::string output;
    int exit_code = 0;
  };

  explicit ResultCache(const std::string& dir);

  std::optional<Entry> get(const std::string& key) const;

  // Appends and flushes; also updates the in-memory view.
  void put(const std::string& key, const Entry& entry);

  // "<canonical>|<command>|<hex digest of parameter string>".
  static std::string make_key(const std::string& canonical, const std::string& command,
                              const std::string& params);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::map<std::string, Entry> entries_;
  mutable std::mutex mu_;
};

}  // namespace staircase
