#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace omdiam {

struct DatabaseEntry {
  long long line_no = 0;   // 1-based line in the file
  long long ordinal = 0;   // 0-based instance index within the stream
  std::string text;        // validated chirotope string
};

// Streams chirotope strings from a database file: one instance per
// line, blank lines and '#' comments ignored, (n, r) supplied
// out-of-band. Malformed lines abort with the line number unless
// `lenient`, in which case they are recorded and skipped.
class DatabaseReader {
 public:
  DatabaseReader(std::string path, int n, int r, bool lenient = false);

  // Restricts the stream to file lines in [first, last] (1-based,
  // inclusive; last = 0 means unbounded).
  void set_line_range(long long first, long long last);
  // Skips instances up to and including this file line (checkpoint resume).
  void skip_through_line(long long line_no);

  std::optional<DatabaseEntry> next();

  const std::string& path() const noexcept { return path_; }
  int n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  const std::vector<std::pair<long long, std::string>>& malformed() const noexcept {
    return malformed_;
  }

 private:
  std::string path_;
  std::ifstream stream_;
  int n_ = 0;
  int r_ = 0;
  bool lenient_ = false;
  std::size_t expected_length_ = 0;
  long long current_line_ = 0;
  long long next_ordinal_ = 0;
  long long first_line_ = 1;
  long long last_line_ = 0;
  long long resume_after_ = 0;
  std::vector<std::pair<long long, std::string>> malformed_;
};

}  // namespace omdiam
