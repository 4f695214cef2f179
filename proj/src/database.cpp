#include "omdiam/database.hpp"

#include <stdexcept>

#include "omdiam/combinatorics.hpp"

namespace omdiam {

DatabaseReader::DatabaseReader(std::string path, int n, int r, bool lenient)
    : path_(std::move(path)), stream_(path_), n_(n), r_(r), lenient_(lenient) {
  if (!stream_) {
    throw std::runtime_error("cannot open database file: " + path_);
  }
  if (n < 1 || r < 1 || r > n) {
    throw std::invalid_argument("invalid database parameters n=" + std::to_string(n) +
                                ", r=" + std::to_string(r));
  }
  expected_length_ = static_cast<std::size_t>(binomial(n, r));
}

void DatabaseReader::set_line_range(long long first, long long last) {
  first_line_ = first > 0 ? first : 1;
  last_line_ = last;
}

void DatabaseReader::skip_through_line(long long line_no) { resume_after_ = line_no; }

std::optional<DatabaseEntry> DatabaseReader::next() {
  std::string line;
  while (std::getline(stream_, line)) {
    ++current_line_;
    if (last_line_ > 0 && current_line_ > last_line_) break;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (current_line_ < first_line_ || current_line_ <= resume_after_) continue;

    std::string problem;
    if (line.size() != expected_length_) {
      problem = "length " + std::to_string(line.size()) + " != C(" +
                std::to_string(n_) + "," + std::to_string(r_) + ") = " +
                std::to_string(expected_length_);
    } else {
      for (char c : line) {
        if (c != '+' && c != '-' && c != '0') {
          problem = std::string("bad character '") + c + "'";
          break;
        }
      }
    }
    if (!problem.empty()) {
      if (!lenient_) {
        throw std::runtime_error(path_ + ":" + std::to_string(current_line_) + ": " + problem);
      }
      malformed_.emplace_back(current_line_, problem);
      continue;
    }
    return DatabaseEntry{current_line_, next_ordinal_++, std::move(line)};
  }
  return std::nullopt;
}

}  // namespace omdiam
