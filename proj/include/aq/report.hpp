#pragma once

#include <map>
#include <string>
#include <vector>

namespace aq {

// Deterministic keyed report: metadata plus records, emitted sorted so that
// assembly order never affects the output bytes.
class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  void meta(const std::string& key, const std::string& value);
  void add(std::vector<std::string> record);  // first cell is the sort key
  void fail(std::vector<std::string> record);

  bool passed() const { return failures_ == 0; }
  int failures() const { return failures_; }

  // fmt: "human" (aligned table), "csv", or "text" (schema-like records)
  std::string render(const std::string& fmt) const;

 private:
  std::string title_;
  std::map<std::string, std::string> meta_;
  std::vector<std::vector<std::string>> records_;
  int failures_ = 0;
};

}  // namespace aq
