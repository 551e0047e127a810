#include "aq/report.hpp"

#include <algorithm>
#include <sstream>

namespace aq {

void Report::meta(const std::string& key, const std::string& value) {
  meta_[key] = value;
}

void Report::add(std::vector<std::string> record) {
  records_.push_back(std::move(record));
}

void Report::fail(std::vector<std::string> record) {
  ++failures_;
  record.insert(record.begin(), "FALSIFICATION");
  records_.push_back(std::move(record));
}

std::string Report::render(const std::string& fmt) const {
  std::vector<std::vector<std::string>> recs = records_;
  std::sort(recs.begin(), recs.end());
  std::ostringstream os;
  if (fmt == "csv") {
    os << "# " << title_ << "\n";
    for (auto& [k, v] : meta_) os << "# " << k << "=" << v << "\n";
    for (auto& r : recs) {
      for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
      os << "\n";
    }
  } else if (fmt == "text") {
    os << "report " << title_ << "\n";
    for (auto& [k, v] : meta_) os << "meta " << k << " " << v << "\n";
    for (auto& r : recs) {
      os << "record";
      for (auto& c : r) os << " " << c;
      os << "\n";
    }
  } else {
    os << "== " << title_ << " ==\n";
    for (auto& [k, v] : meta_) os << "  " << k << ": " << v << "\n";
    std::vector<size_t> width;
    for (auto& r : recs)
      for (size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.resize(i + 1, 0);
        width[i] = std::max(width[i], r[i].size());
      }
    for (auto& r : recs) {
      os << "  ";
      for (size_t i = 0; i < r.size(); ++i) {
        os << r[i];
        if (i + 1 < r.size()) os << std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << "\n";
    }
    os << "  result: " << (failures_ == 0 ? "PASS" : "FAIL (" +
                           std::to_string(failures_) + " falsifications)")
       << "\n";
  }
  return os.str();
}

}  // namespace aq
