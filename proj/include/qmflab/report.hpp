#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qmflab {

enum class Status { pass, fail, skip };

std::string to_string(Status s);
Status parse_status(std::string_view text);

struct CheckRecord {
  std::string name;
  Status status = Status::pass;
  std::vector<std::pair<std::string, std::string>> witness;
  double seconds = 0.0;

  CheckRecord& with(std::string key, std::string value) {
    witness.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;

  /// No check failed (skips do not count against the suite).
  bool pass() const;
  Status overall() const { return pass() ? Status::pass : Status::fail; }
  void append(const Report& other);
  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { json, csv, text };
Format parse_format(std::string_view text);

std::string to_json(const Report& r);
Report report_from_json(std::string_view text);
std::string to_csv(const Report& r);
std::string to_text(const Report& r);
std::string render(const Report& r, Format f);

/// Runs `body` (which fills in status and witness) and records its wall time.
template <class Body>
CheckRecord timed_check(std::string name, Body&& body) {
  CheckRecord rec;
  rec.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  body(rec);
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace qmflab
