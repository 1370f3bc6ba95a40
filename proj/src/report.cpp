#include "qmflab/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qmflab {

using json = nlohmann::ordered_json;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "fail";
}

Status parse_status(std::string_view text) {
  if (text == "pass") return Status::pass;
  if (text == "fail") return Status::fail;
  if (text == "skip") return Status::skip;
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

bool Report::pass() const {
  for (const auto& c : checks)
    if (c.status == Status::fail) return false;
  return true;
}

void Report::append(const Report& other) {
  for (auto c : other.checks) {
    c.name = other.suite + ": " + c.name;
    checks.push_back(std::move(c));
  }
}

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string to_json(const Report& r) {
  json j;
  j["suite"] = r.suite;
  j["status"] = to_string(r.overall());
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json w = json::object();
    for (const auto& [k, v] : c.witness) w[k] = v;
    j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"seconds", c.seconds}, {"witness", w}});
  }
  return j.dump(2);
}

Report report_from_json(std::string_view text) {
  const json j = json::parse(text);
  Report r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("checks")) {
    CheckRecord rec;
    rec.name = c.at("name").get<std::string>();
    rec.status = parse_status(c.at("status").get<std::string>());
    rec.seconds = c.at("seconds").get<double>();
    for (const auto& [k, v] : c.at("witness").items()) rec.witness.emplace_back(k, v.get<std::string>());
    r.checks.push_back(std::move(rec));
  }
  return r;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream os;
  os << "suite,check,status,seconds,witness\n";
  for (const auto& c : r.checks) {
    std::string w;
    for (const auto& [k, v] : c.witness) w += (w.empty() ? "" : "; ") + k + "=" + v;
    os << csv_field(r.suite) << ',' << csv_field(c.name) << ',' << to_string(c.status) << ',' << c.seconds << ','
       << csv_field(w) << '\n';
  }
  return os.str();
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ": " << to_string(r.overall()) << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << to_string(c.status) << "] " << c.name << " (" << std::fixed << std::setprecision(3) << c.seconds
       << "s)\n";
    os.unsetf(std::ios::fixed);
    for (const auto& [k, v] : c.witness) os << "      " << k << " = " << v << "\n";
  }
  return os.str();
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::json: return to_json(r) + "\n";
    case Format::csv: return to_csv(r);
    case Format::text: return to_text(r);
  }
  return {};
}

}  // namespace qmflab
