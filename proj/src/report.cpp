#include "hyperlat/claims.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace hyperlat {

namespace {

json summary_of(const std::vector<ClaimRecord>& claims) {
  int n[4] = {0, 0, 0, 0};
  for (const auto& c : claims) ++n[static_cast<int>(c.status)];
  return json{{"pass", n[0]}, {"fail", n[1]}, {"skipped", n[2]}, {"exploratory", n[3]}};
}

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

json report_to_json(const Report& r) {
  json claims = json::array();
  for (const auto& c : r.claims) {
    json j{{"id", c.id},           {"description", c.description}, {"reference", c.reference},
           {"expected", c.expected}, {"computed", c.computed},     {"status", to_string(c.status)},
           {"seconds", c.seconds}};
    if (!c.note.empty()) j["note"] = c.note;
    claims.push_back(std::move(j));
  }
  return json{{"version", "1"}, {"claims", claims}, {"summary", summary_of(r.claims)}};
}

std::string report_to_text(const Report& r) {
  std::size_t width = 2;
  for (const auto& c : r.claims) width = std::max(width, c.id.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "ID" << "  " << std::setw(11) << "STATUS" << "  "
      << std::right << std::setw(9) << "SECONDS" << "  DESCRIPTION\n";
  for (const auto& c : r.claims) {
    out << std::left << std::setw(static_cast<int>(width)) << c.id << "  " << std::setw(11) << to_string(c.status)
        << "  " << std::right << std::setw(9) << seconds_text(c.seconds) << "  " << c.description << "\n";
    if (c.status == ClaimStatus::fail)
      out << "    expected " << c.expected.dump() << "\n    computed " << c.computed.dump() << "\n";
    if (!c.note.empty()) out << "    note: " << c.note << "\n";
  }
  json s = summary_of(r.claims);
  out << "summary: pass=" << s["pass"] << " fail=" << s["fail"] << " skipped=" << s["skipped"]
      << " exploratory=" << s["exploratory"] << "\n";
  return out.str();
}

Report parse_report(const std::string& document) {
  Report r;
  auto first = document.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && document[first] == '{') {
    json j = json::parse(document);
    if (j.value("version", "") != "1") throw std::invalid_argument("unsupported report version");
    for (const auto& c : j.at("claims")) {
      ClaimRecord rec;
      rec.id = c.at("id").get<std::string>();
      rec.description = c.value("description", "");
      rec.reference = c.value("reference", "");
      rec.expected = c.value("expected", json());
      rec.computed = c.value("computed", json());
      rec.status = parse_status(c.at("status").get<std::string>());
      rec.note = c.value("note", "");
      rec.seconds = c.value("seconds", 0.0);
      r.claims.push_back(std::move(rec));
    }
    return r;
  }
  std::istringstream in(document);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.rfind("ID", 0) == 0) {
      header = true;
      continue;
    }
    if (!header || line.empty() || line[0] == ' ' || line.rfind("summary:", 0) == 0) continue;
    std::istringstream row(line);
    ClaimRecord rec;
    std::string status, seconds;
    if (!(row >> rec.id >> status >> seconds)) throw std::invalid_argument("malformed report row: " + line);
    rec.status = parse_status(status);
    rec.seconds = std::stod(seconds);
    std::getline(row >> std::ws, rec.description);
    r.claims.push_back(std::move(rec));
  }
  if (!header) throw std::invalid_argument("not a report: missing header");
  return r;
}

}  // namespace hyperlat
