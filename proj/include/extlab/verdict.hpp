// Check outcomes and their serializations (JSON lines, CSV, text table).
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace extlab {

inline constexpr int kReportSchemaVersion = 1;

enum class Status { Pass, Fail, Skipped };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

inline Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped") return Status::Skipped;
  throw std::invalid_argument("unknown status '" + s + "'");
}

struct Verdict {
  std::string instance;
  std::string check;
  Status status = Status::Pass;
  std::string witness;  // offending module/pair and dimensions on Fail; certificate or reason otherwise

  bool operator==(const Verdict&) const = default;
};

inline Verdict pass(std::string instance, std::string check, std::string note = {}) {
  return {std::move(instance), std::move(check), Status::Pass, std::move(note)};
}
inline Verdict fail(std::string instance, std::string check, std::string witness) {
  return {std::move(instance), std::move(check), Status::Fail, std::move(witness)};
}
inline Verdict skipped(std::string instance, std::string check, std::string reason) {
  return {std::move(instance), std::move(check), Status::Skipped, std::move(reason)};
}

inline bool any_failed(const std::vector<Verdict>& vs) {
  return std::any_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.status == Status::Fail; });
}

inline nlohmann::ordered_json to_json(const Verdict& v, std::optional<std::uint64_t> seed = {}) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["instance"] = v.instance;
  j["check"] = v.check;
  j["status"] = to_string(v.status);
  j["witness"] = v.witness;
  if (seed) j["seed"] = *seed;
  return j;
}

inline Verdict verdict_from_json(const nlohmann::json& j) {
  return {j.at("instance").get<std::string>(), j.at("check").get<std::string>(),
          parse_status(j.at("status").get<std::string>()), j.value("witness", std::string{})};
}

inline void write_json_lines(std::ostream& os, const std::vector<Verdict>& vs, std::optional<std::uint64_t> seed = {}) {
  for (const auto& v : vs) os << to_json(v, seed).dump() << '\n';
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const std::vector<Verdict>& vs, std::optional<std::uint64_t> seed = {}) {
  os << "schema_version,instance,check,status,witness" << (seed ? ",seed" : "") << '\n';
  for (const auto& v : vs) {
    os << kReportSchemaVersion << ',' << csv_field(v.instance) << ',' << csv_field(v.check) << ',' << to_string(v.status)
       << ',' << csv_field(v.witness);
    if (seed) os << ',' << *seed;
    os << '\n';
  }
}

inline void write_table(std::ostream& os, const std::vector<Verdict>& vs) {
  std::size_t wi = 8, wc = 5;
  for (const auto& v : vs) {
    wi = std::max(wi, v.instance.size());
    wc = std::max(wc, v.check.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << pad("instance", wi) << "  " << pad("check", wc) << "  " << pad("status", 7) << "  detail\n";
  for (const auto& v : vs) {
    os << pad(v.instance, wi) << "  " << pad(v.check, wc) << "  " << pad(to_string(v.status), 7) << "  " << v.witness << '\n';
  }
}

/// "3 pass, 0 fail, 1 skipped"
inline std::string status_counts(const std::vector<Verdict>& vs) {
  std::size_t p = 0, f = 0, s = 0;
  for (const auto& v : vs) {
    if (v.status == Status::Pass) ++p;
    else if (v.status == Status::Fail) ++f;
    else ++s;
  }
  return std::to_string(p) + " pass, " + std::to_string(f) + " fail, " + std::to_string(s) + " skipped";
}

/// "(a,b,c)"
template <class Seq>
std::string dims_string(const Seq& d) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& x : d) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace extlab
