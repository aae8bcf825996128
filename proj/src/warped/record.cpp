#include "etype/warped/record.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "etype/errors.hpp"
#include "etype/warped/spline.hpp"

namespace etype::warped {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Interval interval_from(const KeyValueRecord& record) {
  const auto v = record.get_doubles("interval");
  if (v.size() != 2) throw ParseError("interval needs two numbers");
  return {v[0], v[1]};
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

KeyValueRecord KeyValueRecord::parse(const std::string& text) {
  KeyValueRecord record;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError("line " + std::to_string(lineno) + ": empty key");
    if (record.has(key)) throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    record.entries_.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return record;
}

KeyValueRecord KeyValueRecord::read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string KeyValueRecord::to_string() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
  return out;
}

bool KeyValueRecord::has(const std::string& key) const {
  for (const auto& e : entries_)
    if (e.first == key) return true;
  return false;
}

const std::string& KeyValueRecord::get(const std::string& key) const {
  for (const auto& e : entries_)
    if (e.first == key) return e.second;
  throw ParseError("missing key '" + key + "'");
}

std::string KeyValueRecord::get_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? get(key) : fallback;
}

double KeyValueRecord::get_double(const std::string& key) const {
  const auto v = get_doubles(key);
  if (v.size() != 1) throw ParseError("key '" + key + "' must hold one number");
  return v[0];
}

std::vector<double> KeyValueRecord::get_doubles(const std::string& key) const {
  std::istringstream in(get(key));
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ParseError("key '" + key + "': '" + token + "' is not a number");
    }
  }
  return out;
}

KeyValueRecord& KeyValueRecord::set(const std::string& key, std::string value) {
  for (auto& e : entries_)
    if (e.first == key) {
      e.second = std::move(value);
      return *this;
    }
  entries_.emplace_back(key, std::move(value));
  return *this;
}

KeyValueRecord& KeyValueRecord::set(const std::string& key, double value) {
  return set(key, format_double(value));
}

KeyValueRecord& KeyValueRecord::set(const std::string& key, const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ' ';
    s += format_double(values[i]);
  }
  return set(key, std::move(s));
}

KeyValueRecord profile_to_record(const WarpingProfile& profile) {
  KeyValueRecord r;
  r.set("kind", std::string("warping-profile"));
  r.set("interval", std::vector<double>{profile.interval().lo, profile.interval().hi});
  if (const CubicSpline* s = profile.spline()) {
    r.set("representation", std::string("sampled-spline"));
    r.set("knots", s->knots());
    r.set("values", s->values());
    return r;
  }
  const auto& form = profile.form();
  if (form != "constant" && form != "linear" && form != "sine")
    throw UnknownNameError("closed-form profile '" + form + "' has no serialized form");
  r.set("representation", std::string("closed-form"));
  r.set("form", form);
  r.set("parameters", profile.parameters());
  return r;
}

WarpingProfile profile_from_record(const KeyValueRecord& record) {
  if (record.get_or("kind", "warping-profile") != "warping-profile")
    throw ParseError("record is not a warping profile");
  const std::string rep = record.get("representation");
  if (rep == "sampled-spline")
    return WarpingProfile::sampled(record.get_doubles("knots"), record.get_doubles("values"));
  if (rep != "closed-form") throw ParseError("unknown representation '" + rep + "'");
  const Interval iv = interval_from(record);
  const std::string form = record.get("form");
  const auto p = record.has("parameters") ? record.get_doubles("parameters") : std::vector<double>{};
  auto need = [&](std::size_t k) {
    if (p.size() != k) throw ParseError("form '" + form + "' takes " + std::to_string(k) + " parameters");
  };
  if (form == "constant") {
    need(1);
    return WarpingProfile::constant(p[0], iv);
  }
  if (form == "linear") {
    need(2);
    return WarpingProfile::linear(p[0], p[1], iv);
  }
  if (form == "sine") {
    need(1);
    return WarpingProfile::sine(iv, p[0]);
  }
  throw UnknownNameError("unknown closed-form profile '" + form + "'");
}

KeyValueRecord potential_to_record(const RadialField& potential) {
  KeyValueRecord r;
  r.set("kind", std::string("potential"));
  r.set("interval", std::vector<double>{potential.interval().lo, potential.interval().hi});
  if (const SplineSource* s = potential.spline_source()) {
    r.set("representation", std::string("sampled-spline"));
    r.set("knots", s->knots);
    r.set("slopes", s->slopes);
    r.set("value0", s->value0);
    return r;
  }
  if (potential.form().empty()) throw UnknownNameError("potential has no serialized form");
  r.set("representation", std::string("closed-form"));
  r.set("form", potential.form());
  r.set("parameters", potential.parameters());
  return r;
}

RadialField sampled_potential_from_record(const KeyValueRecord& record) {
  if (record.get_or("kind", "potential") != "potential") throw ParseError("record is not a potential");
  if (record.get("representation") != "sampled-spline")
    throw ParseError("expected a sampled-spline potential record");
  return spline_potential(record.get_doubles("knots"), record.get_doubles("slopes"),
                          record.has("value0") ? record.get_double("value0") : 0.0);
}

}  // namespace etype::warped
