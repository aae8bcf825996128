#pragma once

// Self-describing key-value text records:
//
//   # comment
//   kind = warping-profile
//   representation = sampled-spline
//   interval = 0.1 10
//   knots = 0.1 0.2 ...
//
// Keys are unique; values are free text, numeric lists are whitespace
// separated and written with 17 significant digits so they round-trip.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "etype/warped/profile.hpp"
#include "etype/warped/radial_field.hpp"

namespace etype::warped {

class KeyValueRecord {
 public:
  static KeyValueRecord parse(const std::string& text);
  static KeyValueRecord read_file(const std::filesystem::path& path);

  std::string to_string() const;

  bool has(const std::string& key) const;
  /// Throws ParseError when the key is missing.
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  std::vector<double> get_doubles(const std::string& key) const;

  KeyValueRecord& set(const std::string& key, std::string value);
  KeyValueRecord& set(const std::string& key, double value);
  KeyValueRecord& set(const std::string& key, const std::vector<double>& values);

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string format_double(double v);

KeyValueRecord profile_to_record(const WarpingProfile& profile);
/// Rebuilds constant/linear/sine closed forms and sampled splines.
WarpingProfile profile_from_record(const KeyValueRecord& record);

/// Sampled potentials write their spline knots; closed forms write the form
/// tag and parameters.
KeyValueRecord potential_to_record(const RadialField& potential);
/// Sampled-spline potentials only; closed-form potentials are rebuilt by the
/// soliton engine, which owns the form tags.
RadialField sampled_potential_from_record(const KeyValueRecord& record);

}  // namespace etype::warped
