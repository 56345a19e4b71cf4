#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "biharm/boundary_data.hpp"

namespace biharm {

/// Locale-independent shortest-faithful rendering with 17 significant digits.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

/// FNV-1a 64-bit hash, used to fingerprint boundary-data files in output
/// metadata.
inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fnv1a_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

// Boundary-data file schema: a CircleData is {"a0": r, "cos": [...], "sin": [...]};
// a LineData wraps the same object under "pullback".

inline nlohmann::json emit_circle_json(const CircleData& u) {
  return {{"a0", u.a0}, {"cos", u.cos_coef}, {"sin", u.sin_coef}};
}

inline CircleData parse_circle_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::runtime_error("boundary data: expected a JSON object");
  CircleData u;
  u.a0 = j.value("a0", 0.0);
  if (j.contains("cos")) u.cos_coef = j.at("cos").get<std::vector<double>>();
  if (j.contains("sin")) u.sin_coef = j.at("sin").get<std::vector<double>>();
  return u;
}

inline nlohmann::json emit_line_json(const LineData& u) {
  return {{"pullback", emit_circle_json(u.pullback)}};
}

inline LineData parse_line_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("pullback"))
    throw std::runtime_error("boundary data: expected an object with a \"pullback\" field");
  return {parse_circle_json(j.at("pullback"))};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CircleData load_circle_file(const std::string& path) {
  return parse_circle_json(nlohmann::json::parse(read_file(path)));
}

inline LineData load_line_file(const std::string& path) {
  return parse_line_json(nlohmann::json::parse(read_file(path)));
}

}  // namespace biharm
