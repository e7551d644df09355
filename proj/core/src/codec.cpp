#include "sympow/codec.hpp"

namespace sympow {

std::string codec_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\' || c == ',' || c == '(' || c == ')' || c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

std::string encode_pair(const std::string& a, const std::string& b) {
  return "(" + codec_escape(a) + "," + codec_escape(b) + ")";
}

std::string encode_tuple(std::span<const std::string> parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += codec_escape(parts[i]);
  }
  return out + ")";
}

std::string encode_multiset(std::span<const std::string> sorted_parts) {
  std::string out = "{";
  for (std::size_t i = 0; i < sorted_parts.size(); ++i) {
    if (i) out += ',';
    out += codec_escape(sorted_parts[i]);
  }
  return out + "}";
}

}  // namespace sympow
