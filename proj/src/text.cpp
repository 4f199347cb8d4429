#include "aqv/text.hpp"

#include <cstdio>
#include <cstdlib>
#include <cerrno>

#include "aqv/errors.hpp"

namespace aqv {

static std::string format_g(double v, int digits) {
  if (v == 0.0) v = 0.0;  // never print "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string format_sig(double v) { return format_g(v, 12); }

std::string format_full(double v) { return format_g(v, 17); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& s, const std::string& context) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE)
    throw ValidationError(context + ": not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s, const std::string& context) {
  errno = 0;
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE)
    throw ValidationError(context + ": not an integer: '" + s + "'");
  return static_cast<int>(v);
}

}  // namespace aqv
