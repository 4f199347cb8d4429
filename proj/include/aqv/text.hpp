#pragma once

#include <string>
#include <vector>

namespace aqv {

/* 12 significant digits. Every CLI-facing writer goes through this so that
 * repeated runs stay byte-identical. */
std::string format_sig(double v);

/* 17 significant digits, enough to round-trip a double exactly. */
std::string format_full(double v);

/* Minimal CSV splitting; the formats used here never quote fields. */
std::vector<std::string> split_csv_line(const std::string& line);

double parse_double(const std::string& s, const std::string& context);
int parse_int(const std::string& s, const std::string& context);

}  // namespace aqv
