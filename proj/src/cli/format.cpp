#include "cli/format.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cli/version.h"
#include "core/errors.h"

namespace tonesearch {

std::string format_full(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw Error("number formatting failed");
  return std::string(buf, ptr);
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string format_f0_row(std::span<const double> values, bool round_values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += round_values ? format_fixed(std::round(values[i]), 0) : format_fixed(values[i], 1);
  }
  return out;
}

std::string RunManifest::to_lines() const {
  std::string out = "# tonesearch " + std::string(kToolVersion) + "\n# command: " + command +
                    "\n# argv:";
  for (const std::string& a : argv) {
    out += ' ';
    out += a;
  }
  out += '\n';
  return out;
}

std::string format_solution(const Solution& s, OutputMode mode, const RTable& table,
                            std::span<const double> f0, bool round_values) {
  std::vector<double> predicted;
  if (!f0.empty()) {
    predicted = generate_contour(s.transcription, f0.front(), s.params, table);
  }
  std::string out;
  if (mode == OutputMode::Machine) {
    out += "tones: " + transcription_to_string(s.transcription) + "\n";
    out += "h: " + format_full(s.params.h) + "\n";
    out += "l: " + format_full(s.params.l) + "\n";
    out += "d: " + format_full(s.params.d) + "\n";
    out += "E: " + format_full(s.evaluation) + "\n";
    if (!predicted.empty()) {
      out += "predicted:";
      for (double v : predicted) {
        out += ' ';
        out += format_full(v);
      }
      out += '\n';
    }
  } else {
    out += transcription_to_string(s.transcription);
    out += "  h:" + format_fixed(s.params.h, 1) + " l:" + format_fixed(s.params.l, 1) +
           " d:" + format_fixed(s.params.d, 2) + " E:" + format_fixed(s.evaluation, 2) + "\n";
    if (!predicted.empty()) {
      out += "  " + format_f0_row(predicted, round_values) + "\n";
    }
  }
  return out;
}

namespace {

double parse_double_exact(const std::string& text) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("bad number: '" + text + "'", 1);
  return v;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

Solution parse_solution(const std::string& block) {
  Solution s;
  bool have_tones = false, have_h = false, have_l = false, have_d = false, have_e = false;
  std::istringstream stream(block);
  std::string line;
  while (std::getline(stream, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    const std::string key = trimmed(line.substr(0, colon));
    const std::string value = trimmed(line.substr(colon + 1));
    if (key == "tones") {
      s.transcription = parse_transcription(value);
      have_tones = true;
    } else if (key == "h") {
      s.params.h = parse_double_exact(value);
      have_h = true;
    } else if (key == "l") {
      s.params.l = parse_double_exact(value);
      have_l = true;
    } else if (key == "d") {
      s.params.d = parse_double_exact(value);
      have_d = true;
    } else if (key == "E") {
      s.evaluation = parse_double_exact(value);
      have_e = true;
    }
  }
  if (!(have_tones && have_h && have_l && have_d && have_e)) {
    throw ParseError("incomplete solution block", 1);
  }
  return s;
}

}  // namespace tonesearch
