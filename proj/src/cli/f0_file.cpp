#include "cli/f0_file.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "core/errors.h"

namespace tonesearch {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

double parse_number(const std::string& token, int line_no) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": not a number: '" + token + "'",
                     line_no);
  }
  return value;
}

}  // namespace

std::vector<double> parse_f0_text(const std::string& text) {
  std::vector<double> out;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    for (char& c : body) {
      if (c == ',') c = ' ';
    }
    std::istringstream tokens(body);
    std::string token;
    while (tokens >> token) {
      const double value = parse_number(token, line_no);
      if (!(value > 0.0)) {
        throw ParseError("line " + std::to_string(line_no) + ": F0 values must be positive",
                         line_no);
      }
      out.push_back(value);
    }
  }
  if (out.empty()) throw ParseError("no F0 values found", line_no == 0 ? 1 : line_no);
  return out;
}

std::vector<double> parse_f0_file(const std::string& path) {
  return parse_f0_text(read_file(path));
}

std::vector<PairSample> parse_pairs_text(const std::string& text) {
  std::vector<PairSample> out;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    std::istringstream tokens(body);
    std::string prev_tok, next_tok, x_prev_tok, x_next_tok;
    if (!(tokens >> prev_tok)) continue;  // blank line
    if (!(tokens >> next_tok >> x_prev_tok >> x_next_tok)) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected '<prev> <next> <x_prev> <x_next>'",
                       line_no);
    }
    std::string rest;
    if (tokens >> rest) {
      throw ParseError("line " + std::to_string(line_no) + ": trailing content: '" + rest + "'",
                       line_no);
    }
    PairSample s;
    try {
      const Transcription prev = parse_transcription(prev_tok);
      const Transcription next = parse_transcription(next_tok);
      if (prev.size() != 1 || next.size() != 1) {
        throw ParseError("line " + std::to_string(line_no) + ": expected single tones", line_no);
      }
      s.prev_tone = prev[0];
      s.next_tone = next[0];
    } catch (const ParseError&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad tone token", line_no);
    }
    s.x_prev = parse_number(x_prev_tok, line_no);
    s.x_next = parse_number(x_next_tok, line_no);
    if (!(s.x_prev > 0.0 && s.x_next > 0.0)) {
      throw ParseError("line " + std::to_string(line_no) + ": F0 values must be positive",
                       line_no);
    }
    out.push_back(s);
  }
  if (out.empty()) throw ParseError("no samples found", line_no == 0 ? 1 : line_no);
  return out;
}

std::vector<PairSample> parse_pairs_file(const std::string& path) {
  return parse_pairs_text(read_file(path));
}

}  // namespace tonesearch
