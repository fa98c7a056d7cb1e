#pragma once

#include <string>
#include <vector>

#include "estimate/regression.h"

namespace tonesearch {

/// Reads an F0 sequence from a file: decimal Hz values separated by newlines
/// and/or commas; blank lines and '#' comments are ignored. Throws ParseError
/// (with line number) on malformed or nonpositive values, and Error if the
/// file cannot be opened.
std::vector<double> parse_f0_file(const std::string& path);

/// Same grammar, from an in-memory string (the file reader delegates here).
std::vector<double> parse_f0_text(const std::string& text);

/// Reads measured tone-pair samples, one per line:
///   <prev-tone> <next-tone> <x_prev> <x_next>
/// e.g. "H L 219 168". Blank lines and '#' comments are ignored.
std::vector<PairSample> parse_pairs_file(const std::string& path);

std::vector<PairSample> parse_pairs_text(const std::string& text);

}  // namespace tonesearch
