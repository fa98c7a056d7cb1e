#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/model.h"

namespace tonesearch {

enum class OutputMode : uint8_t { Text, Machine };

/// Shortest decimal representation that round-trips to the same double.
std::string format_full(double v);

/// Fixed-point with `decimals` digits; used for the human-readable display.
std::string format_fixed(double v, int decimals);

/// F0 row for display: one decimal by default, integers with `round_values`.
std::string format_f0_row(std::span<const double> values, bool round_values);

/// Everything needed to reproduce a result: the canonical argument vector of
/// the invocation (seed already resolved) plus tool metadata. It is printed
/// as '#'-prefixed lines at the top of every result.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;  ///< canonical, starting with the subcommand

  std::string to_lines() const;
};

/// One solution block. Text mode mirrors the familiar row display: tones,
/// h, l, d and E on one line, predicted F0 values underneath. Machine mode
/// is a stable key:value record with full-precision numbers.
std::string format_solution(const Solution& s, OutputMode mode, const RTable& table,
                            std::span<const double> f0, bool round_values = false);

/// Parses one machine-mode solution block back; exact round trip.
Solution parse_solution(const std::string& block);

}  // namespace tonesearch
