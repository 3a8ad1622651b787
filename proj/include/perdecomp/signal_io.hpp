#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "perdecomp/signal.hpp"

namespace perdecomp {

enum class SignalFormat { csv, json };

/// ".json" selects JSON, anything else CSV.
SignalFormat format_for_path(std::string_view path);

/// Header "x,y", then one "j*step,value" row per sample, 17 significant digits.
std::string to_csv(const Signal& f);

/// {"period": "num/den", "samples": [...]}
std::string to_json_text(const Signal& f);

/// The x column is checked against the grid but values come from the y column.
/// Without an explicit period it is recovered from the x spacing, which needs
/// at least two rows. Throws ParseError.
Signal parse_csv(std::string_view text, std::optional<Rational> period = std::nullopt);

Signal parse_signal_json(std::string_view text);

std::string serialize(const Signal& f, SignalFormat format);

/// Throws IoError / ParseError.
Signal read_signal_file(const std::string& path, std::optional<Rational> period = std::nullopt);
void write_signal_file(const std::string& path, const Signal& f, SignalFormat format);

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational approximate_rational(double x, std::int64_t max_den);

}  // namespace perdecomp
