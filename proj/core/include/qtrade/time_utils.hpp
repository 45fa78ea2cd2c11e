#pragma once

#include <cstdint>
#include <string>

namespace qtrade {

/// One kline interval in milliseconds.
inline constexpr std::int64_t kMinuteMs = 60'000;

/// Parses "YYYY-MM-DD", "YYYY-MM-DDTHH:MM", "YYYY-MM-DDTHH:MM:SS" with an
/// optional trailing 'Z' into epoch milliseconds UTC. Throws ParseError on
/// malformed input.
std::int64_t parse_iso8601_ms(const std::string& text);

/// Formats epoch milliseconds UTC as "YYYY-MM-DDTHH:MM:SSZ". Sub-second parts
/// are truncated.
std::string format_iso8601_ms(std::int64_t epoch_ms);

}  // namespace qtrade
