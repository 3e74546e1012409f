#pragma once

#include <filesystem>
#include <iosfwd>

#include "scnoise/sweep.hpp"

namespace scnoise {

/// CSV layout:
///   # scnoise <version>
///   # <key>: <value>            one line per metadata entry
///   <col>,<col>,...,status      unit-annotated header
///   <17 significant digits>,...,<status>
/// LF line endings; fields containing a comma, quote or newline are quoted
/// with doubled inner quotes.
void write_csv(const SweepTable& table, std::ostream& out);

/// Writes `table` to `path`; throws std::runtime_error naming the path on I/O
/// failure.
void emit_csv(const SweepTable& table, const std::filesystem::path& path);

/// Reads back what write_csv() produces. Values round-trip bit-exactly.
SweepTable parse_csv(std::istream& in);

} // namespace scnoise
