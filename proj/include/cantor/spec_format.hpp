#pragma once

#include <string>
#include <string_view>

#include "cantor/digits.hpp"
#include "cantor/errors.hpp"

namespace cantor {

/// Parses the system spec text format:
///
///   # comment
///   beta = 1/5
///   preperiod = [ {0,2}, {1,2} ]     (optional; may be [])
///   period = [ {0,1,2} ]             (required, nonempty)
///
/// Whitespace-insensitive around tokens; digits are decimal integers,
/// optionally negative. Errors cite source:line and the offending token.
CantorSystem parse_system(std::string_view text, std::string_view source_name = "<input>");

/// Reads and parses a spec file; errors cite the path.
CantorSystem load_system(const std::string& path);

/// Canonical spec text for a system; parse_system(format_system(s)) == s.
std::string format_system(const CantorSystem& system);

/// "{0,2}" rendering shared by reports.
std::string format_digit_set(const DigitSet& s);

/// Code literal "pre|per", e.g. "0,0|2,0" or "|2,0" (empty preperiod).
std::string format_code(const Code& code);
Code parse_code(std::string_view text);

}  // namespace cantor
