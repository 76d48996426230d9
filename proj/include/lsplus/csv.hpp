#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "lsplus/numerics.hpp"

namespace lsplus {

// Matrix CSV: one row per line, comma-separated entries, no header, no
// trailing comma. LF and CRLF both accepted. Integer files hold plain
// integers; rational files additionally allow p/q; decimal files allow
// decimal and exponent literals, parsed exactly into rationals.

class CsvError : public std::runtime_error {
public:
    explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

IntMatrix read_int_csv(const std::filesystem::path& file);
RatMatrix read_rat_csv(const std::filesystem::path& file);
RatMatrix read_decimal_csv(const std::filesystem::path& file);

void write_int_csv(const std::filesystem::path& file, const IntMatrix& m);
void write_rat_csv(const std::filesystem::path& file, const RatMatrix& m);

// "3", "-7/2", "0.25", "1e-3" -> exact rational.
Rat parse_rat(const std::string& token);

}  // namespace lsplus
