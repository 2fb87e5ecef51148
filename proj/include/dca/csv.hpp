#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace dca::csv {

// Minimal comma-separated text helpers shared by the session and report
// formats. All real numbers are written with "%.6f" so identical data
// serialises to identical bytes.

std::string format_real(double v);

void append_row(std::string& out, const std::vector<std::string>& fields);

std::vector<std::string> split_fields(const std::string& line);

// Reads a delimited file, checks the header, and hands each data row to
// `consume(line_number, fields)`. Throws std::runtime_error as
// "<path>:<line>: <what>" for a missing file, wrong header, or wrong arity.
void for_each_row(const std::filesystem::path& path, const std::string& expected_header,
                  std::size_t arity,
                  const std::function<void(std::size_t, const std::vector<std::string>&)>& consume);

// Field parsers that throw with "<path>:<line>: <what>" context.
double parse_real(const std::string& field, const std::filesystem::path& path, std::size_t line);
std::uint64_t parse_count(const std::string& field, const std::filesystem::path& path,
                          std::size_t line);

void write_text_file(const std::filesystem::path& path, const std::string& contents);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace dca::csv
