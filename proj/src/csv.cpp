#include "dca/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dca::csv {

namespace {

[[noreturn]] void fail_at(const std::filesystem::path& path, std::size_t line,
                          const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

void append_row(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current += c;
        }
    }
    fields.push_back(current);
    return fields;
}

void for_each_row(const std::filesystem::path& path, const std::string& expected_header,
                  std::size_t arity,
                  const std::function<void(std::size_t, const std::vector<std::string>&)>& consume) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) fail_at(path, 1, "empty file, expected header");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header)
        fail_at(path, line_no, "unexpected header '" + line + "', expected '" +
                                   expected_header + "'");

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_fields(line);
        if (fields.size() != arity)
            fail_at(path, line_no, "expected " + std::to_string(arity) + " fields, found " +
                                       std::to_string(fields.size()));
        consume(line_no, fields);
    }
}

double parse_real(const std::string& field, const std::filesystem::path& path,
                  std::size_t line) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0' || errno == ERANGE)
        fail_at(path, line, "malformed real number '" + field + "'");
    return v;
}

std::uint64_t parse_count(const std::string& field, const std::filesystem::path& path,
                          std::size_t line) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(field.c_str(), &end, 10);
    if (end == field.c_str() || *end != '\0' || errno == ERANGE || field.find('-') != std::string::npos)
        fail_at(path, line, "malformed non-negative integer '" + field + "'");
    return v;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace dca::csv
