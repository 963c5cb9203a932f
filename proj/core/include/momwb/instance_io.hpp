#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "momwb/scalarize.hpp"

namespace momwb {

/// Error raised for malformed instance text. `line()` is 1-based, or 0 when
/// the problem is not tied to one line (for example a missing body).
class InstanceParseError : public std::runtime_error {
public:
    InstanceParseError(std::size_t line, const std::string& message);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Text format, whitespace separated, '#' starts a comment:
//
//   MOMWB 1 graphic <k>          MOMWB 1 uniform <k>
//   <vertex_count>               <m> <K>
//   <u> <v> <w_1> ... <w_k>      <w_1> ... <w_k>      (one line per element)
//
// Graphic vertices are 1-based in the file. Graphs must be simple.

[[nodiscard]] WeightedInstance read_instance(std::istream& in);
void write_instance(std::ostream& out, const WeightedInstance& instance);

[[nodiscard]] WeightedInstance parse_instance(const std::string& text);
[[nodiscard]] std::string format_instance(const WeightedInstance& instance);

[[nodiscard]] WeightedInstance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const WeightedInstance& instance);

}  // namespace momwb
