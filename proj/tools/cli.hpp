#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kmss::cli {

struct ParsedMatrix {
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::size_t> row_lines;  // 1-based source line of each row
};

// Matrix file: '#' starts a comment, the first remaining line holds n, then
// n lines of n whitespace-separated integers. LF or CRLF line endings.
// Throws kmss::Error(ParseError) with the offending line number.
ParsedMatrix parse_matrix(std::istream& in);

// Runs one invocation. args excludes the program name. Returns the exit
// status: 0 success, 1 input or validation error, 2 precondition failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmss::cli
