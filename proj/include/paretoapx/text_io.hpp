#ifndef PARETOAPX_TEXT_IO_HPP
#define PARETOAPX_TEXT_IO_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "paretoapx/point.hpp"

namespace paretoapx {

/// Non-comment, non-blank lines of a text stream, tokenized on whitespace.
struct TextLine {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};
std::vector<TextLine> read_lines(std::istream& in);

/// Parses a rational token; throws ParseError tagged with `line`.
Rat parse_rat(const std::string& token, std::size_t line);

/// One point per line, whitespace-separated "a" or "a/b"; '#' starts a comment line.
PointSet read_points(std::istream& in);
PointSet read_points_file(const std::string& path);
void write_points(std::ostream& out, const PointSet& P);

}  // namespace paretoapx

#endif
