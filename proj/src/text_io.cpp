#include "paretoapx/text_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "paretoapx/errors.hpp"

namespace paretoapx {

std::vector<TextLine> read_lines(std::istream& in) {
  std::vector<TextLine> lines;
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    std::istringstream ss(raw);
    TextLine line{no, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

Rat parse_rat(const std::string& token, std::size_t line) {
  try {
    return Rat::parse(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

PointSet read_points(std::istream& in) {
  PointSet P;
  for (const auto& line : read_lines(in)) {
    std::vector<Rat> c;
    for (const auto& t : line.tokens) c.push_back(parse_rat(t, line.number));
    if (P.dim() != 0 && c.size() != P.dim()) {
      throw ParseError(line.number, "expected " + std::to_string(P.dim()) + " coordinates, got " +
                                        std::to_string(c.size()));
    }
    try {
      P.push_back(Point(std::move(c)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return P;
}

PointSet read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_points(in);
}

void write_points(std::ostream& out, const PointSet& P) {
  for (const auto& p : P) {
    for (std::size_t i = 0; i < p.dim(); ++i) out << (i ? " " : "") << p[i];
    out << '\n';
  }
}

}  // namespace paretoapx
