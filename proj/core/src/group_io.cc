#include "orbitals/group_io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "orbitals/errors.h"

namespace orbitals {

namespace {

std::string_view Trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const std::size_t first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const std::size_t last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::size_t ParseDegreeLine(std::string_view line, std::size_t line_number) {
  constexpr std::string_view kKey = "degree:";
  const std::string where = "line " + std::to_string(line_number) + ": ";
  if (line.substr(0, kKey.size()) != kKey) {
    throw ParseError(where + "expected 'degree: n', got '" +
                     std::string(line) + "'");
  }
  const std::string_view digits = Trim(line.substr(kKey.size()));
  std::size_t degree = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), degree);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size() || degree == 0) {
    throw ParseError(where + "degree must be a positive integer, got '" +
                     std::string(digits) + "'");
  }
  return degree;
}

}  // namespace

PermGroup ParseGroup(std::string_view text) {
  std::optional<std::size_t> degree;
  std::vector<Permutation> generators;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("\n;", start);
    if (end == std::string_view::npos) end = text.size();
    ++line_number;
    const std::string_view line = Trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (!degree) {
      degree = ParseDegreeLine(line, line_number);
      continue;
    }
    try {
      generators.push_back(ParseCycles(line, *degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_number) + ": " +
                       e.what());
    }
  }
  if (!degree) throw ParseError("missing 'degree: n' line");
  return PermGroup(*degree, std::move(generators));
}

PermGroup ReadGroupFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseGroup(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string FormatGroup(const PermGroup& group) {
  std::ostringstream out;
  out << "degree: " << group.degree() << '\n';
  for (const Permutation& g : group.generators()) {
    out << g.ToCycleString() << '\n';
  }
  return out.str();
}

}  // namespace orbitals
