#include "orbitals/permutation.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>

#include "orbitals/errors.h"

namespace orbitals {

Permutation Permutation::Identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  return Permutation(std::move(images));
}

Permutation Permutation::FromImages(std::vector<Point> images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n + 1, false);
  for (Point image : images) {
    if (image < 1 || image > n) {
      ThrowDomainError("image " + std::to_string(image) +
                       " outside 1.." + std::to_string(n));
    }
    if (seen[image]) {
      ThrowDomainError("image " + std::to_string(image) +
                       " occurs twice; not a bijection");
    }
    seen[image] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::Transposition(std::size_t degree, Point a, Point b) {
  if (a < 1 || a > degree || b < 1 || b > degree) {
    ThrowDomainError("transposition point outside 1.." +
                     std::to_string(degree));
  }
  Permutation result = Identity(degree);
  std::swap(result.images_[a - 1], result.images_[b - 1]);
  return result;
}

Point Permutation::Apply(Point point) const {
  if (point < 1 || point > images_.size()) {
    ThrowDomainError("point " + std::to_string(point) + " outside 1.." +
                     std::to_string(images_.size()));
  }
  return images_[point - 1];
}

Permutation Permutation::Inverse() const {
  std::vector<Point> inverse(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inverse[images_[i] - 1] = static_cast<Point>(i + 1);
  }
  return Permutation(std::move(inverse));
}

bool Permutation::IsIdentity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

std::optional<Point> Permutation::FirstMovedPoint() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return static_cast<Point>(i + 1);
  }
  return std::nullopt;
}

std::string Permutation::ToCycleString() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i + 1) continue;
    out << '(';
    Point p = static_cast<Point>(i + 1);
    bool first = true;
    while (!done[p - 1]) {
      done[p - 1] = true;
      if (!first) out << ',';
      out << p;
      first = false;
      p = images_[p - 1];
    }
    out << ')';
  }
  std::string text = out.str();
  return text.empty() ? "()" : text;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    ThrowDomainError("cannot compose permutations of degree " +
                     std::to_string(p.degree()) + " and " +
                     std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = q.images_[p.images_[i] - 1];
  }
  return Permutation(std::move(images));
}

Permutation Compose(const Permutation& p, const Permutation& q) {
  return p * q;
}

Permutation Inverse(const Permutation& p) { return p.Inverse(); }

Point Apply(const Permutation& p, Point point) { return p.Apply(point); }

namespace {

Point ParsePointToken(std::string_view token, std::size_t degree) {
  if (token.empty()) throw ParseError("empty point in cycle");
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("malformed point '" + std::string(token) + "'");
  }
  if (value < 1 || value > degree) {
    throw ParseError("point " + std::string(token) + " outside 1.." +
                     std::to_string(degree));
  }
  return static_cast<Point>(value);
}

std::vector<Point> ParseCycleBody(std::string_view body, std::size_t degree) {
  std::vector<Point> cycle;
  if (body.empty()) return cycle;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      cycle.push_back(ParsePointToken(
          body.substr(start, comma == std::string_view::npos ? comma
                                                             : comma - start),
          degree));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return cycle;
  }
  if (body.size() == 1) {
    cycle.push_back(ParsePointToken(body, degree));
    return cycle;
  }
  // Compact form "(123)": only unambiguous for single-digit domains.
  if (degree >= 10) {
    throw ParseError("cycle '(" + std::string(body) +
                     ")' needs commas when the degree is 10 or more");
  }
  for (std::size_t i = 0; i < body.size(); ++i) {
    cycle.push_back(ParsePointToken(body.substr(i, 1), degree));
  }
  return cycle;
}

}  // namespace

Permutation ParseCycles(std::string_view text, std::size_t degree) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw ParseError("empty permutation; write () for id");

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<bool> used(degree + 1, false);

  std::string_view rest = compact;
  while (!rest.empty()) {
    if (rest.front() != '(') {
      throw ParseError("expected '(' in '" + compact + "'");
    }
    const std::size_t close = rest.find(')');
    if (close == std::string_view::npos) {
      throw ParseError("unterminated cycle in '" + compact + "'");
    }
    const std::string_view body = rest.substr(1, close - 1);
    if (body.find('(') != std::string_view::npos) {
      throw ParseError("nested '(' in '" + compact + "'");
    }
    const std::vector<Point> cycle = ParseCycleBody(body, degree);
    for (Point p : cycle) {
      if (used[p]) {
        throw ParseError("point " + std::to_string(p) +
                         " repeated in '" + compact + "'");
      }
      used[p] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    }
    rest.remove_prefix(close + 1);
  }
  return Permutation::FromImages(std::move(images));
}

}  // namespace orbitals
