#pragma once

// Projective points with canonical representatives, and enumeration of
// P^N(F_q) in a fixed scan order.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "segre/errors.hpp"
#include "segre/field.hpp"

namespace segre {

/// Point of P^n; the first nonzero coordinate is scaled to 1.
template <CoefficientField K>
class ProjectivePoint {
 public:
  using Element = typename K::Element;

  ProjectivePoint(const K& field, std::vector<Element> coords) : coords_(std::move(coords)) {
    std::size_t first = 0;
    while (first < coords_.size() && field.is_zero(coords_[first])) ++first;
    if (first == coords_.size()) throw std::invalid_argument("projective point with all coordinates zero");
    auto inv = field.inv(coords_[first]);
    for (auto& c : coords_) c = field.mul(c, inv);
  }

  std::size_t size() const { return coords_.size(); }
  const std::vector<Element>& coordinates() const { return coords_; }
  const Element& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }

  std::string to_string(const K& field) const {
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ",";
      out += field.format(coords_[i]);
    }
    return out + "]";
  }

 private:
  std::vector<Element> coords_;
};

/// Parses "[a,b,c]" (brackets optional) into coordinates over `field`.
template <CoefficientField K>
std::vector<typename K::Element> parse_coordinates(const K& field, std::string text) {
  std::erase_if(text, [](char c) { return c == ' ' || c == '[' || c == ']' || c == '(' || c == ')'; });
  std::vector<typename K::Element> coords;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (piece.empty()) throw ParseError("empty coordinate in '" + text + "'");
    coords.push_back(field.parse(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return coords;
}

/// Number of points of P^N(F_q), or nullopt-like max when it overflows.
inline std::uint64_t projective_point_count(std::uint64_t q, unsigned dimension) {
  std::uint64_t total = 0, block = 1;
  for (unsigned k = 0; k <= dimension; ++k) {
    total += block;
    if (k < dimension) {
      if (block > UINT64_MAX / q) return UINT64_MAX;
      block *= q;
    }
  }
  return total;
}

/// The index-th canonical point of P^N(F_q) in scan order: points whose first
/// nonzero coordinate sits later come first; within a block the trailing
/// coordinates count up lexicographically.  Overall this is ascending
/// lexicographic order of the canonical coordinate vectors.
inline std::vector<std::uint32_t> projective_point_at(std::uint64_t index, std::uint32_t q, unsigned dimension) {
  std::vector<std::uint32_t> coords(dimension + 1, 0);
  std::uint64_t block = 1;
  for (unsigned k = dimension + 1; k-- > 0;) {
    if (index < block) {
      coords[k] = 1;
      for (unsigned pos = dimension; pos > k; --pos) {
        coords[pos] = static_cast<std::uint32_t>(index % q);
        index /= q;
      }
      return coords;
    }
    index -= block;
    block *= q;
  }
  throw std::out_of_range("projective point index out of range");
}

}  // namespace segre
