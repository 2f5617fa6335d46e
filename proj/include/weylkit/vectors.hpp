#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/errors.hpp"
#include "weylkit/rational.hpp"

namespace weylkit {

// Vectors are stored in simple-root coordinates: u = sum_i coords[i] * alpha_i.
// With this basis <u, varpi_i> is a coordinate read-off and <u, alpha_i^vee>
// is a Cartan row product; no Euclidean embedding is ever needed.

struct LatticeVector {
  std::vector<Int> coords;

  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> c) : coords(std::move(c)) {}
  LatticeVector(std::initializer_list<Int> c) : coords(c) {}
  static LatticeVector zero(std::size_t n) { return LatticeVector(std::vector<Int>(n, 0)); }

  std::size_t size() const { return coords.size(); }
  Int& operator[](std::size_t i) { return coords[i]; }
  Int operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
    return std::lexicographical_compare_three_way(a.coords.begin(), a.coords.end(),
                                                  b.coords.begin(), b.coords.end());
  }

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] -= b.coords[i];
    return a;
  }
  friend LatticeVector operator*(Int s, LatticeVector a) {
    for (auto& c : a.coords) c *= s;
    return a;
  }
};

struct RationalVector {
  std::vector<Rat> coords;

  RationalVector() = default;
  explicit RationalVector(std::vector<Rat> c) : coords(std::move(c)) {}
  RationalVector(std::initializer_list<Rat> c) : coords(c) {}
  // Lossless embedding of Q(R) into Q(R) tensor Q.
  RationalVector(const LatticeVector& v) : coords(v.coords.begin(), v.coords.end()) {}
  static RationalVector zero(std::size_t n) { return RationalVector(std::vector<Rat>(n, Rat(0))); }

  std::size_t size() const { return coords.size(); }
  Rat& operator[](std::size_t i) { return coords[i]; }
  const Rat& operator[](std::size_t i) const { return coords[i]; }

  bool is_integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rat& r) { return is_integer(r); });
  }
  std::optional<LatticeVector> to_lattice() const {
    if (!is_integral()) return std::nullopt;
    LatticeVector v;
    v.coords.reserve(coords.size());
    for (const auto& c : coords) v.coords.push_back(c.numerator());
    return v;
  }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
  friend bool operator<(const RationalVector& a, const RationalVector& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                        b.coords.end());
  }

  friend RationalVector operator+(RationalVector a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] -= b.coords[i];
    return a;
  }
  friend RationalVector operator*(const Rat& s, RationalVector a) {
    for (auto& c : a.coords) c *= s;
    return a;
  }
};

inline std::string to_string(const LatticeVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v.coords[i]);
  }
  return out + ")";
}

inline std::string to_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v.coords[i]);
  }
  return out + ")";
}

}  // namespace weylkit
