#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "weylkit/errors.hpp"
#include "weylkit/vectors.hpp"

namespace weylkit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct RootSystemType {
  Family family;
  int rank;

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

// C_2 and D_3 are rejected as duplicates of B_2 and A_3; E/F/G have fixed ranks.
inline bool admissible(RootSystemType t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 3;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank == 6 || t.rank == 7 || t.rank == 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

inline std::string to_string(RootSystemType t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

/// Parses "C4", "G2", ... (family letter immediately followed by the rank).
inline RootSystemType parse_root_system_type(std::string_view s) {
  if (s.size() < 2 || std::string_view("ABCDEFG").find(s[0]) == std::string_view::npos)
    fail(Errc::inadmissible_rank, "cannot parse root system type '" + std::string(s) + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      fail(Errc::inadmissible_rank, "cannot parse root system type '" + std::string(s) + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  return RootSystemType{static_cast<Family>(s[0]), rank};
}

// cartan[i][j] = <alpha_j, alpha_i^vee>: row i is the coroot functional
// alpha_i^vee written in the simple-root coordinate basis. Indices are
// 0-based; simple root alpha_k of the plates is index k-1.
struct RootSystem {
  RootSystemType type;
  std::vector<std::vector<int>> cartan;

  int rank() const { return type.rank; }
};

/// Builds the Cartan matrix for an admissible type. B/C/F/G carry the
/// asymmetric entries at the positions fixed by the chain-start cases
/// (<alpha_{n-1},alpha_n^vee> = -2 for B_n, <alpha_n,alpha_{n-1}^vee> = -2
/// for C_n, <alpha_2,alpha_3^vee> = -2 for F_4, <alpha_1,alpha_2^vee> = -3
/// for G_2); A/D/E follow the standard linear/forked numbering.
inline RootSystem build_root_system(RootSystemType t) {
  if (!admissible(t))
    fail(Errc::inadmissible_rank, to_string(t) + " is not an admissible irreducible type");
  const int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  const auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 2; ++i) bond(i, i + 1);
      bond(n - 3, n - 2);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      bond(0, 2);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      bond(1, 3);
      if (n >= 7) bond(5, 6);
      if (n == 8) bond(6, 7);
      break;
    case Family::F:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a[2][1] = -2;
      break;
    case Family::G:
      bond(0, 1);
      a[1][0] = -3;
      break;
  }
  return RootSystem{t, std::move(a)};
}

inline void check_index(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank())
    fail(Errc::index_out_of_range,
         "simple-root index " + std::to_string(i) + " for " + to_string(rs.type));
}

inline void check_size(const RootSystem& rs, std::size_t n) {
  if (n != static_cast<std::size_t>(rs.rank()))
    fail(Errc::bad_vector, "vector has " + std::to_string(n) + " coordinates, " +
                               to_string(rs.type) + " needs " + std::to_string(rs.rank()));
}

/// alpha_i as a lattice vector (the i-th standard basis vector).
inline LatticeVector simple_root(const RootSystem& rs, int i) {
  check_index(rs, i);
  auto v = LatticeVector::zero(rs.rank());
  v[i] = 1;
  return v;
}

/// <u, alpha_i^vee> = sum_j cartan[i][j] * u[j]. Integer on lattice input.
template <class Vec>
auto pair_coroot(const RootSystem& rs, const Vec& u, int i) {
  check_index(rs, i);
  check_size(rs, u.size());
  typename std::decay_t<decltype(u.coords)>::value_type acc{};
  for (int j = 0; j < rs.rank(); ++j) acc += rs.cartan[i][j] * u.coords[j];
  return acc;
}

/// <u, varpi_i>: a coordinate read-off in the simple-root basis.
template <class Vec>
auto coweight_coordinate(const Vec& u, int i) {
  if (i < 0 || static_cast<std::size_t>(i) >= u.size())
    fail(Errc::index_out_of_range, "coweight index " + std::to_string(i));
  return u.coords[i];
}

template <class Vec>
bool is_dominant(const RootSystem& rs, const Vec& u) {
  for (int i = 0; i < rs.rank(); ++i)
    if (pair_coroot(rs, u, i) < 0) return false;
  return true;
}

/// s_i(u) = u - <u, alpha_i^vee> alpha_i: only coordinate i changes.
template <class Vec>
Vec simple_reflection(const RootSystem& rs, int i, Vec u) {
  u.coords[i] -= pair_coroot(rs, u, i);
  return u;
}

template <class Vec>
struct DominantRep {
  Vec vec;                // the unique dominant vector in the W-orbit
  std::vector<int> word;  // s_{word[0]}, s_{word[1]}, ... applied in order to the input
};

/// While some coroot pairing is negative, reflect at the smallest such index.
/// Each step raises the reflected coordinate, so the walk through the finite
/// orbit terminates; the result is the unique dominant orbit point.
template <class Vec>
DominantRep<Vec> dominant_representative(const RootSystem& rs, Vec u) {
  check_size(rs, u.size());
  std::vector<int> word;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (pair_coroot(rs, u, i) < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) return {std::move(u), std::move(word)};
    u = simple_reflection(rs, neg, std::move(u));
    word.push_back(neg);
  }
}

template <class Vec>
Vec apply_word(const RootSystem& rs, const std::vector<int>& word, Vec u) {
  for (int i : word) u = simple_reflection(rs, i, std::move(u));
  return u;
}

}  // namespace weylkit
