#pragma once

#include <deque>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "weylkit/root_system.hpp"

namespace weylkit {

struct OrbitSet {
  LatticeVector base;               // shared dominant representative
  std::set<LatticeVector> members;  // canonical (lexicographic) ordering
  Int cap = 0;
};

/// BFS closure of {u} under all simple reflections.
inline OrbitSet weyl_orbit(const RootSystem& rs, const LatticeVector& u, Int cap) {
  if (cap <= 0) fail(Errc::cap_exceeded, "orbit cap must be positive");
  check_size(rs, u.size());
  OrbitSet out;
  out.cap = cap;
  out.base = dominant_representative(rs, u).vec;
  out.members.insert(u);
  std::deque<LatticeVector> frontier{u};
  while (!frontier.empty()) {
    LatticeVector v = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      LatticeVector w = simple_reflection(rs, i, v);
      if (out.members.insert(w).second) {
        if (static_cast<Int>(out.members.size()) > cap)
          fail(Errc::cap_exceeded, "orbit of " + to_string(u) + " in " + to_string(rs.type) +
                                       " exceeds cap " + std::to_string(cap));
        frontier.push_back(std::move(w));
      }
    }
  }
  return out;
}

/// Solves cartan * u = (1,...,1) exactly and clears denominators: a lattice
/// vector with every coroot pairing strictly positive, hence with trivial
/// stabilizer in W.
inline LatticeVector strictly_dominant_vector(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(rs.cartan[i][j]);
    m[i][n] = Rat(1);
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (m[p][c] == 0) ++p;  // Cartan matrices are invertible
    std::swap(m[p], m[c]);
    const Rat inv = m[c][c];
    for (auto& x : m[c]) x /= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rat f = m[r][c];
      for (int j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  Int lcm = 1;
  for (int i = 0; i < n; ++i) lcm = std::lcm(lcm, m[i][n].denominator());
  LatticeVector u = LatticeVector::zero(n);
  for (int i = 0; i < n; ++i) u[i] = (m[i][n] * lcm).numerator();
  return u;
}

/// |W| as the orbit size of a strictly dominant vector.
inline Int weyl_group_order(const RootSystem& rs, Int cap) {
  return static_cast<Int>(weyl_orbit(rs, strictly_dominant_vector(rs), cap).members.size());
}

// One word per group element, found by BFS on the regular orbit: word applied
// left-to-right to a vector realizes the element's action.
struct WeylWords {
  std::vector<std::vector<int>> words;

  std::size_t size() const { return words.size(); }
};

inline WeylWords enumerate_weyl_words(const RootSystem& rs, Int cap) {
  if (cap <= 0) fail(Errc::cap_exceeded, "word cap must be positive");
  const LatticeVector seed = strictly_dominant_vector(rs);
  WeylWords out;
  out.words.push_back({});
  std::set<LatticeVector> seen{seed};
  std::deque<std::pair<LatticeVector, std::vector<int>>> frontier;
  frontier.emplace_back(seed, std::vector<int>{});
  while (!frontier.empty()) {
    auto [v, word] = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      LatticeVector w = simple_reflection(rs, i, v);
      if (seen.insert(w).second) {
        if (static_cast<Int>(seen.size()) > cap)
          fail(Errc::cap_exceeded,
               "|W(" + to_string(rs.type) + ")| exceeds cap " + std::to_string(cap));
        std::vector<int> next = word;
        next.push_back(i);
        out.words.push_back(next);
        frontier.emplace_back(std::move(w), std::move(next));
      }
    }
  }
  return out;
}

/// Closed-form |W| per family; cross-check for the BFS route and cheap info
/// for systems whose orbit would blow the cap (E_7, E_8).
inline Int closed_form_weyl_order(RootSystemType t) {
  if (!admissible(t)) fail(Errc::inadmissible_rank, to_string(t));
  const auto factorial = [](Int n) {
    Int f = 1;
    for (Int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  const Int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (Int{1} << n) * factorial(n);
    case Family::D: return (Int{1} << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

}  // namespace weylkit
