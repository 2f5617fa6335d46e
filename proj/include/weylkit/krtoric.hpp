#pragma once

#include <set>
#include <vector>

#include "weylkit/hull.hpp"
#include "weylkit/root_system.hpp"

namespace weylkit {

/// v - (<v, alpha_{i0}^vee>/2) alpha_{i0}: the s_{i0}-fixed point of the
/// fiber line through v, i.e. the image of v on the wall [alpha_{i0}^vee = 0].
/// Linear and idempotent; only coordinate i0 changes.
inline RationalVector project_to_wall(const RootSystem& rs, int i0, RationalVector v) {
  const Rat p = pair_coroot(rs, v, i0);
  v.coords[i0] -= p / 2;
  return v;
}

// A class of Q(R)/Z*alpha_{i0}, carried by its wall representative. The key
// is the n-1 non-fiber coordinates of the wall projection doubled to stay
// integral; the fiber coordinate of the wall point is determined by the rest,
// so the key identifies the coset exactly.
struct WallCoset {
  int i0 = 0;
  RationalVector rep;    // on the wall: pair_coroot(rep, i0) = 0
  std::vector<Int> key;  // doubled non-fiber coordinates

  friend bool operator<(const WallCoset& a, const WallCoset& b) { return a.key < b.key; }
  friend bool operator==(const WallCoset& a, const WallCoset& b) { return a.key == b.key; }
};

inline WallCoset wall_coset_of(const RootSystem& rs, int i0, const RationalVector& v) {
  check_index(rs, i0);
  check_size(rs, v.size());
  WallCoset c;
  c.i0 = i0;
  c.rep = project_to_wall(rs, i0, v);
  c.key.reserve(rs.rank() - 1);
  for (int j = 0; j < rs.rank(); ++j) {
    if (j == i0) continue;
    const Rat doubled = 2 * c.rep.coords[j];
    if (!is_integer(doubled))
      fail(Errc::bad_vector, "coset key coordinate " + to_string(doubled) + " not half-integral");
    c.key.push_back(doubled.numerator());
  }
  return c;
}

/// Cosets whose fiber line {base + t*alpha_{i0}} meets Conv(W mu): candidates
/// are drawn from the non-fiber coordinates of the orbit bounding box, which
/// contains the hull.
inline std::set<WallCoset> wall_cosets_rhs(const RootSystem& rs, const LatticeVector& mu, int i0,
                                           Int cap) {
  check_index(rs, i0);
  const int n = rs.rank();
  const OrbitSet orbit = weyl_orbit(rs, mu, cap);
  const LatticeBox box = orbit_bounding_box(rs, orbit);
  LatticeBox nonfiber;
  for (int j = 0; j < n; ++j) {
    if (j == i0) continue;
    nonfiber.lo.push_back(box.lo[j]);
    nonfiber.hi.push_back(box.hi[j]);
  }
  box_volume_capped(nonfiber, cap);
  const WeylWords words = enumerate_weyl_words(rs, cap);
  std::set<WallCoset> out;
  for_each_box_point(nonfiber, [&](const LatticeVector& nf) {
    LatticeVector base = LatticeVector::zero(n);
    for (int j = 0, k = 0; j < n; ++j)
      if (j != i0) base[j] = nf[k++];
    if (line_meets_hull(rs, mu, RationalVector(base), i0, words))
      out.insert(wall_coset_of(rs, i0, RationalVector(base)));
  });
  return out;
}

/// Image of the hull's lattice points under the coset map: the cosets holding
/// an honest lattice point of Conv(W mu). Always a subset of the rhs set.
inline std::set<WallCoset> wall_cosets_lhs(const RootSystem& rs, const LatticeVector& mu, int i0,
                                           Int cap) {
  check_index(rs, i0);
  std::set<WallCoset> out;
  for (const LatticeVector& p : enumerate_lattice_points(rs, mu, cap))
    out.insert(wall_coset_of(rs, i0, RationalVector(p)));
  return out;
}

// Exact section counts for the orbit-polytope line bundle and its wall
// restriction, and the lifting deficit of the restriction map. The image
// condition in the character quotient is vacuous here (simply-connected
// case, X_G = 0); the report records it rather than computing it.
struct KrToricReport {
  Int h0_total = 0;  // lattice points of Conv(W mu)
  Int h0_wall = 0;   // cosets whose fiber meets the hull
  Int image = 0;     // cosets hit by lattice points
  Int h1 = 0;        // h0_wall - image
  bool verdict = false;
  std::set<WallCoset> rhs, lhs;
};

inline KrToricReport verify_kr_rank1(const RootSystem& rs, const LatticeVector& mu, int i0,
                                     Int cap) {
  if (!is_dominant(rs, mu)) fail(Errc::not_dominant, "mu = " + to_string(mu) + " not dominant");
  KrToricReport rep;
  rep.h0_total = static_cast<Int>(enumerate_lattice_points(rs, mu, cap).size());
  rep.rhs = wall_cosets_rhs(rs, mu, i0, cap);
  rep.lhs = wall_cosets_lhs(rs, mu, i0, cap);
  rep.h0_wall = static_cast<Int>(rep.rhs.size());
  rep.image = static_cast<Int>(rep.lhs.size());
  rep.h1 = rep.h0_wall - rep.image;
  rep.verdict = rep.h1 == 0 && rep.lhs == rep.rhs;
  return rep;
}

}  // namespace weylkit
