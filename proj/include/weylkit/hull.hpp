#pragma once

#include <optional>
#include <set>
#include <vector>

#include "weylkit/orbit.hpp"
#include "weylkit/root_system.hpp"

namespace weylkit {

struct HullQuery {
  LatticeVector x;   // dominant
  RationalVector v;  // point whose membership in Conv(O_x) is asked
};

/// Membership by the coweight criterion: v is in Conv(O_x) iff its dominant
/// representative is coordinatewise at most x. Never enumerates W.
inline bool hull_contains_fast(const RootSystem& rs, const HullQuery& q) {
  check_size(rs, q.x.size());
  const RationalVector d = dominant_representative(rs, q.v).vec;
  for (int i = 0; i < rs.rank(); ++i)
    if (d.coords[i] > q.x.coords[i]) return false;
  return true;
}

inline bool hull_contains_fast(const RootSystem& rs, const LatticeVector& x,
                               const RationalVector& v) {
  return hull_contains_fast(rs, HullQuery{x, v});
}

/// Brute-force membership against the half-space description: checks
/// <wv, varpi_i> <= <x, varpi_i> for every one of the |W| words and every i.
inline bool hull_contains_oracle(const RootSystem& rs, const HullQuery& q, const WeylWords& words) {
  check_size(rs, q.x.size());
  for (const auto& word : words.words) {
    const RationalVector wv = apply_word(rs, word, q.v);
    for (int i = 0; i < rs.rank(); ++i)
      if (wv.coords[i] > q.x.coords[i]) return false;
  }
  return true;
}

inline bool hull_contains_oracle(const RootSystem& rs, const HullQuery& q, Int cap) {
  return hull_contains_oracle(rs, q, enumerate_weyl_words(rs, cap));
}

struct LatticeBox {
  std::vector<Int> lo, hi;  // inclusive, per simple-root coordinate
};

/// Coordinatewise extrema over the orbit; contains Conv(O_x).
inline LatticeBox orbit_bounding_box(const RootSystem& rs, const OrbitSet& orbit) {
  LatticeBox box;
  box.lo.assign(rs.rank(), 0);
  box.hi.assign(rs.rank(), 0);
  bool first = true;
  for (const auto& p : orbit.members) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (first || p[i] < box.lo[i]) box.lo[i] = p[i];
      if (first || p[i] > box.hi[i]) box.hi[i] = p[i];
    }
    first = false;
  }
  return box;
}

inline Int box_volume_capped(const LatticeBox& box, Int cap) {
  Int vol = 1;
  for (std::size_t i = 0; i < box.lo.size(); ++i) {
    vol *= box.hi[i] - box.lo[i] + 1;
    if (vol > cap) fail(Errc::cap_exceeded, "lattice box volume exceeds cap " + std::to_string(cap));
  }
  return vol;
}

/// Visits every integer point of the box in ascending lexicographic order.
template <class F>
void for_each_box_point(const LatticeBox& box, F&& visit) {
  const std::size_t n = box.lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (box.lo[i] > box.hi[i]) return;
  LatticeVector v(std::vector<Int>(box.lo));
  for (;;) {
    visit(static_cast<const LatticeVector&>(v));
    std::size_t i = n;
    while (i > 0 && v[i - 1] == box.hi[i - 1]) --i;
    if (i == 0) return;
    ++v[i - 1];
    for (std::size_t j = i; j < n; ++j) v.coords[j] = box.lo[j];
  }
}

/// All lattice points of Conv(O_x): box scan from the orbit extrema filtered
/// by the fast criterion.
inline std::set<LatticeVector> enumerate_lattice_points(const RootSystem& rs,
                                                        const LatticeVector& x, Int cap) {
  const OrbitSet orbit = weyl_orbit(rs, x, cap);
  const LatticeBox box = orbit_bounding_box(rs, orbit);
  box_volume_capped(box, cap);
  std::set<LatticeVector> pts;
  for_each_box_point(box, [&](const LatticeVector& v) {
    if (hull_contains_fast(rs, x, v)) pts.insert(v);
  });
  return pts;
}

struct RatInterval {
  Rat lo, hi;  // lo <= hi
};

/// Decides whether {base + t*alpha_dir : t rational} meets Conv(O_x) by
/// intersecting all |W|*n half-space constraints, each linear in t, into one
/// interval. Engaged result <=> the line meets the hull.
inline std::optional<RatInterval> line_meets_hull(const RootSystem& rs, const LatticeVector& x,
                                                  const RationalVector& base, int dir,
                                                  const WeylWords& words) {
  check_index(rs, dir);
  check_size(rs, base.size());
  const RationalVector alpha(simple_root(rs, dir));
  bool have_lo = false, have_hi = false;
  Rat lo, hi;
  for (const auto& word : words.words) {
    const RationalVector wb = apply_word(rs, word, base);
    const RationalVector wd = apply_word(rs, word, alpha);
    for (int i = 0; i < rs.rank(); ++i) {
      const Rat& c = wb.coords[i];
      const Rat& d = wd.coords[i];
      const Rat bound = Rat(x.coords[i]);
      if (d == 0) {
        if (c > bound) return std::nullopt;
      } else if (d > 0) {
        const Rat t = (bound - c) / d;
        if (!have_hi || t < hi) {
          hi = t;
          have_hi = true;
        }
      } else {
        const Rat t = (bound - c) / d;
        if (!have_lo || t > lo) {
          lo = t;
          have_lo = true;
        }
      }
    }
  }
  // alpha_dir and its reflection s_dir(alpha_dir) = -alpha_dir bound t on
  // both sides, so a compact hull always yields two finite bounds.
  if (!have_lo || !have_hi) fail(Errc::bad_vector, "unbounded line-hull intersection");
  if (lo > hi) return std::nullopt;
  return RatInterval{lo, hi};
}

inline std::optional<RatInterval> line_meets_hull(const RootSystem& rs, const LatticeVector& x,
                                                  const RationalVector& base, int dir, Int cap) {
  return line_meets_hull(rs, x, base, dir, enumerate_weyl_words(rs, cap));
}

}  // namespace weylkit
