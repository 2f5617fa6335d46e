#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylkit/hull.hpp"
#include "weylkit/orbit.hpp"
#include "weylkit/root_system.hpp"

namespace weylkit {

// A validated half-root-shift triple: z = y + alpha_{i0}/2 with y on the wall
// <., alpha_{i0}^vee> = 0 and inside Conv(O_x).
struct ShiftInstance {
  LatticeVector x;  // dominant
  LatticeVector z;
  int i0 = 0;
  RationalVector y;  // z - alpha_{i0}/2
};

inline RationalVector half_shift_base(const LatticeVector& z, int i0) {
  RationalVector y(z);
  y.coords[i0] -= Rat(1, 2);
  return y;
}

/// Validates <z, alpha_{i0}^vee> = 1 (equivalent to y lying on the wall) and
/// y in Conv(O_x), and stores the derived y.
inline ShiftInstance make_instance(const RootSystem& rs, LatticeVector x, LatticeVector z,
                                   int i0) {
  check_index(rs, i0);
  check_size(rs, x.size());
  check_size(rs, z.size());
  if (!is_dominant(rs, x)) fail(Errc::not_dominant, "x = " + to_string(x) + " is not dominant");
  const Int zp = pair_coroot(rs, z, i0);
  if (zp != 1)
    fail(Errc::bad_coroot_pairing, "<z, alpha_" + std::to_string(i0 + 1) +
                                       "^vee> = " + std::to_string(zp) + ", need 1");
  RationalVector y = half_shift_base(z, i0);
  if (!hull_contains_fast(rs, x, y))
    fail(Errc::y_outside_hull, "y = " + to_string(y) + " lies outside Conv(O_x)");
  return ShiftInstance{std::move(x), std::move(z), i0, std::move(y)};
}

// Lemma position: y is additionally dominant and coordinatewise at most x.
struct LemmaInstance {
  ShiftInstance inst;
};

inline bool is_lemma_position(const RootSystem& rs, const ShiftInstance& inst) {
  if (!is_dominant(rs, inst.y)) return false;
  for (int i = 0; i < rs.rank(); ++i)
    if (inst.y.coords[i] > inst.x.coords[i]) return false;
  return true;
}

/// Streams every LemmaInstance with x dominant, x[i] <= bound. Validity pins
/// z into the box 0 <= z <= x (y dominant forces nonnegative coordinates and
/// integrality rounds the half shift down), so the scan over the lattice box
/// of Conv(O_x) reduces to that sub-box. Lexicographic in (x, i0, z).
template <class F>
void for_each_lemma_instance(const RootSystem& rs, Int bound, Int cap, F&& visit) {
  if (bound < 1) fail(Errc::bad_vector, "bound must be >= 1");
  const int n = rs.rank();
  LatticeBox xbox;
  xbox.lo.assign(n, 0);
  xbox.hi.assign(n, bound);
  box_volume_capped(xbox, cap);
  for_each_box_point(xbox, [&](const LatticeVector& x) {
    if (!is_dominant(rs, x)) return;
    LatticeBox zbox;
    zbox.lo.assign(n, 0);
    zbox.hi = x.coords;
    box_volume_capped(zbox, cap);
    for (int i0 = 0; i0 < n; ++i0) {
      for_each_box_point(zbox, [&](const LatticeVector& z) {
        if (pair_coroot(rs, z, i0) != 1) return;
        // y = z - alpha_{i0}/2 dominant <=> 2<z,a_i^vee> >= cartan[i][i0] for all i
        for (int i = 0; i < n; ++i)
          if (2 * pair_coroot(rs, z, i) < rs.cartan[i][i0]) return;
        visit(LemmaInstance{ShiftInstance{x, z, i0, half_shift_base(z, i0)}});
      });
    }
  });
}

inline std::vector<LemmaInstance> enumerate_lemma_instances(const RootSystem& rs, Int bound,
                                                            Int cap) {
  std::vector<LemmaInstance> out;
  for_each_lemma_instance(rs, bound, cap, [&](const LemmaInstance& li) { out.push_back(li); });
  return out;
}

struct ChainReport {
  std::vector<int> chain;  // i_1 .. i_k
  int defect = 0;          // k
  LatticeVector w0z;       // dominant endpoint, z + alpha_{i_1} + ... + alpha_{i_k}
  std::vector<LatticeVector> intermediates;  // z_1 .. z_k
  bool indices_distinct = true;              // (a)
  bool start_pairing = true;                 // (b) <z, alpha_{i_1}^vee> = -1 when k >= 1
  bool interior_pairings = true;             // (c) <z, alpha_{i_j}^vee> = 0 for j >= 2
  bool adjacency = true;                     // (d) <alpha_{i_j}, alpha_{i_{j+1}}^vee> = -1
  bool membership = false;                   // hull_contains_fast(x, w0z)
};

/// Runs the dominating reflection chain: the unique start index with
/// <alpha_{i0}, alpha_{i1}^vee> < -1 and <z, alpha_{i1}^vee> = -1, then
/// repeatedly the unique unused neighbour of the previous index with
/// <z, .^vee> = 0, until the walked vector is dominant. Non-uniqueness or a
/// missing step contradicts the structure theory and is raised as an error.
inline ChainReport dominance_chain(const RootSystem& rs, const LemmaInstance& li) {
  const int n = rs.rank();
  const ShiftInstance& inst = li.inst;
  ChainReport rep;
  LatticeVector cur = inst.z;
  std::vector<bool> used(n, false);
  used[inst.i0] = true;
  while (!is_dominant(rs, cur)) {
    if (static_cast<int>(rep.chain.size()) >= n - 1)
      fail(Errc::chain_did_not_terminate,
           "chain reached length " + std::to_string(rep.chain.size()) + " in " +
               to_string(rs.type) + " with non-dominant z_k");
    int next = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      const bool eligible =
          rep.chain.empty()
              ? rs.cartan[i][inst.i0] < -1 && pair_coroot(rs, inst.z, i) == -1
              : rs.cartan[i][rep.chain.back()] == -1 && pair_coroot(rs, inst.z, i) == 0;
      if (!eligible) continue;
      if (next >= 0)
        fail(Errc::chain_step_not_unique, "both alpha_" + std::to_string(next + 1) +
                                              " and alpha_" + std::to_string(i + 1) +
                                              " continue the chain");
      next = i;
    }
    if (next < 0)
      fail(Errc::chain_step_missing,
           "z_" + std::to_string(rep.chain.size()) + " non-dominant but no eligible index");
    used[next] = true;
    rep.chain.push_back(next);
    cur = simple_reflection(rs, next, cur);
    rep.intermediates.push_back(cur);
  }
  rep.defect = static_cast<int>(rep.chain.size());
  rep.w0z = cur;

  for (std::size_t a = 0; a < rep.chain.size(); ++a)
    for (std::size_t b = a + 1; b < rep.chain.size(); ++b)
      if (rep.chain[a] == rep.chain[b]) rep.indices_distinct = false;
  if (!rep.chain.empty()) rep.start_pairing = pair_coroot(rs, inst.z, rep.chain[0]) == -1;
  for (std::size_t j = 1; j < rep.chain.size(); ++j) {
    if (pair_coroot(rs, inst.z, rep.chain[j]) != 0) rep.interior_pairings = false;
    if (rs.cartan[rep.chain[j]][rep.chain[j - 1]] != -1) rep.adjacency = false;
  }
  rep.membership = hull_contains_fast(rs, inst.x, RationalVector(rep.w0z));
  return rep;
}

/// All ordered pairs (i0, i1) with <alpha_{i0}, alpha_{i1}^vee> < -1: the
/// only positions where a half-root shift can leave the dominant chamber.
inline std::vector<std::pair<int, int>> chain_start_pairs(const RootSystem& rs) {
  std::vector<std::pair<int, int>> out;
  for (int i0 = 0; i0 < rs.rank(); ++i0)
    for (int i1 = 0; i1 < rs.rank(); ++i1)
      if (rs.cartan[i1][i0] < -1) out.emplace_back(i0, i1);
  return out;
}

struct DefectSweepResult {
  int max_defect = 0;
  std::optional<LemmaInstance> witness;  // attains max_defect (absent if no instances)
  std::optional<ChainReport> witness_chain;
  Int instances = 0;
};

inline DefectSweepResult defect_sweep(const RootSystem& rs, Int bound, Int cap) {
  DefectSweepResult res;
  for_each_lemma_instance(rs, bound, cap, [&](const LemmaInstance& li) {
    ++res.instances;
    ChainReport rep = dominance_chain(rs, li);
    if (!res.witness || rep.defect > res.max_defect) {
      res.max_defect = rep.defect;
      res.witness = li;
      res.witness_chain = std::move(rep);
    }
  });
  return res;
}

struct SweepFailure {
  LemmaInstance instance;
  std::string reason;
};

struct TheoremSweepReport {
  Int instances = 0;
  int max_defect = 0;
  std::vector<SweepFailure> failures;
};

/// Exhaustive verification of the theorem over the bounded sweep: membership
/// of w0z (hence z) by both the fast criterion and the |W| oracle, the chain
/// invariants (a)-(d) with the per-family length bounds, the intermediate
/// nonnegativity <z_j, alpha_i^vee> >= 0 for visited i, the coordinatewise
/// bound z <= x, and the strict inequality z[i_j] < x[i_j] on chain indices.
inline TheoremSweepReport verify_theorem_sweep(const RootSystem& rs, Int bound, Int cap) {
  const int n = rs.rank();
  const WeylWords words = enumerate_weyl_words(rs, cap);
  int family_bound = 0;  // structural maximum of the chain length
  switch (rs.type.family) {
    case Family::A:
    case Family::D:
    case Family::E: family_bound = 0; break;
    case Family::B:
    case Family::G: family_bound = 1; break;
    case Family::F: family_bound = 2; break;
    case Family::C: family_bound = n - 2; break;
  }
  TheoremSweepReport rep;
  for_each_lemma_instance(rs, bound, cap, [&](const LemmaInstance& li) {
    ++rep.instances;
    const auto bad = [&](const std::string& why) { rep.failures.push_back({li, why}); };
    ChainReport ch;
    try {
      ch = dominance_chain(rs, li);
    } catch (const Error& e) {
      if (e.code() == Errc::cap_exceeded) throw;
      bad(e.what());
      return;
    }
    if (ch.defect > rep.max_defect) rep.max_defect = ch.defect;

    if (!ch.membership) bad("w0z fails the fast membership criterion");
    if (!hull_contains_fast(rs, li.inst.x, RationalVector(li.inst.z)))
      bad("z fails the fast membership criterion");
    if (!hull_contains_oracle(rs, HullQuery{li.inst.x, RationalVector(ch.w0z)}, words))
      bad("w0z fails the |W|-enumeration oracle");

    if (!(ch.indices_distinct && ch.start_pairing && ch.interior_pairings && ch.adjacency))
      bad("chain conditions (a)-(d) violated");
    if (ch.defect > n - 1) bad("chain longer than n-1");
    if (ch.defect > family_bound) bad("chain exceeds the family bound");
    if (!is_dominant(rs, ch.w0z)) bad("w0z not dominant");
    LatticeVector sum = li.inst.z;
    for (int ij : ch.chain) sum.coords[ij] += 1;
    if (!(sum == ch.w0z)) bad("w0z != z + sum of chain roots");

    LatticeVector cur = li.inst.z;
    std::vector<int> visited{li.inst.i0};
    for (std::size_t j = 0; j < ch.chain.size(); ++j) {
      cur = simple_reflection(rs, ch.chain[j], cur);
      visited.push_back(ch.chain[j]);
      for (int i : visited)
        if (pair_coroot(rs, cur, i) < 0) bad("intermediate pairing went negative");
    }

    for (int i = 0; i < n; ++i)
      if (li.inst.z.coords[i] > li.inst.x.coords[i]) bad("z exceeds x coordinatewise");
    for (int ij : ch.chain)
      if (!(li.inst.z.coords[ij] < li.inst.x.coords[ij]))
        bad("strict inequality z[i_j] < x[i_j] violated");
  });
  return rep;
}

}  // namespace weylkit
