#pragma once

// Exact-arithmetic toolkit for Weyl-orbit convex hulls: root systems and
// their elementary Weyl operations, orbit and hull computations, the
// half-root-shift dominance chains, and the rank-1 wall-coset lifting check.

#include "weylkit/errors.hpp"
#include "weylkit/hull.hpp"
#include "weylkit/krtoric.hpp"
#include "weylkit/orbit.hpp"
#include "weylkit/rational.hpp"
#include "weylkit/root_system.hpp"
#include "weylkit/shift.hpp"
#include "weylkit/vectors.hpp"

namespace weylkit {
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "weylkit/1";
}  // namespace weylkit
