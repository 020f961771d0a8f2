// Deterministic SVG renderings: fans of rank at most 2, and skeleton graphs.
// All coordinates are exact rationals printed with two fixed decimals, so the
// output is byte-stable across runs and platforms.
#pragma once

#include <string>

#include "tropquot/tropicalize.hpp"

namespace tropquot {

// Rays and shaded maximal cones of a fan of rank 1 or 2.
// Throws input_error for higher rank.
std::string render_fan_svg(const Fan& f);

// The stratum graph. Rank-1 fans get the segment picture: the closed end "0"
// (stratum of the positive ray, where the coordinate character evaluates to
// +infinity), the Gauss point "eta" in the middle, and the "infinity" end,
// open when the fan has no negative ray and closed otherwise. Higher ranks
// get a layered graph, one row per cone dimension.
std::string render_skeleton_svg(const Fan& f, const SkeletonGraph& g);

}  // namespace tropquot
