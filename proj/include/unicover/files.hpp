#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unicover/deform.hpp"
#include "unicover/resolve.hpp"
#include "unicover/tower.hpp"

namespace unicover {

// Line-oriented `key: value` files; `#` starts a comment.
//
// Tower file:
//   base: z0 z1
//   fibers: w0            optional, defaults to w0 .. wk
//   chain: 1 2            separators may be spaces, commas or `|`
//   exponents: 1          optional, defaults to all 1
//   sigma: z0^2 + z1^2
//   eq: w0^2 + z0^2*z1^2  one line per level, Q_1 first
//
// Weights are not declared: base variables weigh 1 and w_j weighs
// deg(sigma) * m_j.

/// Structural parse only; normal-type rules are left to validate_normal_type.
CoveringTower parse_tower(std::string_view text);

/// `base:`, optional `sigma:` and `m:`, then exactly one of `Sigma:` or the
/// sigma-adic block `a1:` .. `am:` (which needs `sigma:`).
FamilyEquation parse_family(std::string_view text);

/// One `branch: c1 c2 ...` line per germ c1*t + c2*t^2 + ...
std::vector<BranchGerm> parse_branches(std::string_view text);

std::string render_tower(const CoveringTower& tower);

/// With `adic`, the sigma-adic coefficients follow as comment lines so the
/// output still parses as a family file.
std::string render_family(const FamilyEquation& family, const SigmaAdic* adic = nullptr);

/// Step log as comments, then the standard-form system.
std::string render_resolution(const ResolutionTower& tower);

}  // namespace unicover
