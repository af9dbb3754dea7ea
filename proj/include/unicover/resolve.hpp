#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "unicover/chart.hpp"
#include "unicover/deform.hpp"
#include "unicover/poly.hpp"

namespace unicover {

inline constexpr int kDefaultMaxDepth = 64;

struct CentralRoot {
    Poly sigma;
    int m = 0;
    /// Sigma(z, 0) = unit * sigma^m; 1 whenever the unit has a rational m-th root.
    Rational unit = 1;
};

/// Maximal m with Sigma(z, 0) = unit * sigma^m and sigma reduced.
/// Throws MalformedFamily if Sigma(z, 0) is constant or not such a power.
CentralRoot central_root(const FamilyEquation& family);

struct Smooth {};

struct BlowupStep {
    /// Center, monic in the fiber variable.
    Poly D;
    int r = 0;
    std::string fiber_var;
    std::string new_var;
    /// Working equation after D = t * new_var and division by t^r.
    Poly shifted_system;
    /// Working equation at t = 0.
    Poly p0;
};

using BlowupResult = std::variant<Smooth, BlowupStep>;

/// One step of the gcd criterion: D is the squarefree part of
/// gcd(P_0, dP_0/du, P_1) in the fiber variable u, where P_0 and P_1 are the
/// t^0 and t^1 coefficients of P. On a step, P is rewritten D-adically, D is
/// replaced by t * next_var and t^r is divided out. `next_var` must already
/// exist in the table.
BlowupResult blowup_once(const Poly& P, std::string_view fiber_var, std::string_view next_var);

/// Same step inside a chart. When only t, the fiber variable and chart leads
/// occur, the gcd is taken over Q[leads]/(centers) and dP/dt accounts for the
/// leads moving with t; a fiber that differs between components of that
/// algebra raises UnsupportedShape. Otherwise the leads are treated as free.
BlowupResult blowup_once(const Poly& P, const Chart& chart, std::string_view fiber_var, std::string_view next_var);

struct ResolutionTower {
    VarTablePtr family_vars;
    VarTablePtr vars;
    std::vector<std::string> base;
    std::vector<std::string> fibers;
    Poly sigma;
    int m = 0;
    std::string main_var;
    /// Number of leading substitutions of the form sigma = t^a v.
    std::vector<int> exponent_chain;
    std::vector<BlowupStep> steps;
    Chart chart{nullptr};
    /// sigma - t*w0, D_1 - t*w1, ..., final working equation.
    std::vector<Poly> final_system;

    int depth() const { return 1 + static_cast<int>(steps.size()); }
};

ResolutionTower resolve_family(const FamilyEquation& family, int max_depth = kDefaultMaxDepth);

/// Substitutes the relations of the final system back in reverse order and
/// clears t; the result lives in the family's variable table.
Poly reeliminate(const ResolutionTower& tower);

/// phi(t) = sum_{i=1}^N c_i t^i
struct BranchGerm {
    std::vector<Rational> coeffs;

    int truncation() const { return static_cast<int>(coeffs.size()); }
    Poly series(const VarTablePtr& vars) const;
};

/// Contact order ord_t(a - b) within the common truncation, or nullopt if the
/// truncations agree.
std::optional<int> contact_order(const BranchGerm& a, const BranchGerm& b);

/// Resolves F(y, t) = prod (y - phi_i(t)) with sigma = y.
ResolutionTower curve_resolve(const std::vector<BranchGerm>& branches, int max_depth = kDefaultMaxDepth);

}  // namespace unicover
