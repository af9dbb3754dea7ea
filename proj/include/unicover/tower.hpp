#pragma once

#include <string>
#include <vector>

#include "unicover/poly.hpp"

namespace unicover {

/// Iterated univariate covering of normal type over the hypersurface
/// {sigma = 0}.
///
/// Level j (1-based) is Q_j, monic in fiber variable w_{j-1}, of degree
/// m_j / m_{j-1}; chain holds m_0 = 1, m_1, ..., m_{k+1} = m. Base variables
/// have weight 1 and w_j has weight d * m_j where d = deg(sigma).
struct CoveringTower {
    VarTablePtr vars;
    std::vector<std::string> base;
    std::vector<std::string> fibers;
    Poly sigma;
    std::vector<Poly> levels;
    std::vector<int> chain;
    std::vector<int> exponents;

    int d() const { return sigma.total_degree(); }
    int k() const { return static_cast<int>(levels.size()) - 1; }
    int m() const { return chain.empty() ? 0 : chain.back(); }
    std::size_t fiber_index(std::size_t j) const { return vars->index(fibers.at(j)); }
};

/// Variable table for a tower: base variables (weight 1), fibers
/// (weight d * m_j), then `t`. Chain entries that are not positive give
/// weight 1 so that malformed towers can still be reported on.
VarTablePtr tower_vars(const std::vector<std::string>& base, const std::vector<std::string>& fibers, int d,
                       const std::vector<int>& chain);

struct ValidationEntry {
    std::string rule;
    bool pass = false;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationEntry> entries;

    bool passed() const;
    void add(std::string rule, bool pass, std::string message);
    const ValidationEntry* find(std::string_view rule) const;
    /// One `PASS|FAIL rule: message` line per entry.
    std::string to_text() const;
    /// One `rule=pass|fail` line per entry plus `overall=...`.
    std::string to_key_values() const;
};

ValidationReport validate_normal_type(const CoveringTower& tower);

/// Shift of the top variable that removes the subleading coefficient:
/// returns (q(w - a1/n), a1/n) where a1 is the coefficient of w^(n-1).
struct TschirnhausenShift {
    Poly shifted;
    Poly offset;
};
TschirnhausenShift tschirnhausen_shift(const Poly& q, std::size_t var);

/// Applies the shift level by level (later levels are rewritten in the new
/// coordinates). `offsets`, when non-null, receives the offset of each fiber
/// variable expressed in the new coordinates.
CoveringTower tschirnhausen(const CoveringTower& tower, std::vector<Poly>* offsets = nullptr);

/// Per-level check that res_w(Q_j, dQ_j/dw) is not identically zero: a
/// necessary, not sufficient, proxy for smoothness of the covering.
ValidationReport separability_certificate(const CoveringTower& tower);

int covering_degree(const CoveringTower& tower);

}  // namespace unicover
