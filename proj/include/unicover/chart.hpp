#pragma once

#include <vector>

#include "unicover/poly.hpp"

namespace unicover {

/// Blow-up relation center(lead, earlier, z) = t * next. The center has a
/// nonzero rational leading coefficient in `lead` and is free of `t`.
struct Relation {
    std::size_t lead = 0;
    Poly center;
    std::size_t next = 0;

    int degree() const { return center.degree(lead); }
};

/// Affine chart of an iterated blow-up: a chain of relations where each
/// relation's lead variable is the previous relation's next variable (the
/// first lead is a base variable).
class Chart {
public:
    explicit Chart(VarTablePtr vars) : vars_(std::move(vars)) {}

    const VarTablePtr& vars() const { return vars_; }
    const std::vector<Relation>& relations() const { return relations_; }
    bool empty() const { return relations_.empty(); }

    void add(std::size_t lead, Poly center, std::size_t next);
    Chart rebase(const VarTablePtr& target) const;

    /// center_i - t * next_i
    Poly relation_poly(std::size_t i) const;

private:
    VarTablePtr vars_;
    std::vector<Relation> relations_;
};

}  // namespace unicover
