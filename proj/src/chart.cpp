#include "unicover/chart.hpp"

#include "unicover/algebra.hpp"
#include "unicover/errors.hpp"

namespace unicover {

void Chart::add(std::size_t lead, Poly center, std::size_t next) {
    center = center.rebase(vars_);
    if (center.contains(vars_->param())) throw InvalidArgument("blow-up center depends on t");
    if (center.degree(lead) < 1 || !center.lc_in(lead).is_constant()) {
        throw UnsupportedShape("blow-up center needs a constant leading coefficient in " + vars_->name(lead));
    }
    relations_.push_back({lead, std::move(center), next});
}

Chart Chart::rebase(const VarTablePtr& target) const {
    Chart out(target);
    for (const auto& r : relations_) {
        out.relations_.push_back(
            {target->index(vars_->name(r.lead)), r.center.rebase(target), target->index(vars_->name(r.next))});
    }
    return out;
}

Poly Chart::relation_poly(std::size_t i) const {
    const auto& r = relations_.at(i);
    return r.center - Poly::variable(vars_, vars_->param()) * Poly::variable(vars_, r.next);
}

}  // namespace unicover
