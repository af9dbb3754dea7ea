#pragma once

#include <map>
#include <optional>
#include <vector>

#include "unicover/algebra.hpp"
#include "unicover/chart.hpp"

namespace unicover::detail {

/// Q[a_1, ..., a_s] / (c_1, ..., c_s) for the t = 0 centers of a chart. Each
/// c_i is monic in its lead a_i and involves only earlier leads, so reducing
/// from the last lead down gives a normal form. Only meaningful when nothing
/// but leads, t and fiber variables occurs, which keeps the algebra finite
/// dimensional over Q.
class FiberAlgebra {
public:
    FiberAlgebra(const VarTablePtr& vars, const std::vector<Relation>& relations);

    Poly reduce(const Poly& f) const;

    /// Inverse of an element free of non-lead variables; nullopt for zero
    /// divisors.
    std::optional<Poly> inverse(const Poly& f) const;

    /// Idempotent e with eL = fL, i.e. the indicator of the components where
    /// f does not vanish.
    Poly support_idempotent(const Poly& f) const;

    /// Monic gcd in u over the algebra. Leading coefficients that vanish on
    /// some components split the computation; the parts must agree in degree,
    /// otherwise the fiber differs between components and UnsupportedShape is
    /// thrown.
    Poly gcd(const Poly& f, const Poly& g, std::size_t u) const;

    /// Quotient and remainder by a divisor monic in u.
    PseudoDivision divide(const Poly& f, const Poly& monic_divisor, std::size_t u) const;

private:
    std::vector<std::vector<Rational>> multiplication_matrix(const Poly& c) const;
    std::vector<Rational> coordinates(const Poly& f) const;
    Poly element(const std::vector<Rational>& coords) const;
    Poly gcd_within(Poly a, Poly b, const Poly& e, std::size_t u) const;

    VarTablePtr vars_;
    std::vector<Relation> relations_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> index_;
};

}  // namespace unicover::detail
