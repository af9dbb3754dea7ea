#include "fiber_algebra.hpp"

#include <utility>

#include "unicover/errors.hpp"

namespace unicover::detail {

FiberAlgebra::FiberAlgebra(const VarTablePtr& vars, const std::vector<Relation>& relations)
    : vars_(vars), relations_(relations) {
    basis_.push_back(Monomial(vars->size(), 0));
    for (const auto& rel : relations_) {
        std::vector<Monomial> grown;
        for (const auto& mono : basis_) {
            for (int e = 0; e < rel.degree(); ++e) {
                Monomial m = mono;
                m[rel.lead] = static_cast<std::uint32_t>(e);
                grown.push_back(std::move(m));
            }
        }
        basis_ = std::move(grown);
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
}

Poly FiberAlgebra::reduce(const Poly& f) const {
    Poly r = f;
    for (std::size_t i = relations_.size(); i-- > 0;) {
        const auto& rel = relations_[i];
        if (r.degree(rel.lead) >= rel.degree()) r = rem_by_unit_lc(r, rel.center, rel.lead);
    }
    return r;
}

namespace {

// One solution of m x = rhs with free unknowns set to zero, or nullopt.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(m[p], m[row]);
        const Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rational factor = m[i][col];
            for (std::size_t k = col; k <= n; ++k) m[i][k] -= factor * m[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i) {
        if (m[i][n] != 0) return std::nullopt;
    }
    std::vector<Rational> x(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][n];
    return x;
}

}  // namespace

std::vector<Rational> FiberAlgebra::coordinates(const Poly& f) const {
    std::vector<Rational> out(basis_.size(), 0);
    const Poly r = reduce(f);
    for (const auto& [mono, coeff] : r.terms()) {
        const auto it = index_.find(mono);
        if (it == index_.end()) throw InternalInconsistency("fiber element outside the lead monomial basis");
        out[it->second] = coeff;
    }
    return out;
}

Poly FiberAlgebra::element(const std::vector<Rational>& coords) const {
    Poly out(vars_);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0) out += Poly::term(vars_, basis_[i], coords[i]);
    }
    return out;
}

std::vector<std::vector<Rational>> FiberAlgebra::multiplication_matrix(const Poly& c) const {
    const std::size_t n = basis_.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        const auto col = coordinates(c * Poly::term(vars_, basis_[j], 1));
        for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

std::optional<Poly> FiberAlgebra::inverse(const Poly& f) const {
    auto x = solve(multiplication_matrix(f), coordinates(Poly::constant(vars_, 1)));
    if (!x) return std::nullopt;
    return element(*x);
}

Poly FiberAlgebra::support_idempotent(const Poly& f) const {
    const Poly c = reduce(f);
    if (c.is_zero()) return c;
    // L is reduced, so c^2 y = c is solvable and c y is the idempotent
    auto y = solve(multiplication_matrix(c * c), coordinates(c));
    if (!y) throw InternalInconsistency("fiber algebra is not reduced");
    return reduce(c * element(*y));
}

Poly FiberAlgebra::gcd_within(Poly a, Poly b, const Poly& e, std::size_t u) const {
    a = reduce(a * e);
    b = reduce(b * e);
    if (b.is_zero() || (!a.is_zero() && a.degree(u) < b.degree(u))) std::swap(a, b);
    const Poly off = Poly::constant(vars_, 1) - e;
    while (!b.is_zero()) {
        const Poly c = b.lc_in(u);
        const Poly s = support_idempotent(c);
        if (s != e) {
            const Poly g1 = gcd_within(a, b, s, u);
            const Poly g2 = gcd_within(a, b, reduce(e - s), u);
            if (g1.is_zero() != g2.is_zero() || g1.degree(u) != g2.degree(u)) {
                throw UnsupportedShape("central fiber differs between the components of the chart");
            }
            return g1 + g2;
        }
        const auto inv = inverse(c + off);
        if (!inv) throw InternalInconsistency("leading coefficient is not a unit on its support");
        // leading coefficient e; pad with u^k off the part so it becomes 1
        b = reduce(b * *inv * e);
        const Poly divisor = b + off * Poly::variable(vars_, u, static_cast<std::uint32_t>(b.degree(u)));
        Poly r = reduce(rem_by_unit_lc(a, divisor, u) * e);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly FiberAlgebra::gcd(const Poly& f, const Poly& g, std::size_t u) const {
    return gcd_within(f, g, Poly::constant(vars_, 1), u);
}

PseudoDivision FiberAlgebra::divide(const Poly& f, const Poly& monic_divisor, std::size_t u) const {
    PseudoDivision pd = pseudo_div(f, monic_divisor, u);
    pd.quotient = reduce(pd.quotient);
    pd.remainder = reduce(pd.remainder);
    pd.power = 0;
    return pd;
}

}  // namespace unicover::detail
