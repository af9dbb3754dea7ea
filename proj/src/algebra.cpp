#include "unicover/algebra.hpp"

#include <algorithm>

#include "unicover/errors.hpp"

namespace unicover {

namespace {

Poly one_like(const Poly& f) { return Poly::constant(f.vars(), Rational(1)); }

Poly main_power(const Poly& like, std::size_t main, int power) {
    return Poly::variable(like.vars(), main, static_cast<std::uint32_t>(power));
}

std::optional<Integer> integer_root(const Integer& n, unsigned m) {
    if (n < 0) {
        if (m % 2 == 0) return std::nullopt;
        auto r = integer_root(-n, m);
        if (!r) return std::nullopt;
        return Integer(-*r);
    }
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), m) == 0) return std::nullopt;
    return r;
}

std::optional<Rational> rational_root(const Rational& c, unsigned m) {
    auto num = integer_root(c.get_num(), m);
    auto den = integer_root(c.get_den(), m);
    if (!num || !den) return std::nullopt;
    Rational r(*num, *den);
    r.canonicalize();
    return r;
}

// Last nonzero subresultant of a and b (deg_main a >= deg_main b >= 1).
Poly subresultant_tail(Poly a, Poly b, std::size_t main) {
    Poly g = one_like(a);
    Poly h = one_like(a);
    while (true) {
        const int delta = a.degree(main) - b.degree(main);
        auto pd = pseudo_div(a, b, main);
        if (pd.remainder.is_zero()) return b;
        if (pd.remainder.degree(main) == 0) return one_like(a);
        a = std::move(b);
        b = exact_div(pd.remainder, g * h.pow(static_cast<unsigned>(delta)));
        g = a.lc_in(main);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact_div(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
}

Poly normalize_in_main(const Poly& f, std::size_t main) {
    if (f.is_zero()) return f;
    Rational lead = f.lc_in(main).leading_rational();
    return f * Rational(1 / lead);
}

}  // namespace

Poly arith(const Poly& f, const Poly& g, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return f + g;
        case ArithKind::sub: return f - g;
        case ArithKind::mul: return f * g;
    }
    throw InvalidArgument("unknown arithmetic kind");
}

Poly exact_div(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
    if (!same_vars(f.vars(), g.vars())) throw VarTableMismatch("operands use different variable tables");
    Poly q(f.vars());
    Poly r = f;
    const auto& [gm, gc] = *g.terms().rbegin();
    Monomial m(gm.size());
    while (!r.is_zero()) {
        const auto& [rm, rc] = *r.terms().rbegin();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (rm[i] < gm[i]) throw NotDivisible("divisor does not divide the dividend exactly");
            m[i] = rm[i] - gm[i];
        }
        Rational c = rc / gc;
        q.add_term(m, c);
        r.add_scaled(g, -c, m);
    }
    return q;
}

Poly divide_by_var_power(const Poly& f, std::size_t var, std::uint32_t power) {
    if (power == 0) return f;
    Poly out(f.vars());
    for (const auto& [mono, c] : f.terms()) {
        if (mono[var] < power) {
            throw NotDivisible(f.vars()->name(var) + "^" + std::to_string(power) + " does not divide the polynomial");
        }
        Monomial m = mono;
        m[var] -= power;
        out.add_term(m, c);
    }
    return out;
}

PseudoDivision pseudo_div(const Poly& f, const Poly& g, std::string_view main) {
    return pseudo_div(f, g, f.vars()->index(main));
}

PseudoDivision pseudo_div(const Poly& f, const Poly& g, std::size_t main) {
    if (g.is_zero()) throw InvalidArgument("pseudo-division by the zero polynomial");
    const int dg = g.degree(main);
    const int df = f.degree(main);
    if (f.is_zero() || df < dg) return {Poly(f.vars()), f, 0};
    const int power = df - dg + 1;
    const Poly lcg = g.lc_in(main);
    Poly q(f.vars());
    Poly r = f;
    int e = power;
    while (!r.is_zero() && r.degree(main) >= dg) {
        Poly s = r.lc_in(main) * main_power(r, main, r.degree(main) - dg);
        q = q * lcg + s;
        r = r * lcg - s * g;
        --e;
    }
    if (e > 0) {
        Poly scale = lcg.pow(static_cast<unsigned>(e));
        q *= scale;
        r *= scale;
    }
    return {std::move(q), std::move(r), power};
}

Poly rem_by_unit_lc(const Poly& f, const Poly& g, std::size_t main) {
    const int dg = g.degree(main);
    const Poly lcg = g.lc_in(main);
    if (!lcg.is_constant() || lcg.is_zero()) {
        throw InvalidArgument("divisor's leading coefficient is not a rational unit");
    }
    const Rational inv = 1 / lcg.constant_term();
    Poly r = f;
    while (!r.is_zero() && r.degree(main) >= dg) {
        const int dr = r.degree(main);
        Poly lead = r.lc_in(main) * inv;
        r -= lead.shift(main, static_cast<std::uint32_t>(dr - dg)) * g;
    }
    return r;
}

Poly normalize_unit(const Poly& f) {
    if (f.is_zero()) return f;
    return f * Rational(1 / f.leading_rational());
}

Poly content(const Poly& f, std::size_t main) {
    Poly c(f.vars());
    for (const auto& coeff : f.coeffs_in(main)) {
        if (coeff.is_zero()) continue;
        c = gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

Poly primitive_part(const Poly& f, std::size_t main) {
    if (f.is_zero()) return f;
    return exact_div(f, content(f, main));
}

Poly gcd(const Poly& f, const Poly& g) {
    if (f.is_zero()) return normalize_unit(g);
    if (g.is_zero()) return normalize_unit(f);
    if (f.is_constant() || g.is_constant()) return one_like(f);
    auto sf = f.support();
    auto sg = g.support();
    const std::size_t v = std::min(sf.empty() ? f.vars()->size() : sf.front(),
                                   sg.empty() ? g.vars()->size() : sg.front());
    Poly cf = content(f, v);
    Poly cg = content(g, v);
    Poly c = gcd(cf, cg);
    if (f.degree(v) == 0 || g.degree(v) == 0) return c;
    Poly a = exact_div(f, cf);
    Poly b = exact_div(g, cg);
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    Poly tail = primitive_part(subresultant_tail(a, b, v), v);
    return normalize_unit(c * tail);
}

Poly gcd_main(const Poly& f, const Poly& g, std::string_view main) {
    return gcd_main(f, g, f.vars()->index(main));
}

Poly gcd_main(const Poly& f, const Poly& g, std::size_t main) {
    if (f.is_zero() && g.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
    if (f.is_zero()) return normalize_in_main(primitive_part(g, main), main);
    if (g.is_zero()) return normalize_in_main(primitive_part(f, main), main);
    if (f.degree(main) == 0 || g.degree(main) == 0) return one_like(f);
    Poly a = primitive_part(f, main);
    Poly b = primitive_part(g, main);
    if (a.degree(main) < b.degree(main)) std::swap(a, b);
    return normalize_in_main(primitive_part(subresultant_tail(a, b, main), main), main);
}

Poly gcd_main(std::span<const Poly> polys, std::size_t main) {
    if (polys.empty()) throw InvalidArgument("gcd of an empty list");
    std::optional<Poly> acc;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        acc = acc ? gcd_main(*acc, p, main) : normalize_in_main(primitive_part(p, main), main);
    }
    if (!acc) throw InvalidArgument("gcd of zero polynomials");
    return *acc;
}

Poly resultant(const Poly& f, const Poly& g, std::size_t main) {
    if (f.is_zero() || g.is_zero()) return Poly(f.vars());
    Poly a = f;
    Poly b = g;
    int sign = 1;
    if (a.degree(main) < b.degree(main)) {
        std::swap(a, b);
        if (a.degree(main) % 2 == 1 && b.degree(main) % 2 == 1) sign = -sign;
    }
    if (b.degree(main) == 0) return b.pow(static_cast<unsigned>(a.degree(main))) * Rational(sign);
    Poly gg = one_like(a);
    Poly h = one_like(a);
    while (true) {
        const int da = a.degree(main);
        const int db = b.degree(main);
        const int delta = da - db;
        if (da % 2 == 1 && db % 2 == 1) sign = -sign;
        auto pd = pseudo_div(a, b, main);
        a = std::move(b);
        if (pd.remainder.is_zero()) return Poly(f.vars());
        b = exact_div(pd.remainder, gg * h.pow(static_cast<unsigned>(delta)));
        gg = a.lc_in(main);
        if (delta == 1) {
            h = gg;
        } else if (delta > 1) {
            h = exact_div(gg.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        }
        if (b.degree(main) > 0) continue;
        const int dfinal = a.degree(main);
        Poly res = exact_div(b.pow(static_cast<unsigned>(dfinal)), h.pow(static_cast<unsigned>(dfinal - 1)));
        return res * Rational(sign);
    }
}

Poly derivative(const Poly& f, std::string_view var) { return derivative(f, f.vars()->index(var)); }

Poly derivative(const Poly& f, std::size_t var) {
    Poly out(f.vars());
    for (const auto& [mono, c] : f.terms()) {
        if (mono[var] == 0) continue;
        Monomial m = mono;
        m[var] -= 1;
        out.add_term(m, c * mono[var]);
    }
    return out;
}

Poly substitute(const Poly& f, std::string_view var, const Poly& expr) {
    return substitute(f, f.vars()->index(var), expr);
}

Poly substitute(const Poly& f, std::size_t var, const Poly& expr) {
    if (f.degree(var) <= 0) return f;
    const Poly e = expr.rebase(f.vars());
    auto cs = f.coeffs_in(var);
    Poly r = cs.back();
    for (std::size_t i = cs.size() - 1; i-- > 0;) r = r * e + cs[i];
    return r;
}

Poly substitute_fraction(const Poly& f, std::size_t var, const Poly& numerator, std::uint32_t power) {
    if (f.degree(var) <= 0) return f;
    const Poly num = numerator.rebase(f.vars());
    const auto t = f.vars()->param();
    auto cs = f.coeffs_in(var);
    const auto top = cs.size() - 1;
    Poly r = cs.back();
    for (std::size_t i = top; i-- > 0;) {
        r = r * num + cs[i].shift(t, power * static_cast<std::uint32_t>(top - i));
    }
    return r;
}

Poly strip_var_power(const Poly& f, std::size_t var) {
    if (f.is_zero()) return f;
    return divide_by_var_power(f, var, static_cast<std::uint32_t>(f.order(var)));
}

std::vector<Poly> taylor_t(const Poly& f, unsigned upto) {
    auto cs = f.coeffs_in(f.vars()->param());
    cs.resize(upto + 1, Poly(f.vars()));
    return cs;
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw InvalidArgument("squarefree part of zero");
    if (f.is_constant()) return one_like(f);
    Poly g = f;
    for (auto v : f.support()) {
        g = gcd(g, derivative(f, v));
        if (g.is_constant()) break;
    }
    return normalize_unit(exact_div(f, g));
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    Poly g = f;
    for (auto v : f.support()) {
        g = gcd(g, derivative(f, v));
        if (g.is_constant()) return true;
    }
    return g.is_constant();
}

Poly mth_root(const Poly& f, unsigned m) {
    if (m == 0) throw InvalidArgument("root index must be at least 1");
    if (f.is_zero()) throw InvalidArgument("root of the zero polynomial");
    if (m == 1) return f;
    if (f.is_constant()) {
        auto r = rational_root(f.constant_term(), m);
        if (!r) throw NotAPower("constant is not a rational " + std::to_string(m) + "-th power");
        if (m % 2 == 0 && *r < 0) *r = -*r;
        return Poly::constant(f.vars(), *r);
    }
    const int degree = f.total_degree();
    if (degree % static_cast<int>(m) != 0) {
        throw NotAPower("total degree " + std::to_string(degree) + " is not a multiple of " + std::to_string(m));
    }
    Poly g = squarefree_part(f);
    if (g.total_degree() * static_cast<int>(m) != degree) {
        throw NotAPower("not the " + std::to_string(m) + "-th power of a reduced polynomial");
    }
    auto unit = rational_root(f.leading_rational(), m);
    if (!unit) throw NotAPower("leading coefficient is not a rational " + std::to_string(m) + "-th power");
    if (m % 2 == 0 && *unit < 0) *unit = -*unit;
    g *= *unit;
    if (g.pow(m) != f) throw NotAPower("candidate root does not reproduce the input");
    return g;
}

int weighted_degree(const Poly& f) {
    const auto& vars = *f.vars();
    if (!vars.has_weights()) throw MissingWeights("weighted degree needs a weighted variable table");
    if (f.is_zero()) return kMinusInfinity;
    long best = 0;
    for (const auto& [mono, c] : f.terms()) {
        long w = 0;
        for (std::size_t i = 0; i < mono.size(); ++i) w += static_cast<long>(mono[i]) * vars.weight(i);
        best = std::max(best, w);
    }
    return static_cast<int>(best);
}

bool is_weighted_homogeneous(const Poly& f) {
    const auto& vars = *f.vars();
    if (!vars.has_weights()) throw MissingWeights("weighted degree needs a weighted variable table");
    std::optional<long> degree;
    for (const auto& [mono, c] : f.terms()) {
        long w = 0;
        for (std::size_t i = 0; i < mono.size(); ++i) w += static_cast<long>(mono[i]) * vars.weight(i);
        if (degree && *degree != w) return false;
        degree = w;
    }
    return true;
}

}  // namespace unicover
