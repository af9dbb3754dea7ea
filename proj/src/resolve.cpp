#include "unicover/resolve.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "unicover/algebra.hpp"
#include "unicover/errors.hpp"
#include "fiber_algebra.hpp"

namespace unicover {

namespace {

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

std::optional<Rational> rational_root(const Rational& q, unsigned m) {
    auto num = integer_root(q.get_num(), m);
    auto den = integer_root(q.get_den(), m);
    if (!num || !den) return std::nullopt;
    Rational r(*num, *den);
    r.canonicalize();
    return r;
}

bool is_fiber_name(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return false;
    return std::all_of(name.begin() + static_cast<long>(prefix.size()), name.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string fiber_prefix(const VarTable& vars) {
    std::string prefix = "w";
    auto clashes = [&] {
        return std::any_of(vars.names().begin(), vars.names().end(),
                           [&](const std::string& n) { return is_fiber_name(n, prefix); });
    };
    while (clashes()) prefix += "w";
    return prefix;
}

}  // namespace

CentralRoot central_root(const FamilyEquation& family) {
    const Poly& Sigma = family.Sigma;
    const auto t = Sigma.vars()->param();
    const Poly central = Sigma.evaluate(t, 0);
    if (central.is_zero()) throw MalformedFamily("Sigma(z, 0) vanishes");
    if (central.is_constant()) throw MalformedFamily("Sigma(z, 0) is constant");

    Poly g = normalize_unit(squarefree_part(central));
    const int total = central.total_degree();
    const int dg = g.total_degree();
    if (dg < 1 || total % dg != 0) throw MalformedFamily("Sigma(z, 0) is not a power of a reduced form");
    const int m = total / dg;
    const Poly gm = g.pow(static_cast<unsigned>(m));
    Rational unit = central.leading_rational() / gm.leading_rational();
    if (central != gm * unit) throw MalformedFamily("Sigma(z, 0) is not a power of a reduced form");

    if (auto s = rational_root(unit, static_cast<unsigned>(m))) {
        g *= *s;
        unit = 1;
    }
    if (family.sigma) {
        const Poly given = family.sigma->rebase(Sigma.vars());
        if (given.pow(static_cast<unsigned>(m)) * unit == central) g = given;
    }
    return {g, m, unit};
}

namespace {

Poly chart_normal_form(Poly f, const Chart& chart) {
    const auto& rels = chart.relations();
    for (int pass = 0; pass < 10000; ++pass) {
        bool changed = false;
        for (std::size_t i = rels.size(); i-- > 0;) {
            if (f.degree(rels[i].lead) < rels[i].degree()) continue;
            f = rem_by_unit_lc(f, chart.relation_poly(i), rels[i].lead);
            changed = true;
        }
        if (!changed) return f;
    }
    throw InternalInconsistency("chart normal form does not terminate");
}

// Only t, the fiber variable and chart leads occur: the central fiber is then
// a finite algebra over Q and can be analysed component by component.
bool parameter_free(const Poly& P, const Chart& chart, std::size_t u) {
    std::vector<bool> allowed(P.vars()->size(), false);
    allowed[P.vars()->param()] = true;
    allowed[u] = true;
    for (const auto& rel : chart.relations()) allowed[rel.lead] = true;
    auto ok = [&](const Poly& f) {
        const auto support = f.support();
        return std::all_of(support.begin(), support.end(), [&](std::size_t v) { return allowed[v]; });
    };
    if (!ok(P)) return false;
    return std::all_of(chart.relations().begin(), chart.relations().end(),
                       [&](const Relation& rel) { return ok(rel.center); });
}

// dP/dt at t = 0 on the chart: the leads depend on t through center_i = t * next_i.
Poly chart_t_derivative(const Poly& P, const Chart& chart, const detail::FiberAlgebra& fiber) {
    const auto& vars = P.vars();
    const auto t = vars->param();
    const Poly P0 = P.evaluate(t, 0);
    Poly out = derivative(P, t).evaluate(t, 0);
    const auto& rels = chart.relations();
    std::vector<Poly> rate;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        Poly num = fiber.reduce(Poly::variable(vars, rels[i].next));
        for (std::size_t j = 0; j < i; ++j) num -= derivative(rels[i].center, rels[j].lead) * rate[j];
        const auto inv = fiber.inverse(derivative(rels[i].center, rels[i].lead));
        if (!inv) throw InternalInconsistency("chart center is not separable");
        rate.push_back(fiber.reduce(num * *inv));
        out += derivative(P0, rels[i].lead) * rate[i];
    }
    return fiber.reduce(out);
}

BlowupResult blowup_exact(const Poly& P, const Chart& chart, std::size_t u, std::size_t next) {
    const auto& vars = P.vars();
    const auto t = vars->param();
    const detail::FiberAlgebra fiber(vars, chart.relations());
    const Poly P0 = fiber.reduce(P.evaluate(t, 0));
    if (P0.is_zero()) throw UnsupportedShape("working equation vanishes on the central fiber");
    if (P0.degree(u) < 1) return Smooth{};
    const Poly common =
        fiber.gcd(fiber.gcd(P0, derivative(P0, u), u), chart_t_derivative(P, chart, fiber), u);
    if (common.degree(u) < 1) return Smooth{};

    const Poly repeated = fiber.gcd(common, derivative(common, u), u);
    const Poly D = repeated.degree(u) < 1 ? common : fiber.divide(common, repeated, u).quotient;

    int r = 0;
    Poly rest = P0;
    while (true) {
        auto pd = fiber.divide(rest, D, u);
        if (!pd.remainder.is_zero()) break;
        rest = std::move(pd.quotient);
        ++r;
    }
    if (r < 2) throw InternalInconsistency("common root of multiplicity below 2");
    if (fiber.gcd(D, rest, u).degree(u) >= 1) {
        throw UnsupportedShape("central fiber has repeated roots of different multiplicities");
    }

    Chart grown = chart;
    grown.add(u, D, next);
    Poly shifted;
    try {
        shifted = divide_by_var_power(chart_normal_form(P, grown), t, static_cast<std::uint32_t>(r));
    } catch (const NotDivisible&) {
        throw DivisibilityViolation("t^" + std::to_string(r) + " does not divide the equation after " +
                                    vars->name(u) + " blow-up");
    }
    return BlowupStep{D, r, vars->name(u), vars->name(next), std::move(shifted), P0};
}

BlowupResult blowup_ambient(const Poly& P, std::size_t u, std::size_t next) {
    const auto& vars = P.vars();
    const auto t = vars->param();
    const std::string fiber_var = vars->name(u);
    const Poly P0 = P.evaluate(t, 0);
    if (P0.is_zero()) throw UnsupportedShape("working equation vanishes on the central fiber");
    if (P0.degree(u) < 1) return Smooth{};
    const std::array<Poly, 3> parts{P0, derivative(P0, u), derivative(P, t).evaluate(t, 0)};
    const Poly common = gcd_main(parts, u);
    if (common.degree(u) < 1) return Smooth{};

    const Poly repeated = gcd_main(common, derivative(common, u), u);
    Poly D = repeated.degree(u) < 1 ? common : exact_div(common, repeated);
    const Poly lead = D.lc_in(u);
    if (!lead.is_constant()) {
        throw UnsupportedShape("blow-up center is not monic in " + fiber_var);
    }
    D *= 1 / lead.constant_term();

    int r = 0;
    Poly rest = P0;
    while (true) {
        auto pd = pseudo_div(rest, D, u);
        if (!pd.remainder.is_zero()) break;
        rest = std::move(pd.quotient);
        ++r;
    }
    if (r < 2) throw InternalInconsistency("common root of multiplicity below 2");
    if (gcd_main(D, rest, u).degree(u) >= 1) {
        throw UnsupportedShape("central fiber has repeated roots of different multiplicities");
    }

    const Poly relation = D - Poly::variable(vars, t) * Poly::variable(vars, next);
    Poly shifted;
    try {
        shifted = divide_by_var_power(rem_by_unit_lc(P, relation, u), t, static_cast<std::uint32_t>(r));
    } catch (const NotDivisible&) {
        throw DivisibilityViolation("t^" + std::to_string(r) + " does not divide the equation after " +
                                    fiber_var + " blow-up");
    }
    return BlowupStep{D, r, fiber_var, vars->name(next), std::move(shifted), P0};
}

}  // namespace

BlowupResult blowup_once(const Poly& P, const Chart& chart, std::string_view fiber_var, std::string_view next_var) {
    const auto& vars = P.vars();
    const auto u = vars->index(fiber_var);
    const auto next = vars->index(next_var);
    if (P.contains(next)) throw InvalidArgument("working equation already involves " + std::string(next_var));
    const Chart local = chart.rebase(vars);
    if (parameter_free(P, local, u)) return blowup_exact(P, local, u, next);
    return blowup_ambient(P, u, next);
}

BlowupResult blowup_once(const Poly& P, std::string_view fiber_var, std::string_view next_var) {
    return blowup_once(P, Chart(P.vars()), fiber_var, next_var);
}

ResolutionTower resolve_family(const FamilyEquation& family, int max_depth) {
    if (max_depth < 1) throw InvalidArgument("max depth must be at least 1");
    const auto root = central_root(family);
    if (family.m > 0 && family.m != root.m) {
        throw MalformedFamily("declared m = " + std::to_string(family.m) + " but Sigma(z, 0) is a " +
                              std::to_string(root.m) + "-th power");
    }
    const Poly& Sigma = family.Sigma;

    ResolutionTower tower;
    tower.family_vars = Sigma.vars();
    const auto& fvars = *tower.family_vars;
    for (std::size_t i = 0; i < fvars.param(); ++i) tower.base.push_back(fvars.name(i));
    tower.m = root.m;

    const auto main = sigma_main_variable(root.sigma);
    if (!main) throw UnsupportedShape("sigma has no variable with constant leading coefficient");
    tower.main_var = fvars.name(*main);

    const std::string prefix = fiber_prefix(fvars);
    auto name = [&](std::size_t j) { return prefix + std::to_string(j); };
    tower.fibers.push_back(name(0));
    VarTablePtr vars = fvars.extended({name(0)});
    const auto t = vars->param();
    const Poly w0 = Poly::variable(vars, name(0));
    const Poly sigma = root.sigma.rebase(vars);
    // Reducing Sigma modulo sigma - t*w0 in the main variable gives the digits of
    // its sigma-adic expansion with sigma = t*w0 in place; Sigma = t^m P(sigma / t).
    Poly P;
    try {
        P = divide_by_var_power(rem_by_unit_lc(Sigma.rebase(vars), sigma - Poly::variable(vars, t) * w0,
                                               vars->index(tower.main_var)),
                                t, static_cast<std::uint32_t>(root.m));
    } catch (const NotDivisible&) {
        throw DivisibilityViolation("t^" + std::to_string(root.m) + " does not divide Sigma after sigma = t*" +
                                    name(0));
    }
    Chart chart(vars);
    chart.add(vars->index(tower.main_var), sigma, vars->index(name(0)));

    while (true) {
        const std::string next = name(tower.steps.size() + 1);
        const VarTablePtr grown = vars->extended({next});
        const Chart grown_chart = chart.rebase(grown);
        auto result = blowup_once(P.rebase(grown), grown_chart, tower.fibers.back(), next);
        if (std::holds_alternative<Smooth>(result)) break;
        if (tower.depth() + 1 > max_depth) {
            throw DepthExceeded("resolution needs more than " + std::to_string(max_depth) + " levels");
        }
        auto& step = std::get<BlowupStep>(result);
        vars = grown;
        chart = grown_chart;
        chart.add(vars->index(step.fiber_var), step.D, vars->index(next));
        P = step.shifted_system;
        tower.fibers.push_back(next);
        tower.steps.push_back(std::move(step));
    }

    tower.vars = vars;
    tower.sigma = root.sigma.rebase(vars);
    for (auto& step : tower.steps) {
        step.D = step.D.rebase(vars);
        step.shifted_system = step.shifted_system.rebase(vars);
        step.p0 = step.p0.rebase(vars);
    }
    int a = 1;
    for (const auto& step : tower.steps) {
        if (step.D != Poly::variable(vars, step.fiber_var)) break;
        ++a;
    }
    tower.exponent_chain = {a};
    for (std::size_t i = 0; i < chart.relations().size(); ++i) tower.final_system.push_back(chart.relation_poly(i));
    tower.final_system.push_back(P);
    tower.chart = std::move(chart);

    if (reeliminate(tower) != Sigma) throw InternalInconsistency("re-elimination does not reproduce Sigma");
    return tower;
}

Poly reeliminate(const ResolutionTower& tower) {
    const auto& rels = tower.chart.relations();
    const auto t = tower.vars->param();
    Poly P = tower.final_system.back();
    for (std::size_t i = rels.size(); i-- > 0;) {
        P = strip_var_power(substitute_fraction(P, rels[i].next, rels[i].center, 1), t);
    }
    return P.rebase(tower.family_vars);
}

Poly BranchGerm::series(const VarTablePtr& vars) const {
    Poly out(vars);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        out += Poly::variable(vars, vars->param(), static_cast<std::uint32_t>(i + 1)) * coeffs[i];
    }
    return out;
}

std::optional<int> contact_order(const BranchGerm& a, const BranchGerm& b) {
    const auto n = std::min(a.coeffs.size(), b.coeffs.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs[i] != b.coeffs[i]) return static_cast<int>(i + 1);
    }
    return std::nullopt;
}

ResolutionTower curve_resolve(const std::vector<BranchGerm>& branches, int max_depth) {
    if (branches.empty()) throw InvalidArgument("no branches");
    for (const auto& b : branches) {
        if (b.coeffs.empty()) throw InvalidArgument("branch with empty truncation");
    }
    for (std::size_t i = 0; i < branches.size(); ++i) {
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            if (!contact_order(branches[i], branches[j])) {
                throw TruncationTooShort("branches " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                         " agree to their common truncation order");
            }
        }
    }
    const auto vars = VarTable::make({"y"});
    const Poly y = Poly::variable(vars, "y");
    Poly F = Poly::constant(vars, 1);
    for (const auto& b : branches) F = F * (y - b.series(vars));
    return resolve_family({F, static_cast<int>(branches.size()), y}, max_depth);
}

}  // namespace unicover
