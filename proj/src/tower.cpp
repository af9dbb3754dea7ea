#include "unicover/tower.hpp"

#include <algorithm>
#include <sstream>

#include "unicover/algebra.hpp"
#include "unicover/errors.hpp"
#include "unicover/polytext.hpp"

namespace unicover {

VarTablePtr tower_vars(const std::vector<std::string>& base, const std::vector<std::string>& fibers, int d,
                       const std::vector<int>& chain) {
    std::vector<std::string> names = base;
    names.insert(names.end(), fibers.begin(), fibers.end());
    std::vector<int> weights(base.size(), 1);
    for (std::size_t j = 0; j < fibers.size(); ++j) {
        const int mj = j < chain.size() ? chain[j] : 1;
        weights.push_back(std::max(1, d) * std::max(1, mj));
    }
    weights.push_back(0);
    return VarTable::make(std::move(names), std::move(weights));
}

bool ValidationReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const ValidationEntry& e) { return e.pass; });
}

void ValidationReport::add(std::string rule, bool pass, std::string message) {
    entries.push_back({std::move(rule), pass, std::move(message)});
}

const ValidationEntry* ValidationReport::find(std::string_view rule) const {
    for (const auto& e : entries) {
        if (e.rule == rule) return &e;
    }
    return nullptr;
}

std::string ValidationReport::to_text() const {
    std::ostringstream out;
    for (const auto& e : entries) {
        out << (e.pass ? "PASS " : "FAIL ") << e.rule << ": " << e.message << '\n';
    }
    out << (passed() ? "overall: PASS" : "overall: FAIL") << '\n';
    return out.str();
}

std::string ValidationReport::to_key_values() const {
    std::ostringstream out;
    for (const auto& e : entries) out << e.rule << '=' << (e.pass ? "pass" : "fail") << '\n';
    out << "overall=" << (passed() ? "pass" : "fail") << '\n';
    return out.str();
}

ValidationReport validate_normal_type(const CoveringTower& tower) {
    ValidationReport report;
    const auto levels = tower.levels.size();
    const auto& vars = *tower.vars;
    const auto param = vars.param();

    report.add("chain.length", tower.chain.size() == levels + 1 && tower.fibers.size() == levels,
               "chain has " + std::to_string(tower.chain.size()) + " entries for " + std::to_string(levels) +
                   (levels == 1 ? " level" : " levels"));
    report.add("chain.base", !tower.chain.empty() && tower.chain.front() == 1, "m_0 must be 1");

    const int d = tower.d();
    report.add("sigma.homogeneous",
               d >= 1 && !tower.sigma.contains(param) &&
                   std::all_of(tower.sigma.terms().begin(), tower.sigma.terms().end(),
                               [&](const auto& term) {
                                   long s = 0;
                                   for (std::size_t i = 0; i < term.first.size(); ++i) s += term.first[i];
                                   return s == d;
                               }) &&
                   std::all_of(tower.fibers.begin(), tower.fibers.end(),
                               [&](const std::string& w) { return !tower.sigma.contains(w); }),
               "sigma must be a homogeneous form of degree >= 1 in the base variables");
    report.add("sigma.reduced", !tower.sigma.is_zero() && is_squarefree(tower.sigma),
               "sigma must be reduced (squarefree)");

    for (std::size_t j = 1; j <= levels && j < tower.chain.size() && j <= tower.fibers.size(); ++j) {
        const std::string tag = "[" + std::to_string(j) + "]";
        const int prev = tower.chain[j - 1];
        const int cur = tower.chain[j];
        const bool divides = prev > 0 && cur > 0 && cur % prev == 0;
        report.add("divides" + tag, divides,
                   "m_" + std::to_string(j - 1) + " = " + std::to_string(prev) +
                       (divides ? " divides " : " does not divide ") + "m_" + std::to_string(j) + " = " +
                       std::to_string(cur));

        const Poly& q = tower.levels[j - 1];
        const auto top = tower.fiber_index(j - 1);

        bool vars_ok = !q.contains(param);
        for (std::size_t i = j; i < tower.fibers.size(); ++i) vars_ok = vars_ok && !q.contains(tower.fibers[i]);
        report.add("variables" + tag, vars_ok,
                   "Q_" + std::to_string(j) + " may only use base variables and w_0..w_" + std::to_string(j - 1));

        const int deg = q.degree(top);
        const Poly lc = q.lc_in(top);
        report.add("monic" + tag, deg >= 1 && lc.is_constant() && lc.constant_term() == 1,
                   "Q_" + std::to_string(j) + " leading coefficient in " + tower.fibers[j - 1] + " is " +
                       (q.is_zero() ? std::string("0") : render_poly(lc)));

        const bool degree_ok = divides && deg == cur / prev;
        report.add("degree" + tag, degree_ok,
                   "deg_" + tower.fibers[j - 1] + " Q_" + std::to_string(j) + " = " +
                       (is_minus_infinity(deg) ? std::string("-inf") : std::to_string(deg)) + ", expected m_" +
                       std::to_string(j) + "/m_" + std::to_string(j - 1) + " = " + std::to_string(cur) + "/" +
                       std::to_string(prev));

        bool homogeneous = false;
        std::string detail = "not weighted homogeneous";
        if (vars.has_weights() && !q.is_zero() && is_weighted_homogeneous(q)) {
            const int wd = weighted_degree(q);
            homogeneous = wd == d * cur;
            detail = "weighted degree " + std::to_string(wd) + ", expected d*m_" + std::to_string(j) + " = " +
                     std::to_string(d * cur);
        }
        report.add("homogeneous" + tag, homogeneous, detail);
    }
    return report;
}

TschirnhausenShift tschirnhausen_shift(const Poly& q, std::size_t var) {
    const int n = q.degree(var);
    if (n < 1) return {q, Poly(q.vars())};
    auto cs = q.coeffs_in(var);
    const Poly& lead = cs.back();
    if (!lead.is_constant()) throw InvalidArgument("Tschirnhausen shift needs a unit leading coefficient");
    Poly offset = cs[static_cast<std::size_t>(n - 1)] * Rational(1 / (lead.constant_term() * n));
    if (offset.is_zero()) return {q, offset};
    Poly shifted = substitute(q, var, Poly::variable(q.vars(), var) - offset);
    return {std::move(shifted), std::move(offset)};
}

CoveringTower tschirnhausen(const CoveringTower& tower, std::vector<Poly>* offsets) {
    CoveringTower out = tower;
    if (offsets) offsets->clear();
    for (std::size_t j = 0; j < out.levels.size(); ++j) {
        const auto var = out.fiber_index(j);
        auto [shifted, offset] = tschirnhausen_shift(out.levels[j], var);
        out.levels[j] = std::move(shifted);
        if (!offset.is_zero()) {
            const Poly replacement = Poly::variable(out.vars, var) - offset;
            for (std::size_t i = j + 1; i < out.levels.size(); ++i) {
                out.levels[i] = substitute(out.levels[i], var, replacement);
            }
        }
        if (offsets) offsets->push_back(std::move(offset));
    }
    return out;
}

ValidationReport separability_certificate(const CoveringTower& tower) {
    ValidationReport report;
    for (std::size_t j = 0; j < tower.levels.size(); ++j) {
        const std::string rule = "separable[" + std::to_string(j + 1) + "]";
        const auto var = tower.fiber_index(j);
        const Poly& q = tower.levels[j];
        const int deg = q.degree(var);
        if (deg <= 1) {
            report.add(rule, deg == 1, deg == 1 ? "degree 1, separable" : "level has no fiber variable");
            continue;
        }
        Poly res = resultant(q, derivative(q, var), var);
        report.add(rule, !res.is_zero(),
                   res.is_zero() ? "discriminant vanishes identically" : "resultant " + render_poly(res));
    }
    return report;
}

int covering_degree(const CoveringTower& tower) {
    int m = 1;
    for (std::size_t j = 0; j < tower.levels.size(); ++j) {
        m *= std::max(0, tower.levels[j].degree(tower.fiber_index(j)));
    }
    return m;
}

}  // namespace unicover
