#include "unicover/deform.hpp"

#include <algorithm>
#include <functional>

#include "unicover/algebra.hpp"
#include "unicover/errors.hpp"
#include "unicover/polytext.hpp"

namespace unicover {

VarTablePtr base_vars(const std::vector<std::string>& base) {
    std::vector<int> weights(base.size(), 1);
    weights.push_back(0);
    return VarTable::make(base, std::move(weights));
}

FamilySystem build_family(const CoveringTower& tower, const std::vector<int>& exponents) {
    const auto report = validate_normal_type(tower);
    if (!report.passed()) {
        for (const auto& e : report.entries) {
            if (!e.pass) throw InvalidTower(e.rule + ": " + e.message);
        }
    }
    FamilySystem fs;
    fs.vars = tower.vars;
    fs.base = tower.base;
    fs.fibers = tower.fibers;
    fs.sigma = tower.sigma;
    fs.m = tower.m();
    fs.exponents = exponents.empty() ? tower.exponents : exponents;
    if (fs.exponents.empty()) fs.exponents.assign(tower.levels.size(), 1);
    if (fs.exponents.size() != tower.levels.size()) {
        throw InvalidArgument("expected " + std::to_string(tower.levels.size()) + " exponents, got " +
                              std::to_string(fs.exponents.size()));
    }
    for (int n : fs.exponents) {
        if (n < 1) throw InvalidArgument("exponents must be positive");
    }

    const auto t = fs.vars->param();
    for (std::size_t j = 0; j < tower.levels.size(); ++j) {
        const Poly& left = j == 0 ? tower.sigma : tower.levels[j - 1];
        fs.equations.push_back(left - Poly::variable(fs.vars, t, fs.exponents[j]) *
                                          Poly::variable(fs.vars, tower.fiber_index(j)));
    }
    fs.equations.push_back(tower.levels.back());
    return fs;
}

FamilyEquation eliminate(const FamilySystem& system) {
    if (system.equations.size() != system.fibers.size() + 1 || system.exponents.size() != system.fibers.size()) {
        throw InvalidArgument("family system is not triangular");
    }
    const auto& vars = system.vars;
    const auto t = vars->param();
    Poly sigma_total = system.equations.back();
    for (std::size_t j = system.fibers.size(); j-- > 0;) {
        const auto w = vars->index(system.fibers[j]);
        // equation j is N_j - t^{n_j} w_j
        const Poly numerator = system.equations[j] + Poly::variable(vars, t, system.exponents[j]) *
                                                         Poly::variable(vars, w);
        sigma_total = substitute_fraction(sigma_total, w, numerator, system.exponents[j]);
    }
    sigma_total = strip_var_power(sigma_total, t);

    const auto target = base_vars(system.base);
    FamilyEquation fe;
    try {
        fe.Sigma = sigma_total.rebase(target);
    } catch (const VarTableMismatch&) {
        throw InternalInconsistency("fiber variables survive elimination");
    }
    fe.m = system.m;
    fe.sigma = system.sigma.rebase(target);
    if (fe.Sigma.evaluate(target->param(), 0) != fe.sigma->pow(static_cast<unsigned>(fe.m))) {
        throw InternalInconsistency("central fiber of the eliminated family is not sigma^m");
    }
    return fe;
}

std::optional<std::size_t> sigma_main_variable(const Poly& sigma) {
    const auto param = sigma.vars()->param();
    for (std::size_t v = 0; v < param; ++v) {
        if (sigma.degree(v) >= 1 && sigma.lc_in(v).is_constant()) return v;
    }
    return std::nullopt;
}

namespace {

std::pair<Poly, Poly> divide_unit(const Poly& f, const Poly& g, std::size_t v) {
    auto pd = pseudo_div(f, g, v);
    const Rational lc = g.lc_in(v).constant_term();
    Rational scale = 1;
    for (int i = 0; i < pd.power; ++i) scale /= lc;
    return {pd.quotient * scale, pd.remainder * scale};
}

}  // namespace

SigmaAdic sigma_adic(const FamilyEquation& family) {
    if (!family.sigma) throw InvalidArgument("sigma-adic form needs sigma");
    const auto vars = family.Sigma.vars();
    const Poly sigma = family.sigma->rebase(vars);
    if (family.m < 1) throw InvalidArgument("m must be positive");
    const auto v = sigma_main_variable(sigma);
    if (!v) throw UnsupportedShape("sigma has no variable with constant leading coefficient");

    std::vector<Poly> digits;
    Poly rest = family.Sigma;
    while (!rest.is_zero()) {
        auto [q, r] = divide_unit(rest, sigma, *v);
        digits.push_back(std::move(r));
        rest = std::move(q);
    }

    const auto m = static_cast<std::size_t>(family.m);
    auto digit = [&](std::size_t j) { return j < digits.size() ? digits[j] : Poly(vars); };
    SigmaAdic adic{sigma, family.m, {}, *v};
    for (std::size_t i = 1; i <= m; ++i) adic.coeffs.push_back(digit(m - i));
    Poly& a1 = adic.coeffs.front();
    a1 += (digit(m) - Poly::constant(vars, 1)) * sigma;
    for (std::size_t j = m + 1; j < digits.size(); ++j) a1 += digits[j] * sigma.pow(static_cast<unsigned>(j - m + 1));

    if (reconstruct(adic) != family.Sigma) throw NotSigmaAdic("sigma-adic reconstruction differs from Sigma");
    return adic;
}

Poly reconstruct(const SigmaAdic& adic) {
    Poly total = adic.sigma.pow(static_cast<unsigned>(adic.m));
    Poly power = Poly::constant(adic.sigma.vars(), 1);
    for (std::size_t i = adic.coeffs.size(); i-- > 0;) {
        total += adic.coeffs[i].rebase(adic.sigma.vars()) * power;
        power = power * adic.sigma;
    }
    return total;
}

FamilyEquation family_from_adic(const SigmaAdic& adic) { return {reconstruct(adic), adic.m, adic.sigma}; }

ValidationReport check_divide(const SigmaAdic& adic) {
    ValidationReport report;
    for (std::size_t i = 1; i <= adic.coeffs.size(); ++i) {
        const Poly& a = adic.coeffs[i - 1];
        const std::string tag = "divides_t[" + std::to_string(i) + "]";
        if (a.is_zero()) {
            report.add(tag, true, "a_" + std::to_string(i) + " = 0");
            continue;
        }
        const int order = a.order(a.vars()->param());
        report.add(tag, order >= static_cast<int>(i),
                   "t-order of a_" + std::to_string(i) + " is " + std::to_string(order) + ", need " +
                       std::to_string(i));
    }
    return report;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_coefficient(std::mt19937_64& rng, int bound) {
    int c = 0;
    while (c == 0) c = uniform(rng, -bound, bound);
    return c;
}

// All exponent vectors over `vars` (by index) with the given weighted degree.
void enumerate_monomials(const std::vector<std::size_t>& vars, const VarTable& table, int degree, std::size_t pos,
                         Monomial& current, std::vector<Monomial>& out) {
    if (pos == vars.size()) {
        if (degree == 0) out.push_back(current);
        return;
    }
    const int w = table.weight(vars[pos]);
    for (int e = 0; e * w <= degree; ++e) {
        current[vars[pos]] = static_cast<std::uint32_t>(e);
        enumerate_monomials(vars, table, degree - e * w, pos + 1, current, out);
    }
    current[vars[pos]] = 0;
}

// Sparse random polynomial: `lead` with coefficient 1 plus a few of the
// other admissible monomials.
Poly random_sparse(std::mt19937_64& rng, const VarTablePtr& vars, const std::vector<Monomial>& admissible,
                   const Monomial& lead, int extra, int bound) {
    Poly p = Poly::term(vars, lead, 1);
    std::vector<Monomial> pool;
    for (const auto& mono : admissible) {
        if (mono != lead) pool.push_back(mono);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    const int count = std::min<int>(static_cast<int>(pool.size()), uniform(rng, 1, std::max(1, extra)));
    for (int i = 0; i < count; ++i) p.add_term(pool[static_cast<std::size_t>(i)], random_coefficient(rng, bound));
    return p;
}

// Rational roots of a monic integer polynomial are integers dividing c0.
bool has_integer_root(const std::vector<Rational>& coeffs) {
    const Rational& c0 = coeffs.front();
    if (c0 == 0) return true;
    const Integer n = abs(c0.get_num());
    for (Integer r = 1; r <= n; ++r) {
        if (n % r != 0) continue;
        for (int sign : {1, -1}) {
            Rational x = Rational(r) * sign, value = 0, power = 1;
            for (const auto& c : coeffs) {
                value += c * power;
                power *= x;
            }
            if (value == 0) return true;
        }
    }
    return false;
}

// Sufficient irreducibility test for forms of degree <= 3 that are monic in
// the first variable: a factorization survives the substitution z_i -> c_i z1
// (i >= 2), so an irreducible binary specialization certifies the form.
bool certainly_irreducible(const Poly& sigma, std::mt19937_64& rng) {
    const auto& vars = sigma.vars();
    const int d = sigma.total_degree();
    if (d <= 1) return true;
    if (d > 3) return false;
    const auto param = vars->param();
    Poly binary = sigma;
    for (std::size_t i = 2; i < param; ++i) {
        binary = substitute(binary, i, Poly::variable(vars, 1) * Rational(uniform(rng, 1, 7)));
    }
    Poly univariate = binary;
    if (param > 1) univariate = univariate.evaluate(1, 1);
    if (univariate.degree(std::size_t{0}) != d) return false;
    std::vector<Rational> coeffs;
    for (const auto& c : univariate.coeffs_in(0)) coeffs.push_back(c.constant_term());
    return !has_integer_root(coeffs);
}

// Each level must stay separable over the central fiber sigma = 0, not just
// generically: its discriminant, normed down through the lower levels and
// sigma (monic in z0), must not vanish.
bool separable_on_central_fiber(const CoveringTower& tower) {
    for (std::size_t j = 0; j < tower.levels.size(); ++j) {
        const auto var = tower.fiber_index(j);
        const Poly& q = tower.levels[j];
        if (q.degree(var) < 2) continue;
        Poly norm = resultant(q, derivative(q, var), var);
        for (std::size_t l = j; l-- > 0;) {
            if (norm.contains(tower.fiber_index(l))) norm = resultant(norm, tower.levels[l], tower.fiber_index(l));
        }
        if (norm.contains(0)) norm = resultant(norm, tower.sigma, 0);
        if (norm.is_zero()) return false;
    }
    return true;
}

}  // namespace

CoveringTower sample_tower(std::mt19937_64& rng, const SamplerOptions& options) {
    while (true) {
        CoveringTower tower;
        const int nbase = uniform(rng, options.min_base, options.max_base);
        for (int i = 0; i < nbase; ++i) tower.base.push_back("z" + std::to_string(i));
        const int d = uniform(rng, 1, options.max_d);

        const int k = uniform(rng, 0, options.max_k);
        tower.chain = {1};
        static constexpr int kRatios[] = {1, 2, 2, 2, 3, 3};
        for (int j = 0; j <= k; ++j) tower.chain.push_back(tower.chain.back() * kRatios[uniform(rng, 0, 5)]);
        if (tower.chain.back() > options.max_m || tower.chain.back() < 2) continue;
        for (int j = 0; j <= k; ++j) {
            tower.fibers.push_back("w" + std::to_string(j));
            tower.exponents.push_back(uniform(rng, 1, options.max_exponent));
        }
        tower.vars = tower_vars(tower.base, tower.fibers, d, tower.chain);
        const auto& vars = tower.vars;

        std::vector<std::size_t> base_idx;
        for (int i = 0; i < nbase; ++i) base_idx.push_back(static_cast<std::size_t>(i));
        Monomial scratch(vars->size(), 0);
        std::vector<Monomial> forms;
        enumerate_monomials(base_idx, *vars, d, 0, scratch, forms);
        Monomial lead(vars->size(), 0);
        lead[0] = static_cast<std::uint32_t>(d);
        tower.sigma = random_sparse(rng, vars, forms, lead, 3, options.coeff_bound);
        if (!is_squarefree(tower.sigma) || !certainly_irreducible(tower.sigma, rng)) continue;

        for (int j = 1; j <= k + 1; ++j) {
            std::vector<std::size_t> level_vars = base_idx;
            for (int l = 0; l < j; ++l) level_vars.push_back(tower.fiber_index(static_cast<std::size_t>(l)));
            const auto top = level_vars.back();
            const auto ratio = static_cast<std::uint32_t>(tower.chain[j] / tower.chain[j - 1]);
            std::vector<Monomial> admissible;
            enumerate_monomials(level_vars, *vars, d * tower.chain[j], 0, scratch, admissible);
            std::erase_if(admissible, [&](const Monomial& mono) { return mono[top] >= ratio; });
            Monomial top_mono(vars->size(), 0);
            top_mono[top] = ratio;
            tower.levels.push_back(random_sparse(rng, vars, admissible, top_mono, 4, options.coeff_bound));
        }

        if (!validate_normal_type(tower).passed()) continue;
        if (!separability_certificate(tower).passed() || !separable_on_central_fiber(tower)) continue;
        return tower;
    }
}

}  // namespace unicover
