#pragma once

// Independent checks used by the test suites. Nothing here calls the gcd,
// resolution or elimination code it is meant to verify.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "unicover/algebra.hpp"
#include "unicover/errors.hpp"
#include "unicover/poly.hpp"
#include "unicover/resolve.hpp"

namespace oracle {

using unicover::Poly;
using unicover::Rational;
using unicover::VarTablePtr;

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline int rand_nonzero(std::mt19937_64& rng, int bound) {
    int c = 0;
    while (c == 0) c = rand_int(rng, -bound, bound);
    return c;
}

// Up to `max_terms` terms over the first `nvars` variables (t excluded unless
// with_t), each of total degree <= max_degree.
inline Poly random_poly(std::mt19937_64& rng, const VarTablePtr& vars, int max_terms, int max_degree, int bound,
                        bool with_t = false) {
    Poly f(vars);
    const std::size_t n = with_t ? vars->size() : vars->size() - 1;
    const int terms = rand_int(rng, 1, max_terms);
    for (int i = 0; i < terms; ++i) {
        unicover::Monomial mono(vars->size(), 0);
        int left = rand_int(rng, 0, max_degree);
        for (int step = 0; step < left; ++step) mono[rand_int(rng, 0, static_cast<int>(n) - 1)] += 1;
        f.add_term(mono, rand_int(rng, -bound, bound));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Univariate factorization oracle.
//
// Polynomials are built from a known list of monic factors: linear x - r with
// r rational, or quadratics x^2 + b x + c whose discriminant is not a rational
// square (so they are irreducible over Q). The gcd is then the product of the
// shared factors with the smaller multiplicity.

struct Factor {
    Rational b;  // linear: x + b (b = -root)
    Rational c;  // quadratic: x^2 + b x + c
    bool quadratic = false;
    auto key() const { return std::make_tuple(quadratic, b, c); }
    bool operator<(const Factor& o) const { return key() < o.key(); }
};

inline bool is_rational_square(const Rational& q) {
    if (q < 0) return false;
    mpz_class num = q.get_num(), den = q.get_den();
    return mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
}

inline Rational small_rational(std::mt19937_64& rng) {
    Rational q(rand_int(rng, -4, 4), rand_int(rng, 1, 3));
    q.canonicalize();
    return q;
}

inline Factor random_factor(std::mt19937_64& rng, bool allow_quadratic) {
    if (allow_quadratic && rand_int(rng, 0, 3) == 0) {
        while (true) {
            Factor f{small_rational(rng), small_rational(rng), true};
            if (!is_rational_square(f.b * f.b - 4 * f.c)) return f;
        }
    }
    return Factor{small_rational(rng), 0, false};
}

using Factorization = std::map<Factor, int>;

inline int degree_of(const Factorization& fac) {
    int d = 0;
    for (const auto& [f, mult] : fac) d += mult * (f.quadratic ? 2 : 1);
    return d;
}

inline Factorization random_factorization(std::mt19937_64& rng, int max_degree) {
    Factorization fac;
    const int target = rand_int(rng, 1, max_degree);
    while (degree_of(fac) < target) {
        const Factor f = random_factor(rng, target - degree_of(fac) >= 2);
        fac[f] += 1;
    }
    return fac;
}

// Multiset intersection; factors that are the same only as polynomials (a
// quadratic equal to a product of linears cannot happen, it is irreducible).
inline Factorization common_factors(const Factorization& a, const Factorization& b) {
    Factorization out;
    for (const auto& [f, mult] : a) {
        auto it = b.find(f);
        if (it != b.end()) out[f] = std::min(mult, it->second);
    }
    return out;
}

inline Poly expand(const Factorization& fac, const VarTablePtr& vars, std::size_t var, const Rational& scale = 1) {
    const Poly x = Poly::variable(vars, var);
    Poly out = Poly::constant(vars, scale);
    for (const auto& [f, mult] : fac) {
        Poly p = f.quadratic ? x * x + x * f.b + Poly::constant(vars, f.c) : x + Poly::constant(vars, f.b);
        for (int i = 0; i < mult; ++i) out = out * p;
    }
    return out;
}

// f and g agree up to a positive rational factor.
inline bool same_up_to_positive(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    const Rational a = f.leading_rational(), b = g.leading_rational();
    if ((a > 0) != (b > 0)) return false;
    return f * b == g * a;
}

// ---------------------------------------------------------------------------
// Curve branches.

// Expected resolution depth: max(1, max pairwise t-order of phi_i - phi_j).
inline int branch_track_oracle(const std::vector<unicover::BranchGerm>& branches) {
    int depth = 1;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            const auto& a = branches[i].coeffs;
            const auto& b = branches[j].coeffs;
            const std::size_t n = std::min(a.size(), b.size());
            std::optional<int> ord;
            for (std::size_t k = 0; k < n && !ord; ++k) {
                if (a[k] != b[k]) ord = static_cast<int>(k) + 1;
            }
            if (!ord) throw unicover::TruncationTooShort("identical branches within truncation");
            depth = std::max(depth, *ord);
        }
    }
    return depth;
}

// Random branch set with a planted contact structure: each new branch copies
// a prefix of an earlier one and then differs. Contact orders stay <= max_contact.
inline std::vector<unicover::BranchGerm> random_branches(std::mt19937_64& rng, int max_branches, int max_contact,
                                                         int bound) {
    const int count = rand_int(rng, 1, max_branches);
    const int length = max_contact + 1;
    std::vector<std::vector<int>> raw;
    while (static_cast<int>(raw.size()) < count) {
        std::vector<int> c(length);
        for (auto& x : c) x = rand_int(rng, -bound, bound);
        if (!raw.empty()) {
            const auto& src = raw[rand_int(rng, 0, static_cast<int>(raw.size()) - 1)];
            const int prefix = rand_int(rng, 0, max_contact - 1);
            std::copy(src.begin(), src.begin() + prefix, c.begin());
        }
        bool fresh = true;
        for (const auto& other : raw) {
            if (std::equal(other.begin(), other.begin() + max_contact, c.begin())) fresh = false;
        }
        if (fresh) raw.push_back(c);
    }
    std::vector<unicover::BranchGerm> out;
    for (const auto& c : raw) {
        unicover::BranchGerm g;
        for (int x : c) g.coeffs.emplace_back(x);
        out.push_back(g);
    }
    return out;
}

// Whether one chain of centers can resolve the set: at every level the
// colliding groups have one common size and each live component carries the
// same number of them.
inline bool uniform_clusters(const std::vector<unicover::BranchGerm>& branches) {
    std::vector<std::vector<std::size_t>> components(1);
    for (std::size_t i = 0; i < branches.size(); ++i) components[0].push_back(i);
    for (std::size_t level = 0;; ++level) {
        std::vector<std::vector<std::size_t>> next;
        std::optional<std::size_t> size, count;
        for (const auto& comp : components) {
            std::map<Rational, std::vector<std::size_t>> groups;
            for (std::size_t i : comp) {
                const auto& c = branches[i].coeffs;
                if (level >= c.size()) throw unicover::TruncationTooShort("branches agree to their truncation");
                groups[c[level]].push_back(i);
            }
            std::size_t collisions = 0;
            for (auto& [value, group] : groups) {
                if (group.size() < 2) continue;
                if (size && *size != group.size()) return false;
                size = group.size();
                ++collisions;
                next.push_back(std::move(group));
            }
            if (count && *count != collisions) return false;
            count = collisions;
        }
        if (next.empty()) return true;
        components = std::move(next);
    }
}

// Follows one branch through the charts of a curve resolution. The address is
// the list of t = 0 values of y/t, w0, w1, ... for as long as the branch stays
// in the chart; `on_final` is set when the branch survives every step and
// satisfies the final working equation exactly.
struct BranchPath {
    std::vector<Rational> address;
    bool survived = false;
    bool on_final = false;
};

inline BranchPath track_branch(const unicover::ResolutionTower& res, const unicover::BranchGerm& germ) {
    const auto& vars = res.vars;
    const std::size_t t = vars->param();
    BranchPath path;
    // y = t * w0; centers and the final equation may involve every earlier fiber
    std::vector<std::pair<std::string, Poly>> known;
    auto plug = [&](Poly f) {
        for (const auto& [name, series] : known) f = unicover::substitute(f, name, series);
        return f;
    };
    Poly v = unicover::divide_by_var_power(germ.series(vars), t, 1);
    known.emplace_back(res.fibers.front(), v);
    path.address.push_back(v.evaluate(t, 0).constant_term());
    for (const auto& step : res.steps) {
        const Poly at = plug(step.D);
        if (at.evaluate(t, 0) != Poly(vars)) return path;
        v = unicover::divide_by_var_power(at, t, 1);
        known.emplace_back(step.new_var, v);
        path.address.push_back(v.evaluate(t, 0).constant_term());
    }
    path.survived = true;
    path.on_final = plug(res.final_system.back()).is_zero();
    return path;
}

// Every branch ends at a distinct address and survivors lie on the final
// equation.
inline bool branches_separated(const unicover::ResolutionTower& res,
                               const std::vector<unicover::BranchGerm>& branches, std::string* why = nullptr) {
    std::vector<BranchPath> paths;
    for (const auto& b : branches) paths.push_back(track_branch(res, b));
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (paths[i].survived && !paths[i].on_final) {
            if (why) *why = "branch " + std::to_string(i + 1) + " misses the final equation";
            return false;
        }
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            if (paths[i].address == paths[j].address) {
                if (why) *why = "branches " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " collide";
                return false;
            }
        }
    }
    return true;
}

}  // namespace oracle
