#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "unicover/poly.hpp"

namespace unicover {

enum class ArithKind { add, sub, mul };

Poly arith(const Poly& f, const Poly& g, ArithKind kind);

/// q with q*g == f; throws NotDivisible otherwise.
Poly exact_div(const Poly& f, const Poly& g);

/// Divides every coefficient by t^power; throws NotDivisible if some term has
/// a smaller power of `var`.
Poly divide_by_var_power(const Poly& f, std::size_t var, std::uint32_t power);

struct PseudoDivision {
    Poly quotient;
    Poly remainder;
    int power = 0;
};

/// lc(g)^power * f == quotient * g + remainder, deg(remainder) < deg(g),
/// power = max(deg f - deg g + 1, 0), all degrees in `main`.
PseudoDivision pseudo_div(const Poly& f, const Poly& g, std::string_view main);
PseudoDivision pseudo_div(const Poly& f, const Poly& g, std::size_t main);

/// Remainder of f modulo g where g's leading coefficient in `main` is a
/// nonzero rational.
Poly rem_by_unit_lc(const Poly& f, const Poly& g, std::size_t main);

/// Scales f so that its canonical leading rational is 1.
Poly normalize_unit(const Poly& f);

/// Full multivariate gcd over Q, normalized with leading rational 1.
Poly gcd(const Poly& f, const Poly& g);
/// Gcd of the coefficients of f viewed as a polynomial in `main`.
Poly content(const Poly& f, std::size_t main);
Poly primitive_part(const Poly& f, std::size_t main);

/// Gcd in `main` over the fraction field of the other variables, returned
/// primitive in `main` with the leading coefficient's leading rational 1.
Poly gcd_main(const Poly& f, const Poly& g, std::string_view main);
Poly gcd_main(const Poly& f, const Poly& g, std::size_t main);
Poly gcd_main(std::span<const Poly> polys, std::size_t main);

/// Resultant with respect to `main` (subresultant algorithm).
Poly resultant(const Poly& f, const Poly& g, std::size_t main);

Poly derivative(const Poly& f, std::string_view var);
Poly derivative(const Poly& f, std::size_t var);

/// Replaces `var` by `expr` and expands.
Poly substitute(const Poly& f, std::string_view var, const Poly& expr);
Poly substitute(const Poly& f, std::size_t var, const Poly& expr);

/// Substitutes var = numerator / t^power and multiplies through by
/// t^(power * deg_var f), keeping the result polynomial.
Poly substitute_fraction(const Poly& f, std::size_t var, const Poly& numerator, std::uint32_t power);

/// Removes the largest power of `var` dividing f.
Poly strip_var_power(const Poly& f, std::size_t var);

/// [c_0, ..., c_upto] with f = sum c_i t^i mod t^(upto+1).
std::vector<Poly> taylor_t(const Poly& f, unsigned upto);

/// Product of the distinct irreducible factors of f (up to a rational unit).
Poly squarefree_part(const Poly& f);
bool is_squarefree(const Poly& f);

/// g with g^m == f, g squarefree with positive leading rational.
/// Throws NotAPower.
Poly mth_root(const Poly& f, unsigned m);

int weighted_degree(const Poly& f);
bool is_weighted_homogeneous(const Poly& f);

}  // namespace unicover
