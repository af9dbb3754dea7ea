#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace unicover {

using Rational = mpq_class;
using Integer = mpz_class;

// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

inline bool is_minus_infinity(int degree) { return degree == kMinusInfinity; }

/// Ordered variable names plus the deformation parameter.
///
/// The parameter is always present and always named `t`; it sits at the last
/// index. Optional weights cover every variable (the parameter has weight 0).
class VarTable {
public:
    static constexpr std::string_view kParam = "t";

    VarTable(std::vector<std::string> names, std::optional<std::vector<int>> weights = std::nullopt);

    static std::shared_ptr<const VarTable> make(std::vector<std::string> names,
                                                std::optional<std::vector<int>> weights = std::nullopt) {
        return std::make_shared<const VarTable>(std::move(names), std::move(weights));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index(std::string_view name) const;  // throws UnknownVariable
    std::size_t param() const { return names_.size() - 1; }

    bool has_weights() const { return weights_.has_value(); }
    int weight(std::size_t i) const;

    /// Copy with extra variables appended before the parameter. Weights are
    /// kept only if `extra_weights` is given for a weighted table.
    std::shared_ptr<const VarTable> extended(const std::vector<std::string>& extra,
                                             std::optional<std::vector<int>> extra_weights = std::nullopt) const;
    std::shared_ptr<const VarTable> with_weights(std::vector<int> weights) const;

    bool operator==(const VarTable& other) const {
        return names_ == other.names_ && weights_ == other.weights_;
    }

private:
    std::vector<std::string> names_;
    std::optional<std::vector<int>> weights_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

bool same_vars(const VarTablePtr& a, const VarTablePtr& b);

/// Exponent vector indexed by the owning VarTable.
using Monomial = std::vector<std::uint32_t>;

/// Canonical order: ascending power of `t`, then graded reverse
/// lexicographic (descending) over the remaining variables in declaration
/// order. Returns true when `a` is rendered before `b`.
bool canonical_before(const Monomial& a, const Monomial& b, std::size_t param);

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are stored in lexicographic exponent order (variable 0 most
/// significant); `canonical_terms()` gives the rendering order.
class Poly {
public:
    using Terms = std::map<Monomial, Rational>;
    using Term = std::pair<Monomial, Rational>;

    /// Placeholder without a variable table; assign before use.
    Poly() = default;
    explicit Poly(VarTablePtr vars);

    static Poly constant(VarTablePtr vars, const Rational& c);
    static Poly variable(VarTablePtr vars, std::string_view name, std::uint32_t power = 1);
    static Poly variable(VarTablePtr vars, std::size_t index, std::uint32_t power = 1);
    static Poly term(VarTablePtr vars, Monomial mono, const Rational& c);

    const VarTablePtr& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;
    Rational coefficient(const Monomial& mono) const;

    std::vector<Term> canonical_terms() const;
    /// Coefficient of the first term in canonical order (0 for zero).
    Rational leading_rational() const;

    int degree(std::size_t var) const;
    int degree(std::string_view var) const { return degree(vars_->index(var)); }
    int total_degree() const;
    /// Smallest exponent of `var` over all terms (kMinusInfinity for zero).
    int order(std::size_t var) const;
    bool contains(std::size_t var) const { return degree(var) > 0; }
    bool contains(std::string_view var) const { return contains(vars_->index(var)); }
    /// Variables that occur with positive exponent, ascending by index.
    std::vector<std::size_t> support() const;

    /// Coefficients of `var`^0 .. `var`^deg (free of `var`).
    std::vector<Poly> coeffs_in(std::size_t var) const;
    static Poly from_coeffs(VarTablePtr vars, std::size_t var, std::span<const Poly> coeffs);
    /// Leading coefficient as a polynomial in `var`.
    Poly lc_in(std::size_t var) const;

    /// Same polynomial over a table that contains all variables in use.
    Poly rebase(const VarTablePtr& target) const;

    /// Specialize `var` to a rational value.
    Poly evaluate(std::size_t var, const Rational& value) const;

    /// Multiply by the monomial var^power.
    Poly shift(std::size_t var, std::uint32_t power) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    Poly pow(unsigned exponent) const;

    /// Adds c * x^mono * other to *this.
    void add_scaled(const Poly& other, const Rational& c, const Monomial& mono);
    /// `c` must be in lowest terms (the constructors and scalar product
    /// canonicalize their argument, this does not).
    void add_term(const Monomial& mono, const Rational& c);

    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

private:
    void check_same(const Poly& other) const;

    VarTablePtr vars_;
    Terms terms_;
};

}  // namespace unicover
