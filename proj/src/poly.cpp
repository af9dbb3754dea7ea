#include "unicover/poly.hpp"

#include <algorithm>

#include "unicover/errors.hpp"

namespace unicover {

VarTable::VarTable(std::vector<std::string> names, std::optional<std::vector<int>> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
    auto it = std::find(names_.begin(), names_.end(), kParam);
    if (it != names_.end()) {
        if (it + 1 != names_.end()) {
            throw InvalidArgument("parameter `t` must be declared last or omitted");
        }
    } else {
        names_.emplace_back(kParam);
    }
    if (weights_ && weights_->size() + 1 == names_.size()) weights_->push_back(0);
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw InvalidArgument("empty variable name");
        if (!index_.emplace(names_[i], i).second) {
            throw InvalidArgument("duplicate variable `" + names_[i] + "`");
        }
    }
    if (weights_) {
        if (weights_->size() != names_.size()) {
            throw InvalidArgument("weights do not cover every variable");
        }
        for (std::size_t i = 0; i + 1 < names_.size(); ++i) {
            if ((*weights_)[i] <= 0) throw InvalidArgument("weights must be positive");
        }
        if (weights_->back() != 0) throw InvalidArgument("the parameter has weight 0");
    }
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t VarTable::index(std::string_view name) const {
    auto found = find(name);
    if (!found) throw UnknownVariable("unknown variable `" + std::string(name) + "`");
    return *found;
}

int VarTable::weight(std::size_t i) const {
    if (!weights_) throw MissingWeights("variable table carries no weights");
    return weights_->at(i);
}

std::shared_ptr<const VarTable> VarTable::extended(const std::vector<std::string>& extra,
                                                   std::optional<std::vector<int>> extra_weights) const {
    std::vector<std::string> names(names_.begin(), names_.end() - 1);
    names.insert(names.end(), extra.begin(), extra.end());
    std::optional<std::vector<int>> weights;
    if (weights_ && extra_weights) {
        weights.emplace(weights_->begin(), weights_->end() - 1);
        weights->insert(weights->end(), extra_weights->begin(), extra_weights->end());
    }
    return make(std::move(names), std::move(weights));
}

std::shared_ptr<const VarTable> VarTable::with_weights(std::vector<int> weights) const {
    std::vector<std::string> names(names_.begin(), names_.end() - 1);
    if (weights.size() == names.size()) weights.push_back(0);
    return make(std::move(names), std::move(weights));
}

bool same_vars(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && a->names() == b->names());
}

bool canonical_before(const Monomial& a, const Monomial& b, std::size_t param) {
    if (a[param] != b[param]) return a[param] < b[param];
    long da = 0;
    long db = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == param) continue;
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (i == param || a[i] == b[i]) continue;
        return a[i] < b[i];
    }
    return false;
}

Poly::Poly(VarTablePtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw InvalidArgument("null variable table");
}

Poly Poly::constant(VarTablePtr vars, const Rational& c) {
    Poly p(std::move(vars));
    Rational q = c;
    q.canonicalize();
    p.add_term(Monomial(p.vars_->size(), 0), q);
    return p;
}

Poly Poly::variable(VarTablePtr vars, std::string_view name, std::uint32_t power) {
    auto index = vars->index(name);
    return variable(std::move(vars), index, power);
}

Poly Poly::variable(VarTablePtr vars, std::size_t index, std::uint32_t power) {
    Poly p(std::move(vars));
    Monomial mono(p.vars_->size(), 0);
    mono.at(index) = power;
    p.add_term(mono, Rational(1));
    return p;
}

Poly Poly::term(VarTablePtr vars, Monomial mono, const Rational& c) {
    Poly p(std::move(vars));
    if (mono.size() != p.vars_->size()) throw InvalidArgument("monomial length mismatch");
    Rational q = c;
    q.canonicalize();
    p.add_term(mono, q);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](std::uint32_t e) { return e == 0; }));
}

Rational Poly::constant_term() const { return coefficient(Monomial(vars_->size(), 0)); }

Rational Poly::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Poly::Term> Poly::canonical_terms() const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    const auto param = vars_->param();
    std::sort(out.begin(), out.end(), [param](const Term& a, const Term& b) {
        return canonical_before(a.first, b.first, param);
    });
    return out;
}

Rational Poly::leading_rational() const {
    if (terms_.empty()) return Rational(0);
    const auto param = vars_->param();
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it) {
        if (canonical_before(it->first, best->first, param)) best = it;
    }
    return best->second;
}

int Poly::degree(std::size_t var) const {
    if (terms_.empty()) return kMinusInfinity;
    std::uint32_t d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono[var]);
    return static_cast<int>(d);
}

int Poly::total_degree() const {
    if (terms_.empty()) return kMinusInfinity;
    long d = 0;
    for (const auto& [mono, c] : terms_) {
        long s = 0;
        for (auto e : mono) s += e;
        d = std::max(d, s);
    }
    return static_cast<int>(d);
}

int Poly::order(std::size_t var) const {
    if (terms_.empty()) return kMinusInfinity;
    auto d = std::numeric_limits<std::uint32_t>::max();
    for (const auto& [mono, c] : terms_) d = std::min(d, mono[var]);
    return static_cast<int>(d);
}

std::vector<std::size_t> Poly::support() const {
    std::vector<bool> seen(vars_->size(), false);
    for (const auto& [mono, c] : terms_) {
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] > 0) seen[i] = true;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i]) out.push_back(i);
    }
    return out;
}

std::vector<Poly> Poly::coeffs_in(std::size_t var) const {
    std::vector<Poly> out;
    const int d = degree(var);
    if (is_minus_infinity(d)) return out;
    out.assign(static_cast<std::size_t>(d) + 1, Poly(vars_));
    for (const auto& [mono, c] : terms_) {
        Monomial m = mono;
        const auto e = m[var];
        m[var] = 0;
        out[e].terms_.emplace(std::move(m), c);
    }
    return out;
}

Poly Poly::from_coeffs(VarTablePtr vars, std::size_t var, std::span<const Poly> coeffs) {
    Poly out(std::move(vars));
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        out.check_same(coeffs[e]);
        for (const auto& [mono, c] : coeffs[e].terms_) {
            if (mono[var] != 0) throw InvalidArgument("coefficient contains the main variable");
            Monomial m = mono;
            m[var] = static_cast<std::uint32_t>(e);
            out.add_term(m, c);
        }
    }
    return out;
}

Poly Poly::lc_in(std::size_t var) const {
    auto cs = coeffs_in(var);
    return cs.empty() ? Poly(vars_) : cs.back();
}

Poly Poly::rebase(const VarTablePtr& target) const {
    if (target == vars_) return *this;
    std::vector<std::size_t> map(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        auto j = target->find(vars_->name(i));
        if (!j) {
            if (degree(i) > 0) {
                throw VarTableMismatch("variable `" + vars_->name(i) + "` missing from target table");
            }
            map[i] = target->size();
        } else {
            map[i] = *j;
        }
    }
    Poly out(target);
    for (const auto& [mono, c] : terms_) {
        Monomial m(target->size(), 0);
        for (std::size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] > 0) m[map[i]] = mono[i];
        }
        out.add_term(m, c);
    }
    return out;
}

Poly Poly::evaluate(std::size_t var, const Rational& value) const {
    Poly out(vars_);
    for (const auto& [mono, c] : terms_) {
        Monomial m = mono;
        const auto e = m[var];
        m[var] = 0;
        if (e == 0) {
            out.add_term(m, c);
        } else if (value != 0) {
            Rational v;
            mpz_pow_ui(v.get_num_mpz_t(), value.get_num_mpz_t(), e);
            mpz_pow_ui(v.get_den_mpz_t(), value.get_den_mpz_t(), e);
            out.add_term(m, c * v);
        }
    }
    return out;
}

Poly Poly::shift(std::size_t var, std::uint32_t power) const {
    Poly out(vars_);
    for (const auto& [mono, c] : terms_) {
        Monomial m = mono;
        m[var] += power;
        out.terms_.emplace_hint(out.terms_.end(), std::move(m), c);
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [mono, c] : out.terms_) c = -c;
    return out;
}

void Poly::add_term(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::add_scaled(const Poly& other, const Rational& c, const Monomial& mono) {
    check_same(other);
    if (c == 0) return;
    Monomial m(mono.size());
    for (const auto& [om, oc] : other.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = om[i] + mono[i];
        add_term(m, oc * c);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    check_same(other);
    for (const auto& [mono, c] : other.terms_) add_term(mono, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    check_same(other);
    for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    Poly out(a.vars_);
    Monomial m(a.vars_->size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    Rational q = c;
    q.canonicalize();
    for (auto& [mono, coeff] : terms_) coeff *= q;
    return *this;
}

Poly Poly::pow(unsigned exponent) const {
    Poly result = constant(vars_, Rational(1));
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

bool Poly::operator==(const Poly& other) const {
    return same_vars(vars_, other.vars_) && terms_ == other.terms_;
}

void Poly::check_same(const Poly& other) const {
    if (!same_vars(vars_, other.vars_)) {
        throw VarTableMismatch("operands use different variable tables");
    }
}

}  // namespace unicover
