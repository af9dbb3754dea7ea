#include "unicover/polytext.hpp"

#include <cctype>

#include "unicover/errors.hpp"

namespace unicover {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
public:
    Parser(std::string_view text, VarTablePtr vars, int line_offset, int column_offset)
        : text_(text), vars_(std::move(vars)), line_offset_(line_offset), column_offset_(column_offset) {}

    Poly parse() {
        skip_space();
        if (at_end()) fail("empty polynomial");
        Poly p = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected `") + peek() + "`");
        return p;
    }

private:
    Poly expr() {
        Poly acc = term();
        while (true) {
            skip_space();
            if (match('+')) {
                acc += term();
            } else if (match('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        while (true) {
            skip_space();
            if (!match('*')) return acc;
            acc = acc * unary();
        }
    }

    Poly unary() {
        skip_space();
        if (match('-')) return -unary();
        return power();
    }

    Poly power() {
        Poly base = atom();
        skip_space();
        if (!match('^')) return base;
        skip_space();
        if (at_end()) fail("missing exponent");
        if (peek() == '-') fail("negative exponent");
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer literal");
        const auto [line, col] = position();
        std::string digits = read_digits();
        if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
            throw SyntaxError(line, col, "exponent too large");
        }
        return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }

    Poly atom() {
        skip_space();
        if (at_end()) fail("unexpected end of input");
        const char c = peek();
        if (c == '(') {
            advance();
            Poly inner = expr();
            skip_space();
            if (!match(')')) fail("expected `)`");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail(std::string("unexpected `") + c + "`");
    }

    Poly number() {
        Integer num(read_digits());
        Integer den(1);
        std::size_t save = pos_;
        skip_space();
        if (match('/')) {
            skip_space();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
            const auto [line, col] = position();
            den = Integer(read_digits());
            if (den == 0) throw SyntaxError(line, col, "zero denominator");
        } else {
            pos_ = save;
        }
        Rational q(num, den);
        q.canonicalize();
        return Poly::constant(vars_, q);
    }

    Poly identifier() {
        const auto [line, col] = position();
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            name.push_back(peek());
            advance();
        }
        auto index = vars_->find(name);
        if (!index) {
            throw UnknownVariable("unknown variable `" + name + "` at line " + std::to_string(line) +
                                  ", column " + std::to_string(col));
        }
        return Poly::variable(vars_, *index);
    }

    std::string read_digits() {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits.push_back(peek());
            advance();
        }
        return digits;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool match(char c) {
        if (at_end() || peek() != c) return false;
        advance();
        return true;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::pair<int, int> position() const {
        return {line_ + line_offset_, line_ == 1 ? col_ + column_offset_ : col_};
    }

    [[noreturn]] void fail(const std::string& what) const {
        const auto [line, col] = position();
        throw SyntaxError(line, col, what);
    }

    std::string_view text_;
    VarTablePtr vars_;
    int line_offset_;
    int column_offset_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

std::string render_monomial(const Monomial& mono, const VarTable& vars) {
    std::string out;
    auto emit = [&](std::size_t i) {
        if (mono[i] == 0) return;
        if (!out.empty()) out += '*';
        out += vars.name(i);
        if (mono[i] > 1) out += '^' + std::to_string(mono[i]);
    };
    emit(vars.param());
    for (std::size_t i = 0; i < vars.param(); ++i) emit(i);
    return out;
}

}  // namespace

Poly parse_poly(std::string_view text, const VarTablePtr& vars, int line_offset, int column_offset) {
    return Parser(text, vars, line_offset, column_offset).parse();
}

std::string render_rational(const Rational& q) { return q.get_str(); }

std::string render_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : f.canonical_terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = abs(c);
        const std::string m = render_monomial(mono, *f.vars());
        if (m.empty()) {
            out += render_rational(magnitude);
        } else if (magnitude == 1) {
            out += m;
        } else {
            out += render_rational(magnitude) + "*" + m;
        }
    }
    return out;
}

}  // namespace unicover
