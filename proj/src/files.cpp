#include "unicover/files.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "unicover/errors.hpp"
#include "unicover/polytext.hpp"

namespace unicover {

namespace {

constexpr int kMaxBlock = 64;

struct Line {
    int number = 0;
    std::string key;
    std::string value;
    int column = 0;  // 1-based column where the value starts
};

struct Word {
    std::string text;
    int column = 0;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const auto first = raw.find_first_not_of(" \t");
        if (first == std::string_view::npos) continue;
        const auto colon = raw.find(':');
        if (colon == std::string_view::npos) {
            throw SyntaxError(number, static_cast<int>(first) + 1, "expected `key: value`");
        }
        std::string_view key = raw.substr(first, colon - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.remove_suffix(1);
        if (key.empty()) throw SyntaxError(number, static_cast<int>(first) + 1, "missing key before `:`");
        Line line{number, std::string(key), "", static_cast<int>(colon) + 2};
        const auto start = raw.find_first_not_of(" \t", colon + 1);
        if (start != std::string_view::npos) {
            std::string_view value = raw.substr(start);
            while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) value.remove_suffix(1);
            line.value = std::string(value);
            line.column = static_cast<int>(start) + 1;
        }
        out.push_back(std::move(line));
    }
    return out;
}

std::vector<Word> split_words(const Line& line) {
    std::vector<Word> out;
    const std::string& v = line.value;
    std::size_t i = 0;
    auto separator = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '|'; };
    while (i < v.size()) {
        while (i < v.size() && separator(v[i])) ++i;
        const std::size_t start = i;
        while (i < v.size() && !separator(v[i])) ++i;
        if (i > start) out.push_back({v.substr(start, i - start), line.column + static_cast<int>(start)});
    }
    return out;
}

int parse_int(const Word& w, int line) {
    std::size_t i = w.text[0] == '-' || w.text[0] == '+' ? 1 : 0;
    if (i == w.text.size() || w.text.size() > 9) throw SyntaxError(line, w.column, "expected an integer, got `" + w.text + "`");
    for (std::size_t j = i; j < w.text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(w.text[j]))) {
            throw SyntaxError(line, w.column + static_cast<int>(j), "expected an integer, got `" + w.text + "`");
        }
    }
    return std::stoi(w.text);
}

Rational parse_rational(const Word& w, int line) {
    const std::string& s = w.text;
    std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
    bool digits = false, slash = false, den_digits = false;
    for (std::size_t j = i; j < s.size(); ++j) {
        const char c = s[j];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            (slash ? den_digits : digits) = true;
        } else if (c == '/' && !slash && digits) {
            slash = true;
        } else {
            throw SyntaxError(line, w.column + static_cast<int>(j), "expected a rational, got `" + s + "`");
        }
    }
    if (!digits || (slash && !den_digits)) throw SyntaxError(line, w.column, "expected a rational, got `" + s + "`");
    Rational q(s[0] == '+' ? s.substr(1) : s);
    if (q.get_den() == 0) throw SyntaxError(line, w.column, "zero denominator");
    q.canonicalize();
    return q;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

std::vector<std::string> parse_names(const Line& line) {
    std::vector<std::string> names;
    for (const auto& w : split_words(line)) {
        if (!is_identifier(w.text)) throw SyntaxError(line.number, w.column, "invalid variable name `" + w.text + "`");
        if (w.text == VarTable::kParam) throw StructureError("`t` is reserved for the deformation parameter");
        for (const auto& seen : names) {
            if (seen == w.text) throw StructureError("variable `" + w.text + "` declared twice");
        }
        names.push_back(w.text);
    }
    if (names.empty()) throw StructureError("`" + line.key + ":` declares no variables");
    return names;
}

Poly parse_value(const Line& line, const VarTablePtr& vars) {
    if (line.value.empty()) throw SyntaxError(line.number, line.column, "missing polynomial");
    return parse_poly(line.value, vars, line.number - 1, line.column - 1);
}

// Single-valued keys plus the repeated ones, with unknown keys rejected.
class Sections {
public:
    Sections(std::string_view text, const std::vector<std::string>& single, const std::vector<std::string>& repeated,
             std::string_view what) {
        for (auto& line : split_lines(text)) {
            const bool is_single = std::find(single.begin(), single.end(), line.key) != single.end();
            const bool is_repeated = std::find(repeated.begin(), repeated.end(), line.key) != repeated.end();
            if (!is_single && !is_repeated) {
                throw StructureError("unknown key `" + line.key + "` on line " + std::to_string(line.number) +
                                     " of a " + std::string(what) + " file");
            }
            if (is_single && single_.count(line.key)) {
                throw StructureError("duplicate key `" + line.key + "` on line " + std::to_string(line.number));
            }
            if (is_single) {
                single_.emplace(line.key, line);
            } else {
                repeated_.push_back(std::move(line));
            }
        }
    }

    const Line* get(const std::string& key) const {
        auto it = single_.find(key);
        return it == single_.end() ? nullptr : &it->second;
    }
    const Line& require(const std::string& key) const {
        if (const Line* line = get(key)) return *line;
        throw StructureError("missing `" + key + ":` line");
    }
    std::vector<const Line*> all(std::string_view key) const {
        std::vector<const Line*> out;
        for (const auto& line : repeated_) {
            if (line.key == key) out.push_back(&line);
        }
        return out;
    }

private:
    std::map<std::string, Line> single_;
    std::vector<Line> repeated_;
};

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : " ") + s;
    return out;
}

std::string join(const std::vector<int>& items) {
    std::string out;
    for (int n : items) out += (out.empty() ? "" : " ") + std::to_string(n);
    return out;
}

}  // namespace

CoveringTower parse_tower(std::string_view text) {
    const Sections s(text, {"base", "fibers", "chain", "exponents", "sigma"}, {"eq"}, "tower");
    const auto levels = s.all("eq");
    if (levels.empty()) throw StructureError("tower has no `eq:` levels");

    CoveringTower tower;
    tower.base = parse_names(s.require("base"));
    if (const Line* f = s.get("fibers")) {
        tower.fibers = parse_names(*f);
    } else {
        for (std::size_t j = 0; j < levels.size(); ++j) tower.fibers.push_back("w" + std::to_string(j));
    }
    if (tower.fibers.size() != levels.size()) {
        throw StructureError(std::to_string(levels.size()) + " levels need as many fiber variables, got " +
                             std::to_string(tower.fibers.size()));
    }
    for (const auto& f : tower.fibers) {
        if (std::find(tower.base.begin(), tower.base.end(), f) != tower.base.end()) {
            throw StructureError("variable `" + f + "` is both a base and a fiber variable");
        }
    }

    const Line& chain = s.require("chain");
    for (const auto& w : split_words(chain)) tower.chain.push_back(parse_int(w, chain.number));
    if (tower.chain.size() != levels.size() + 1) {
        throw StructureError("chain has " + std::to_string(tower.chain.size()) + " entries, expected " +
                             std::to_string(levels.size() + 1) + " for " + std::to_string(levels.size()) +
                             " levels");
    }
    if (const Line* e = s.get("exponents")) {
        for (const auto& w : split_words(*e)) tower.exponents.push_back(parse_int(w, e->number));
        if (tower.exponents.size() != levels.size()) {
            throw StructureError("expected " + std::to_string(levels.size()) + " exponents, got " +
                                 std::to_string(tower.exponents.size()));
        }
    } else {
        tower.exponents.assign(levels.size(), 1);
    }

    // The weights depend on deg(sigma), so sigma is read once without them.
    std::vector<std::string> names = tower.base;
    names.insert(names.end(), tower.fibers.begin(), tower.fibers.end());
    const Line& sigma = s.require("sigma");
    const int d = parse_value(sigma, VarTable::make(names)).total_degree();
    tower.vars = tower_vars(tower.base, tower.fibers, d, tower.chain);
    tower.sigma = parse_value(sigma, tower.vars);
    for (const Line* level : levels) tower.levels.push_back(parse_value(*level, tower.vars));
    return tower;
}

FamilyEquation parse_family(std::string_view text) {
    std::vector<std::string> keys{"base", "sigma", "m", "Sigma"};
    for (int i = 1; i <= kMaxBlock; ++i) keys.push_back("a" + std::to_string(i));
    const Sections s(text, keys, {}, "family");
    auto get = [&](const std::string& key) { return s.get(key); };
    const VarTablePtr vars = base_vars(parse_names(s.require("base")));

    FamilyEquation family;
    if (const Line* sigma = get("sigma")) family.sigma = parse_value(*sigma, vars);
    if (const Line* m = get("m")) {
        const auto words = split_words(*m);
        if (words.size() != 1) throw SyntaxError(m->number, m->column, "expected a single integer");
        family.m = parse_int(words[0], m->number);
        if (family.m < 1) throw StructureError("m must be positive");
    }

    auto coefficient = [&](int i) { return get("a" + std::to_string(i)); };
    int block = 0;
    while (block < kMaxBlock && coefficient(block + 1)) ++block;
    for (int i = block + 1; i <= kMaxBlock; ++i) {
        if (coefficient(i)) {
            throw StructureError("sigma-adic block skips a" + std::to_string(block + 1));
        }
    }
    const Line* Sigma = get("Sigma");
    if ((Sigma != nullptr) == (block > 0)) {
        throw StructureError("a family file needs exactly one of `Sigma:` or the block `a1:` .. `am:`");
    }
    if (Sigma) {
        family.Sigma = parse_value(*Sigma, vars);
        return family;
    }
    if (!family.sigma) throw StructureError("the sigma-adic block needs a `sigma:` line");
    if (family.m == 0) family.m = block;
    if (family.m != block) {
        throw StructureError("m = " + std::to_string(family.m) + " but the block has " + std::to_string(block) +
                             " coefficients");
    }
    SigmaAdic adic{*family.sigma, family.m, {}, 0};
    for (int i = 1; i <= block; ++i) adic.coeffs.push_back(parse_value(*coefficient(i), vars));
    family.Sigma = reconstruct(adic);
    return family;
}

std::vector<BranchGerm> parse_branches(std::string_view text) {
    const Sections s(text, {}, {"branch"}, "branch");
    std::vector<BranchGerm> out;
    for (const Line* line : s.all("branch")) {
        BranchGerm germ;
        for (const auto& w : split_words(*line)) germ.coeffs.push_back(parse_rational(w, line->number));
        if (germ.coeffs.empty()) throw StructureError("empty branch on line " + std::to_string(line->number));
        out.push_back(std::move(germ));
    }
    if (out.empty()) throw StructureError("no `branch:` lines");
    return out;
}

std::string render_tower(const CoveringTower& tower) {
    std::ostringstream out;
    out << "base: " << join(tower.base) << "\n";
    out << "fibers: " << join(tower.fibers) << "\n";
    out << "chain: " << join(tower.chain) << "\n";
    out << "exponents: " << join(tower.exponents) << "\n";
    out << "sigma: " << render_poly(tower.sigma) << "\n";
    for (const auto& q : tower.levels) out << "eq: " << render_poly(q) << "\n";
    return out.str();
}

std::string render_family(const FamilyEquation& family, const SigmaAdic* adic) {
    std::ostringstream out;
    const auto& vars = *family.Sigma.vars();
    std::vector<std::string> base(vars.names().begin(), vars.names().end() - 1);
    out << "base: " << join(base) << "\n";
    if (family.sigma) out << "sigma: " << render_poly(*family.sigma) << "\n";
    if (family.m > 0) out << "m: " << family.m << "\n";
    out << "Sigma: " << render_poly(family.Sigma) << "\n";
    if (adic) {
        out << "# sigma-adic form in " << vars.name(adic->main_var) << "\n";
        for (std::size_t i = 0; i < adic->coeffs.size(); ++i) {
            out << "# a" << i + 1 << ": " << render_poly(adic->coeffs[i]) << "\n";
        }
    }
    return out.str();
}

std::string render_resolution(const ResolutionTower& tower) {
    std::ostringstream out;
    out << "# sigma: " << render_poly(tower.sigma) << ", m = " << tower.m << ", main variable " << tower.main_var
        << "\n";
    out << "# sigma = t*" << tower.fibers.front() << "\n";
    for (std::size_t i = 0; i < tower.steps.size(); ++i) {
        const auto& step = tower.steps[i];
        out << "# step " << i + 1 << ": " << render_poly(step.D) << " = t*" << step.new_var << ", r = " << step.r
            << "\n";
        out << "#   " << render_poly(step.shifted_system) << "\n";
    }
    out << "# depth: " << tower.depth() << "\n";
    out << "base: " << join(tower.base) << "\n";
    out << "fibers: " << join(tower.fibers) << "\n";
    out << "sigma: " << render_poly(tower.sigma) << "\n";
    for (const auto& eq : tower.final_system) out << "eq: " << render_poly(eq) << "\n";
    return out.str();
}

}  // namespace unicover
