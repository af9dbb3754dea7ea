#include "unicover/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "unicover/deform.hpp"
#include "unicover/files.hpp"
#include "unicover/polytext.hpp"
#include "unicover/resolve.hpp"
#include "unicover/tower.hpp"

namespace unicover::cli {

namespace {

// Raised for failures that are reported, not thrown by the library.
class Failure : public Error {
public:
    Failure(std::string kind, const std::string& detail) : Error(std::move(kind), detail) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure("IoError", "cannot read `" + path + "`");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<int> parse_exponents(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || n < 1) {
            throw InvalidArgument("--exponents expects positive integers separated by commas, got `" + text + "`");
        }
        out.push_back(n);
    }
    if (out.empty()) throw InvalidArgument("--exponents is empty");
    return out;
}

[[noreturn]] void fail_validation(const ValidationReport& report, std::string& text) {
    text += report.to_text();
    for (const auto& e : report.entries) {
        if (!e.pass) throw Failure("InvalidTower", e.rule + ": " + e.message);
    }
    throw Failure("InvalidTower", "validation failed");
}

// A tower that fails validation prints its report and stops with exit 1.
void require_valid(const CoveringTower& tower, std::string& text) {
    const ValidationReport report = validate_normal_type(tower);
    if (!report.passed()) fail_validation(report, text);
}

struct Options {
    std::string input;
    std::string out_path;
    bool sigma_adic = false;
    std::string exponents;
    int max_depth = kDefaultMaxDepth;
    std::uint64_t seed = 0;
    int batch = 0;
};

void cmd_forward(const Options& o, std::string& text) {
    const CoveringTower tower = parse_tower(read_file(o.input));
    require_valid(tower, text);
    const auto exponents = o.exponents.empty() ? std::vector<int>{} : parse_exponents(o.exponents);
    const FamilyEquation family = eliminate(build_family(tower, exponents));
    if (!o.sigma_adic) {
        text = render_family(family);
        return;
    }
    const SigmaAdic adic = sigma_adic(family);
    text = render_family(family, &adic);
}

void cmd_resolve(const Options& o, std::string& text) {
    text = render_resolution(resolve_family(parse_family(read_file(o.input)), o.max_depth));
}

void cmd_curve(const Options& o, std::string& text) {
    text = render_resolution(curve_resolve(parse_branches(read_file(o.input)), o.max_depth));
}

void cmd_verify(const Options& o, std::string& text) {
    const CoveringTower tower = parse_tower(read_file(o.input));
    ValidationReport report = validate_normal_type(tower);
    if (report.passed()) {
        for (auto& e : separability_certificate(tower).entries) report.entries.push_back(std::move(e));
    }
    if (!report.passed()) fail_validation(report, text);
    text = report.to_text();
}

// forward, resolve, re-eliminate; true when Sigma comes back term for term.
bool round_trip(const CoveringTower& tower, int max_depth, std::ostream& log, const std::string& label) {
    const FamilyEquation family = eliminate(build_family(tower));
    const ResolutionTower resolved = resolve_family(family, max_depth);
    const bool same = reeliminate(resolved) == family.Sigma;
    log << (same ? "PASS " : "FAIL ") << label << ": m = " << family.m << ", depth " << resolved.depth() << "\n";
    return same;
}

void cmd_roundtrip(const Options& o, std::string& text) {
    if (o.input.empty() && o.batch == 0) throw InvalidArgument("roundtrip needs a tower file or --batch N");
    std::ostringstream log;
    bool passed = true;
    if (!o.input.empty()) {
        const CoveringTower tower = parse_tower(read_file(o.input));
        require_valid(tower, text);
        passed = round_trip(tower, o.max_depth, log, o.input);
    }
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.batch; ++i) {
        passed = round_trip(sample_tower(rng), o.max_depth, log, "sample " + std::to_string(i)) && passed;
    }
    log << (passed ? "overall: PASS" : "overall: FAIL") << "\n";
    text = log.str();
    if (!passed) throw Failure("RoundTripMismatch", "re-elimination differs from Sigma");
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file || !(file << text)) throw Failure("IoError", "cannot write `" + o.out_path + "`");
}

}  // namespace

int exit_code_for(const std::string& kind) {
    static const char* const kValidation[] = {"InvalidTower", "RoundTripMismatch"};
    static const char* const kInput[] = {"SyntaxError",    "UnknownVariable",    "StructureError",
                                         "IoError",        "UsageError",         "InvalidArgument",
                                         "MalformedFamily", "TruncationTooShort"};
    for (const char* k : kValidation) {
        if (kind == k) return kValidationFailure;
    }
    for (const char* k : kInput) {
        if (kind == k) return kInputError;
    }
    return kAlgorithmError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Iterated coverings of normal type: forward families and their resolution"};
    app.name("unicover");
    app.require_subcommand(1);
    Options o;

    auto* forward = app.add_subcommand("forward", "Eliminate a tower file into its family equation");
    forward->add_option("tower", o.input, "Tower file")->required();
    forward->add_flag("--sigma-adic", o.sigma_adic, "Also list the sigma-adic coefficients a_i");
    forward->add_option("--exponents", o.exponents, "Scaling exponents n0,n1,...");

    auto* resolve = app.add_subcommand("resolve", "Resolve a family file into standard form");
    resolve->add_option("family", o.input, "Family file")->required();

    auto* verify = app.add_subcommand("verify", "Check the normal-type rules and separability of a tower");
    verify->add_option("tower", o.input, "Tower file")->required();

    auto* curve = app.add_subcommand("curve", "Resolve the curve prod (y - phi_i(t)) given by branch germs");
    curve->add_option("branches", o.input, "Branch file")->required();

    auto* roundtrip = app.add_subcommand("roundtrip", "Forward, resolve and re-eliminate");
    roundtrip->add_option("tower", o.input, "Tower file");
    roundtrip->add_option("--batch", o.batch, "Also check N sampled towers")->check(CLI::NonNegativeNumber);
    roundtrip->add_option("--seed", o.seed, "Sampler seed");

    for (auto* sub : {resolve, curve, roundtrip}) {
        sub->add_option("--max-depth", o.max_depth, "Blow-up depth limit")->check(CLI::PositiveNumber);
    }
    for (auto* sub : {forward, resolve, verify, curve, roundtrip}) {
        sub->add_option("--out", o.out_path, "Write the output here instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        for (auto& c : msg) {
            if (c == '\n') c = ' ';
        }
        err << "error: UsageError: " << msg << "\n";
        return kInputError;
    }

    // Reports and partial logs are still printed when a command fails.
    std::string text;
    try {
        if (forward->parsed()) {
            cmd_forward(o, text);
        } else if (resolve->parsed()) {
            cmd_resolve(o, text);
        } else if (curve->parsed()) {
            cmd_curve(o, text);
        } else if (verify->parsed()) {
            cmd_verify(o, text);
        } else {
            cmd_roundtrip(o, text);
        }
        emit(o, text, out);
        return kSuccess;
    } catch (const Error& e) {
        out << text;
        err << "error: " << e.kind() << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
}

}  // namespace unicover::cli
