#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "biased_cube/campaign.hpp"
#include "biased_cube/errors.hpp"
#include "biased_cube/function_io.hpp"

namespace bcube::cli {

namespace {

constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
    double alpha = 0.5;
    int n = 3;
    std::optional<double> q;
    double c0 = 0.01;
    std::uint64_t seed = 1;
    std::optional<std::size_t> samples;
    double tol = 1e-10;
    double base = 3.0;
    double s = 2.0;
    std::string mode = "auto";
    std::string out;
    std::string file;
    std::string example;
};

void addCampaignFlags(CLI::App* cmd, Options& o) {
    cmd->add_option("--alpha", o.alpha, "Bias alpha in (0, 0.5]");
    cmd->add_option("--n", o.n, "Coordinate count");
    cmd->add_option("--c0", o.c0, "Constant c0 in the condition rho ln(e/rho) < c0 alpha");
    cmd->add_option("--seed", o.seed, "Random campaign seed");
    cmd->add_option("--samples", o.samples, "Random campaign size (implies --mode random)");
    cmd->add_option("--tol", o.tol, "Tolerance for identity checks");
    cmd->add_option("--base", o.base, "Threshold base of the bounded-affine bound (3 or 2.03)");
    cmd->add_option("--mode", o.mode, "exhaustive, random or auto")
        ->check(CLI::IsMember({"auto", "exhaustive", "random"}));
    cmd->add_option("--out", o.out, "CSV report path");
}

Mode resolveMode(const Options& o) {
    if (o.mode == "exhaustive") return Mode::Exhaustive;
    if (o.mode == "random" || o.samples) return Mode::Random;
    return o.n <= kMaxExhaustiveCoordinates ? Mode::Exhaustive : Mode::Random;
}

CampaignConfig toConfig(const Options& o, Check check) {
    CampaignConfig c;
    c.check = check;
    c.mode = check == Check::HK ? Mode::Random : resolveMode(o);
    if (check == Check::Example) c.mode = Mode::Example;
    c.n = o.n;
    c.alpha = o.alpha;
    c.q = o.q;
    c.c0 = o.c0;
    c.seed = o.seed;
    c.samples = o.samples.value_or(1000);
    c.tol = o.tol;
    c.s = o.s;
    c.example = o.example;
    if (o.base != kDefaultConstants.base && o.base != kSharperConstants.base)
        throw ConfigError("--base must be 3 or 2.03");
    c.constants = constantPairForBase(o.base);
    return c;
}

int emit(const Report& report, const std::string& outPath, std::ostream& out, std::ostream& err) {
    printSummary(out, report);
    if (!outPath.empty()) {
        std::ofstream file(outPath, std::ios::binary);
        if (!file) {
            err << "cannot write '" << outPath << "'\n";
            return kUsage;
        }
        writeCsv(file, report);
    }
    return report.violations == 0 ? 0 : kViolation;
}

int runTransform(const Options& o, std::ostream& out, std::ostream& err) {
    const auto f = readFunctionFile(o.file);
    const auto s = transform(f);
    if (o.out.empty()) {
        writeSpectrum(out, s);
        return 0;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        err << "cannot write '" << o.out << "'\n";
        return kUsage;
    }
    writeSpectrum(file, s);
    return 0;
}

void printCounterexampleTable(const Report& report, std::ostream& out) {
    out << "index,x1,x2,value,coefficient\n";
    for (const auto& row : report.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
}

}  // namespace

int cliMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Fourier analysis on the biased discrete cube", "biased_cube"};
    app.require_subcommand(1);
    Options o;

    auto* transformCmd = app.add_subcommand("transform", "Walsh-Fourier spectrum of a function file");
    transformCmd->add_option("file", o.file, "Function file")->required();
    transformCmd->add_option("--out", o.out, "Spectrum output path");

    auto* hyper = app.add_subcommand("verify-hyper", "Check the biased hypercontractive inequality");
    addCampaignFlags(hyper, o);
    hyper->add_option("--q", o.q, "Single q in [1, 2] (default grid 1, 1.2, 1.5, 1.8, 2)");

    auto* fkn = app.add_subcommand("verify-fkn", "Check the FKN bounds d <= 8 sqrt(rho) and d <= 2 rho");
    addCampaignFlags(fkn, o);

    auto* thm3 = app.add_subcommand("verify-thm3", "Check the bounded-affine distance bound and its steps");
    addCampaignFlags(thm3, o);

    auto* hk = app.add_subcommand("verify-hk", "Check small-ball, tail-norm and Khinchine bounds on Rademacher sums");
    addCampaignFlags(hk, o);
    hk->add_option("file", o.file, "Optional file with one line of coefficients");

    auto* scan = app.add_subcommand("scan", "FKN summary across a grid of alpha values");
    addCampaignFlags(scan, o);

    auto* example = app.add_subcommand("example", "Reproduce a named example");
    example->add_option("name", o.example, "counterexample or jow")
        ->required()
        ->check(CLI::IsMember({"counterexample", "jow"}));
    example->add_option("--alpha", o.alpha, "Bias alpha (counterexample)");
    example->add_option("--n", o.n, "Coordinate count (jow)");
    example->add_option("--s", o.s, "Scale s (jow)");
    example->add_option("--base", o.base, "Threshold base (jow)");
    example->add_option("--out", o.out, "CSV report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (transformCmd->parsed()) return runTransform(o, out, err);
        if (example->parsed()) {
            if (o.example == "jow" && example->count("--n") == 0) o.n = 12;
            const auto report = runCampaign(toConfig(o, Check::Example));
            if (o.example == "counterexample") printCounterexampleTable(report, out);
            return emit(report, o.out, out, err);
        }
        if (hk->parsed()) {
            auto config = toConfig(o, Check::HK);
            if (!o.file.empty()) {
                std::ifstream in(o.file);
                if (!in) throw FormatError("cannot open '" + o.file + "'");
                config.coefficients = readCoefficientLine(in);
            }
            return emit(runCampaign(config), o.out, out, err);
        }
        Check check = Check::Fkn;
        if (hyper->parsed()) check = Check::Hyper;
        else if (thm3->parsed()) check = Check::Theorem3;
        else if (scan->parsed()) check = Check::Scan;
        return emit(runCampaign(toConfig(o, check)), o.out, out, err);
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const FormatError& e) {
        err << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kUsage;
    } catch (const ShapeError& e) {
        err << "input error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace bcube::cli
