#include "biased_cube/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "biased_cube/fkn.hpp"
#include "biased_cube/function_io.hpp"
#include "biased_cube/hypercontract.hpp"
#include "biased_cube/parallel.hpp"

namespace bcube {

namespace {

using Row = std::vector<std::string>;

std::string cell(double v) { return formatDouble(v); }
std::string cell(bool v) { return v ? "1" : "0"; }
std::string cell(std::size_t v) { return std::to_string(v); }
std::string cell(int v) { return std::to_string(v); }

std::size_t instanceCount(const CampaignConfig& c) {
    if (c.mode == Mode::Exhaustive) return std::size_t{1} << (std::size_t{1} << c.n);
    return c.samples;
}

std::string idOf(const CampaignConfig& c, std::size_t i) {
    if (c.mode == Mode::Exhaustive) return std::to_string(i);
    return std::to_string(c.seed) + ":" + std::to_string(i);
}

// --- FKN -------------------------------------------------------------------

struct FknOutcome {
    FknReport report;
    Theorem2Check theorem2;
    bool identityHolds = true;
    bool hTildeHolds = true;
};

FknOutcome analyseFkn(const TableFunction& f, double c0, double tol) {
    FknOutcome o;
    const auto s = transform(f);
    o.report = fknWitness(f, s);
    o.theorem2 = checkTheorem2(o.report, f.bias(), c0);
    const auto& r = o.report;
    o.identityHolds = std::abs(r.d * r.d + r.aEmpty * r.aEmpty + r.aK * r.aK - 1.0) <= tol;
    const auto ht = hTilde(f, r);
    o.hTildeHolds = ht.pointwiseHolds && ht.normHolds && ht.probHolds;
    return o;
}

struct FknSummary {
    std::size_t instances = 0;
    std::size_t theorem1Violations = 0;
    std::size_t theorem2Applicable = 0;
    std::size_t theorem2Violations = 0;
    std::size_t identityViolations = 0;
    std::size_t hTildeViolations = 0;
    double worstTheorem1Ratio = 0;  // max d / (8 sqrt(rho))
    double maxFeasibleC0 = std::numeric_limits<double>::infinity();

    std::size_t violations() const {
        return theorem1Violations + theorem2Violations + identityViolations + hTildeViolations;
    }
};

TableFunction fknInstance(const CampaignConfig& c, const Bias& bias, std::size_t i) {
    if (c.mode == Mode::Exhaustive) return booleanFromId(c.n, i, bias);
    CounterRng rng(c.seed, i);
    return randomBoolean(c.n, bias, rng);
}

FknSummary runFknInstances(const CampaignConfig& c, std::vector<FknOutcome>& outcomes) {
    const Bias bias = makeBias(c.alpha);
    outcomes.assign(instanceCount(c), {});
    parallelFor(outcomes.size(), [&](std::size_t i) { outcomes[i] = analyseFkn(fknInstance(c, bias, i), c.c0, c.tol); });

    FknSummary s;
    s.instances = outcomes.size();
    for (const auto& o : outcomes) {
        const auto& r = o.report;
        s.theorem1Violations += !r.withinEightSqrtRho;
        s.theorem2Applicable += o.theorem2.applicable;
        s.theorem2Violations += !o.theorem2.holds;
        s.identityViolations += !o.identityHolds;
        s.hTildeViolations += !o.hTildeHolds;
        if (r.rho > 0) s.worstTheorem1Ratio = std::max(s.worstTheorem1Ratio, r.d / (8 * std::sqrt(r.rho)));
        // A function with d > 2 rho becomes applicable once c0 alpha exceeds
        // rho ln(e / rho); every c0 at or below that value is violation-free.
        if (!r.withinTwoRho) s.maxFeasibleC0 = std::min(s.maxFeasibleC0, r.conditionLhs / bias.alpha);
    }
    return s;
}

Report fknReport(const CampaignConfig& c) {
    std::vector<FknOutcome> outcomes;
    const auto s = runFknInstances(c, outcomes);
    Report rep;
    rep.title = "verify-fkn n=" + std::to_string(c.n) + " alpha=" + cell(c.alpha) + " c0=" + cell(c.c0);
    rep.header = {"id", "rho", "d", "k", "a_empty", "a_k", "condition", "d_over_8sqrt_rho",
                  "thm1_holds", "thm2_applicable", "thm2_holds", "d_over_rho", "identity_holds",
                  "htilde_holds"};
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        const auto& r = o.report;
        rep.rows.push_back({idOf(c, i), cell(r.rho), cell(r.d), cell(r.k), cell(r.aEmpty), cell(r.aK),
                            cell(r.conditionLhs), cell(r.rho > 0 ? r.d / (8 * std::sqrt(r.rho)) : 0.0),
                            cell(r.withinEightSqrtRho), cell(o.theorem2.applicable),
                            cell(o.theorem2.holds), cell(o.theorem2.ratio), cell(o.identityHolds),
                            cell(o.hTildeHolds)});
    }
    rep.summary = {{"instances", cell(s.instances)},
                   {"thm1_violations", cell(s.theorem1Violations)},
                   {"worst_d_over_8sqrt_rho", cell(s.worstTheorem1Ratio)},
                   {"thm2_applicable", cell(s.theorem2Applicable)},
                   {"thm2_violations", cell(s.theorem2Violations)},
                   {"max_feasible_c0", cell(s.maxFeasibleC0)},
                   {"identity_violations", cell(s.identityViolations)},
                   {"htilde_violations", cell(s.hTildeViolations)}};
    rep.notes.push_back("max_feasible_c0 is empirical; the universal constant c0 is not explicit");
    rep.violations = s.violations();
    return rep;
}

Report scanReport(const CampaignConfig& base) {
    static const std::vector<double> alphas{0.05, 0.1, 0.25, 0.4, 0.5};
    Report rep;
    rep.title = "scan n=" + std::to_string(base.n) + " c0=" + cell(base.c0);
    rep.header = {"alpha", "instances", "thm1_violations", "worst_d_over_8sqrt_rho", "thm2_applicable",
                  "thm2_violations", "max_feasible_c0", "counterexample_d_over_rho"};
    for (double alpha : alphas) {
        CampaignConfig c = base;
        c.alpha = alpha;
        std::vector<FknOutcome> outcomes;
        const auto s = runFknInstances(c, outcomes);
        const auto ce = fknWitness(counterexample(makeBias(alpha)));
        rep.rows.push_back({cell(alpha), cell(s.instances), cell(s.theorem1Violations),
                            cell(s.worstTheorem1Ratio), cell(s.theorem2Applicable),
                            cell(s.theorem2Violations), cell(s.maxFeasibleC0), cell(ce.d / ce.rho)});
        rep.violations += s.violations();
    }
    rep.summary = {{"alphas", cell(alphas.size())}};
    return rep;
}

// --- hypercontractivity ------------------------------------------------------

Report hyperReport(const CampaignConfig& c) {
    const Bias bias = makeBias(c.alpha);
    const std::vector<double> qs = c.q ? std::vector<double>{*c.q} : kDefaultQGrid;
    std::vector<HyperParams> params;
    for (double q : qs) params.push_back(makeHyperParams(bias, q));

    const std::size_t count = instanceCount(c);
    std::vector<std::vector<Row>> perInstance(count);
    std::vector<std::size_t> failures(count, 0);
    std::vector<double> worst(count, 0.0);
    parallelFor(count, [&](std::size_t i) {
        CounterRng rng(c.seed, i);
        const bool boolean = c.mode == Mode::Exhaustive || i % 2 == 0;
        const TableFunction f = c.mode == Mode::Exhaustive ? booleanFromId(c.n, i, bias)
                                : boolean                  ? randomBoolean(c.n, bias, rng)
                                                           : randomBounded(c.n, bias, rng);
        const auto s = transform(f);
        for (const auto& p : params) {
            const auto h = verifyHyper(s, lpNorm(f, p.q), p);
            failures[i] += !h.holds;
            if (h.rhs > 0) worst[i] = std::max(worst[i], h.lhs / h.rhs);
            perInstance[i].push_back({idOf(c, i), boolean ? "bool" : "bounded", cell(p.q), cell(p.cq),
                                      cell(h.lhs), cell(h.rhs), cell(h.holds)});
        }
    });

    Report rep;
    rep.title = "verify-hyper n=" + std::to_string(c.n) + " alpha=" + cell(c.alpha);
    rep.header = {"id", "family", "q", "cq", "lhs", "rhs", "holds"};
    double worstRatio = 0;
    for (std::size_t i = 0; i < count; ++i) {
        for (auto& row : perInstance[i]) rep.rows.push_back(std::move(row));
        rep.violations += failures[i];
        worstRatio = std::max(worstRatio, worst[i]);
    }
    rep.summary = {{"instances", cell(count)},
                   {"checks", cell(rep.rows.size())},
                   {"max_lhs_over_rhs", cell(worstRatio)}};
    return rep;
}

// --- bounded affine distance --------------------------------------------------

Report theorem3Report(const CampaignConfig& c) {
    const Bias bias = makeBias(c.alpha);
    const std::size_t count = instanceCount(c);
    std::vector<Theorem3Witness> witnesses(count);
    std::vector<TruncationCheck> truncations(count);
    parallelFor(count, [&](std::size_t i) {
        CounterRng rng(c.seed, i);
        const TableFunction f = c.mode == Mode::Exhaustive ? booleanFromId(c.n, i, bias)
                                                           : randomBounded(c.n, bias, rng);
        truncations[i] = checkTruncationBound(f);
        witnesses[i] = theorem3Witness(f, c.constants);
    });

    Report rep;
    rep.title = "verify-thm3 n=" + std::to_string(c.n) + " base=" + cell(c.constants.base) +
                " constant=" + cell(c.constants.finalConstant);
    rep.header = {"id", "rho", "excess", "excess_holds", "dist_affine", "dist_bounded",
                  "construction_dist", "bound", "vacuous", "branch", "tau", "threshold",
                  "step_lhs", "step_rhs", "step_holds", "holds"};
    std::size_t step1Failures = 0, stepFailures = 0, boundFailures = 0, vacuous = 0;
    std::size_t shortPrefix = 0, longPrefix = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& w = witnesses[i];
        const auto& t = truncations[i];
        step1Failures += !t.holds;
        stepFailures += !w.stepHolds;
        boundFailures += !w.holds;
        vacuous += w.vacuous;
        shortPrefix += w.branch == Theorem3Branch::ShortPrefix;
        longPrefix += w.branch == Theorem3Branch::LongPrefix;
        rep.rows.push_back({idOf(c, i), cell(w.rho), cell(t.lhs), cell(t.holds), cell(w.rho), cell(w.dist),
                            cell(w.constructionDist), cell(w.bound), cell(w.vacuous), toString(w.branch),
                            cell(w.tau), cell(w.threshold), cell(w.stepLhs), cell(w.stepRhs),
                            cell(w.stepHolds), cell(w.holds)});
    }
    rep.violations = step1Failures + stepFailures + boundFailures;
    rep.summary = {{"instances", cell(count)},
                   {"excess_violations", cell(step1Failures)},
                   {"step_violations", cell(stepFailures)},
                   {"bound_violations", cell(boundFailures)},
                   {"long_prefix_branches", cell(longPrefix)},
                   {"short_prefix_branches", cell(shortPrefix)},
                   {"vacuous_bounds", cell(vacuous)}};
    rep.notes.push_back("the headline bound C/sqrt(ln(1/rho)) is at least 1 unless rho < exp(-C^2), "
                        "so it holds trivially here (dist <= ||f|| <= 1); the step checks carry the content");
    return rep;
}

// --- Rademacher sums -----------------------------------------------------------

std::vector<double> randomCoefficients(std::size_t n, CounterRng& rng, std::size_t family) {
    std::vector<double> a(n);
    switch (family % 3) {
        case 0:
            for (auto& v : a) v = rng.uniform();
            break;
        case 1:
            for (auto& v : a) v = rng.normal();
            break;
        default: {
            const double scale = rng.uniform(0.1, 2.0);
            for (auto& v : a) v = scale;
        }
    }
    if (std::all_of(a.begin(), a.end(), [](double v) { return v == 0.0; })) a[0] = 1.0;
    return a;
}

Report hkReport(const CampaignConfig& c) {
    const bool single = !c.coefficients.empty();
    const std::size_t count = single ? 1 : c.samples;
    std::vector<std::vector<Row>> perInstance(count);
    std::vector<std::size_t> failures(count, 0);
    std::vector<double> probs(count, 1.0);
    parallelFor(count, [&](std::size_t i) {
        CounterRng rng(c.seed, i);
        const auto coeffs = single ? c.coefficients : randomCoefficients(c.n, rng, i);
        const RademacherSum sum(coeffs);
        const auto small = checkHKSmallBall(sum);
        failures[i] += !small.holds;
        probs[i] = small.prob;
        const double n = static_cast<double>(sum.size());
        std::vector<double> ts{1.0, 1.5, 2.0, 3.0, 5.0};
        if (n / 2 > 1.0 && std::find(ts.begin(), ts.end(), n / 2) == ts.end()) ts.push_back(n / 2);
        const std::string id = single ? "input" : idOf(c, i);
        for (double t : ts) {
            const auto tail = checkHKTailNorm(sum, t);
            failures[i] += !tail.holds;
            Row row{id, cell(sum.size()), cell(t), cell(small.prob), cell(small.holds),
                    cell(tail.lhs), cell(tail.rhs), cell(tail.holds)};
            if (t > 1.0) {
                const auto k = khinchineRatio(sum, t);
                failures[i] += !k.holds;
                row.insert(row.end(), {cell(k.lhs), cell(k.rhs), cell(k.holds)});
            } else {
                row.insert(row.end(), {"", "", ""});
            }
            perInstance[i].push_back(std::move(row));
        }
    });
    Report rep;
    rep.title = single ? "verify-hk input" : "verify-hk n=" + std::to_string(c.n);
    rep.header = {"id", "n", "t", "smallball_prob", "smallball_holds", "tail_lhs", "tail_rhs",
                  "tail_holds", "khinchine_lhs", "khinchine_rhs", "khinchine_holds"};
    double minProb = 1.0;
    for (std::size_t i = 0; i < count; ++i) {
        minProb = std::min(minProb, probs[i]);
        for (auto& row : perInstance[i]) rep.rows.push_back(std::move(row));
        rep.violations += failures[i];
    }
    rep.summary = {{"instances", cell(count)}, {"min_smallball_prob", cell(minProb)}};
    return rep;
}

// --- examples -----------------------------------------------------------------

Report counterexampleReport(const CampaignConfig& c) {
    const Bias bias = makeBias(c.alpha);
    const auto f = counterexample(bias);
    const auto s = transform(f);
    const auto r = fknWitness(f, s);
    const auto closed = counterexampleClosedForm(bias);

    Report rep;
    rep.title = "example counterexample alpha=" + cell(c.alpha);
    rep.header = {"index", "x1", "x2", "value", "coefficient"};
    for (Mask m = 0; m < 4; ++m)
        rep.rows.push_back({cell(static_cast<int>(m)), cell(f.pointCoordinate(m, 1)),
                            cell(f.pointCoordinate(m, 2)), cell(f[m]), cell(s[m])});
    const double ratio = r.d / std::sqrt(r.rho);
    const bool boolean = f.isBoolean();
    const bool rhoMatches = std::abs(r.rho - closed.rho) <= 1e-12;
    const bool ratioHolds = ratio >= std::sqrt(0.5) - 1e-12;
    rep.violations = !boolean + !rhoMatches + !ratioHolds;
    rep.summary = {{"rho", cell(r.rho)},
                   {"two_alpha_beta", cell(closed.rho)},
                   {"d", cell(r.d)},
                   {"k", cell(r.k)},
                   {"closed_form_d", cell(closed.d)},
                   {"remark_d", cell(closed.remarkD)},
                   {"d_over_sqrt_rho", cell(ratio)},
                   {"d_over_rho", cell(r.d / r.rho)},
                   {"condition", cell(r.conditionLhs)}};
    rep.notes.push_back("d is computed directly; it equals 2 beta sqrt(alpha), which differs from "
                        "2 beta^{3/2} alpha^{1/2} by a factor sqrt(beta); d >= sqrt(rho/2) holds for both");
    if (bias.isSymmetric()) rep.notes.push_back("alpha = 1/2: the construction targets biased cubes");
    return rep;
}

Report jowReport(const CampaignConfig& c) {
    const auto f = jowExample(c.n, c.s);
    const auto w = theorem3Witness(f, c.constants);
    const auto s = transform(f);
    Report rep;
    rep.title = "example jow n=" + std::to_string(c.n) + " s=" + cell(c.s);
    rep.header = {"index", "ones", "value"};
    for (Mask m = 0; m < f.size(); ++m) rep.rows.push_back({cell(static_cast<int>(m)), cell(popcount(m)), cell(f[m])});
    rep.violations = !w.holds;
    rep.summary = {{"dist_affine", cell(w.rho)},
                   {"dist_bounded_affine", cell(w.dist)},
                   {"affine_l1", cell(affinePart(s).l1Norm())},
                   {"bound", cell(w.bound)},
                   {"branch", toString(w.branch)}};
    if (w.rho == 0.0) rep.notes.push_back("no truncation is active: f is affine");
    return rep;
}

}  // namespace

TableFunction booleanFromId(int n, std::uint64_t id, const Bias& bias) {
    std::vector<double> v(std::size_t{1} << n);
    for (std::size_t m = 0; m < v.size(); ++m) v[m] = (id >> m & 1) ? 1.0 : -1.0;
    return TableFunction(n, std::move(v), bias);
}

TableFunction randomBoolean(int n, const Bias& bias, CounterRng& rng) {
    std::vector<double> v(std::size_t{1} << n);
    for (auto& x : v) x = rng.sign();
    return TableFunction(n, std::move(v), bias);
}

TableFunction randomBounded(int n, const Bias& bias, CounterRng& rng) {
    std::vector<double> v(std::size_t{1} << n);
    for (auto& x : v) x = rng.uniform(-1.0, 1.0);
    return TableFunction(n, std::move(v), bias);
}

void validate(const CampaignConfig& c) {
    if (c.n < 1 || c.n > kMaxCoordinates)
        throw ConfigError("--n must lie in [1, " + std::to_string(kMaxCoordinates) + "]");
    if (!std::isfinite(c.alpha) || c.alpha <= 0 || c.alpha > 0.5)
        throw ConfigError("--alpha must lie in (0, 0.5]");
    if (c.q && !(*c.q >= 1.0 && *c.q <= 2.0)) throw ConfigError("--q must lie in [1, 2]");
    if (!(c.c0 > 0)) throw ConfigError("--c0 must be positive");
    if (!(c.tol > 0)) throw ConfigError("--tol must be positive");
    if (c.mode == Mode::Exhaustive && c.n > kMaxExhaustiveCoordinates &&
        (c.check == Check::Fkn || c.check == Check::Hyper || c.check == Check::Theorem3 ||
         c.check == Check::Scan))
        throw ConfigError("exhaustive mode needs n <= " + std::to_string(kMaxExhaustiveCoordinates));
    if (c.mode == Mode::Random && c.samples == 0) throw ConfigError("--samples must be positive");
    if ((c.check == Check::Theorem3 || c.check == Check::HK) && c.alpha != 0.5)
        throw ConfigError("this check lives on the symmetric cube (alpha = 0.5)");
    if (c.check == Check::Theorem3 && c.constants.base != kDefaultConstants.base &&
        c.constants.base != kSharperConstants.base)
        throw ConfigError("--base must be 3 or 2.03");
    if (c.check == Check::Example) {
        if (c.example != "counterexample" && c.example != "jow")
            throw ConfigError("example must be 'counterexample' or 'jow'");
        if (c.example == "jow" && !(c.s > 0)) throw ConfigError("--s must be positive");
        if (c.example == "jow" && c.alpha != 0.5) throw ConfigError("the jow example is symmetric");
    }
}

Report runCampaign(const CampaignConfig& config) {
    validate(config);
    switch (config.check) {
        case Check::Hyper: return hyperReport(config);
        case Check::Fkn: return fknReport(config);
        case Check::Theorem3: return theorem3Report(config);
        case Check::HK: return hkReport(config);
        case Check::Scan: return scanReport(config);
        case Check::Example:
            return config.example == "jow" ? jowReport(config) : counterexampleReport(config);
    }
    throw ConfigError("unknown check");
}

void writeCsv(std::ostream& out, const Report& report) {
    auto line = [&](const Row& row) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    };
    line(report.header);
    for (const auto& row : report.rows) line(row);
    for (const auto& [key, value] : report.summary) out << "# " << key << ": " << value << '\n';
    out << "# violations: " << report.violations << '\n';
    for (const auto& note : report.notes) out << "# note: " << note << '\n';
}

void printSummary(std::ostream& out, const Report& report) {
    out << report.title << '\n';
    for (const auto& [key, value] : report.summary) out << "  " << key << ": " << value << '\n';
    out << "  violations: " << report.violations << '\n';
    for (const auto& note : report.notes) out << "  note: " << note << '\n';
}

}  // namespace bcube
