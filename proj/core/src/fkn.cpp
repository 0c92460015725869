#include "biased_cube/fkn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "biased_cube/errors.hpp"

namespace bcube {

double rhoCondition(double rho) { return rho == 0.0 ? 0.0 : rho * std::log(std::exp(1.0) / rho); }

FknReport fknWitness(const TableFunction& f) { return fknWitness(f, transform(f)); }

FknReport fknWitness(const TableFunction& f, const Spectrum& s) {
    if (!f.isBoolean()) throw DomainError("FKN analysis needs a {-1, 1}-valued function");

    FknReport r;
    double best = -1;
    for (int i = 1; i <= f.n(); ++i) {
        if (std::abs(s.singleton(i)) > best) {
            best = std::abs(s.singleton(i));
            r.k = i;
        }
    }
    r.aEmpty = s[0];
    r.aK = s.singleton(r.k);

    // d^2 = sum of a_T^2 over T other than {} and {k}; summing the discarded
    // coefficients avoids the cancellation in 1 - a_0^2 - a_k^2 near d = 0.
    const Mask kMask = Mask{1} << (r.k - 1);
    double tail = 0;
    for (Mask t = 1; t < s.coeffs().size(); ++t)
        if (t != kMask) tail += s[t] * s[t];
    r.d = std::sqrt(tail);

    std::vector<double> residual(f.size());
    for (Mask m = 0; m < residual.size(); ++m)
        residual[m] = f[m] - (r.aEmpty + r.aK * f.pointCoordinate(m, r.k));
    r.dDirect = lpNorm(TableFunction(f.n(), std::move(residual), f.bias()), 2.0);
    if (std::abs(r.d - r.dDirect) > 1e-9)
        throw std::logic_error("spectral and direct d disagree: " + std::to_string(r.d) + " vs " +
                               std::to_string(r.dDirect));

    r.rho = rho(s);
    r.conditionLhs = rhoCondition(r.rho);
    r.withinEightSqrtRho = r.d <= 8.0 * std::sqrt(r.rho) + kInequalitySlack;
    r.withinTwoRho = r.d <= 2.0 * r.rho + kInequalitySlack;
    return r;
}

HTilde hTilde(const TableFunction& f, const FknReport& report) {
    if (!f.isBoolean()) throw DomainError("h~ needs a {-1, 1}-valued function");
    std::vector<double> ht(f.size()), h(f.size());
    bool pointwise = true;
    for (Mask m = 0; m < f.size(); ++m) {
        const double u = report.aEmpty + report.aK * f.pointCoordinate(m, report.k);
        ht[m] = f[m] - sgn(u);
        h[m] = f[m] - u;
        pointwise = pointwise && std::abs(ht[m]) <= 2.0 * std::abs(h[m]);
    }
    const auto w = pointWeights(f.n(), f.bias());
    double prob = 0;
    for (Mask m = 0; m < f.size(); ++m)
        if (ht[m] != 0.0) prob += w[m];

    TableFunction hTable(f.n(), std::move(h), f.bias());
    HTilde out{TableFunction(f.n(), std::move(ht), f.bias())};
    out.normHTilde = lpNorm(out.table, 2.0);
    out.normH = lpNorm(hTable, 2.0);
    out.probNonzero = prob;
    out.dSquared = report.d * report.d;
    out.pointwiseHolds = pointwise;
    out.normHolds = out.normHTilde <= 2.0 * out.normH + kInequalitySlack;
    out.probHolds = std::abs(prob - out.normHTilde * out.normHTilde / 4.0) <= kInequalitySlack &&
                    prob <= out.dSquared + kInequalitySlack;
    return out;
}

Theorem2Check checkTheorem2(const FknReport& report, const Bias& bias, double c0) {
    if (!(c0 > 0.0)) throw DomainError("c0 must be positive");
    Theorem2Check out;
    out.applicable = report.conditionLhs < c0 * bias.alpha;
    out.holds = !out.applicable || report.withinTwoRho;
    if (report.rho > 0)
        out.ratio = report.d / report.rho;
    else
        out.ratio = report.d > 0 ? std::numeric_limits<double>::infinity() : 0.0;
    return out;
}

Theorem2Check checkTheorem2(const TableFunction& f, double c0) {
    return checkTheorem2(fknWitness(f), f.bias(), c0);
}

TableFunction counterexample(const Bias& bias) {
    const double root = bias.sqrtAlphaBeta();
    std::vector<double> v(4);
    for (Mask m = 0; m < 4; ++m) {
        const double x1 = (m & 1) ? bias.highValue : bias.lowValue;
        const double x2 = (m & 2) ? bias.highValue : bias.lowValue;
        const double raw = 2.0 * (bias.beta - root * x1) * (bias.beta - root * x2) - 1.0;
        // The factors are exactly 1 and 0 in real arithmetic; snap rounding.
        if (std::abs(std::abs(raw) - 1.0) > 1e-12)
            throw std::logic_error("counterexample formula left {-1, 1}");
        v[m] = raw > 0 ? 1.0 : -1.0;
    }
    return TableFunction(2, std::move(v), bias);
}

CounterexampleClosedForm counterexampleClosedForm(const Bias& bias) {
    const double a = bias.alpha;
    const double b = bias.beta;
    CounterexampleClosedForm c{};
    c.aEmpty = 2 * b * b - 1;
    c.aSingleton = -2 * b * bias.sqrtAlphaBeta();
    c.aPair = 2 * a * b;
    c.rho = 2 * a * b;
    c.d = 2 * b * std::sqrt(a);
    c.remarkD = 2 * std::pow(b, 1.5) * std::sqrt(a);
    return c;
}

}  // namespace bcube
