#include "biased_cube/hypercontract.hpp"

#include <algorithm>
#include <cmath>

#include "biased_cube/errors.hpp"

namespace bcube {

double cQ(const Bias& bias, double q) {
    if (!(q >= 1.0 && q <= 2.0)) throw DomainError("c_q needs q in [1, 2]");
    // The quotient is 0/0 at alpha = beta; its limit is sqrt(q - 1).
    if (bias.isSymmetric()) return std::sqrt(q - 1.0);
    if (q == 2.0) return 1.0;
    const double a = bias.alpha;
    const double b = bias.beta;
    const double numerator = std::pow(b, 2.0 - 2.0 / q) - std::pow(a, 2.0 - 2.0 / q);
    const double denominator = a * b * (std::pow(a, -2.0 / q) - std::pow(b, -2.0 / q));
    return std::clamp(std::sqrt(std::max(0.0, numerator / denominator)), 0.0, 1.0);
}

HyperParams makeHyperParams(const Bias& bias, double q) { return {q, bias, cQ(bias, q)}; }

HyperCheck verifyHyper(const Spectrum& s, double lqNorm, const HyperParams& params) {
    // c^{2|T|} per level
    std::vector<double> damping(s.n() + 1, 1.0);
    const double c2 = params.cq * params.cq;
    for (int k = 1; k <= s.n(); ++k) damping[k] = damping[k - 1] * c2;

    double acc = 0;
    const auto c = s.coeffs();
    for (Mask t = 0; t < c.size(); ++t) acc += damping[popcount(t)] * c[t] * c[t];

    HyperCheck out;
    out.lhs = std::sqrt(acc);
    out.rhs = lqNorm;
    out.holds = out.lhs <= out.rhs + kInequalitySlack;
    return out;
}

HyperCheck verifyHyper(const TableFunction& f, double q) {
    const auto params = makeHyperParams(f.bias(), q);
    return verifyHyper(transform(f), lpNorm(f, q), params);
}

}  // namespace bcube
