#include "biased_cube/bias.hpp"

#include <cmath>
#include <string>

#include "biased_cube/errors.hpp"

namespace bcube {

double Bias::sqrtAlphaBeta() const { return std::sqrt(alpha * beta); }

Bias makeBias(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 0.5)
        throw DomainError("alpha must lie in (0, 1/2], got " + std::to_string(alpha));
    Bias b;
    b.alpha = alpha;
    b.beta = 1.0 - alpha;
    b.gamma = std::sqrt(alpha / b.beta);
    b.lowValue = -b.gamma;
    b.highValue = 1.0 / b.gamma;
    return b;
}

}  // namespace bcube
