#pragma once

namespace bcube {

/// Parameters of the two-point measure on one coordinate: the point
/// highValue = 1/gamma carries probability alpha, lowValue = -gamma carries
/// beta = 1 - alpha, with gamma = sqrt(alpha / beta) so that every coordinate
/// has mean zero and variance one.
struct Bias {
    double alpha = 0.5;
    double beta = 0.5;
    double gamma = 1.0;
    double lowValue = -1.0;
    double highValue = 1.0;

    bool isSymmetric() const { return alpha == 0.5; }
    /// sqrt(alpha * beta); equals beta * gamma and alpha / gamma.
    double sqrtAlphaBeta() const;

    friend bool operator==(const Bias& a, const Bias& b) { return a.alpha == b.alpha; }
};

/// Throws DomainError unless 0 < alpha <= 1/2 and alpha is finite.
Bias makeBias(double alpha);

inline Bias symmetricBias() { return makeBias(0.5); }

}  // namespace bcube
