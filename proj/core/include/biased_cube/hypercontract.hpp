#pragma once

#include "biased_cube/fourier.hpp"

namespace bcube {

/// The biased hypercontractivity constant c_q(alpha, beta), q in [1, 2].
/// Returns the symmetric limit sqrt(q - 1) exactly at alpha = 1/2.
double cQ(const Bias& bias, double q);

struct HyperParams {
    double q;
    Bias bias;
    double cq;
};

HyperParams makeHyperParams(const Bias& bias, double q);

struct HyperCheck {
    double lhs = 0;  // ||sum c_q^{|T|} a_T w_T||_2
    double rhs = 0;  // ||f||_q
    bool holds = false;
};

/// ||T_c f||_2 <= ||f||_q with c = c_q(alpha, beta).
HyperCheck verifyHyper(const TableFunction& f, double q);

/// Same check when the spectrum and ||f||_q are already known.
HyperCheck verifyHyper(const Spectrum& s, double lqNorm, const HyperParams& params);

}  // namespace bcube
