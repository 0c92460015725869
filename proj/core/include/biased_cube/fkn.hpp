#pragma once

#include "biased_cube/fourier.hpp"

namespace bcube {

/// -1 on (-inf, 0), +1 on [0, inf).
inline int sgn(double x) { return x < 0 ? -1 : 1; }

/// Best single-coordinate degree-one approximation a_0 + a_k x_k of a
/// Boolean function and the quantities the FKN bounds talk about.
struct FknReport {
    int k = 1;              // 1-based witness coordinate
    double aEmpty = 0;      // a_0
    double aK = 0;          // a_{k}
    double d = 0;           // ||f - (a_0 + a_k x_k)||_2, spectral route
    double dDirect = 0;     // same norm evaluated on the table
    double rho = 0;
    double conditionLhs = 0;  // rho ln(e / rho), 0 at rho = 0
    bool withinEightSqrtRho = false;
    bool withinTwoRho = false;
};

/// k = argmax |a_{i}| (ties to the smallest i). Throws DomainError for
/// non-Boolean f and std::logic_error if the two routes to d disagree by
/// more than 1e-9.
FknReport fknWitness(const TableFunction& f);
FknReport fknWitness(const TableFunction& f, const Spectrum& s);

/// x ln(e / x), continuously extended by 0 at x = 0.
double rhoCondition(double rho);

struct HTilde {
    TableFunction table;     // f - sgn(a_0 + a_k x_k), {-2, 0, 2}-valued
    double normHTilde = 0;   // ||h~||_2
    double normH = 0;        // ||h||_2 with h = f - (a_0 + a_k x_k)
    double probNonzero = 0;  // P(h~ != 0) by point enumeration
    double dSquared = 0;
    bool pointwiseHolds = false;  // |h~| <= 2 |h| at every point
    bool normHolds = false;       // ||h~|| <= 2 ||h||
    bool probHolds = false;       // P(h~ != 0) = ||h~||^2 / 4 <= d^2
};

HTilde hTilde(const TableFunction& f, const FknReport& report);

struct Theorem2Check {
    bool applicable = false;  // rho ln(e/rho) < c0 alpha
    bool holds = true;        // d <= 2 rho (only meaningful when applicable)
    double ratio = 0;         // d / rho, 0 for 0/0, +inf for d > 0 = rho
};

/// Throws DomainError for c0 <= 0.
Theorem2Check checkTheorem2(const FknReport& report, const Bias& bias, double c0);
Theorem2Check checkTheorem2(const TableFunction& f, double c0);

/// The two-variable Boolean function 2(beta - sqrt(alpha beta) x1)(beta -
/// sqrt(alpha beta) x2) - 1, i.e. +1 iff both coordinates are low.
TableFunction counterexample(const Bias& bias);

/// Closed forms of the counterexample: rho = 2 alpha beta and, with the
/// witness k = 1, d = 2 beta sqrt(alpha).
struct CounterexampleClosedForm {
    double aEmpty, aSingleton, aPair, rho, d;
    double remarkD;  // 2 beta^{3/2} alpha^{1/2} as displayed in the remark
};
CounterexampleClosedForm counterexampleClosedForm(const Bias& bias);

}  // namespace bcube
