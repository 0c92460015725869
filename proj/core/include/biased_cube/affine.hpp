#pragma once

#include <span>
#include <vector>

#include "biased_cube/fourier.hpp"
#include "biased_cube/rademacher.hpp"

namespace bcube {

/// Clamp to [-1, 1].
inline double phi(double x) { return x < -1 ? -1.0 : (x > 1 ? 1.0 : x); }

/// a0 + sum a_i r_i on the symmetric cube.
struct AffineFunction {
    double a0 = 0;
    std::vector<double> a;

    /// |a0| + sum |a_i|.
    double l1Norm() const;
    /// [-1, 1]-valued iff l1Norm() <= 1.
    bool isBounded(double slack = 0) const;
    /// Coefficient vector (a0, a_1, ..., a_n).
    std::vector<double> coefficients() const;
    static AffineFunction fromCoefficients(std::span<const double> c);
    TableFunction toTable() const;
};

/// Level <= 1 part of a symmetric-cube spectrum.
AffineFunction affinePart(const Spectrum& s);

struct AffineDistance {
    double dist = 0;
    AffineFunction minimizer;
};

/// L2 distance to the affine class and the orthogonal projection onto it.
/// Throws DomainError unless the cube is symmetric.
AffineDistance distToAffine(const TableFunction& f);

/// Euclidean projection of v onto {x : ||x||_1 <= radius} by sort and
/// soft-threshold. Throws DomainError for radius <= 0.
std::vector<double> projectL1(std::span<const double> v, double radius = 1.0);

/// Exact L2 distance to the [-1,1]-valued affine functions and its minimizer.
AffineDistance distToBoundedAffine(const TableFunction& f);
AffineDistance distToBoundedAffine(const Spectrum& s);

struct TruncationCheck {
    double lhs = 0;  // E(|S| - 1)_+^2, S the affine projection
    double rho = 0;
    bool holds = false;
};

/// Throws DomainError when a value lies outside [-1, 1] or the cube is biased.
TruncationCheck checkTruncationBound(const TableFunction& f);

/// phi(s^{-1} n^{-1/2} sum x_i) on the symmetric cube.
TableFunction jowExample(int n, double s);

/// Branch threshold base and final constant of the bounded-affine distance
/// bound C / sqrt(ln(1/rho)).
struct ConstantPair {
    double base = 3.0;
    double finalConstant = 18.0;
};
inline constexpr ConstantPair kDefaultConstants{3.0, 18.0};
inline constexpr ConstantPair kSharperConstants{2.03, 14.5};

/// Throws DomainError for an unsupported base (only 3 and 2.03 are known).
ConstantPair constantPairForBase(double base);

enum class Theorem3Branch {
    AlreadyBounded,  // affine part already in the l1 ball
    FarFromAffine,   // rho >= 1/3, zero function used
    LongPrefix,      // tau >= threshold: keep the first `threshold` terms
    ShortPrefix,     // tau < threshold: top up coordinate tau + 1
};

const char* toString(Theorem3Branch b);

struct Theorem3Witness {
    double rho = 0;
    double dist = 0;               // exact distance to the bounded class
    double bound = 0;              // finalConstant / sqrt(ln(1/rho))
    double constructionDist = 0;   // ||f - construction||_2
    AffineFunction construction;
    Theorem3Branch branch = Theorem3Branch::AlreadyBounded;
    std::size_t tau = 0;           // of the lifted, sorted sum
    double threshold = 0;          // (2 / ln base) ln(1/rho)
    double excess = 0;             // E(|S| - 1)_+^2
    bool hypothesis = false;       // excess <= rho^2
    // ||S - S_1|| against the branch's own bound: 24 / sqrt(threshold) for
    // the long prefix, sqrt(20) rho^{1 - ln 2 / ln base} for the short one.
    double stepLhs = 0;
    double stepRhs = 0;
    bool stepHolds = true;
    bool vacuous = true;           // bound >= 1 >= ||f||
    bool holds = false;            // dist <= bound and constructionDist >= dist
};

Theorem3Witness theorem3Witness(const TableFunction& f,
                                ConstantPair constants = kDefaultConstants);

}  // namespace bcube
