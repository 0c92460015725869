#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "biased_cube/bias.hpp"

namespace bcube {

inline constexpr int kMaxCoordinates = 26;
inline constexpr int kMaxExhaustiveCoordinates = 4;

/// Absolute slack used by every inequality check.
inline constexpr double kInequalitySlack = 1e-10;

/// Subset of [n] / point of the cube encoded as a bitmask. Bit i refers to
/// coordinate i + 1; for points, a set bit selects highValue.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// A real function on {-gamma, 1/gamma}^n stored as its 2^n values.
class TableFunction {
public:
    TableFunction(int n, std::vector<double> values, Bias bias);

    /// Constant function c.
    static TableFunction constant(int n, double c, Bias bias);
    /// The Walsh-Fourier character w_T(x) = prod_{i in T} x_i.
    static TableFunction character(int n, Mask subset, Bias bias);
    /// The coordinate projection x_i (1-based i).
    static TableFunction coordinate(int n, int i, Bias bias);

    int n() const { return n_; }
    std::size_t size() const { return values_.size(); }
    const Bias& bias() const { return bias_; }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t m) const { return values_[m]; }

    /// Value of coordinate i (1-based) at point m.
    double pointCoordinate(Mask m, int i) const;

    /// Every value is exactly -1 or +1.
    bool isBoolean() const;
    /// Every value lies in [-1, 1].
    bool isBounded() const;

private:
    int n_;
    std::vector<double> values_;
    Bias bias_;
};

/// mu_n of every point, in ascending index order. Sums to one.
std::vector<double> pointWeights(int n, const Bias& bias);

enum class Summation { Plain, Compensated };

/// Sum over points of weight(m) * values[m], ascending index order.
double expectation(const TableFunction& f, Summation mode = Summation::Plain);

/// (E |f|^p)^{1/p}; p must be finite and >= 1.
double lpNorm(const TableFunction& f, double p, Summation mode = Summation::Plain);

/// <f, g> = E[f g]; throws ShapeError when the cubes differ.
double scalarProduct(const TableFunction& f, const TableFunction& g,
                     Summation mode = Summation::Plain);

/// Pointwise a*f + b*g.
TableFunction linearCombination(double a, const TableFunction& f, double b,
                                const TableFunction& g);

}  // namespace bcube
