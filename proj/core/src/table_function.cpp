#include "biased_cube/table_function.hpp"

#include <cmath>
#include <string>

#include "biased_cube/errors.hpp"

namespace bcube {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0;
    double carry_ = 0;
};

template <typename Term>
double weightedSum(const TableFunction& f, Summation mode, Term term) {
    const auto w = pointWeights(f.n(), f.bias());
    if (mode == Summation::Compensated) {
        CompensatedSum acc;
        for (std::size_t m = 0; m < w.size(); ++m) acc.add(w[m] * term(m));
        return acc.value();
    }
    double acc = 0;
    for (std::size_t m = 0; m < w.size(); ++m) acc += w[m] * term(m);
    return acc;
}

void requireSameCube(const TableFunction& f, const TableFunction& g) {
    if (f.n() != g.n() || !(f.bias() == g.bias()))
        throw ShapeError("functions live on different cubes");
}

}  // namespace

TableFunction::TableFunction(int n, std::vector<double> values, Bias bias)
    : n_(n), values_(std::move(values)), bias_(bias) {
    if (n < 1 || n > kMaxCoordinates)
        throw DomainError("n must lie in [1, " + std::to_string(kMaxCoordinates) + "], got " +
                          std::to_string(n));
    if (values_.size() != (std::size_t{1} << n))
        throw ShapeError("table for n=" + std::to_string(n) + " needs " +
                         std::to_string(std::size_t{1} << n) + " values, got " +
                         std::to_string(values_.size()));
}

TableFunction TableFunction::constant(int n, double c, Bias bias) {
    return TableFunction(n, std::vector<double>(std::size_t{1} << n, c), bias);
}

TableFunction TableFunction::character(int n, Mask subset, Bias bias) {
    std::vector<double> v(std::size_t{1} << n);
    for (Mask m = 0; m < v.size(); ++m) {
        double prod = 1;
        for (int i = 0; i < n; ++i)
            if (subset >> i & 1) prod *= (m >> i & 1) ? bias.highValue : bias.lowValue;
        v[m] = prod;
    }
    return TableFunction(n, std::move(v), bias);
}

TableFunction TableFunction::coordinate(int n, int i, Bias bias) {
    if (i < 1 || i > n) throw DomainError("coordinate index out of range");
    return character(n, Mask{1} << (i - 1), bias);
}

double TableFunction::pointCoordinate(Mask m, int i) const {
    return (m >> (i - 1) & 1) ? bias_.highValue : bias_.lowValue;
}

bool TableFunction::isBoolean() const {
    for (double v : values_)
        if (v != 1.0 && v != -1.0) return false;
    return true;
}

bool TableFunction::isBounded() const {
    for (double v : values_)
        if (!(v >= -1.0 && v <= 1.0)) return false;
    return true;
}

std::vector<double> pointWeights(int n, const Bias& bias) {
    std::vector<double> w(std::size_t{1} << n);
    w[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        const std::size_t half = std::size_t{1} << i;
        for (std::size_t m = 0; m < half; ++m) {
            w[m | half] = w[m] * bias.alpha;
            w[m] *= bias.beta;
        }
    }
    return w;
}

double expectation(const TableFunction& f, Summation mode) {
    return weightedSum(f, mode, [&](std::size_t m) { return f[m]; });
}

double lpNorm(const TableFunction& f, double p, Summation mode) {
    if (!std::isfinite(p) || p < 1.0) throw DomainError("L_p norm needs finite p >= 1");
    if (p == 1.0) return weightedSum(f, mode, [&](std::size_t m) { return std::abs(f[m]); });
    if (p == 2.0) return std::sqrt(weightedSum(f, mode, [&](std::size_t m) { return f[m] * f[m]; }));
    const double moment =
        weightedSum(f, mode, [&](std::size_t m) { return std::pow(std::abs(f[m]), p); });
    return std::pow(moment, 1.0 / p);
}

double scalarProduct(const TableFunction& f, const TableFunction& g, Summation mode) {
    requireSameCube(f, g);
    return weightedSum(f, mode, [&](std::size_t m) { return f[m] * g[m]; });
}

TableFunction linearCombination(double a, const TableFunction& f, double b, const TableFunction& g) {
    requireSameCube(f, g);
    std::vector<double> v(f.size());
    for (std::size_t m = 0; m < v.size(); ++m) v[m] = a * f[m] + b * g[m];
    return TableFunction(f.n(), std::move(v), f.bias());
}

}  // namespace bcube
