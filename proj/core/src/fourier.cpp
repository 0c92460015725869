#include "biased_cube/fourier.hpp"

#include <cmath>
#include <string>

#include "biased_cube/errors.hpp"

namespace bcube {

Spectrum::Spectrum(int n, std::vector<double> coeffs, Bias bias)
    : n_(n), coeffs_(std::move(coeffs)), bias_(bias) {
    if (n < 1 || n > kMaxCoordinates) throw DomainError("n out of range for a spectrum");
    if (coeffs_.size() != (std::size_t{1} << n))
        throw ShapeError("spectrum for n=" + std::to_string(n) + " has " +
                         std::to_string(coeffs_.size()) + " coefficients");
}

double Spectrum::totalWeight() const {
    double acc = 0;
    for (double c : coeffs_) acc += c * c;
    return acc;
}

// Per coordinate, a pair (f_-, f_+) of values at x_i = -gamma, 1/gamma maps to
// (beta f_- + alpha f_+, sqrt(alpha beta) (f_+ - f_-)): the constant and the
// x_i coefficient of the one-variable restriction.
Spectrum transform(const TableFunction& f) {
    std::vector<double> a(f.values().begin(), f.values().end());
    const double alpha = f.bias().alpha;
    const double beta = f.bias().beta;
    const double root = f.bias().sqrtAlphaBeta();
    for (int i = 0; i < f.n(); ++i) {
        const std::size_t half = std::size_t{1} << i;
        for (std::size_t block = 0; block < a.size(); block += 2 * half) {
            for (std::size_t j = block; j < block + half; ++j) {
                const double lo = a[j];
                const double hi = a[j + half];
                a[j] = beta * lo + alpha * hi;
                a[j + half] = root * (hi - lo);
            }
        }
    }
    return Spectrum(f.n(), std::move(a), f.bias());
}

TableFunction inverseTransform(const Spectrum& s) {
    std::vector<double> v(s.coeffs().begin(), s.coeffs().end());
    const double low = s.bias().lowValue;
    const double high = s.bias().highValue;
    for (int i = 0; i < s.n(); ++i) {
        const std::size_t half = std::size_t{1} << i;
        for (std::size_t block = 0; block < v.size(); block += 2 * half) {
            for (std::size_t j = block; j < block + half; ++j) {
                const double c0 = v[j];
                const double c1 = v[j + half];
                v[j] = c0 + c1 * low;
                v[j + half] = c0 + c1 * high;
            }
        }
    }
    return TableFunction(s.n(), std::move(v), s.bias());
}

std::vector<double> levelWeights(const Spectrum& s) {
    std::vector<double> w(s.n() + 1, 0.0);
    const auto c = s.coeffs();
    for (Mask t = 0; t < c.size(); ++t) w[popcount(t)] += c[t] * c[t];
    return w;
}

double levelWeight(const Spectrum& s, int k) {
    if (k < 0 || k > s.n())
        throw DomainError("level " + std::to_string(k) + " outside [0, " + std::to_string(s.n()) + "]");
    double acc = 0;
    const auto c = s.coeffs();
    for (Mask t = 0; t < c.size(); ++t)
        if (popcount(t) == k) acc += c[t] * c[t];
    return acc;
}

double rho(const Spectrum& s) {
    double acc = 0;
    const auto c = s.coeffs();
    for (Mask t = 0; t < c.size(); ++t)
        if (popcount(t) > 1) acc += c[t] * c[t];
    return std::sqrt(acc);
}

}  // namespace bcube
