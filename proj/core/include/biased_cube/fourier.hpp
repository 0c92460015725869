#pragma once

#include <span>
#include <vector>

#include "biased_cube/table_function.hpp"

namespace bcube {

/// Walsh-Fourier coefficients a_T of a function on the biased cube, dense
/// and indexed by subset bitmask.
class Spectrum {
public:
    Spectrum(int n, std::vector<double> coeffs, Bias bias);

    int n() const { return n_; }
    const Bias& bias() const { return bias_; }
    std::span<const double> coeffs() const { return coeffs_; }
    double operator[](Mask subset) const { return coeffs_[subset]; }

    /// a_{i} for the 1-based coordinate i.
    double singleton(int i) const { return coeffs_[Mask{1} << (i - 1)]; }

    /// Sum of a_T^2 over all T.
    double totalWeight() const;

private:
    int n_;
    std::vector<double> coeffs_;
    Bias bias_;
};

/// a_T = <f, w_T> for all T by an n-stage butterfly, O(n 2^n).
Spectrum transform(const TableFunction& f);

/// f = sum_T a_T w_T evaluated by the inverse butterfly.
TableFunction inverseTransform(const Spectrum& s);

/// Sum of a_T^2 over |T| = k. Throws DomainError for k outside [0, n].
double levelWeight(const Spectrum& s, int k);

/// All level weights, index k = 0..n.
std::vector<double> levelWeights(const Spectrum& s);

/// (sum_{|T| > 1} a_T^2)^{1/2}.
double rho(const Spectrum& s);

}  // namespace bcube
