#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bcube {

/// S = sum a_i r_i on the symmetric cube with a_1 >= ... >= a_n >= 0.
///
/// Arbitrary real coefficients are normalized on construction by taking
/// absolute values and sorting in decreasing order (ties keep the original
/// index order). Neither step changes the law of |S|. The permutation and the
/// signs are kept so a construction built on the sorted sum can be mapped back
/// onto the original coordinates.
class RademacherSum {
public:
    explicit RademacherSum(std::span<const double> coefficients);

    std::size_t size() const { return a_.size(); }
    std::span<const double> a() const { return a_; }
    double operator[](std::size_t i) const { return a_[i]; }  // 0-based

    /// Original index of the sorted i-th coefficient.
    std::size_t originalIndex(std::size_t i) const { return order_[i]; }
    /// Sign of the sorted i-th coefficient in the original input.
    double originalSign(std::size_t i) const { return signs_[i]; }

    /// Places sorted-order coefficients back at their original indices with
    /// the original signs.
    std::vector<double> unsort(std::span<const double> sorted) const;

    double l2() const;
    double l1() const;

private:
    std::vector<double> a_;
    std::vector<std::size_t> order_;
    std::vector<double> signs_;
};

/// Visits S(eps) for all 2^n sign vectors eps. Order is fixed: the low half
/// of the coordinates varies fastest.
template <typename Fn>
void forEachSignSum(std::span<const double> a, Fn&& fn);

/// Exact (E|S|^t)^{1/t} by enumeration; t >= 1.
double lpNormRademacher(const RademacherSum& s, double t);

/// E (|S| - 1)_+^2.
double excessSquare(const RademacherSum& s);

struct SmallBallCheck {
    double prob = 0;  // P(|S| >= ||S||_2)
    bool holds = false;  // prob > 1/10
};

/// Throws DomainError for the zero sum. Points with |S| within a relative
/// 1e-12 of ||S||_2 count as attaining the bound.
SmallBallCheck checkHKSmallBall(const RademacherSum& s);

struct NormComparison {
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
};

/// sum_{i > t} a_i^2 with 1-based i, strict on the real threshold t.
double tailSquareSum(const RademacherSum& s, double t);

/// lhs = ||S||_t, rhs = (1/4) sqrt(t) (sum_{i>t} a_i^2)^{1/2}; holds iff lhs >= rhs.
NormComparison checkHKTailNorm(const RademacherSum& s, double t);

/// lhs = ||S||_{2t}, rhs = sqrt((2t-1)/(t-1)) ||S||_t; t > 1.
NormComparison khinchineRatio(const RademacherSum& s, double t);

/// max{m >= 1 : a_1 + ... + a_m <= 1}. Throws DomainError if a_1 > 1.
std::size_t tau(const RademacherSum& s);

struct NormTBoundCheck {
    bool applicable = false;  // E(|S|-1)_+^2 <= rho^2
    double lower = 0;   // (1/4) sqrt(t) (sum_{i>t} a_i^2)^{1/2}
    double middle = 0;  // ||S||_t
    double upper = 0;   // 2 + 4 rho ((2t-1)/(t-1))^{t/2}
    bool holds = true;
};

/// Two-sided bound on ||S||_t under the excess-mass hypothesis; t > 1.
NormTBoundCheck normTBound(const RademacherSum& s, double rho, double t);

// -- implementation ---------------------------------------------------------

template <typename Fn>
void forEachSignSum(std::span<const double> a, Fn&& fn) {
    const std::size_t n = a.size();
    const std::size_t lowCount = n / 2;
    auto halfSums = [](std::span<const double> part) {
        std::vector<double> sums(std::size_t{1} << part.size());
        sums[0] = 0;
        for (double v : part) sums[0] -= v;
        for (std::size_t i = 0; i < part.size(); ++i) {
            const std::size_t half = std::size_t{1} << i;
            for (std::size_t m = 0; m < half; ++m) sums[m | half] = sums[m] + 2 * part[i];
        }
        return sums;
    };
    const auto low = halfSums(a.first(lowCount));
    const auto high = halfSums(a.subspan(lowCount));
    for (double h : high)
        for (double l : low) fn(l + h);
}

}  // namespace bcube
