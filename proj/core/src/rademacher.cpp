#include "biased_cube/rademacher.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "biased_cube/errors.hpp"
#include "biased_cube/table_function.hpp"

namespace bcube {

RademacherSum::RademacherSum(std::span<const double> coefficients) {
    const std::size_t n = coefficients.size();
    if (n > static_cast<std::size_t>(kMaxCoordinates) + 1)
        throw DomainError("Rademacher sum too long for exact enumeration");
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t i, std::size_t j) {
        return std::abs(coefficients[i]) > std::abs(coefficients[j]);
    });
    a_.resize(n);
    signs_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double c = coefficients[order_[i]];
        if (!std::isfinite(c)) throw DomainError("non-finite Rademacher coefficient");
        a_[i] = std::abs(c);
        signs_[i] = c < 0 ? -1.0 : 1.0;
    }
}

std::vector<double> RademacherSum::unsort(std::span<const double> sorted) const {
    std::vector<double> out(a_.size(), 0.0);
    for (std::size_t i = 0; i < sorted.size() && i < a_.size(); ++i)
        out[order_[i]] = signs_[i] * sorted[i];
    return out;
}

double RademacherSum::l2() const {
    double acc = 0;
    for (double v : a_) acc += v * v;
    return std::sqrt(acc);
}

double RademacherSum::l1() const { return std::accumulate(a_.begin(), a_.end(), 0.0); }

namespace {

double absoluteMoment(const RademacherSum& s, double t) {
    double acc = 0;
    if (t == 2.0)
        forEachSignSum(s.a(), [&](double v) { acc += v * v; });
    else
        forEachSignSum(s.a(), [&](double v) { acc += std::pow(std::abs(v), t); });
    return std::ldexp(acc, -static_cast<int>(s.size()));
}

}  // namespace

double lpNormRademacher(const RademacherSum& s, double t) {
    if (!std::isfinite(t) || t < 1.0) throw DomainError("||S||_t needs finite t >= 1");
    return std::pow(absoluteMoment(s, t), 1.0 / t);
}

double excessSquare(const RademacherSum& s) {
    double acc = 0;
    forEachSignSum(s.a(), [&](double v) {
        const double e = std::abs(v) - 1.0;
        if (e > 0) acc += e * e;
    });
    return std::ldexp(acc, -static_cast<int>(s.size()));
}

SmallBallCheck checkHKSmallBall(const RademacherSum& s) {
    const double norm = s.l2();
    if (norm == 0.0) throw DomainError("small-ball probability of the zero sum");
    const double level = norm * (1.0 - 1e-12);
    double hits = 0;
    forEachSignSum(s.a(), [&](double v) {
        if (std::abs(v) >= level) hits += 1;
    });
    SmallBallCheck out;
    out.prob = std::ldexp(hits, -static_cast<int>(s.size()));
    out.holds = out.prob > 0.1;
    return out;
}

double tailSquareSum(const RademacherSum& s, double t) {
    // 1-based indices i > t, i.e. 0-based j >= floor(t).
    double acc = 0;
    const double first = std::floor(t);
    for (std::size_t j = 0; j < s.size(); ++j)
        if (static_cast<double>(j) >= first) acc += s[j] * s[j];
    return acc;
}

NormComparison checkHKTailNorm(const RademacherSum& s, double t) {
    NormComparison out;
    out.lhs = lpNormRademacher(s, t);
    out.rhs = 0.25 * std::sqrt(t) * std::sqrt(tailSquareSum(s, t));
    out.holds = out.lhs >= out.rhs - kInequalitySlack;
    return out;
}

NormComparison khinchineRatio(const RademacherSum& s, double t) {
    if (!std::isfinite(t) || t <= 1.0) throw DomainError("Khinchine ratio needs t > 1");
    NormComparison out;
    out.lhs = lpNormRademacher(s, 2.0 * t);
    out.rhs = std::sqrt((2.0 * t - 1.0) / (t - 1.0)) * lpNormRademacher(s, t);
    out.holds = out.lhs <= out.rhs + kInequalitySlack;
    return out;
}

std::size_t tau(const RademacherSum& s) {
    constexpr double kEdge = 1.0 + 1e-12;
    if (s.size() == 0) throw DomainError("tau of an empty sum");
    if (s[0] > kEdge) throw DomainError("tau needs a_1 <= 1");
    double prefix = 0;
    std::size_t m = 0;
    while (m < s.size() && prefix + s[m] <= kEdge) prefix += s[m++];
    return m;
}

NormTBoundCheck normTBound(const RademacherSum& s, double rho, double t) {
    if (!std::isfinite(t) || t <= 1.0) throw DomainError("norm bound needs t > 1");
    NormTBoundCheck out;
    out.applicable = excessSquare(s) <= rho * rho + kInequalitySlack;
    out.middle = lpNormRademacher(s, t);
    out.lower = 0.25 * std::sqrt(t) * std::sqrt(tailSquareSum(s, t));
    out.upper = 2.0 + 4.0 * rho * std::pow((2.0 * t - 1.0) / (t - 1.0), t / 2.0);
    out.holds = !out.applicable || (out.lower <= out.middle + kInequalitySlack &&
                                    out.middle <= out.upper + kInequalitySlack);
    return out;
}

}  // namespace bcube
