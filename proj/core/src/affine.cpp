#include "biased_cube/affine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "biased_cube/errors.hpp"

namespace bcube {

namespace {

void requireSymmetric(const Bias& bias) {
    if (!bias.isSymmetric()) throw DomainError("affine geometry is defined on the symmetric cube");
}

double squaredDistance(std::span<const double> x, std::span<const double> y) {
    double acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += (x[i] - y[i]) * (x[i] - y[i]);
    return acc;
}

}  // namespace

double AffineFunction::l1Norm() const {
    double acc = std::abs(a0);
    for (double v : a) acc += std::abs(v);
    return acc;
}

bool AffineFunction::isBounded(double slack) const { return l1Norm() <= 1.0 + slack; }

std::vector<double> AffineFunction::coefficients() const {
    std::vector<double> c;
    c.reserve(a.size() + 1);
    c.push_back(a0);
    c.insert(c.end(), a.begin(), a.end());
    return c;
}

AffineFunction AffineFunction::fromCoefficients(std::span<const double> c) {
    AffineFunction f;
    if (c.empty()) return f;
    f.a0 = c[0];
    f.a.assign(c.begin() + 1, c.end());
    return f;
}

TableFunction AffineFunction::toTable() const {
    const int n = static_cast<int>(a.size());
    std::vector<double> v(std::size_t{1} << n);
    for (Mask m = 0; m < v.size(); ++m) {
        double acc = a0;
        for (int i = 0; i < n; ++i) acc += (m >> i & 1) ? a[i] : -a[i];
        v[m] = acc;
    }
    return TableFunction(n, std::move(v), symmetricBias());
}

AffineFunction affinePart(const Spectrum& s) {
    AffineFunction f;
    f.a0 = s[0];
    f.a.resize(s.n());
    for (int i = 1; i <= s.n(); ++i) f.a[i - 1] = s.singleton(i);
    return f;
}

AffineDistance distToAffine(const TableFunction& f) {
    requireSymmetric(f.bias());
    const auto s = transform(f);
    return {rho(s), affinePart(s)};
}

std::vector<double> projectL1(std::span<const double> v, double radius) {
    if (!(radius > 0.0)) throw DomainError("l1 ball radius must be positive");
    double l1 = 0;
    for (double x : v) l1 += std::abs(x);
    std::vector<double> out(v.begin(), v.end());
    if (l1 <= radius) return out;

    std::vector<double> u(v.size());
    std::transform(v.begin(), v.end(), u.begin(), [](double x) { return std::abs(x); });
    std::sort(u.begin(), u.end(), std::greater<>());
    // theta = (u_1 + ... + u_r - radius) / r for the largest r keeping
    // u_r above the running threshold.
    double prefix = 0, theta = 0;
    for (std::size_t r = 0; r < u.size(); ++r) {
        prefix += u[r];
        const double candidate = (prefix - radius) / static_cast<double>(r + 1);
        if (u[r] > candidate) theta = candidate;
    }
    for (double& x : out) x = std::copysign(std::max(std::abs(x) - theta, 0.0), x);
    return out;
}

AffineDistance distToBoundedAffine(const Spectrum& s) {
    requireSymmetric(s.bias());
    const auto c = affinePart(s).coefficients();
    const auto p = projectL1(c, 1.0);
    const double r = rho(s);
    return {std::sqrt(r * r + squaredDistance(c, p)), AffineFunction::fromCoefficients(p)};
}

AffineDistance distToBoundedAffine(const TableFunction& f) {
    requireSymmetric(f.bias());
    return distToBoundedAffine(transform(f));
}

TruncationCheck checkTruncationBound(const TableFunction& f) {
    requireSymmetric(f.bias());
    if (!f.isBounded()) throw DomainError("truncation bound needs a [-1, 1]-valued function");
    const auto s = transform(f);
    const auto affine = affinePart(s).toTable();
    std::vector<double> excess(affine.size());
    for (Mask m = 0; m < excess.size(); ++m) {
        const double e = std::abs(affine[m]) - 1.0;
        excess[m] = e > 0 ? e * e : 0.0;
    }
    TruncationCheck out;
    out.lhs = expectation(TableFunction(f.n(), std::move(excess), f.bias()));
    out.rho = rho(s);
    out.holds = out.lhs <= out.rho * out.rho + kInequalitySlack;
    return out;
}

TableFunction jowExample(int n, double s) {
    if (!(s > 0.0)) throw DomainError("JOW scale s must be positive");
    if (n < 1 || n > kMaxCoordinates) throw DomainError("n out of range");
    const double scale = 1.0 / (s * std::sqrt(static_cast<double>(n)));
    std::vector<double> v(std::size_t{1} << n);
    for (Mask m = 0; m < v.size(); ++m) {
        const int ones = popcount(m);
        v[m] = phi(scale * static_cast<double>(2 * ones - n));
    }
    return TableFunction(n, std::move(v), symmetricBias());
}

ConstantPair constantPairForBase(double base) {
    if (base == kDefaultConstants.base) return kDefaultConstants;
    if (base == kSharperConstants.base) return kSharperConstants;
    throw DomainError("unsupported threshold base; use 3 or 2.03");
}

const char* toString(Theorem3Branch b) {
    switch (b) {
        case Theorem3Branch::AlreadyBounded: return "bounded";
        case Theorem3Branch::FarFromAffine: return "far";
        case Theorem3Branch::LongPrefix: return "long-prefix";
        case Theorem3Branch::ShortPrefix: return "short-prefix";
    }
    return "?";
}

Theorem3Witness theorem3Witness(const TableFunction& f, ConstantPair constants) {
    requireSymmetric(f.bias());
    if (!f.isBounded()) throw DomainError("bounded-affine distance needs a [-1, 1]-valued function");

    const auto spectrum = transform(f);
    const auto exact = distToBoundedAffine(spectrum);
    const auto affine = affinePart(spectrum);
    const auto coeffs = affine.coefficients();

    Theorem3Witness w;
    w.rho = rho(spectrum);
    w.dist = exact.dist;
    const double logInv = std::log(1.0 / w.rho);
    if (w.rho == 0.0)
        w.bound = 0.0;
    else if (logInv <= 0.0)
        w.bound = std::numeric_limits<double>::infinity();
    else
        w.bound = constants.finalConstant / std::sqrt(logInv);
    w.vacuous = w.bound >= 1.0;

    // The constant term becomes the coefficient of an extra coordinate x_0;
    // the lifted sum has the same law of |S|.
    const RademacherSum lifted(coeffs);
    w.excess = excessSquare(lifted);
    w.hypothesis = w.excess <= w.rho * w.rho + kInequalitySlack;
    w.tau = tau(lifted);
    w.threshold = w.rho > 0 ? 2.0 / std::log(constants.base) * logInv
                            : std::numeric_limits<double>::infinity();

    std::vector<double> sortedConstruction(lifted.size(), 0.0);
    if (w.tau == lifted.size()) {
        w.branch = Theorem3Branch::AlreadyBounded;
        std::copy(lifted.a().begin(), lifted.a().end(), sortedConstruction.begin());
    } else if (w.rho >= 1.0 / 3.0) {
        w.branch = Theorem3Branch::FarFromAffine;
    } else if (static_cast<double>(w.tau) >= w.threshold) {
        w.branch = Theorem3Branch::LongPrefix;
        const auto keep = std::min(lifted.size(), static_cast<std::size_t>(std::floor(w.threshold)));
        std::copy_n(lifted.a().begin(), keep, sortedConstruction.begin());
        const double t = w.threshold;
        w.stepLhs = std::sqrt(tailSquareSum(lifted, t));
        w.stepRhs = 4.0 / std::sqrt(t) *
                    (2.0 + 4.0 * w.rho * std::pow((2.0 * t - 1.0) / (t - 1.0), t / 2.0));
    } else {
        w.branch = Theorem3Branch::ShortPrefix;
        double prefix = 0;
        for (std::size_t i = 0; i < w.tau; ++i) {
            sortedConstruction[i] = lifted[i];
            prefix += lifted[i];
        }
        sortedConstruction[w.tau] = std::max(0.0, 1.0 - prefix);
        w.stepLhs = std::sqrt(squaredDistance(lifted.a(), sortedConstruction));
        w.stepRhs = std::sqrt(20.0) *
                    std::pow(w.rho, 1.0 - std::log(2.0) / std::log(constants.base));
    }
    if (w.branch == Theorem3Branch::LongPrefix || w.branch == Theorem3Branch::ShortPrefix)
        w.stepHolds = !w.hypothesis || w.stepLhs <= w.stepRhs + 1e-8;

    const auto constructed = lifted.unsort(sortedConstruction);
    w.construction = AffineFunction::fromCoefficients(constructed);
    w.constructionDist = std::sqrt(w.rho * w.rho + squaredDistance(coeffs, constructed));
    w.holds = w.dist <= w.bound + kInequalitySlack &&
              w.constructionDist >= w.dist - kInequalitySlack;
    return w;
}

}  // namespace bcube
