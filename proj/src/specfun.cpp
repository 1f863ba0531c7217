#include "gjfspec/specfun.hpp"

#include <cmath>
#include <numbers>

namespace gjfs {

namespace {

constexpr double kPoleTol = 1e-12;

// Lanczos approximation, g = 7, 9 coefficients: ~15 significant digits for
// x > 0.5.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// log Gamma(x) for x > 0.5.
double log_gamma_positive(double x)
{
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        acc += kLanczos[i] / (z + i);
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace

double SignedLogValue::value() const
{
    if (sign == 0)
        return 0.0;
    return sign * std::exp(log_abs);
}

bool is_gamma_pole(double x)
{
    const double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) < kPoleTol;
}

SignedLogValue log_gamma(double x)
{
    if (!std::isfinite(x))
        throw DomainError("log_gamma: non-finite argument");
    if (is_gamma_pole(x))
        throw PoleError("log_gamma: pole at non-positive integer argument");
    if (x > 0.5)
        return {log_gamma_positive(x), +1};
    // Reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x)).
    const double pi = std::numbers::pi;
    // sin(pi x) via the fractional part for accuracy at large |x|.
    const double r = x - std::floor(x);
    const double sinpix_mag = std::sin(pi * r);
    // sign of sin(pi x): positive iff floor(x) is even.
    const int floor_even = (static_cast<long long>(std::floor(x)) % 2 == 0) ? +1 : -1;
    const double log_abs = std::log(pi) - std::log(std::abs(sinpix_mag)) - log_gamma_positive(1.0 - x);
    return {log_abs, floor_even};
}

double gamma_ratio(double a, double b)
{
    const bool a_pole = is_gamma_pole(a);
    const bool b_pole = is_gamma_pole(b);
    if (b_pole && !a_pole)
        return 0.0;
    if (a_pole)
        throw PoleError("gamma_ratio: numerator gamma pole");
    const SignedLogValue la = log_gamma(a);
    const SignedLogValue lb = log_gamma(b);
    return la.sign * lb.sign * std::exp(la.log_abs - lb.log_abs);
}

double pochhammer(double a, int j)
{
    if (j < 0)
        throw DomainError("pochhammer: negative index");
    double p = 1.0;
    for (int i = 0; i < j; ++i)
        p *= a + i;
    return p;
}

} // namespace gjfs
