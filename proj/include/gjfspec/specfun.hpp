#ifndef GJFSPEC_SPECFUN_HPP
#define GJFSPEC_SPECFUN_HPP

#include "gjfspec/errors.hpp"

namespace gjfs {

// Value stored as sign * exp(log_abs). sign == 0 encodes an exact zero
// (e.g. the reciprocal of a gamma pole).
struct SignedLogValue {
    double log_abs;
    int sign; // -1, 0, +1

    double value() const;
};

// True when x is a non-positive integer up to representation error
// (|x - round(x)| < 1e-12).
bool is_gamma_pole(double x);

// ln|Gamma(x)| and the sign of Gamma(x). Negative non-integer arguments go
// through the Euler reflection formula. Throws PoleError at 0, -1, -2, ...
SignedLogValue log_gamma(double x);

// Gamma(a)/Gamma(b), evaluated as a difference of log-gammas. Returns exactly
// 0 when b is a pole and a is not; throws PoleError when a is a pole and b is
// not (the ratio would be infinite).
double gamma_ratio(double a, double b);

// Rising factorial (a)_j = a(a+1)...(a+j-1), by direct product so that
// negative-integer a gives exact zeros.
double pochhammer(double a, int j);

} // namespace gjfs

#endif
