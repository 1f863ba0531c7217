#ifndef GJFSPEC_JACOBI_HPP
#define GJFSPEC_JACOBI_HPP

#include "gjfspec/errors.hpp"

#include <vector>

namespace gjfs {

// Real parameter pair (alpha, beta). The classical restriction alpha,beta > -1
// is only needed for quadrature/orthogonality; evaluation admits general real
// parameters as long as the degree-n polynomials do not degenerate
// (n + alpha + beta must not be a negative integer) and the recurrence
// denominators stay away from zero.
struct JacobiParam {
    double alpha;
    double beta;
};

// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on (-1,1).
// Immutable after construction.
struct QuadRule {
    double alpha;
    double beta;
    std::vector<double> nodes;   // strictly increasing, in (-1,1)
    std::vector<double> weights; // positive

    // Sum of w_k * f(x_k).
    template <typename F>
    double integrate(F&& f) const
    {
        double acc = 0.0;
        for (std::size_t k = 0; k < nodes.size(); ++k)
            acc += weights[k] * f(nodes[k]);
        return acc;
    }
};

// Throws InadmissibleParam if some degree in [1, n_max] degenerates or a
// recurrence denominator vanishes.
void check_jacobi_admissible(const JacobiParam& p, int n_max);

// P_0 ... P_{n_max} at x via the three-term recurrence.
std::vector<double> jacobi_eval(const JacobiParam& p, int n_max, double x);

// Normalization constant gamma_n: the weighted L2 norm squared of P_n under
// (1-x)^alpha (1+x)^beta, for alpha, beta > -1.
double jacobi_norm_gamma(const JacobiParam& p, int n);

// kappa_{n,l} such that D^l P_n^{(a,b)} = kappa * P_{n-l}^{(a+l,b+l)}.
double jacobi_deriv_coeff(const JacobiParam& p, int n, int l);

// d_n^{l,beta} in P_n^{(-l,beta)} = d * ((x-1)/2)^l * P_{n-l}^{(l,beta)}.
double jacobi_negint_factorize(int l, double beta, int n);

// M-point Gauss-Jacobi rule: nodes are the roots of P_M^{(alpha,beta)},
// found by Newton iteration; weights from the derivative formula.
QuadRule gauss_jacobi_rule(const JacobiParam& p, int M);

} // namespace gjfs

#endif
