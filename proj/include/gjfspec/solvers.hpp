#ifndef GJFSPEC_SOLVERS_HPP
#define GJFSPEC_SOLVERS_HPP

#include "gjfspec/gjf.hpp"

#include <functional>
#include <vector>

namespace gjfs {

enum class ProblemKind { Fivp, FbvpIntegral2, FbvpIntegral3, FbvpDirichlet };

// One fractional differential equation instance on (-1,1):
//   Fivp          : D+^nu u = f,  u^(l)(1) = 0,  nu in (k-1,k) non-integer
//   FbvpIntegral2 : -D+^nu u = f, I+^{2-nu} u(+-1) = 0, nu in (1,2)
//   FbvpIntegral3 : -D+^nu u = f, I+^{3-nu} u(+-1) = (I+^{3-nu}u)'(1) = 0, nu in (2,3)
//   FbvpDirichlet : D+^nu u = f,  u^(l)(+-1) = 0,  nu = s + k, s in (k-1,k)
// The integral-BC problems carry the sign that makes v := I+^mu u solve the
// classical weak Poisson problem (Dv, Dw) = (f, w).
struct ProblemSpec {
    ProblemKind kind;
    double nu;
    int N;
    std::function<double(double)> rhs;
    int quad_extra = 16; // quadrature size surplus: M = N + quad_extra
};

struct SpectralSolution {
    ProblemKind kind;
    double nu;
    double frac_order; // order of D+ whose closed-form image is polynomial
    CoeffVector coeffs;
    std::vector<double> diag; // Petrov-Galerkin diagonal, for diagnostics
};

SpectralSolution solve_fivp(const ProblemSpec& spec);
SpectralSolution solve_fbvp_integral2(const ProblemSpec& spec);
SpectralSolution solve_fbvp_integral3(const ProblemSpec& spec);
SpectralSolution solve_fbvp_dirichlet(const ProblemSpec& spec);
SpectralSolution solve(const ProblemSpec& spec); // dispatch on kind

std::vector<double> eval_solution(const SpectralSolution& sol, const std::vector<double>& xs);

// Full Petrov-Galerkin matrix assembled by quadrature of the closed-form
// derivative images against the test derivatives; diagnostic (the production
// path never forms it).
std::vector<std::vector<double>> assemble_pg_matrix(const ProblemSpec& spec);

enum class ErrorNorm { L2, FracEnergy };

// Exact reference: solution values plus (for the energy norm) the exact
// fractional derivative of matching order.
struct ExactRef {
    std::function<double(double)> u;
    std::function<double(double)> frac_deriv;
};

// Error against a same-family higher-N solution; both norms come out of
// coefficient space (exact quadrature for L2, weighted sums for energy).
double error_norms(const SpectralSolution& sol, const SpectralSolution& ref, ErrorNorm which);

// Error against an exact solution by quadrature of the pointwise difference.
double error_norms(const SpectralSolution& sol, const ExactRef& ref, ErrorNorm which);

} // namespace gjfs

#endif
