#include "gjfspec/solvers.hpp"
#include "gjfspec/specfun.hpp"

#include <cmath>

namespace gjfs {

namespace {

constexpr double kIntTol = 1e-12;

bool near_integer(double x)
{
    return std::abs(x - std::round(x)) < kIntTol;
}

// Scale factor of the closed-form derivative D+^alpha of the Plus family
// member of degree n: the image is scale * P_n^{(0, alpha+beta)}.
double poly_image_scale(double alpha, int n)
{
    return gamma_ratio(n + alpha + 1.0, n + 1.0);
}

} // namespace

SpectralSolution solve_fivp(const ProblemSpec& spec)
{
    const double s = spec.nu;
    if (!(s > 0.0) || near_integer(s))
        throw InadmissibleParam("solve_fivp: order must be positive and non-integer");
    if (spec.N < 0)
        throw DomainError("solve_fivp: negative truncation");
    const int N = spec.N, M = N + spec.quad_extra;

    // Legendre coefficients of f, then rescale per mode.
    const QuadRule rule = gauss_jacobi_rule({0.0, 0.0}, M);
    std::vector<double> fcoef(N + 1, 0.0);
    for (int q = 0; q < M; ++q) {
        const double g = rule.weights[q] * spec.rhs(rule.nodes[q]);
        const std::vector<double> pv = jacobi_eval({0.0, 0.0}, N, rule.nodes[q]);
        for (int n = 0; n <= N; ++n)
            fcoef[n] += g * pv[n];
    }
    SpectralSolution sol{ProblemKind::Fivp, s, s,
                         {{Side::Plus, s, -s, 0}, 0, std::vector<double>(N + 1)},
                         std::vector<double>(N + 1)};
    for (int n = 0; n <= N; ++n) {
        const double gamma_n = 2.0 / (2.0 * n + 1.0);
        sol.diag[n] = poly_image_scale(s, n) * gamma_n;
        sol.coeffs.coeffs[n] = fcoef[n] / sol.diag[n];
    }
    return sol;
}

SpectralSolution solve_fbvp_integral2(const ProblemSpec& spec)
{
    const double nu = spec.nu;
    if (!(nu > 1.0) || !(nu < 2.0) || near_integer(nu))
        throw InadmissibleParam("solve_fbvp_integral2: order must lie strictly in (1,2)");
    if (spec.N < 2)
        throw DomainError("solve_fbvp_integral2: truncation too small");
    const double mu = 2.0 - nu;
    const int N = spec.N, M = N + spec.quad_extra;

    // f_n = (f, Int_x^1 P_n) with the (1-x^2) factor of the test function
    // absorbed into a (1,1) weight.
    const QuadRule rule = gauss_jacobi_rule({1.0, 1.0}, M);
    std::vector<double> fcoef(N - 1, 0.0); // index n-1, n = 1..N-1
    for (int q = 0; q < M; ++q) {
        const double g = rule.weights[q] * spec.rhs(rule.nodes[q]);
        const std::vector<double> pv = jacobi_eval({1.0, 1.0}, N - 2, rule.nodes[q]);
        for (int n = 1; n <= N - 1; ++n)
            fcoef[n - 1] += g * pv[n - 1] / (2.0 * n);
    }
    SpectralSolution sol{ProblemKind::FbvpIntegral2, nu, 1.0 - mu,
                         {{Side::Plus, 1.0 - mu, mu - 1.0, 0}, 1, std::vector<double>(N - 1)},
                         std::vector<double>(N - 1)};
    for (int n = 1; n <= N - 1; ++n) {
        const double gamma_n = 2.0 / (2.0 * n + 1.0);
        sol.diag[n - 1] = poly_image_scale(1.0 - mu, n) * gamma_n;
        sol.coeffs.coeffs[n - 1] = fcoef[n - 1] / sol.diag[n - 1];
    }
    return sol;
}

SpectralSolution solve_fbvp_integral3(const ProblemSpec& spec)
{
    const double nu = spec.nu;
    if (!(nu > 2.0) || !(nu < 3.0) || near_integer(nu))
        throw InadmissibleParam("solve_fbvp_integral3: order must lie strictly in (2,3)");
    if (spec.N < 3)
        throw DomainError("solve_fbvp_integral3: truncation too small");
    const double mu = 3.0 - nu;
    const int N = spec.N, M = N + spec.quad_extra;

    // Test functions are -(d_n/2) (1-x)(1+x)^2 P_{n-1}^{(1,2)} with
    // d_n = (n+2)/n; the scheme right-hand side is -(f, test).
    const QuadRule rule = gauss_jacobi_rule({1.0, 2.0}, M);
    std::vector<double> fcoef(N - 2, 0.0); // index n-1, n = 1..N-2
    for (int q = 0; q < M; ++q) {
        const double g = rule.weights[q] * spec.rhs(rule.nodes[q]);
        const std::vector<double> pv = jacobi_eval({1.0, 2.0}, N - 3, rule.nodes[q]);
        for (int n = 1; n <= N - 2; ++n)
            fcoef[n - 1] += g * pv[n - 1] * (n + 2.0) / (2.0 * n);
    }
    SpectralSolution sol{ProblemKind::FbvpIntegral3, nu, 2.0 - mu,
                         {{Side::Plus, 2.0 - mu, mu - 1.0, 0}, 1, std::vector<double>(N - 2)},
                         std::vector<double>(N - 2)};
    for (int n = 1; n <= N - 2; ++n) {
        sol.diag[n - 1] = poly_image_scale(2.0 - mu, n) * (n + 2.0) * jacobi_norm_gamma({0.0, 1.0}, n);
        sol.coeffs.coeffs[n - 1] = fcoef[n - 1] / sol.diag[n - 1];
    }
    return sol;
}

SpectralSolution solve_fbvp_dirichlet(const ProblemSpec& spec)
{
    const double nu = spec.nu;
    if (near_integer(nu))
        throw InadmissibleParam("solve_fbvp_dirichlet: integer order not supported");
    const int k = static_cast<int>(std::ceil(0.5 * nu));
    const double s = nu - k;
    if (!(s > k - 1.0) || !(s < double(k)))
        throw InadmissibleParam("solve_fbvp_dirichlet: order not in an even-order range (2k-1, 2k)");
    if (spec.N < k)
        throw DomainError("solve_fbvp_dirichlet: truncation below start index");
    const int N = spec.N, M = N + spec.quad_extra;

    // Test function of index n reduces to d_n^{k,s} (-1)^k 2^{-k}
    // (1-x)^k (1+x)^s P_{n-k}^{(k,s)}; integrate f against it with the (k,s)
    // weight.
    const QuadRule rule = gauss_jacobi_rule({double(k), s}, M);
    std::vector<double> fcoef(N - k + 1, 0.0);
    for (int q = 0; q < M; ++q) {
        const double g = rule.weights[q] * spec.rhs(rule.nodes[q]);
        const std::vector<double> pv = jacobi_eval({double(k), s}, N - k, rule.nodes[q]);
        for (int n = k; n <= N; ++n)
            fcoef[n - k] += g * pv[n - k];
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    SpectralSolution sol{ProblemKind::FbvpDirichlet, nu, s,
                         {{Side::Plus, s, double(-k), 0}, k, std::vector<double>(N - k + 1)},
                         std::vector<double>(N - k + 1)};
    for (int n = k; n <= N; ++n) {
        const double rhs_n = sign * std::exp2(-k) * jacobi_negint_factorize(k, s, n) * fcoef[n - k];
        sol.diag[n - k] = poly_image_scale(s, n) * gamma_ratio(n + s + 1.0, n + s - k + 1.0)
                          * jacobi_norm_gamma({0.0, s - k}, n);
        sol.coeffs.coeffs[n - k] = rhs_n / sol.diag[n - k];
    }
    return sol;
}

SpectralSolution solve(const ProblemSpec& spec)
{
    switch (spec.kind) {
    case ProblemKind::Fivp:
        return solve_fivp(spec);
    case ProblemKind::FbvpIntegral2:
        return solve_fbvp_integral2(spec);
    case ProblemKind::FbvpIntegral3:
        return solve_fbvp_integral3(spec);
    case ProblemKind::FbvpDirichlet:
        return solve_fbvp_dirichlet(spec);
    }
    throw DomainError("solve: unknown problem kind");
}

std::vector<double> eval_solution(const SpectralSolution& sol, const std::vector<double>& xs)
{
    const CoeffVector& c = sol.coeffs;
    const int N = c.truncation();
    std::vector<double> out(xs.size(), 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::vector<double> basis =
            gjf_eval_batch(c.family.side, c.family.alpha, c.family.beta, N, xs[i]);
        double acc = 0.0;
        for (std::size_t j = 0; j < c.coeffs.size(); ++j)
            acc += c.coeffs[j] * basis[c.start + j];
        out[i] = acc;
    }
    return out;
}

std::vector<std::vector<double>> assemble_pg_matrix(const ProblemSpec& spec)
{
    // Entries a(phi_n, psi_m) with the trial side replaced by its closed-form
    // D+ image (a polynomial) and the inner product done by Gauss-Jacobi
    // quadrature with the weight that the test derivative carries.
    const int N = spec.N;
    const int M = 2 * N + spec.quad_extra;

    auto product_matrix = [M](const JacobiParam& w, int lo, int hi,
                              auto&& trial_scale, auto&& test_scale) {
        const QuadRule rule = gauss_jacobi_rule(w, M);
        const int dim = hi - lo + 1;
        std::vector<std::vector<double>> A(dim, std::vector<double>(dim, 0.0));
        for (int q = 0; q < M; ++q) {
            const std::vector<double> pv = jacobi_eval(w, hi, rule.nodes[q]);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    A[i][j] += rule.weights[q] * pv[lo + i] * pv[lo + j];
        }
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                A[i][j] *= trial_scale(lo + j) * test_scale(lo + i);
        return A;
    };

    switch (spec.kind) {
    case ProblemKind::Fivp: {
        const double s = spec.nu;
        return product_matrix({0.0, 0.0}, 0, N,
                              [s](int n) { return poly_image_scale(s, n); },
                              [](int) { return 1.0; });
    }
    case ProblemKind::FbvpIntegral2: {
        const double mu = 2.0 - spec.nu;
        return product_matrix({0.0, 0.0}, 1, N - 1,
                              [mu](int n) { return poly_image_scale(1.0 - mu, n); },
                              [](int) { return 1.0; });
    }
    case ProblemKind::FbvpIntegral3: {
        const double mu = 3.0 - spec.nu;
        return product_matrix({0.0, 1.0}, 1, N - 2,
                              [mu](int n) { return poly_image_scale(2.0 - mu, n); },
                              [](int m) { return m + 2.0; });
    }
    case ProblemKind::FbvpDirichlet: {
        const int k = static_cast<int>(std::ceil(0.5 * spec.nu));
        const double s = spec.nu - k;
        return product_matrix({0.0, s - k}, k, N,
                              [s](int n) { return poly_image_scale(s, n); },
                              [s, k](int m) { return gamma_ratio(m + s + 1.0, m + s - k + 1.0); });
    }
    }
    throw DomainError("assemble_pg_matrix: unknown problem kind");
}

namespace {

// Quadrature size for pointwise-difference norms against exact references.
int exact_ref_quad_size(int N)
{
    return 2 * N + 80;
}

} // namespace

double error_norms(const SpectralSolution& sol, const SpectralSolution& ref, ErrorNorm which)
{
    const GjfLabel& fa = sol.coeffs.family;
    const GjfLabel& fb = ref.coeffs.family;
    if (fa.side != fb.side || std::abs(fa.alpha - fb.alpha) > kIntTol
        || std::abs(fa.beta - fb.beta) > kIntTol || sol.coeffs.start != ref.coeffs.start)
        throw FamilyMismatch("error_norms: solutions live in different families");

    // Coefficient difference, padded with the reference tail.
    const int start = ref.coeffs.start;
    CoeffVector diff{fa, start, ref.coeffs.coeffs};
    for (std::size_t i = 0; i < diff.coeffs.size(); ++i) {
        const double a = (i < sol.coeffs.coeffs.size()) ? sol.coeffs.coeffs[i] : 0.0;
        diff.coeffs[i] = a - diff.coeffs[i];
    }

    if (which == ErrorNorm::FracEnergy)
        return gjf_coeff_norms(diff, fa.alpha, fa.beta, 0);

    // Plain L2 of the difference: (1-x)^{2 alpha} times a polynomial square,
    // integrated exactly with a (2 alpha, 0) rule.
    const int Nref = diff.truncation();
    const QuadRule rule = gauss_jacobi_rule({2.0 * fa.alpha, 0.0}, Nref + 16);
    double acc = 0.0;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const std::vector<double> pv = jacobi_eval({fa.alpha, fa.beta}, Nref, rule.nodes[q]);
        double v = 0.0;
        for (std::size_t i = 0; i < diff.coeffs.size(); ++i)
            v += diff.coeffs[i] * pv[start + i];
        acc += rule.weights[q] * v * v;
    }
    return std::sqrt(acc);
}

double error_norms(const SpectralSolution& sol, const ExactRef& ref, ErrorNorm which)
{
    const GjfLabel& fam = sol.coeffs.family;
    const int N = sol.coeffs.truncation();
    const int M = exact_ref_quad_size(N);

    if (which == ErrorNorm::L2) {
        const QuadRule rule = gauss_jacobi_rule({0.0, 0.0}, M);
        double acc = 0.0;
        for (int q = 0; q < M; ++q) {
            const double x = rule.nodes[q];
            const std::vector<double> basis =
                gjf_eval_batch(fam.side, fam.alpha, fam.beta, N, x);
            double v = -ref.u(x);
            for (std::size_t i = 0; i < sol.coeffs.coeffs.size(); ++i)
                v += sol.coeffs.coeffs[i] * basis[sol.coeffs.start + i];
            acc += rule.weights[q] * v * v;
        }
        return std::sqrt(acc);
    }

    // Energy norm: the closed-form derivative image of the solution is a
    // P_n^{(0, alpha+beta)} series; compare pointwise under its weight.
    const double apb = fam.alpha + fam.beta;
    const QuadRule rule = gauss_jacobi_rule({0.0, apb}, M);
    double acc = 0.0;
    for (int q = 0; q < M; ++q) {
        const double x = rule.nodes[q];
        const std::vector<double> pv = jacobi_eval({0.0, apb}, N, x);
        double v = -ref.frac_deriv(x);
        for (std::size_t i = 0; i < sol.coeffs.coeffs.size(); ++i) {
            const int n = sol.coeffs.start + static_cast<int>(i);
            v += sol.coeffs.coeffs[i] * poly_image_scale(fam.alpha, n) * pv[n];
        }
        acc += rule.weights[q] * v * v;
    }
    return std::sqrt(acc);
}

} // namespace gjfs
