#include "mubgeo/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mubgeo/lineops.hpp"
#include "mubgeo/mub.hpp"

namespace mubgeo {

double PhaseTable::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double PhaseTable::min() const {
    double m = values.empty() ? 0.0 : values[0];
    for (double v : values) m = std::min(m, v);
    return m;
}

DensityMatrix DensityMatrix::from_matrix(Mat rho, double tol, double psd_floor) {
    if (!check_odd_prime(rho.dim()))
        throw std::invalid_argument("density matrix dimension must be an odd prime, got " +
                                    std::to_string(rho.dim()));
    if (!rho.is_hermitian(tol))
        throw std::invalid_argument("density matrix is not Hermitian within tolerance");
    double tr_err = std::abs(rho.trace() - cplx{1.0, 0.0});
    if (tr_err > tol)
        throw std::invalid_argument("density matrix trace differs from one by " +
                                    std::to_string(tr_err));
    std::vector<double> eig = hermitian_eigenvalues(rho);
    if (eig.front() < -psd_floor)
        throw std::invalid_argument("density matrix has negative eigenvalue " +
                                    std::to_string(eig.front()));
    return DensityMatrix(std::move(rho));
}

DensityMatrix DensityMatrix::pure(const Vec& state) {
    Vec s = state;
    s.normalize();
    return DensityMatrix(outer(s, s));
}

PhaseTable wigner(const DensityMatrix& rho) {
    return general_map(rho.matrix());
}

PhaseTable general_map(const Mat& q) {
    long long d = q.dim();
    if (!check_odd_prime(d))
        throw std::invalid_argument("phase-space map needs an odd prime dimension");
    std::vector<Mat> ops = all_line_operators(d);
    PhaseTable t;
    t.d = d;
    t.values.resize(static_cast<size_t>(d * d));
    for (size_t j = 0; j < ops.size(); ++j)
        t.values[j] = trace_product(q, ops[j]).real() / static_cast<double>(d);
    return t;
}

std::vector<std::uint8_t> lambda_kernel(long long d, double tol) {
    std::vector<Mat> ops = all_line_operators(d);
    std::vector<std::uint8_t> kernel(static_cast<size_t>(d * (d + 1) * d * d), 0);
    long long cols = d * d;
    long long row = 0;
    for (const BasisLabel& b : BasisLabel::all(d)) {
        for (long long m = 0; m < d; ++m, ++row) {
            Mat p = projector(b, fe(m, d));
            for (long long j = 0; j < cols; ++j) {
                cplx t = trace_product(p, ops[static_cast<size_t>(j)]);
                double re = t.real();
                if (std::abs(t.imag()) > tol || (std::abs(re) > tol && std::abs(re - 1.0) > tol))
                    throw std::domain_error("kernel entry off {0,1}: point " + std::to_string(row) +
                                            ", line " + std::to_string(j));
                kernel[static_cast<size_t>(row * cols + j)] = std::abs(re - 1.0) <= tol ? 1 : 0;
            }
        }
    }
    return kernel;
}

RadonTable radon(const PhaseTable& w) {
    long long d = w.d;
    std::vector<std::uint8_t> kernel = lambda_kernel(d);
    long long rows = d * (d + 1), cols = d * d;
    RadonTable r;
    r.d = d;
    r.values.assign(static_cast<size_t>(rows), 0.0);
    for (long long a = 0; a < rows; ++a) {
        double s = 0.0;
        for (long long j = 0; j < cols; ++j)
            if (kernel[static_cast<size_t>(a * cols + j)]) s += w.values[static_cast<size_t>(j)];
        r.values[static_cast<size_t>(a)] = s;
    }
    return r;
}

NegativityWitness negativity_witness(long long d, SeededRng& rng, double threshold,
                                     long long max_draws) {
    for (long long k = 1; k <= max_draws; ++k) {
        Vec psi = rng.random_state(d);
        PhaseTable w = wigner(DensityMatrix::pure(psi));
        if (w.min() < threshold) return {psi, w.min(), k};
    }
    throw std::domain_error("no phase-space negativity found within " +
                            std::to_string(max_draws) + " draws");
}

}  // namespace mubgeo
