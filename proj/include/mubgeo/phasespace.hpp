#pragma once

// Phase space built on the line operators: a state maps to the d x d
// real table W(m-ddot, m0) = (1/d) tr(rho L_{m-ddot,m0}), which sums to
// one, reproduces expectation values through tr(rho A) = sum W * tr(A L),
// and can dip negative (the quasi-probability witness).  Summing W along
// the d lines through a phase-space point alpha = (m, b) -- the 0/1
// kernel Lambda -- returns the Born probability <m;b|rho|m;b>: the Radon
// transform of the table.

#include <cstdint>
#include <vector>

#include "mubgeo/basis_label.hpp"
#include "mubgeo/linalg.hpp"
#include "mubgeo/rng.hpp"

namespace mubgeo {

struct PhaseTable {
    long long d = 0;
    std::vector<double> values;  // row-major, m_ddot * d + m0

    double& at(long long m_ddot, long long m0) {
        return values[static_cast<size_t>(m_ddot * d + m0)];
    }
    double at(long long m_ddot, long long m0) const {
        return values[static_cast<size_t>(m_ddot * d + m0)];
    }
    double sum() const;
    double min() const;
};

struct RadonTable {
    long long d = 0;
    std::vector<double> values;  // column-major over bases: CB first, then residues; m ascending

    static long long index(long long d, long long m, const BasisLabel& b) {
        long long col = b.is_cb() ? 0 : 1 + b.residue().value();
        return col * d + m;
    }
    double at(long long m, const BasisLabel& b) const {
        return values[static_cast<size_t>(index(d, m, b))];
    }
};

// Validated density matrix: Hermitian within tol, unit trace within tol,
// eigenvalues above -psd_floor.  Violations throw std::invalid_argument
// naming the broken property.
class DensityMatrix {
public:
    static DensityMatrix from_matrix(Mat rho, double tol = 1e-10, double psd_floor = 1e-9);
    static DensityMatrix pure(const Vec& state);

    const Mat& matrix() const { return rho_; }
    long long dim() const { return rho_.dim(); }

private:
    explicit DensityMatrix(Mat rho) : rho_(std::move(rho)) {}
    Mat rho_;
};

PhaseTable wigner(const DensityMatrix& rho);

// The same map applied to an arbitrary operator: Q(m-ddot, m0) = (1/d) tr(Q L).
PhaseTable general_map(const Mat& q);

// Lambda_{alpha,j} = tr(S_alpha L_j), verified to sit on {0,1} within tol
// and returned as bits.  Rows run over phase-space points in the
// canonical column-major order (CB column first), columns over lines
// (m_ddot major).  Equals the dual-affine-plane membership matrix.
std::vector<std::uint8_t> lambda_kernel(long long d, double tol = 1e-9);

// R[W](m, b) = sum_j W_j Lambda_{(m,b),j}.
RadonTable radon(const PhaseTable& w);

struct NegativityWitness {
    Vec state;
    double min_value;
    long long draws;
};

// Draws seeded random pure states until one has a phase-space cell below
// the threshold; throws std::domain_error if the budget is exhausted.
NegativityWitness negativity_witness(long long d, SeededRng& rng, double threshold = -1e-6,
                                     long long max_draws = 10000);

}  // namespace mubgeo
