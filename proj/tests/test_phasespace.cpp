#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mubgeo/incidence.hpp"
#include "mubgeo/lineops.hpp"
#include "mubgeo/mub.hpp"
#include "mubgeo/phasespace.hpp"
#include "mubgeo/rng.hpp"

using namespace mubgeo;

namespace {

DensityMatrix random_density(long long d, SeededRng& rng, int terms = 3) {
    Mat rho(d);
    std::vector<double> w(static_cast<size_t>(terms));
    double tot = 0.0;
    for (auto& x : w) {
        x = rng.uniform01() + 1e-3;
        tot += x;
    }
    for (int k = 0; k < terms; ++k) {
        Vec psi = rng.random_state(d);
        Mat p = outer(psi, psi);
        rho = rho + p.scaled(w[static_cast<size_t>(k)] / tot);
    }
    return DensityMatrix::from_matrix(rho);
}

}  // namespace

TEST_CASE("table of a computational state occupies one row") {
    Vec e0(3);
    e0[0] = 1.0;
    PhaseTable w = wigner(DensityMatrix::pure(e0));
    for (long long md = 0; md < 3; ++md)
        for (long long m0 = 0; m0 < 3; ++m0) {
            double want = md == 0 ? 1.0 / 3.0 : 0.0;
            CHECK(std::abs(w.at(md, m0) - want) < 1e-12);
        }
}

TEST_CASE("maximally mixed state is flat at 1/d^2") {
    for (long long d : {3LL, 5LL}) {
        Mat rho = Mat::identity(d).scaled(1.0 / static_cast<double>(d));
        PhaseTable w = wigner(DensityMatrix::from_matrix(rho));
        for (double v : w.values) CHECK(std::abs(v - 1.0 / static_cast<double>(d * d)) < 1e-12);
    }
}

TEST_CASE("tables are normalized, real, and bounded below by -1/d") {
    for (long long d : {3LL, 5LL, 7LL}) {
        SeededRng rng(101 + static_cast<std::uint64_t>(d));
        std::vector<Mat> ops = all_line_operators(d);
        for (int k = 0; k < 12; ++k) {
            DensityMatrix rho = random_density(d, rng);
            PhaseTable w = wigner(rho);
            CHECK(std::abs(w.sum() - 1.0) < 1e-9);
            CHECK(w.min() >= -1.0 / static_cast<double>(d) - 1e-12);
            for (const Mat& l : ops) {
                CHECK(std::abs(trace_product(rho.matrix(), l).imag()) < 1e-10);
            }
        }
    }
}

TEST_CASE("overlap formula tr(rho1 rho2) = d sum W1 W2") {
    for (long long d : {3LL, 5LL}) {
        SeededRng rng(202 + static_cast<std::uint64_t>(d));
        for (int k = 0; k < 8; ++k) {
            DensityMatrix r1 = random_density(d, rng);
            DensityMatrix r2 = random_density(d, rng);
            PhaseTable w1 = wigner(r1), w2 = wigner(r2);
            double dot = 0.0;
            for (size_t j = 0; j < w1.values.size(); ++j) dot += w1.values[j] * w2.values[j];
            double want = trace_product(r1.matrix(), r2.matrix()).real();
            CHECK(std::abs(static_cast<double>(d) * dot - want) < 1e-9);
        }
    }
}

TEST_CASE("orthogonal pure states have orthogonal tables") {
    for (long long d : {3LL, 5LL}) {
        Vec u(d), v(d);
        u[0] = 1.0;
        v[1] = 1.0;
        PhaseTable w1 = wigner(DensityMatrix::pure(u));
        PhaseTable w2 = wigner(DensityMatrix::pure(v));
        double dot = 0.0;
        for (size_t j = 0; j < w1.values.size(); ++j) dot += w1.values[j] * w2.values[j];
        CHECK(std::abs(dot) < 1e-10);
    }
}

TEST_CASE("mapping a line operator gives a unit cell") {
    long long d = 3;
    std::vector<Mat> ops = all_line_operators(d);
    for (size_t k = 0; k < ops.size(); ++k) {
        PhaseTable t = general_map(ops[k]);
        for (size_t j = 0; j < t.values.size(); ++j) {
            CHECK(std::abs(t.values[j] - (j == k ? 1.0 : 0.0)) < 1e-10);
        }
    }
}

TEST_CASE("kernel equals the dual-affine-plane membership matrix") {
    for (long long d : {3LL, 5LL}) {
        std::vector<std::uint8_t> kernel = lambda_kernel(d);
        Incidence g = build_dapg(d);
        REQUIRE(kernel.size() == g.membership.size());
        for (size_t i = 0; i < kernel.size(); ++i) CHECK(kernel[i] == g.membership[i]);
    }
}

TEST_CASE("summing the table along lines through a point returns Born probabilities") {
    for (long long d : {3LL, 5LL, 7LL}) {
        SeededRng rng(303 + static_cast<std::uint64_t>(d));
        for (int k = 0; k < 6; ++k) {
            DensityMatrix rho = random_density(d, rng);
            RadonTable r = radon(wigner(rho));
            for (const BasisLabel& b : BasisLabel::all(d)) {
                for (long long m = 0; m < d; ++m) {
                    double born =
                        trace_product(rho.matrix(), projector(b, fe(m, d))).real();
                    CHECK(std::abs(r.at(m, b) - born) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("radon of a basis projector is sharp in its own basis, flat elsewhere") {
    long long d = 3;
    DensityMatrix rho = DensityMatrix::from_matrix(projector(BasisLabel::cb(d), fe(0, d)));
    RadonTable r = radon(wigner(rho));
    CHECK(std::abs(r.at(0, BasisLabel::cb(d)) - 1.0) < 1e-10);
    CHECK(std::abs(r.at(1, BasisLabel::cb(d))) < 1e-10);
    CHECK(std::abs(r.at(2, BasisLabel::cb(d))) < 1e-10);
    for (long long b = 0; b < d; ++b)
        for (long long m = 0; m < d; ++m)
            CHECK(std::abs(r.at(m, BasisLabel::residue(b, d)) - 1.0 / 3.0) < 1e-10);
}

TEST_CASE("conjugation by the shift operator translates the table") {
    long long d = 5;
    SeededRng rng(404);
    DensityMatrix rho = random_density(d, rng);
    Mat x = x_op(d);
    Mat shifted = x * rho.matrix() * x.adjoint();
    PhaseTable w0 = wigner(rho);
    PhaseTable w1 = wigner(DensityMatrix::from_matrix(shifted));
    for (long long md = 0; md < d; ++md)
        for (long long m0 = 0; m0 < d; ++m0)
            CHECK(std::abs(w1.at((md + 1) % d, m0) - w0.at(md, m0)) < 1e-10);
}

TEST_CASE("density validation rejects broken inputs") {
    Mat bad(3);
    bad.at(0, 1) = cplx{0.5, 0.0};
    bad.at(0, 0) = 1.0;
    CHECK_THROWS_AS(DensityMatrix::from_matrix(bad), std::invalid_argument);

    Mat scaled = Mat::identity(3).scaled(0.5);
    CHECK_THROWS_AS(DensityMatrix::from_matrix(scaled), std::invalid_argument);

    Mat indef = Mat::identity(3);
    indef.at(0, 0) = -0.5;
    indef.at(1, 1) = 1.5;
    CHECK_THROWS_AS(DensityMatrix::from_matrix(indef), std::invalid_argument);

    CHECK_THROWS_AS(DensityMatrix::from_matrix(Mat::identity(4).scaled(0.25)),
                    std::invalid_argument);
}

TEST_CASE("pure() normalizes its input") {
    Vec v(3);
    v[0] = cplx{2.0, 0.0};
    v[2] = cplx{0.0, 2.0};
    DensityMatrix rho = DensityMatrix::pure(v);
    CHECK(std::abs(rho.matrix().trace() - cplx{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(rho.matrix().at(0, 0) - cplx{0.5, 0.0}) < 1e-12);
}

TEST_CASE("negativity witness finds a cell below threshold") {
    for (long long d : {3LL, 5LL, 7LL}) {
        SeededRng rng(505 + static_cast<std::uint64_t>(d));
        NegativityWitness w = negativity_witness(d, rng);
        CHECK(w.min_value < -1e-6);
        CHECK(w.draws >= 1);
        CHECK(w.draws <= 10000);
        // The reported state really produces the reported minimum.
        PhaseTable t = wigner(DensityMatrix::pure(w.state));
        CHECK(std::abs(t.min() - w.min_value) < 1e-12);
    }
}

TEST_CASE("negativity witness reports budget exhaustion") {
    SeededRng rng(606);
    CHECK_THROWS_AS(negativity_witness(3, rng, -10.0, 5), std::domain_error);
}
