#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "mubgeo/mub.hpp"

using namespace mubgeo;

namespace {

bool close(const cplx& a, const cplx& b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("computational basis states are unit vectors") {
    for (long long d : {3LL, 5LL}) {
        for (long long m = 0; m < d; ++m) {
            Vec v = mub_state(BasisLabel::cb(d), fe(m, d));
            for (long long n = 0; n < d; ++n) {
                CHECK(close(v[n], n == m ? cplx{1.0, 0.0} : cplx{0.0, 0.0}));
            }
        }
    }
}

TEST_CASE("worked d=3 states") {
    OmegaTable om(3);
    double r = 1.0 / std::sqrt(3.0);

    Vec flat = mub_state(BasisLabel::residue(0, 3), fe(0, 3));
    for (long long n = 0; n < 3; ++n) CHECK(close(flat[n], r));

    // Basis b=0 is the plain Fourier family: components omega^{-nm}.
    Vec f1 = mub_state(BasisLabel::residue(0, 3), fe(1, 3));
    CHECK(close(f1[0], r));
    CHECK(close(f1[1], r * om.omega(2)));
    CHECK(close(f1[2], r * om.omega(1)));
}

TEST_CASE("every basis state is normalized") {
    for (long long d : {3LL, 5LL, 7LL}) {
        for (const BasisLabel& b : BasisLabel::all(d)) {
            for (long long m = 0; m < d; ++m) {
                CHECK(std::abs(mub_state(b, fe(m, d)).norm() - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("projector matches its closed-form matrix element") {
    for (long long d : {3LL, 5LL}) {
        for (const BasisLabel& b : BasisLabel::all(d)) {
            for (long long m = 0; m < d; ++m) {
                Mat p = projector(b, fe(m, d));
                CHECK(std::abs(p.trace() - cplx{1.0, 0.0}) < 1e-12);
                CHECK(p.is_hermitian(1e-12));
                for (long long n = 0; n < d; ++n) {
                    for (long long np = 0; np < d; ++np) {
                        CHECK(close(p.at(n, np), projector_entry(b, fe(m, d), n, np), 1e-10));
                    }
                }
            }
        }
    }
}

TEST_CASE("worked d=3 projector entries") {
    OmegaTable om(3);
    // P(0, CB) = diag(1, 0, 0).
    Mat pcb = projector(BasisLabel::cb(3), fe(0, 3));
    for (long long n = 0; n < 3; ++n)
        for (long long np = 0; np < 3; ++np)
            CHECK(close(pcb.at(n, np), (n == 0 && np == 0) ? cplx{1.0, 0.0} : cplx{0.0, 0.0}));

    // P(m=1, b=0) entry (0,1) is omega/3.
    CHECK(close(projector_entry(BasisLabel::residue(0, 3), fe(1, 3), 0, 1),
                om.omega(1) / 3.0, 1e-12));
    CHECK(close(projector_entry(BasisLabel::residue(0, 3), fe(1, 3), 1, 0),
                om.omega(2) / 3.0, 1e-12));

    CHECK_THROWS_AS(projector_entry(BasisLabel::cb(3), fe(0, 3), 3, 0),
                    std::invalid_argument);
}

TEST_CASE("unbiasedness holds exhaustively") {
    for (long long d : {3LL, 5LL, 7LL, 11LL}) {
        CHECK(unbiasedness_check(d) < 1e-10);
    }
}

TEST_CASE("cross-basis overlap count at d=3") {
    // 4 bases at d=3 give 6 unordered basis pairs of 9 state pairs each:
    // 54 cross-basis overlaps, all with |<u|v>|^2 = 1/3.
    long long d = 3;
    std::vector<BasisLabel> labels = BasisLabel::all(d);
    long long cross = 0;
    for (size_t bi = 0; bi < labels.size(); ++bi)
        for (size_t bj = bi + 1; bj < labels.size(); ++bj)
            for (long long mi = 0; mi < d; ++mi)
                for (long long mj = 0; mj < d; ++mj) {
                    double p = std::norm(inner(mub_state(labels[bi], fe(mi, d)),
                                               mub_state(labels[bj], fe(mj, d))));
                    CHECK(std::abs(p - 1.0 / 3.0) < 1e-12);
                    ++cross;
                }
    CHECK(cross == 54);
}

TEST_CASE("shift and clock operators") {
    OmegaTable om(3);
    Mat z = z_op(3), x = x_op(3);
    Vec e1(3);
    e1[1] = 1.0;
    Vec ze1 = apply(z, e1);
    CHECK(close(ze1[1], om.omega(1)));

    Vec elast(3);
    elast[2] = 1.0;
    Vec xe = apply(x, elast);
    CHECK(close(xe[0], cplx{1.0, 0.0}));

    // ZX = omega XZ in this convention.
    Mat lhs = z * x;
    Mat rhs = (x * z).scaled(om.omega(1));
    CHECK(max_abs_diff(lhs, rhs) < 1e-14);
}

TEST_CASE("each basis diagonalizes its unitary: XZ^b on |m;b> gives omega^m") {
    for (long long d : {3LL, 5LL}) {
        OmegaTable om(d);
        Mat x = x_op(d), z = z_op(d);
        for (const BasisLabel& b : BasisLabel::all(d)) {
            Mat op = b.is_cb() ? z : [&] {
                Mat acc = x;
                for (long long k = 0; k < b.residue().value(); ++k) acc = acc * z;
                return acc;
            }();
            for (long long m = 0; m < d; ++m) {
                Vec v = mub_state(b, fe(m, d));
                Vec lv = apply(op, v);
                for (long long n = 0; n < d; ++n) {
                    CHECK(close(lv[n], om.omega(m) * v[n], 1e-12));
                }
            }
        }
    }
}

TEST_CASE("conjugation closes onto the tilde partner") {
    for (long long d : {3LL, 5LL}) {
        for (const BasisLabel& b : BasisLabel::all(d)) {
            for (long long m = 0; m < d; ++m) {
                MubLabel t = tilde_map({b, fe(m, d)});
                Vec v = mub_state(b, fe(m, d));
                Vec w = mub_state(t.b, t.m);
                for (long long n = 0; n < d; ++n) {
                    CHECK(close(std::conj(v[n]), w[n], 1e-12));
                }
            }
        }
    }
}

TEST_CASE("tilde map worked values") {
    CHECK(tilde_map({BasisLabel::cb(3), fe(1, 3)}) == MubLabel{BasisLabel::cb(3), fe(1, 3)});
    CHECK(tilde_map({BasisLabel::residue(1, 3), fe(1, 3)}) ==
          MubLabel{BasisLabel::residue(2, 3), fe(2, 3)});
    CHECK(tilde_map({BasisLabel::residue(0, 3), fe(0, 3)}) ==
          MubLabel{BasisLabel::residue(0, 3), fe(0, 3)});
    // Involution everywhere.
    for (const BasisLabel& b : BasisLabel::all(5)) {
        for (long long m = 0; m < 5; ++m) {
            MubLabel lab{b, fe(m, 5)};
            CHECK(tilde_map(tilde_map(lab)) == lab);
        }
    }
}

TEST_CASE("basis projectors resolve the identity") {
    for (long long d : {3LL, 7LL}) {
        for (const BasisLabel& b : BasisLabel::all(d)) {
            Mat sum(d);
            for (long long m = 0; m < d; ++m) sum = sum + projector(b, fe(m, d));
            CHECK(max_abs_diff(sum, Mat::identity(d)) < 1e-12);
        }
    }
}
