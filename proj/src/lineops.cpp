#include "mubgeo/lineops.hpp"

#include <stdexcept>

#include "mubgeo/basis_label.hpp"
#include "mubgeo/mub.hpp"

namespace mubgeo {

namespace {

void require_match(const FieldElement& a, const FieldElement& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("line label residues have different dimensions");
}

// Projector sum along the line with anchor point c in the residue
// columns (m(b) = m0 + b c - b/2) and CB point m_cb, minus the identity.
Mat line_sum(const FieldElement& c, const FieldElement& m_cb, const FieldElement& m0) {
    long long d = c.modulus();
    Mat acc(d);
    for (long long b = 0; b < d; ++b) {
        FieldElement fb(b, d);
        FieldElement m = m0 + fb * c - fb.half();
        acc = acc + projector(BasisLabel::residue(fb), m);
    }
    acc = acc + projector(BasisLabel::cb(d), m_cb);
    return acc - Mat::identity(d);
}

}  // namespace

LineFamily symmetric_family(long long d) {
    return LineFamily{fe(1, d), fe(0, d)};
}

LineOperator line_operator_sum(const FieldElement& m_ddot, const FieldElement& m0) {
    require_match(m_ddot, m0);
    return LineOperator{m_ddot, m0, symmetric_family(m_ddot.modulus()),
                        line_sum(m_ddot, m_ddot, m0)};
}

LineOperator line_operator_closed(const FieldElement& m_ddot, const FieldElement& m0) {
    require_match(m_ddot, m0);
    long long d = m_ddot.modulus();
    OmegaTable om(d);
    Mat l(d);
    for (long long n = 0; n < d; ++n) {
        long long np = ((2 * m_ddot.value() - n) % d + d) % d;
        FieldElement e = -(fe(n, d) - fe(np, d)) * m0;
        l.at(n, np) = om.omega(e);
    }
    return LineOperator{m_ddot, m0, symmetric_family(d), std::move(l)};
}

Mat displaced_parity(const FieldElement& m_ddot, const FieldElement& m0) {
    require_match(m_ddot, m0);
    long long d = m_ddot.modulus();
    OmegaTable om(d);

    Mat flip(d);  // L_00 |n> = |-n>
    for (long long n = 0; n < d; ++n) flip.at(((d - n) % d), n) = 1.0;

    Mat xp(d), xm(d);  // X^{m-ddot} and its inverse
    for (long long n = 0; n < d; ++n) {
        xp.at((n + m_ddot.value()) % d, n) = 1.0;
        xm.at(((n - m_ddot.value()) % d + d) % d, n) = 1.0;
    }
    Mat zm(d), zp(d);  // Z^{-m0} and Z^{m0}
    for (long long n = 0; n < d; ++n) {
        zm.at(n, n) = om.omega(-(m0 * fe(n, d)));
        zp.at(n, n) = om.omega(m0 * fe(n, d));
    }
    return xp * zm * flip * zp * xm;
}

LineOperator general_family_line(const LineFamily& family, const FieldElement& m_ddot,
                                 const FieldElement& m0) {
    require_match(family.r, family.s);
    require_match(family.r, m_ddot);
    require_match(m_ddot, m0);
    if (family.r.value() == 0)
        throw std::domain_error("line family slope r must be nonzero");
    FieldElement c = (m_ddot - family.s) * family.r.inv();
    return LineOperator{m_ddot, m0, family, line_sum(c, m_ddot, m0)};
}

std::vector<Mat> family_operators(long long d, const LineFamily& family) {
    std::vector<Mat> ops;
    ops.reserve(static_cast<size_t>(d * d));
    bool symmetric = family.r.value() == 1 && family.s.value() == 0;
    for (long long md = 0; md < d; ++md)
        for (long long m0 = 0; m0 < d; ++m0) {
            if (symmetric)
                ops.push_back(line_operator_closed(fe(md, d), fe(m0, d)).matrix);
            else
                ops.push_back(general_family_line(family, fe(md, d), fe(m0, d)).matrix);
        }
    return ops;
}

std::vector<Mat> all_line_operators(long long d) {
    return family_operators(d, symmetric_family(d));
}

std::vector<double> orthogonality_table(long long d, const LineFamily& family) {
    std::vector<Mat> ops = family_operators(d, family);
    size_t n = ops.size();
    std::vector<double> table(n * n, 0.0);
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) table[j * n + k] = trace_product(ops[j], ops[k]).real();
    return table;
}

std::vector<cplx> expand(const Mat& a) {
    long long d = a.dim();
    std::vector<Mat> ops = all_line_operators(d);
    std::vector<cplx> coeff(ops.size());
    for (size_t j = 0; j < ops.size(); ++j) coeff[j] = trace_product(a, ops[j]);
    return coeff;
}

Mat reconstruct(long long d, const std::vector<cplx>& coeff) {
    if (static_cast<long long>(coeff.size()) != d * d)
        throw std::invalid_argument("expected d^2 expansion coefficients");
    std::vector<Mat> ops = all_line_operators(d);
    Mat acc(d);
    for (size_t j = 0; j < ops.size(); ++j) acc = acc + ops[j].scaled(coeff[j]);
    return acc.scaled(1.0 / static_cast<double>(d));
}

Mat apg_point_operator(const FieldElement& r, const FieldElement& s) {
    require_match(r, s);
    long long d = r.modulus();
    Mat acc(d);
    for (long long md = 0; md < d; ++md) {
        FieldElement fmd(md, d);
        acc = acc + line_operator_closed(fmd, r * fmd + s).matrix;
    }
    return acc.scaled(1.0 / static_cast<double>(d));
}

Mat apg_vertical_operator(const FieldElement& s_prime) {
    long long d = s_prime.modulus();
    Mat acc(d);
    for (long long m0 = 0; m0 < d; ++m0)
        acc = acc + line_operator_closed(s_prime, fe(m0, d)).matrix;
    return acc.scaled(1.0 / static_cast<double>(d));
}

}  // namespace mubgeo
