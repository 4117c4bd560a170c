#pragma once

// Hermitian line operators attached to the d^2 lines of the dual affine
// plane: L_j = sum of the d+1 basis projectors along line j minus the
// identity.  For the symmetric line family the result has the sparse
// closed form
//     <n|L_{m-ddot,m0}|n'> = delta_{n+n', 2 m-ddot} omega^{-(n-n') m0},
// equivalently a displaced parity X^{m-ddot} Z^{-m0} L_00 Z^{m0} X^{-m-ddot}
// with L_00 |n> = |-n>.  The operators are trace-orthogonal,
// tr(L_j L_j') = d delta_{jj'}, and span operator space: any A equals
// (1/d) sum_j tr(A L_j) L_j.
//
// A line family (r, s) with r != 0 uses lines m(b) = m0 + b c - b/2 with
// CB point m-ddot = r c + s; (1, 0) is the symmetric family, the only one
// whose operators square to the identity.

#include <vector>

#include "mubgeo/linalg.hpp"
#include "mubgeo/modfield.hpp"

namespace mubgeo {

struct LineFamily {
    FieldElement r, s;
};

LineFamily symmetric_family(long long d);  // (r, s) = (1, 0)

struct LineOperator {
    FieldElement m_ddot, m0;
    LineFamily family;
    Mat matrix;
};

// Assembled as the projector sum along the symmetric-family line.
LineOperator line_operator_sum(const FieldElement& m_ddot, const FieldElement& m0);

// Direct sparse fill of the closed form; the canonical constructor.
LineOperator line_operator_closed(const FieldElement& m_ddot, const FieldElement& m0);

// X^{m-ddot} Z^{-m0} L_00 Z^{m0} X^{-m-ddot} built from the Weyl operators.
Mat displaced_parity(const FieldElement& m_ddot, const FieldElement& m0);

// Projector sum along a line of the family (r, s); r = 0 is rejected.
LineOperator general_family_line(const LineFamily& family, const FieldElement& m_ddot,
                                 const FieldElement& m0);

// All d^2 operators of a family, indexed m_ddot * d + m0.
std::vector<Mat> family_operators(long long d, const LineFamily& family);
std::vector<Mat> all_line_operators(long long d);  // symmetric family

// tr(L_j L_j') for a family, row-major over (j, j').
std::vector<double> orthogonality_table(long long d, const LineFamily& family);

// Expansion coefficients c_j = tr(A L_j) over the symmetric family,
// indexed like the operators; reconstruct returns (1/d) sum_j c_j L_j.
std::vector<cplx> expand(const Mat& a);
Mat reconstruct(long long d, const std::vector<cplx>& coeff);

// Phase-space average over the affine line m0 = r m-ddot + s:
// (1/d) sum_{m-ddot} L_{m-ddot, r m-ddot + s}, which collapses to the
// single basis projector P(m = s - b/2, b = -r).
Mat apg_point_operator(const FieldElement& r, const FieldElement& s);

// Vertical-line average (1/d) sum_{m0} L_{s', m0} = |s'><s'|.
Mat apg_vertical_operator(const FieldElement& s_prime);

}  // namespace mubgeo
