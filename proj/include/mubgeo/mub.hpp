#pragma once

// The d+1 mutually unbiased bases of odd prime dimension d.
//
// States of basis b (a residue) have components
//     <n|m;b> = omega^{ (b/2) n(n-1) - n m } / sqrt(d),
// while basis CB is the computational basis itself, |m;CB> = e_m.
// The projector |m;b><m;b| then has the closed-form matrix element
//     <n|P(m,b)|n'> = (1/d) omega^{ (n-n') [ (b/2)(n+n'-1) - m ] }.
// Complex conjugation maps basis members onto members of a partner
// basis: conj<n|m;b> = <n|m~;b~> with (m~, b~) = (-m, -b) and the
// identity on CB.

#include "mubgeo/basis_label.hpp"
#include "mubgeo/linalg.hpp"
#include "mubgeo/modfield.hpp"

namespace mubgeo {

struct MubLabel {
    BasisLabel b;
    FieldElement m;

    bool operator==(const MubLabel& o) const { return b == o.b && m == o.m; }
};

// Normalized basis state |m;b>.
Vec mub_state(const BasisLabel& b, const FieldElement& m);

// |m;b><m;b| assembled from the state.
Mat projector(const BasisLabel& b, const FieldElement& m);

// The closed-form matrix element of P(m,b); for CB this degenerates to
// delta_{n,m} delta_{n',m}.
cplx projector_entry(const BasisLabel& b, const FieldElement& m, long long n, long long np);

// Max deviation over all state pairs from the expected Gram structure:
// same basis |<u|v>|^2 = delta_{uv}, distinct bases |<u|v>|^2 = 1/d.
double unbiasedness_check(long long d);

Mat z_op(long long d);  // Z|n> = omega^n |n>
Mat x_op(long long d);  // X|n> = |n+1 mod d>

// Conjugation partner (m~, b~); an involution, identity on CB.
MubLabel tilde_map(const MubLabel& label);

}  // namespace mubgeo
