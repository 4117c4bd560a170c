#pragma once

// Finite plane geometries over F_d for odd prime d:
//
//   APG   affine plane        nu = d^2       B = d(d+1)   k_L = d    r_p = d+1
//   DAPG  dual affine plane   nu = d(d+1)    B = d^2      k_L = d+1  r_p = d
//   FPP   projective plane    nu = B = d^2+d+1             k_L = r_p = d+1
//
// APG lines are y = r x + s plus the d verticals x = s.  DAPG points are
// (m, b) with b ranging over the d+1 basis labels; the line (m-ddot, m0)
// passes through m(b) = m0 + b*m-ddot - b/2 for residue b and through
// m(CB) = m-ddot.  The axiom checkers work from the membership matrix
// alone, so mutated or hand-built structures can be checked too.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mubgeo/basis_label.hpp"
#include "mubgeo/modfield.hpp"

namespace mubgeo {

enum class GeometryKind { APG, DAPG, FPP };

std::string kind_name(GeometryKind kind);
GeometryKind parse_kind(const std::string& name);  // "apg" | "dapg" | "fpp"

struct ApgPoint {
    long long x, y;
};

struct ApgLine {
    bool vertical;   // vertical: x = s, slope unused
    long long r, s;  // slanted: y = r x + s
};

struct DapgPoint {
    long long m;
    BasisLabel b;
};

struct DapgLine {
    long long m_ddot, m0;
};

struct Incidence {
    GeometryKind kind;
    long long d = 0;
    long long num_points = 0;
    long long num_lines = 0;
    std::vector<std::uint8_t> membership;  // row-major: point index * num_lines + line index

    // Coordinate labels, filled by the builders (empty for FPP and for
    // raw structures; the checkers never need them).
    std::vector<ApgPoint> apg_points;
    std::vector<ApgLine> apg_lines;
    std::vector<DapgPoint> dapg_points;
    std::vector<DapgLine> dapg_lines;

    bool incident(long long p, long long l) const {
        return membership[static_cast<size_t>(p * num_lines + l)] != 0;
    }
    void set_incident(long long p, long long l, bool on) {
        membership[static_cast<size_t>(p * num_lines + l)] = on ? 1 : 0;
    }

    std::vector<long long> line_points(long long l) const;
    std::vector<long long> point_lines(long long p) const;

    // Uniform points-per-line / lines-per-point.  Throw if non-uniform.
    long long k_line() const;
    long long r_point() const;
};

// Canonical index helpers (documented orders; see README).
long long apg_point_index(long long d, long long x, long long y);       // x*d + y
long long apg_slant_index(long long d, long long r, long long s);       // r*d + s
long long apg_vertical_index(long long d, long long s);                 // d^2 + s
long long dapg_point_index(long long d, long long m, const BasisLabel& b);  // column-major, CB first
long long dapg_line_index(long long d, long long m_ddot, long long m0);    // m_ddot*d + m0

Incidence build_apg(long long d);
Incidence build_dapg(long long d);

// Completion to the projective plane: APG gains one point per pencil of
// parallel lines plus the line at infinity; DAPG gains one line per
// pencil of unconnected points plus the point common to those lines.
// Original points/lines keep their indices; added ones follow in pencil
// order.
Incidence complete_to_fpp(const Incidence& g);

// Deleting one line and all its points from an FPP leaves an affine
// plane (the inverse of APG completion); its dual presentation is the
// dual affine plane.  Returned without coordinate labels.
Incidence remove_line_and_points(const Incidence& g, long long line_index);

// Role swap: points become lines and vice versa (membership transpose).
// APG and DAPG exchange kinds; FPP is self-dual.  Labels are dropped.
Incidence dual_incidence(const Incidence& g);

struct AxiomCheck {
    std::string name;
    bool pass;
    std::string witness;  // set when pass is false
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const;
};

// Exhaustive verification of the axiom set matching g.kind:
// lambda1, lambda2, A for APG; their duals for DAPG;
// lambda1, lambda2, P1, P2 for FPP.
AxiomReport check_axioms(const Incidence& g);

// Pencil partition: parallel classes of lines for APG, unconnectedness
// classes of points for DAPG (transitivity of the relation is verified,
// as are the class count d+1 and class size d).  FPP has no pencils.
std::vector<std::vector<long long>> pencils(const Incidence& g);

// Two ways of counting incidences: (sum over lines of points-per-line,
// sum over points of lines-per-point).
std::pair<long long, long long> counting_identity(const Incidence& g);

// Parameter deduction for a linear space with nu = d^2 points and k_L = d
// points per line (d odd prime): returns (B, r_p) = (d(d+1), d+1).
std::pair<long long, long long> deduce_parameters(long long nu, long long k_l);

}  // namespace mubgeo
