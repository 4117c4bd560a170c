#pragma once

// Two d-dimensional particles and the maximally entangled line states.
//
// Collective coordinates n_r = (n1 - n2)/2, n_c = (n1 + n2)/2 factorize
// the line state of line (m-ddot, m0): its amplitude at (n, n') is
// delta_{n+n', 2 m-ddot} omega^{-(n-n') m0} / sqrt(d), i.e. the c-register
// holds the computational state m-ddot and the r-register the Fourier
// state labelled 2 m0.  Swapping the register roles gives the conjugate
// basis.  The universal state sum_m |m;b>|m~;b~>/sqrt(d) is independent
// of b and equals sum_n |n>|n>/sqrt(d).
//
// Protocols: a King measures particle 1 in a basis of his choice; the
// round then samples Alice's control measurement from exact Born
// amplitudes.  Measuring the line-state basis lets her retrodict the
// King's outcome once the basis is announced (the retrodiction game);
// measuring the conjugate basis lets her deduce which basis he used,
// except when her outcome is (0,0).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mubgeo/basis_label.hpp"
#include "mubgeo/linalg.hpp"
#include "mubgeo/modfield.hpp"
#include "mubgeo/rng.hpp"

namespace mubgeo {

struct TwoParticleState {
    long long d = 0;
    std::vector<cplx> amp;  // particle-1-major: index n1 * d + n2

    explicit TwoParticleState(long long dim);

    cplx& at(long long n1, long long n2) { return amp[static_cast<size_t>(n1 * d + n2)]; }
    const cplx& at(long long n1, long long n2) const {
        return amp[static_cast<size_t>(n1 * d + n2)];
    }

    double norm() const;
    TwoParticleState& normalize();
};

cplx tp_inner(const TwoParticleState& u, const TwoParticleState& v);

struct CollectiveCoords {
    FieldElement n_r, n_c;
};

CollectiveCoords collective_map(const FieldElement& n1, const FieldElement& n2);
std::pair<FieldElement, FieldElement> inverse_map(const CollectiveCoords& cc);  // (n1, n2)

// Product state in the collective registers, pulled back to particle
// coordinates: amp(n1,n2) = c_state[n_c] * r_state[n_r].
TwoParticleState from_collective(const Vec& c_state, const Vec& r_state);

// Collective shifts: X_c = X (x) X and Z_r with Z_r|n1,n2> =
// omega^{(n1-n2)/2}|n1,n2>; powers may be negative.
TwoParticleState apply_xc(const TwoParticleState& s, long long power);
TwoParticleState apply_zr(const TwoParticleState& s, long long power);

struct LineState {
    FieldElement m_ddot, m0;
    TwoParticleState vec;
};

LineState line_state(const FieldElement& m_ddot, const FieldElement& m0);

// Conjugate-basis state |2 m0; 0>_c (x) |m-ddot; CB>_r; the (0,0) member
// coincides with the universal state.
LineState conjugate_line_state(const FieldElement& m0, const FieldElement& m_ddot);

TwoParticleState universal_state(const BasisLabel& b);

Mat reduced_density_first(const TwoParticleState& s);
Mat reduced_density_second(const TwoParticleState& s);

// Born probabilities of the King's outcomes when measuring particle 1 of
// the universal state in basis b (uniform, but computed, not assumed).
std::vector<double> king_outcome_probabilities(long long d, const BasisLabel& b);

enum class Protocol { MKP, TMK };

struct Transcript {
    Protocol protocol;
    long long d;
    std::uint64_t seed = 0;  // batch seed, stamped by the batch runner
    BasisLabel b;            // King's basis
    long long m = 0;         // King's outcome
    long long alice_m_ddot = 0, alice_m0 = 0;
    long long inferred_m = -1;             // retrodiction protocol
    std::optional<BasisLabel> inferred_b;  // tracking protocol; empty = undetermined
    bool undetermined = false;
    bool correct = false;
};

// One round: prepare the universal state, sample the King's outcome from
// the Born rule in basis b, sample Alice's line-basis outcome from the
// exact amplitudes, infer m from the line through (m, b).
Transcript mean_king_round(long long d, const BasisLabel& b, SeededRng& rng);

// One tracking round at a fixed King outcome m: Alice measures the
// conjugate basis; inference is b = -m0'/m-ddot' for m-ddot' != 0, CB for
// m-ddot' = 0 != m0', undetermined for the (0,0) outcome.
Transcript tracking_round(long long d, const BasisLabel& b, const FieldElement& m,
                          SeededRng& rng);

// Exact probability of the undetermined (0,0) outcome, from amplitudes.
double tracking_undetermined_probability(long long d, const BasisLabel& b,
                                         const FieldElement& m);

struct BatchSummary {
    long long rounds = 0, correct = 0, undetermined = 0;
    double failure_rate = 0.0;
};

// Runs `rounds` rounds with one seeded generator; the King's basis is
// drawn uniformly each round and, for tracking, his outcome from the
// computed Born probabilities.
std::vector<Transcript> run_batch(Protocol protocol, long long d, long long rounds,
                                  std::uint64_t seed);
BatchSummary summarize(const std::vector<Transcript>& transcripts);

// sum_m P(m,b) = I for every b, and the universal state is b-independent.
bool pencil_sum_check(long long d, double tol = 1e-10);

}  // namespace mubgeo
