#include "mubgeo/twoparticle.hpp"

#include <cmath>
#include <stdexcept>

#include "mubgeo/mub.hpp"

namespace mubgeo {

TwoParticleState::TwoParticleState(long long dim) : d(dim) {
    if (!check_odd_prime(dim)) {
        throw std::invalid_argument("TwoParticleState: dimension must be an odd prime");
    }
    amp.assign(static_cast<size_t>(dim * dim), cplx(0.0, 0.0));
}

double TwoParticleState::norm() const {
    double s = 0.0;
    for (const cplx& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

TwoParticleState& TwoParticleState::normalize() {
    double n = norm();
    if (n == 0.0) throw std::domain_error("TwoParticleState: cannot normalize zero state");
    for (cplx& a : amp) a /= n;
    return *this;
}

cplx tp_inner(const TwoParticleState& u, const TwoParticleState& v) {
    if (u.d != v.d) throw std::invalid_argument("tp_inner: dimension mismatch");
    cplx s(0.0, 0.0);
    for (size_t i = 0; i < u.amp.size(); ++i) s += std::conj(u.amp[i]) * v.amp[i];
    return s;
}

CollectiveCoords collective_map(const FieldElement& n1, const FieldElement& n2) {
    return CollectiveCoords{(n1 - n2).half(), (n1 + n2).half()};
}

std::pair<FieldElement, FieldElement> inverse_map(const CollectiveCoords& cc) {
    return {cc.n_r + cc.n_c, cc.n_c - cc.n_r};
}

TwoParticleState from_collective(const Vec& c_state, const Vec& r_state) {
    if (c_state.dim() != r_state.dim()) {
        throw std::invalid_argument("from_collective: register dimensions differ");
    }
    long long d = static_cast<long long>(c_state.dim());
    TwoParticleState out(d);
    for (long long n1 = 0; n1 < d; ++n1) {
        for (long long n2 = 0; n2 < d; ++n2) {
            CollectiveCoords cc = collective_map(fe(n1, d), fe(n2, d));
            out.at(n1, n2) = c_state[static_cast<size_t>(cc.n_c.value())] *
                             r_state[static_cast<size_t>(cc.n_r.value())];
        }
    }
    return out;
}

TwoParticleState apply_xc(const TwoParticleState& s, long long power) {
    TwoParticleState out(s.d);
    for (long long n1 = 0; n1 < s.d; ++n1) {
        for (long long n2 = 0; n2 < s.d; ++n2) {
            FieldElement src1 = fe(n1, s.d) - fe(power, s.d);
            FieldElement src2 = fe(n2, s.d) - fe(power, s.d);
            out.at(n1, n2) = s.at(src1.value(), src2.value());
        }
    }
    return out;
}

TwoParticleState apply_zr(const TwoParticleState& s, long long power) {
    OmegaTable omega(s.d);
    TwoParticleState out(s.d);
    for (long long n1 = 0; n1 < s.d; ++n1) {
        for (long long n2 = 0; n2 < s.d; ++n2) {
            FieldElement n_r = (fe(n1, s.d) - fe(n2, s.d)).half();
            out.at(n1, n2) = omega.omega(fe(power, s.d) * n_r) * s.at(n1, n2);
        }
    }
    return out;
}

LineState line_state(const FieldElement& m_ddot, const FieldElement& m0) {
    long long d = m_ddot.modulus();
    if (m0.modulus() != d) throw std::invalid_argument("line_state: modulus mismatch");
    OmegaTable omega(d);
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    TwoParticleState v(d);
    for (long long n1 = 0; n1 < d; ++n1) {
        FieldElement n2 = m_ddot + m_ddot - fe(n1, d);
        FieldElement e = -(fe(n1, d) - n2) * m0;
        v.at(n1, n2.value()) = scale * omega.omega(e);
    }
    return LineState{m_ddot, m0, std::move(v)};
}

LineState conjugate_line_state(const FieldElement& m0, const FieldElement& m_ddot) {
    long long d = m0.modulus();
    if (m_ddot.modulus() != d) {
        throw std::invalid_argument("conjugate_line_state: modulus mismatch");
    }
    OmegaTable omega(d);
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    TwoParticleState v(d);
    for (long long n2 = 0; n2 < d; ++n2) {
        FieldElement n1 = fe(n2, d) + m_ddot + m_ddot;
        FieldElement e = -m0 * (n1 + fe(n2, d));
        v.at(n1.value(), n2) = scale * omega.omega(e);
    }
    return LineState{m_ddot, m0, std::move(v)};
}

TwoParticleState universal_state(const BasisLabel& b) {
    long long d = b.d();
    double scale = 1.0 / std::sqrt(static_cast<double>(d));
    TwoParticleState out(d);
    for (long long m = 0; m < d; ++m) {
        MubLabel lab{b, fe(m, d)};
        MubLabel tlab = tilde_map(lab);
        Vec u = mub_state(lab.b, lab.m);
        Vec w = mub_state(tlab.b, tlab.m);
        for (long long n1 = 0; n1 < d; ++n1) {
            for (long long n2 = 0; n2 < d; ++n2) {
                out.at(n1, n2) +=
                    scale * u[n1] * w[n2];
            }
        }
    }
    return out;
}

Mat reduced_density_first(const TwoParticleState& s) {
    Mat rho(s.d);
    for (long long i = 0; i < s.d; ++i) {
        for (long long j = 0; j < s.d; ++j) {
            cplx acc(0.0, 0.0);
            for (long long k = 0; k < s.d; ++k) {
                acc += s.at(i, k) * std::conj(s.at(j, k));
            }
            rho.at(i, j) = acc;
        }
    }
    return rho;
}

Mat reduced_density_second(const TwoParticleState& s) {
    Mat rho(s.d);
    for (long long i = 0; i < s.d; ++i) {
        for (long long j = 0; j < s.d; ++j) {
            cplx acc(0.0, 0.0);
            for (long long k = 0; k < s.d; ++k) {
                acc += s.at(k, i) * std::conj(s.at(k, j));
            }
            rho.at(i, j) = acc;
        }
    }
    return rho;
}

namespace {

// (|m;b><m;b| (x) I) |psi>, unnormalized.
TwoParticleState project_first(const TwoParticleState& psi, const BasisLabel& b,
                               const FieldElement& m) {
    long long d = psi.d;
    Vec s = mub_state(b, m);
    TwoParticleState out(d);
    for (long long n2 = 0; n2 < d; ++n2) {
        cplx phi(0.0, 0.0);
        for (long long n1 = 0; n1 < d; ++n1) {
            phi += std::conj(s[n1]) * psi.at(n1, n2);
        }
        for (long long n1 = 0; n1 < d; ++n1) {
            out.at(n1, n2) = s[n1] * phi;
        }
    }
    return out;
}

TwoParticleState collapsed_after_king(long long d, const BasisLabel& b,
                                      const FieldElement& m) {
    TwoParticleState psi = universal_state(BasisLabel::cb(d));
    return project_first(psi, b, m).normalize();
}

long long infer_outcome(long long d, const BasisLabel& b, long long m_ddot,
                        long long m0) {
    if (b.is_cb()) return m_ddot;
    FieldElement mhat = fe(m0, d) + b.residue() * fe(m_ddot, d) - b.residue().half();
    return mhat.value();
}

}  // namespace

std::vector<double> king_outcome_probabilities(long long d, const BasisLabel& b) {
    TwoParticleState psi = universal_state(BasisLabel::cb(d));
    std::vector<double> probs(static_cast<size_t>(d));
    for (long long m = 0; m < d; ++m) {
        TwoParticleState proj = project_first(psi, b, fe(m, d));
        double n = proj.norm();
        probs[static_cast<size_t>(m)] = n * n;
    }
    return probs;
}

Transcript mean_king_round(long long d, const BasisLabel& b, SeededRng& rng) {
    std::vector<double> king_probs = king_outcome_probabilities(d, b);
    long long m = rng.sample_discrete(king_probs);
    TwoParticleState collapsed = collapsed_after_king(d, b, fe(m, d));

    std::vector<double> alice_probs(static_cast<size_t>(d * d));
    for (long long md = 0; md < d; ++md) {
        for (long long m0 = 0; m0 < d; ++m0) {
            LineState ls = line_state(fe(md, d), fe(m0, d));
            alice_probs[static_cast<size_t>(md * d + m0)] =
                std::norm(tp_inner(ls.vec, collapsed));
        }
    }
    long long j = rng.sample_discrete(alice_probs);
    long long md = j / d, m0 = j % d;

    Transcript t{Protocol::MKP, d, 0, b, m, md, m0, -1, std::nullopt, false, false};
    t.inferred_m = infer_outcome(d, b, md, m0);
    t.correct = (t.inferred_m == m);
    return t;
}

Transcript tracking_round(long long d, const BasisLabel& b, const FieldElement& m,
                          SeededRng& rng) {
    TwoParticleState collapsed = collapsed_after_king(d, b, m);

    std::vector<double> alice_probs(static_cast<size_t>(d * d));
    for (long long m0 = 0; m0 < d; ++m0) {
        for (long long md = 0; md < d; ++md) {
            LineState cs = conjugate_line_state(fe(m0, d), fe(md, d));
            alice_probs[static_cast<size_t>(m0 * d + md)] =
                std::norm(tp_inner(cs.vec, collapsed));
        }
    }
    long long j = rng.sample_discrete(alice_probs);
    long long m0 = j / d, md = j % d;

    Transcript t{Protocol::TMK, d, 0, b, m.value(), md, m0, -1, std::nullopt,
                 false, false};
    if (md != 0) {
        FieldElement r = -fe(m0, d) * fe(md, d).inv();
        t.inferred_b = BasisLabel::residue(r);
    } else if (m0 != 0) {
        t.inferred_b = BasisLabel::cb(d);
    } else {
        t.undetermined = true;
    }
    t.correct = t.inferred_b.has_value() && *t.inferred_b == b;
    return t;
}

double tracking_undetermined_probability(long long d, const BasisLabel& b,
                                         const FieldElement& m) {
    TwoParticleState collapsed = collapsed_after_king(d, b, m);
    LineState cs = conjugate_line_state(fe(0, d), fe(0, d));
    return std::norm(tp_inner(cs.vec, collapsed));
}

std::vector<Transcript> run_batch(Protocol protocol, long long d, long long rounds,
                                  std::uint64_t seed) {
    if (rounds < 0) throw std::invalid_argument("run_batch: negative round count");
    SeededRng rng(seed);
    std::vector<BasisLabel> bases = BasisLabel::all(d);
    std::vector<Transcript> out;
    out.reserve(static_cast<size_t>(rounds));
    for (long long k = 0; k < rounds; ++k) {
        const BasisLabel& b = bases[static_cast<size_t>(rng.uniform_index(static_cast<long long>(bases.size())))];
        Transcript t = [&] {
            if (protocol == Protocol::MKP) return mean_king_round(d, b, rng);
            std::vector<double> probs = king_outcome_probabilities(d, b);
            long long m = rng.sample_discrete(probs);
            return tracking_round(d, b, fe(m, d), rng);
        }();
        t.seed = seed;
        out.push_back(std::move(t));
    }
    return out;
}

BatchSummary summarize(const std::vector<Transcript>& transcripts) {
    BatchSummary s;
    s.rounds = static_cast<long long>(transcripts.size());
    for (const Transcript& t : transcripts) {
        if (t.correct) ++s.correct;
        if (t.undetermined) ++s.undetermined;
    }
    s.failure_rate =
        s.rounds == 0 ? 0.0
                      : static_cast<double>(s.rounds - s.correct) /
                            static_cast<double>(s.rounds);
    return s;
}

bool pencil_sum_check(long long d, double tol) {
    for (const BasisLabel& b : BasisLabel::all(d)) {
        Mat sum(d);
        for (long long m = 0; m < d; ++m) {
            sum = sum + projector(b, fe(m, d));
        }
        if (max_abs_diff(sum, Mat::identity(d)) > tol) return false;
    }
    TwoParticleState ref = universal_state(BasisLabel::cb(d));
    for (const BasisLabel& b : BasisLabel::all(d)) {
        TwoParticleState u = universal_state(b);
        for (size_t i = 0; i < u.amp.size(); ++i) {
            if (std::abs(u.amp[i] - ref.amp[i]) > tol) return false;
        }
    }
    return true;
}

}  // namespace mubgeo
