// mubgeo: command-line surface over the finite-geometry library.
//
// Subcommands: geometry, mub, lineops, wigner, radon, meanking, selftest.
// Machine output goes to --out when given, otherwise to stdout; human
// readable reports move to stderr whenever machine output occupies
// stdout, so piped output stays parseable.  Exit codes: 0 success,
// 1 invariant failure, 2 usage error, 3 input-data error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mubgeo/incidence.hpp"
#include "mubgeo/json_io.hpp"
#include "mubgeo/lineops.hpp"
#include "mubgeo/modfield.hpp"
#include "mubgeo/mub.hpp"
#include "mubgeo/phasespace.hpp"
#include "mubgeo/rng.hpp"
#include "mubgeo/twoparticle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kUsageError = 2;
constexpr int kDataError = 3;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kUsageError;
}

int data_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kDataError;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        mubgeo::write_text_file(out_path, content);
    }
}

// Reports share stdout only when no machine output is written there.
std::ostream& report_stream(const std::string& out_path) {
    return out_path.empty() ? std::cerr : std::cout;
}

std::optional<std::uint64_t> env_seed() {
    const char* raw = std::getenv("MUBGEO_SEED");
    if (raw == nullptr) return std::nullopt;
    try {
        size_t pos = 0;
        std::uint64_t v = std::stoull(raw, &pos);
        if (pos != std::string(raw).size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("MUBGEO_SEED is not a valid unsigned integer");
    }
}

struct GeometryArgs {
    std::string kind;
    long long d = 0;
    bool check = false;
    std::string out;
};

int cmd_geometry(const GeometryArgs& a) {
    if (!mubgeo::check_odd_prime(a.d)) return usage_error("d must be an odd prime");
    mubgeo::GeometryKind kind;
    try {
        kind = mubgeo::parse_kind(a.kind);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }

    mubgeo::Incidence g = [&] {
        switch (kind) {
            case mubgeo::GeometryKind::APG: return mubgeo::build_apg(a.d);
            case mubgeo::GeometryKind::DAPG: return mubgeo::build_dapg(a.d);
            default: return mubgeo::complete_to_fpp(mubgeo::build_dapg(a.d));
        }
    }();

    emit(a.out, mubgeo::incidence_to_json(g).dump(2) + "\n");

    if (!a.check) return kOk;
    std::ostream& rep = report_stream(a.out);
    mubgeo::AxiomReport axioms = mubgeo::check_axioms(g);
    bool all = true;
    for (const mubgeo::AxiomCheck& c : axioms.checks) {
        rep << (c.pass ? "pass  " : "FAIL  ") << c.name;
        if (!c.pass) rep << "  [" << c.witness << "]";
        rep << "\n";
        all = all && c.pass;
    }
    auto [by_lines, by_points] = mubgeo::counting_identity(g);
    bool counting = by_lines == by_points && by_lines == g.num_lines * g.k_line();
    rep << (counting ? "pass  " : "FAIL  ") << "incidence_counting  (" << by_lines
        << " = " << by_points << ")\n";
    all = all && counting;
    return all ? kOk : kInvariantFailure;
}

struct MubArgs {
    long long d = 0;
    bool check = false;
    double tol = 1e-10;
    std::string out;
};

int cmd_mub(const MubArgs& a) {
    if (!mubgeo::check_odd_prime(a.d)) return usage_error("d must be an odd prime");
    emit(a.out, mubgeo::mub_bundle_to_json(a.d).dump(2) + "\n");
    if (!a.check) return kOk;
    double dev = mubgeo::unbiasedness_check(a.d);
    std::ostream& rep = report_stream(a.out);
    bool ok = dev <= a.tol;
    rep << (ok ? "pass  " : "FAIL  ") << "unbiasedness  max deviation "
        << mubgeo::format_double(dev) << " (tol " << mubgeo::format_double(a.tol)
        << ")\n";
    return ok ? kOk : kInvariantFailure;
}

struct LineopsArgs {
    long long d = 0;
    std::string family = "1,0";
    bool check = false;
    double tol = 1e-10;
    std::string out;
};

int cmd_lineops(const LineopsArgs& a) {
    if (!mubgeo::check_odd_prime(a.d)) return usage_error("d must be an odd prime");
    long long r = 0, s = 0;
    if (std::sscanf(a.family.c_str(), "%lld,%lld", &r, &s) != 2) {
        return usage_error("--family expects \"r,s\" with integers r, s");
    }
    mubgeo::LineFamily fam{mubgeo::fe(r, a.d), mubgeo::fe(s, a.d)};
    if (fam.r == mubgeo::fe(0, a.d)) return usage_error("family slope r must be nonzero");

    emit(a.out, mubgeo::line_family_bundle_to_json(a.d, fam).dump(2) + "\n");

    if (!a.check) return kOk;
    std::vector<double> table = mubgeo::orthogonality_table(a.d, fam);
    double worst = 0.0;
    long long n = a.d * a.d;
    for (long long j = 0; j < n; ++j) {
        for (long long k = 0; k < n; ++k) {
            double expect = j == k ? static_cast<double>(a.d) : 0.0;
            double dev = std::abs(table[static_cast<size_t>(j * n + k)] - expect);
            if (dev > worst) worst = dev;
        }
    }
    std::ostream& rep = report_stream(a.out);
    bool ok = worst <= a.tol;
    rep << (ok ? "pass  " : "FAIL  ") << "trace_orthogonality  max deviation "
        << mubgeo::format_double(worst) << "\n";
    return ok ? kOk : kInvariantFailure;
}

struct WignerArgs {
    std::string rho_path;
    bool with_radon = false;
    std::string out;
    std::string radon_out;
    double tol = 1e-10;
    bool radon_only = false;  // set by the radon subcommand
};

int cmd_wigner(const WignerArgs& a) {
    mubgeo::DensityMatrix rho = [&] {
        std::string text = mubgeo::read_text_file(a.rho_path);
        mubgeo::Mat m = mubgeo::density_from_json(mubgeo::parse_json_text(text));
        return mubgeo::DensityMatrix::from_matrix(m, a.tol);
    }();

    mubgeo::PhaseTable w = mubgeo::wigner(rho);
    if (!a.radon_only) {
        emit(a.out, mubgeo::wigner_to_csv(w));
        std::ostream& rep = report_stream(a.out);
        rep << "sum_W = " << mubgeo::format_double(w.sum())
            << "  min_W = " << mubgeo::format_double(w.min()) << "\n";
    }
    if (a.with_radon || a.radon_only) {
        std::string path = a.radon_only ? a.out : a.radon_out;
        if (!a.radon_only && path.empty() && !a.out.empty()) path = a.out + ".radon.csv";
        emit(path, mubgeo::radon_to_csv(mubgeo::radon(w)));
    }
    return kOk;
}

struct MeankingArgs {
    std::string protocol;
    long long d = 0;
    long long rounds = 1000;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int cmd_meanking(const MeankingArgs& a) {
    if (!mubgeo::check_odd_prime(a.d)) return usage_error("d must be an odd prime");
    if (a.rounds < 1) return usage_error("--rounds must be at least 1");
    mubgeo::Protocol protocol;
    try {
        protocol = mubgeo::parse_protocol(a.protocol);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    std::optional<std::uint64_t> seed = a.seed;
    if (!seed.has_value()) {
        try {
            seed = env_seed();
        } catch (const std::invalid_argument& e) {
            return usage_error(e.what());
        }
    }
    if (!seed.has_value()) {
        return usage_error("a seed is required: pass --seed or set MUBGEO_SEED");
    }

    std::vector<mubgeo::Transcript> ts =
        mubgeo::run_batch(protocol, a.d, a.rounds, *seed);
    mubgeo::BatchSummary summary = mubgeo::summarize(ts);
    emit(a.out, mubgeo::batch_to_jsonl(ts, summary));

    std::ostream& rep = report_stream(a.out);
    rep << "rounds=" << summary.rounds << " correct=" << summary.correct
        << " undetermined=" << summary.undetermined
        << " failure_rate=" << mubgeo::format_double(summary.failure_rate) << "\n";
    if (protocol == mubgeo::Protocol::TMK) {
        double reference = static_cast<double>(a.rounds) /
                           static_cast<double>(a.d * a.d);
        rep << "undetermined count " << summary.undetermined
            << "; reference rate 1/d^2 -> N/d^2 = " << mubgeo::format_double(reference)
            << "\n";
    }
    return kOk;
}

// One named check per row of the selftest matrix.
struct SelftestCheck {
    std::string name;
    bool (*run)(long long d, std::uint64_t seed, double tol);
};

bool st_field_arithmetic(long long d, std::uint64_t, double) {
    using mubgeo::fe;
    for (long long a = 1; a < d; ++a) {
        if (fe(a, d) * fe(a, d).inv() != fe(1, d)) return false;
    }
    if (fe(1, d).half() + fe(1, d).half() != fe(1, d)) return false;
    if (fe(3, d).pow(d - 1) != fe(d == 3 ? 0 : 1, d)) return false;
    return true;
}

bool st_geometry_axioms(long long d, std::uint64_t, double) {
    return mubgeo::check_axioms(mubgeo::build_apg(d)).all_pass() &&
           mubgeo::check_axioms(mubgeo::build_dapg(d)).all_pass() &&
           mubgeo::check_axioms(mubgeo::complete_to_fpp(mubgeo::build_dapg(d))).all_pass();
}

bool st_geometry_pencils(long long d, std::uint64_t, double) {
    for (const mubgeo::Incidence& g : {mubgeo::build_apg(d), mubgeo::build_dapg(d)}) {
        std::vector<std::vector<long long>> pens = mubgeo::pencils(g);
        if (pens.size() != static_cast<size_t>(d + 1)) return false;
        for (const auto& pen : pens) {
            if (pen.size() != static_cast<size_t>(d)) return false;
        }
    }
    mubgeo::Incidence fpp = mubgeo::complete_to_fpp(mubgeo::build_apg(d));
    mubgeo::Incidence cut = mubgeo::remove_line_and_points(fpp, fpp.num_lines - 1);
    if (cut.num_points != d * d || cut.num_lines != d * (d + 1)) return false;
    if (!mubgeo::check_axioms(cut).all_pass()) return false;
    mubgeo::Incidence dual = mubgeo::dual_incidence(cut);
    return dual.num_points == d * (d + 1) && dual.num_lines == d * d &&
           mubgeo::check_axioms(dual).all_pass();
}

bool st_geometry_counting(long long d, std::uint64_t, double) {
    for (const mubgeo::Incidence& g :
         {mubgeo::build_apg(d), mubgeo::build_dapg(d),
          mubgeo::complete_to_fpp(mubgeo::build_apg(d))}) {
        auto [by_lines, by_points] = mubgeo::counting_identity(g);
        if (by_lines != by_points || by_lines != g.num_lines * g.k_line()) return false;
    }
    auto [bb, rr] = mubgeo::deduce_parameters(d * d, d);
    return bb == d * (d + 1) && rr == d + 1;
}

bool st_mub_unbiasedness(long long d, std::uint64_t, double tol) {
    return mubgeo::unbiasedness_check(d) <= tol;
}

bool st_mub_eigenrelation(long long d, std::uint64_t, double tol) {
    mubgeo::OmegaTable omega(d);
    mubgeo::Mat x = mubgeo::x_op(d), z = mubgeo::z_op(d);
    for (const mubgeo::BasisLabel& b : mubgeo::BasisLabel::all(d)) {
        mubgeo::Mat op = b.is_cb() ? z : x;
        if (!b.is_cb()) {
            for (long long k = 0; k < b.residue().value(); ++k) op = op * z;
        }
        for (long long m = 0; m < d; ++m) {
            mubgeo::Vec v = mubgeo::mub_state(b, mubgeo::fe(m, d));
            mubgeo::Vec lhs = mubgeo::apply(op, v);
            for (long long n = 0; n < d; ++n) {
                if (std::abs(lhs[n] - omega.omega(m) * v[n]) > tol) return false;
            }
        }
    }
    return true;
}

bool st_lineops_construction(long long d, std::uint64_t, double tol) {
    for (long long md = 0; md < d; ++md) {
        for (long long m0 = 0; m0 < d; ++m0) {
            mubgeo::Mat closed =
                mubgeo::line_operator_closed(mubgeo::fe(md, d), mubgeo::fe(m0, d)).matrix;
            mubgeo::Mat summed =
                mubgeo::line_operator_sum(mubgeo::fe(md, d), mubgeo::fe(m0, d)).matrix;
            mubgeo::Mat displaced =
                mubgeo::displaced_parity(mubgeo::fe(md, d), mubgeo::fe(m0, d));
            if (mubgeo::max_abs_diff(closed, summed) > tol) return false;
            if (mubgeo::max_abs_diff(closed, displaced) > tol) return false;
        }
    }
    return true;
}

bool st_lineops_orthogonality(long long d, std::uint64_t, double tol) {
    std::vector<double> table =
        mubgeo::orthogonality_table(d, mubgeo::symmetric_family(d));
    long long n = d * d;
    for (long long j = 0; j < n; ++j) {
        for (long long k = 0; k < n; ++k) {
            double expect = j == k ? static_cast<double>(d) : 0.0;
            if (std::abs(table[static_cast<size_t>(j * n + k)] - expect) > tol) return false;
        }
    }
    return true;
}

bool st_lineops_parity(long long d, std::uint64_t, double tol) {
    mubgeo::Mat eye = mubgeo::Mat::identity(d);
    for (const mubgeo::Mat& l : mubgeo::all_line_operators(d)) {
        if (mubgeo::max_abs_diff(l * l, eye) > tol) return false;
    }
    return true;
}

bool st_operator_expansion(long long d, std::uint64_t seed, double tol) {
    mubgeo::SeededRng rng(seed);
    mubgeo::Mat a(d);
    for (long long i = 0; i < d; ++i) {
        for (long long j = 0; j < d; ++j) {
            a.at(i, j) = mubgeo::cplx(rng.gauss(), rng.gauss());
        }
    }
    mubgeo::Mat back = mubgeo::reconstruct(d, mubgeo::expand(a));
    return mubgeo::max_abs_diff(a, back) <= tol;
}

bool st_apg_average(long long d, std::uint64_t, double tol) {
    for (long long r = 0; r < d; ++r) {
        for (long long s = 0; s < d; ++s) {
            mubgeo::Mat avg = mubgeo::apg_point_operator(mubgeo::fe(r, d), mubgeo::fe(s, d));
            mubgeo::FieldElement b = -mubgeo::fe(r, d);
            mubgeo::FieldElement m = mubgeo::fe(s, d) - b.half();
            mubgeo::Mat proj = mubgeo::projector(mubgeo::BasisLabel::residue(b), m);
            if (mubgeo::max_abs_diff(avg, proj) > tol) return false;
        }
    }
    for (long long s = 0; s < d; ++s) {
        mubgeo::Mat avg = mubgeo::apg_vertical_operator(mubgeo::fe(s, d));
        mubgeo::Mat proj =
            mubgeo::projector(mubgeo::BasisLabel::cb(d), mubgeo::fe(s, d));
        if (mubgeo::max_abs_diff(avg, proj) > tol) return false;
    }
    return true;
}

bool st_phase_normalization(long long d, std::uint64_t seed, double tol) {
    mubgeo::SeededRng rng(seed + 1);
    std::vector<mubgeo::Mat> ops = mubgeo::all_line_operators(d);
    for (int trial = 0; trial < 5; ++trial) {
        mubgeo::DensityMatrix rho = mubgeo::DensityMatrix::pure(rng.random_state(d));
        mubgeo::PhaseTable w = mubgeo::wigner(rho);
        if (std::abs(w.sum() - 1.0) > tol) return false;
        mubgeo::Mat a(d);
        for (long long i = 0; i < d; ++i) {
            for (long long j = 0; j < d; ++j) a.at(i, j) = mubgeo::cplx(rng.gauss(), rng.gauss());
        }
        mubgeo::cplx lhs = mubgeo::trace_product(rho.matrix(), a);
        mubgeo::cplx rhs(0.0, 0.0);
        for (long long md = 0; md < d; ++md) {
            for (long long m0 = 0; m0 < d; ++m0) {
                rhs += w.at(md, m0) *
                       mubgeo::trace_product(a, ops[static_cast<size_t>(md * d + m0)]);
            }
        }
        if (std::abs(lhs - rhs) > tol) return false;
    }
    return true;
}

bool st_radon_born(long long d, std::uint64_t seed, double tol) {
    mubgeo::SeededRng rng(seed + 2);
    mubgeo::DensityMatrix rho = mubgeo::DensityMatrix::pure(rng.random_state(d));
    mubgeo::RadonTable r = mubgeo::radon(mubgeo::wigner(rho));
    for (const mubgeo::BasisLabel& b : mubgeo::BasisLabel::all(d)) {
        for (long long m = 0; m < d; ++m) {
            mubgeo::Vec v = mubgeo::mub_state(b, mubgeo::fe(m, d));
            double born = std::real(mubgeo::inner(v, mubgeo::apply(rho.matrix(), v)));
            if (std::abs(r.at(m, b) - born) > tol) return false;
        }
    }
    return true;
}

bool st_kernel_membership(long long d, std::uint64_t, double tol) {
    std::vector<std::uint8_t> kernel = mubgeo::lambda_kernel(d, tol);
    mubgeo::Incidence g = mubgeo::build_dapg(d);
    if (kernel.size() != g.membership.size()) return false;
    for (size_t i = 0; i < kernel.size(); ++i) {
        if (kernel[i] != g.membership[i]) return false;
    }
    return true;
}

bool st_line_states(long long d, std::uint64_t, double tol) {
    std::vector<mubgeo::TwoParticleState> states;
    for (long long md = 0; md < d; ++md) {
        for (long long m0 = 0; m0 < d; ++m0) {
            states.push_back(mubgeo::line_state(mubgeo::fe(md, d), mubgeo::fe(m0, d)).vec);
        }
    }
    for (size_t j = 0; j < states.size(); ++j) {
        for (size_t k = 0; k < states.size(); ++k) {
            mubgeo::cplx g = mubgeo::tp_inner(states[j], states[k]);
            mubgeo::cplx expect = j == k ? 1.0 : 0.0;
            if (std::abs(g - expect) > tol) return false;
        }
        mubgeo::Mat red = mubgeo::reduced_density_first(states[j]);
        mubgeo::Mat mixed = mubgeo::Mat::identity(d).scaled(1.0 / static_cast<double>(d));
        if (mubgeo::max_abs_diff(red, mixed) > tol) return false;
    }
    return true;
}

bool st_conjugate_overlap(long long d, std::uint64_t, double tol) {
    mubgeo::OmegaTable omega(d);
    double inv_d = 1.0 / static_cast<double>(d);
    for (long long m0 = 0; m0 < d; ++m0) {
        for (long long md = 0; md < d; ++md) {
            mubgeo::TwoParticleState conj =
                mubgeo::conjugate_line_state(mubgeo::fe(m0, d), mubgeo::fe(md, d)).vec;
            for (long long mdp = 0; mdp < d; ++mdp) {
                for (long long m0p = 0; m0p < d; ++m0p) {
                    mubgeo::TwoParticleState ls =
                        mubgeo::line_state(mubgeo::fe(mdp, d), mubgeo::fe(m0p, d)).vec;
                    mubgeo::cplx got = mubgeo::tp_inner(conj, ls);
                    mubgeo::FieldElement e = mubgeo::fe(2 * m0 * mdp - 2 * m0p * md, d);
                    mubgeo::cplx expect = inv_d * omega.omega(e);
                    if (std::abs(got - expect) > tol) return false;
                }
            }
        }
    }
    return true;
}

bool st_universal_state(long long d, std::uint64_t, double tol) {
    return mubgeo::pencil_sum_check(d, tol);
}

bool st_retrodiction_support(long long d, std::uint64_t, double tol) {
    std::vector<std::uint8_t> kernel = mubgeo::lambda_kernel(d);
    double inv_d = 1.0 / static_cast<double>(d);
    mubgeo::TwoParticleState psi = mubgeo::universal_state(mubgeo::BasisLabel::cb(d));
    long long num_lines = d * d;
    for (const mubgeo::BasisLabel& b : mubgeo::BasisLabel::all(d)) {
        for (long long m = 0; m < d; ++m) {
            long long point = mubgeo::dapg_point_index(d, m, b);
            mubgeo::Vec s = mubgeo::mub_state(b, mubgeo::fe(m, d));
            mubgeo::TwoParticleState collapsed(d);
            for (long long n2 = 0; n2 < d; ++n2) {
                mubgeo::cplx phi(0.0, 0.0);
                for (long long n1 = 0; n1 < d; ++n1) {
                    phi += std::conj(s[n1]) * psi.at(n1, n2);
                }
                for (long long n1 = 0; n1 < d; ++n1) collapsed.at(n1, n2) = s[n1] * phi;
            }
            collapsed.normalize();
            for (long long md = 0; md < d; ++md) {
                for (long long m0 = 0; m0 < d; ++m0) {
                    double p = std::norm(mubgeo::tp_inner(
                        mubgeo::line_state(mubgeo::fe(md, d), mubgeo::fe(m0, d)).vec,
                        collapsed));
                    long long line = md * d + m0;
                    double expect =
                        kernel[static_cast<size_t>(point * num_lines + line)] ? inv_d : 0.0;
                    if (std::abs(p - expect) > tol) return false;
                }
            }
        }
    }
    return true;
}

bool st_tracking_support(long long d, std::uint64_t, double tol) {
    double inv_d = 1.0 / static_cast<double>(d);
    mubgeo::TwoParticleState psi = mubgeo::universal_state(mubgeo::BasisLabel::cb(d));
    for (const mubgeo::BasisLabel& b : mubgeo::BasisLabel::all(d)) {
        for (long long m = 0; m < d; ++m) {
            mubgeo::Vec s = mubgeo::mub_state(b, mubgeo::fe(m, d));
            mubgeo::TwoParticleState collapsed(d);
            for (long long n2 = 0; n2 < d; ++n2) {
                mubgeo::cplx phi(0.0, 0.0);
                for (long long n1 = 0; n1 < d; ++n1) {
                    phi += std::conj(s[n1]) * psi.at(n1, n2);
                }
                for (long long n1 = 0; n1 < d; ++n1) collapsed.at(n1, n2) = s[n1] * phi;
            }
            collapsed.normalize();
            // Alice's conjugate-basis probabilities follow the support
            // rule: d outcomes at 1/d each, the rest zero.
            for (long long m0 = 0; m0 < d; ++m0) {
                for (long long md = 0; md < d; ++md) {
                    bool in_support;
                    if (b.is_cb()) {
                        in_support = md == 0;
                    } else {
                        in_support =
                            mubgeo::fe(m0, d) + b.residue() * mubgeo::fe(md, d) ==
                            mubgeo::fe(0, d);
                    }
                    double p = std::norm(mubgeo::tp_inner(
                        mubgeo::conjugate_line_state(mubgeo::fe(m0, d), mubgeo::fe(md, d))
                            .vec,
                        collapsed));
                    double expect = in_support ? inv_d : 0.0;
                    if (std::abs(p - expect) > tol) return false;
                }
            }
        }
    }
    return true;
}

bool st_negativity(long long d, std::uint64_t seed, double) {
    mubgeo::SeededRng rng(seed + 3);
    try {
        mubgeo::NegativityWitness w = mubgeo::negativity_witness(d, rng);
        return w.min_value < 0.0;
    } catch (const std::domain_error&) {
        return false;
    }
}

struct SelftestArgs {
    std::vector<long long> ds;
    std::optional<std::uint64_t> seed;
    double tol = 1e-9;
};

int cmd_selftest(const SelftestArgs& a) {
    std::vector<long long> ds = a.ds.empty() ? std::vector<long long>{3, 5, 7} : a.ds;
    for (long long d : ds) {
        if (!mubgeo::check_odd_prime(d)) return usage_error("d must be an odd prime");
        if (d > 23) return usage_error("selftest dimensions are capped at 23");
    }
    std::uint64_t seed = a.seed.value_or(20260816u);

    const std::vector<SelftestCheck> checks = {
        {"field_arithmetic", st_field_arithmetic},
        {"geometry_axioms", st_geometry_axioms},
        {"geometry_pencils", st_geometry_pencils},
        {"geometry_counting", st_geometry_counting},
        {"mub_unbiasedness", st_mub_unbiasedness},
        {"mub_eigenrelation", st_mub_eigenrelation},
        {"lineops_construction", st_lineops_construction},
        {"lineops_orthogonality", st_lineops_orthogonality},
        {"lineops_parity", st_lineops_parity},
        {"operator_expansion", st_operator_expansion},
        {"apg_average", st_apg_average},
        {"phase_normalization", st_phase_normalization},
        {"radon_born", st_radon_born},
        {"kernel_membership", st_kernel_membership},
        {"line_states", st_line_states},
        {"conjugate_overlap", st_conjugate_overlap},
        {"universal_state", st_universal_state},
        {"retrodiction_support", st_retrodiction_support},
        {"tracking_support", st_tracking_support},
        {"negativity_witness", st_negativity},
    };

    size_t width = 0;
    for (const SelftestCheck& c : checks) width = std::max(width, c.name.size());

    std::cout << std::string(width, ' ');
    for (long long d : ds) std::cout << "  d=" << d << (d < 10 ? " " : "");
    std::cout << "\n";

    std::string first_failure;
    for (const SelftestCheck& c : checks) {
        std::cout << c.name << std::string(width - c.name.size(), ' ');
        for (long long d : ds) {
            bool ok = c.run(d, seed, a.tol);
            std::cout << "  " << (ok ? "pass" : "FAIL");
            if (!ok && first_failure.empty()) {
                first_failure = c.name + " at d=" + std::to_string(d);
            }
        }
        std::cout << "\n";
    }
    if (!first_failure.empty()) {
        std::cout << "FIRST FAILURE: " << first_failure << "\n";
        return kInvariantFailure;
    }
    std::cout << "all checks passed\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-geometry phase space toolkit"};
    app.require_subcommand(1);

    GeometryArgs ga;
    CLI::App* geometry = app.add_subcommand("geometry", "build and check incidence structures");
    geometry->add_option("kind", ga.kind, "apg | dapg | fpp")->required();
    geometry->add_option("d", ga.d, "odd prime dimension")->required();
    geometry->add_flag("--check", ga.check, "run the axiom and counting checks");
    geometry->add_option("--out", ga.out, "write JSON here instead of stdout");

    MubArgs ma;
    CLI::App* mub = app.add_subcommand("mub", "emit the d+1 bases as JSON");
    mub->add_option("d", ma.d, "odd prime dimension")->required();
    mub->add_flag("--check", ma.check, "verify unbiasedness");
    mub->add_option("--tol", ma.tol, "tolerance for --check");
    mub->add_option("--out", ma.out, "write JSON here instead of stdout");

    LineopsArgs la;
    CLI::App* lineops = app.add_subcommand("lineops", "emit line operators as JSON");
    lineops->add_option("d", la.d, "odd prime dimension")->required();
    lineops->add_option("--family", la.family, "line family \"r,s\" (default 1,0)");
    lineops->add_flag("--check", la.check, "verify trace orthogonality");
    lineops->add_option("--tol", la.tol, "tolerance for --check");
    lineops->add_option("--out", la.out, "write JSON here instead of stdout");

    WignerArgs wa;
    CLI::App* wigner = app.add_subcommand("wigner", "phase-space table of a density matrix");
    wigner->add_option("rho", wa.rho_path, "density matrix JSON file")->required();
    wigner->add_flag("--radon", wa.with_radon, "also emit the Radon table");
    wigner->add_option("--radon-out", wa.radon_out, "path for the Radon CSV");
    wigner->add_option("--tol", wa.tol, "density validation tolerance");
    wigner->add_option("--out", wa.out, "write CSV here instead of stdout");

    WignerArgs ra;
    ra.radon_only = true;
    CLI::App* radon = app.add_subcommand("radon", "Radon table of a density matrix");
    radon->add_option("rho", ra.rho_path, "density matrix JSON file")->required();
    radon->add_option("--tol", ra.tol, "density validation tolerance");
    radon->add_option("--out", ra.out, "write CSV here instead of stdout");

    MeankingArgs ka;
    CLI::App* meanking = app.add_subcommand("meanking", "run retrodiction rounds");
    meanking->add_option("protocol", ka.protocol, "mkp | tmk")->required();
    meanking->add_option("d", ka.d, "odd prime dimension")->required();
    meanking->add_option("--rounds", ka.rounds, "number of rounds (default 1000)");
    std::uint64_t seed_value = 0;
    CLI::Option* seed_opt = meanking->add_option("--seed", seed_value, "RNG seed");
    meanking->add_option("--out", ka.out, "write JSON lines here instead of stdout");

    SelftestArgs sa;
    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite");
    selftest->add_option("d", sa.ds, "odd prime dimensions (default 3 5 7)");
    std::uint64_t st_seed_value = 0;
    CLI::Option* st_seed_opt = selftest->add_option("--seed", st_seed_value, "RNG seed");
    selftest->add_option("--tol", sa.tol, "check tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (geometry->parsed()) return cmd_geometry(ga);
        if (mub->parsed()) return cmd_mub(ma);
        if (lineops->parsed()) return cmd_lineops(la);
        if (wigner->parsed()) return cmd_wigner(wa);
        if (radon->parsed()) return cmd_wigner(ra);
        if (meanking->parsed()) {
            if (seed_opt->count() > 0) ka.seed = seed_value;
            return cmd_meanking(ka);
        }
        if (selftest->parsed()) {
            if (st_seed_opt->count() > 0) sa.seed = st_seed_value;
            return cmd_selftest(sa);
        }
    } catch (const std::invalid_argument& e) {
        return data_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvariantFailure;
    }
    return usage_error("no subcommand given");
}
