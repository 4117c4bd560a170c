#include "mubgeo/mub.hpp"

#include <cmath>
#include <stdexcept>

namespace mubgeo {

namespace {

void require_match(const BasisLabel& b, const FieldElement& m) {
    if (b.d() != m.modulus())
        throw std::invalid_argument("basis label and residue have different dimensions");
}

}  // namespace

Vec mub_state(const BasisLabel& b, const FieldElement& m) {
    require_match(b, m);
    long long d = b.d();
    Vec v(d);
    if (b.is_cb()) {
        v[m.value()] = 1.0;
        return v;
    }
    OmegaTable om(d);
    FieldElement hb = b.residue().half();
    double root = 1.0 / std::sqrt(static_cast<double>(d));
    for (long long n = 0; n < d; ++n) {
        FieldElement fn(n, d);
        FieldElement e = hb * fn * (fn - fe(1, d)) - fn * m;
        v[n] = om.omega(e) * root;
    }
    return v;
}

Mat projector(const BasisLabel& b, const FieldElement& m) {
    Vec v = mub_state(b, m);
    return outer(v, v);
}

cplx projector_entry(const BasisLabel& b, const FieldElement& m, long long n, long long np) {
    require_match(b, m);
    long long d = b.d();
    if (n < 0 || n >= d || np < 0 || np >= d)
        throw std::invalid_argument("matrix element indices out of range");
    if (b.is_cb())
        return (n == m.value() && np == m.value()) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
    OmegaTable om(d);
    FieldElement fn(n, d), fnp(np, d);
    FieldElement e = (fn - fnp) * (b.residue().half() * (fn + fnp - fe(1, d)) - m);
    return om.omega(e) / static_cast<double>(d);
}

double unbiasedness_check(long long d) {
    std::vector<BasisLabel> labels = BasisLabel::all(d);
    std::vector<std::vector<Vec>> bases;
    for (const auto& b : labels) {
        std::vector<Vec> states;
        for (long long m = 0; m < d; ++m) states.push_back(mub_state(b, fe(m, d)));
        bases.push_back(std::move(states));
    }
    double invd = 1.0 / static_cast<double>(d);
    double worst = 0.0;
    for (size_t bi = 0; bi < bases.size(); ++bi)
        for (size_t bj = bi; bj < bases.size(); ++bj)
            for (long long mi = 0; mi < d; ++mi)
                for (long long mj = 0; mj < d; ++mj) {
                    double p = std::norm(inner(bases[bi][static_cast<size_t>(mi)],
                                               bases[bj][static_cast<size_t>(mj)]));
                    double want = bi == bj ? (mi == mj ? 1.0 : 0.0) : invd;
                    worst = std::max(worst, std::abs(p - want));
                }
    return worst;
}

Mat z_op(long long d) {
    OmegaTable om(d);
    Mat z(d);
    for (long long n = 0; n < d; ++n) z.at(n, n) = om.omega(n);
    return z;
}

Mat x_op(long long d) {
    if (!check_odd_prime(d))
        throw std::invalid_argument("shift operator needs an odd prime dimension");
    Mat x(d);
    for (long long n = 0; n < d; ++n) x.at((n + 1) % d, n) = 1.0;
    return x;
}

MubLabel tilde_map(const MubLabel& label) {
    require_match(label.b, label.m);
    if (label.b.is_cb()) return label;
    return MubLabel{BasisLabel::residue(-label.b.residue()), -label.m};
}

}  // namespace mubgeo
