#pragma once

// Label for the d+1 bases of dimension d: the computational basis "CB"
// (written 0-double-dot in the construction) or a residue b in [0, d).
// CB is a distinct tag, deliberately not representable as a residue.

#include <string>

#include "mubgeo/modfield.hpp"

namespace mubgeo {

class BasisLabel {
public:
    static BasisLabel cb(long long d) { return BasisLabel(d, -1); }
    static BasisLabel residue(const FieldElement& b) { return BasisLabel(b.modulus(), b.value()); }
    static BasisLabel residue(long long b, long long d) {
        return residue(FieldElement(b, d));
    }

    long long d() const { return d_; }
    bool is_cb() const { return b_ < 0; }

    FieldElement residue() const {
        if (is_cb()) throw std::domain_error("CB basis label has no residue");
        return FieldElement(b_, d_);
    }

    bool operator==(const BasisLabel& o) const { return d_ == o.d_ && b_ == o.b_; }
    bool operator!=(const BasisLabel& o) const { return !(*this == o); }

    std::string str() const { return is_cb() ? "CB" : std::to_string(b_); }

    // All d+1 labels, CB first then residues ascending: the canonical
    // column order used by every table in the library.
    static std::vector<BasisLabel> all(long long d) {
        std::vector<BasisLabel> v;
        v.reserve(static_cast<size_t>(d + 1));
        v.push_back(cb(d));
        for (long long b = 0; b < d; ++b) v.push_back(residue(b, d));
        return v;
    }

private:
    BasisLabel(long long d, long long b) : d_(d), b_(b) {
        if (!check_odd_prime(d))
            throw std::invalid_argument("basis label needs an odd prime dimension");
    }

    long long d_;
    long long b_;  // -1 encodes CB
};

}  // namespace mubgeo
