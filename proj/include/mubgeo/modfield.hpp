#pragma once

// Arithmetic in the prime field F_d for odd prime d, plus the complex
// d-th roots of unity used everywhere else in the library.
//
// Residues are stored canonically in [0, d); negative inputs are reduced
// on construction.  half() multiplies by the inverse of 2, which exists
// because d is odd; this is why even dimensions are rejected up front.

#include <complex>
#include <cstdint>
#include <vector>

namespace mubgeo {

// Trial-division primality combined with the oddness requirement.
// d = 2 is rejected: the constructions need 2 to be invertible mod d.
bool check_odd_prime(long long d);

class FieldElement {
public:
    FieldElement(long long value, long long modulus);

    long long value() const { return value_; }
    long long modulus() const { return modulus_; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Multiplicative inverse via Fermat's little theorem.
    // Throws std::domain_error on zero.
    FieldElement inv() const;

    // Division by 2, i.e. *this * inv(2).
    FieldElement half() const;

    FieldElement pow(long long e) const;

private:
    long long value_;
    long long modulus_;
};

inline FieldElement fe(long long value, long long modulus) {
    return FieldElement(value, modulus);
}

// Exact value type for omega^k with omega = exp(2*pi*i/d): only the
// exponent is stored, reduced mod d.
struct RootOfUnity {
    FieldElement exponent;

    RootOfUnity operator*(const RootOfUnity& o) const;
    bool operator==(const RootOfUnity& o) const { return exponent == o.exponent; }
};

// Precomputed table of the d complex roots of unity.  All complex
// realizations go through a lookup so that equal exponents give
// bit-identical values; exponents are reduced mod d, never accumulated
// in floating point.
class OmegaTable {
public:
    explicit OmegaTable(long long d);

    long long d() const { return d_; }

    // omega^k for any integer k (reduced mod d).
    std::complex<double> omega(long long k) const;
    std::complex<double> omega(const FieldElement& e) const;
    std::complex<double> omega(const RootOfUnity& r) const { return omega(r.exponent); }

private:
    long long d_;
    std::vector<std::complex<double>> table_;
};

}  // namespace mubgeo
