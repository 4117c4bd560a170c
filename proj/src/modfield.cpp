#include "mubgeo/modfield.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mubgeo {

bool check_odd_prime(long long d) {
    if (d < 3 || d % 2 == 0) return false;
    for (long long q = 3; q * q <= d; q += 2)
        if (d % q == 0) return false;
    return true;
}

namespace {

long long reduce(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

void require_same_modulus(const FieldElement& a, const FieldElement& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("field elements have mismatched moduli: " +
                                    std::to_string(a.modulus()) + " vs " +
                                    std::to_string(b.modulus()));
}

}  // namespace

FieldElement::FieldElement(long long value, long long modulus) : modulus_(modulus) {
    if (!check_odd_prime(modulus))
        throw std::invalid_argument("modulus must be an odd prime, got " +
                                    std::to_string(modulus));
    value_ = reduce(value, modulus);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_modulus(*this, o);
    return FieldElement(value_ + o.value_, modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_modulus(*this, o);
    return FieldElement(value_ - o.value_, modulus_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_modulus(*this, o);
    return FieldElement(value_ * o.value_, modulus_);
}

FieldElement FieldElement::operator-() const {
    return FieldElement(-value_, modulus_);
}

bool FieldElement::operator==(const FieldElement& o) const {
    return modulus_ == o.modulus_ && value_ == o.value_;
}

FieldElement FieldElement::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    long long base = value_, acc = 1;
    long long k = e;
    while (k > 0) {
        if (k & 1) acc = reduce(acc * base, modulus_);
        base = reduce(base * base, modulus_);
        k >>= 1;
    }
    return FieldElement(acc, modulus_);
}

FieldElement FieldElement::inv() const {
    if (value_ == 0)
        throw std::domain_error("inv: inverse of zero mod " + std::to_string(modulus_));
    return pow(modulus_ - 2);
}

FieldElement FieldElement::half() const {
    return *this * FieldElement(2, modulus_).inv();
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    return RootOfUnity{exponent + o.exponent};
}

OmegaTable::OmegaTable(long long d) : d_(d) {
    if (!check_odd_prime(d))
        throw std::invalid_argument("omega table needs an odd prime dimension, got " +
                                    std::to_string(d));
    table_.resize(static_cast<size_t>(d));
    for (long long k = 0; k < d; ++k) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d);
        table_[static_cast<size_t>(k)] = {std::cos(theta), std::sin(theta)};
    }
}

std::complex<double> OmegaTable::omega(long long k) const {
    long long r = reduce(k, d_);
    return table_[static_cast<size_t>(r)];
}

std::complex<double> OmegaTable::omega(const FieldElement& e) const {
    if (e.modulus() != d_)
        throw std::invalid_argument("exponent modulus does not match omega table dimension");
    return table_[static_cast<size_t>(e.value())];
}

}  // namespace mubgeo
