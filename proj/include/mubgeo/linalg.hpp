#pragma once

// Small dense complex linear algebra, sized for desk-scale dimensions
// (d <= 23, two-particle objects d^2 <= 529).  Everything is a plain
// std::vector<std::complex<double>> underneath; no external algebra
// library is needed at this scale.

#include <complex>
#include <cstddef>
#include <vector>

namespace mubgeo {

using cplx = std::complex<double>;

class Vec {
public:
    Vec() : dim_(0) {}
    explicit Vec(long long dim);

    long long dim() const { return dim_; }
    cplx& operator[](long long i) { return a_[static_cast<size_t>(i)]; }
    const cplx& operator[](long long i) const { return a_[static_cast<size_t>(i)]; }

    double norm() const;
    Vec& normalize();  // throws std::domain_error on (near-)zero vectors

private:
    long long dim_;
    std::vector<cplx> a_;
};

// <u|v>, conjugate-linear in the first argument.
cplx inner(const Vec& u, const Vec& v);

class Mat {
public:
    Mat() : dim_(0) {}
    explicit Mat(long long dim);  // zero-filled square matrix

    static Mat identity(long long dim);

    long long dim() const { return dim_; }
    cplx& at(long long i, long long j) { return a_[static_cast<size_t>(i * dim_ + j)]; }
    const cplx& at(long long i, long long j) const { return a_[static_cast<size_t>(i * dim_ + j)]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(cplx s) const;
    Mat adjoint() const;
    Mat transposed() const;

    cplx trace() const;
    double max_abs() const;        // entrywise infinity norm
    double frobenius() const;
    bool is_hermitian(double tol) const;

private:
    long long dim_;
    std::vector<cplx> a_;
};

Vec apply(const Mat& m, const Vec& v);
Mat outer(const Vec& u, const Vec& v);  // |u><v|
cplx trace_product(const Mat& a, const Mat& b);  // tr(a*b) without forming the product
double max_abs_diff(const Mat& a, const Mat& b);

// Eigenvalues of a Hermitian matrix, ascending.  Implemented as cyclic
// Jacobi on the real symmetric embedding [[X, -Y], [Y, X]] of X + iY,
// whose spectrum is that of the input with every eigenvalue doubled.
std::vector<double> hermitian_eigenvalues(const Mat& m);

}  // namespace mubgeo
