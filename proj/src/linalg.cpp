#include "mubgeo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mubgeo {

namespace {

void require_positive_dim(long long dim) {
    if (dim <= 0) throw std::invalid_argument("dimension must be positive");
}

void require_same_dim(long long a, long long b) {
    if (a != b) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

Vec::Vec(long long dim) : dim_(dim) {
    require_positive_dim(dim);
    a_.assign(static_cast<size_t>(dim), cplx{0.0, 0.0});
}

double Vec::norm() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

Vec& Vec::normalize() {
    double n = norm();
    if (n < 1e-300) throw std::domain_error("cannot normalize a zero vector");
    for (auto& z : a_) z /= n;
    return *this;
}

cplx inner(const Vec& u, const Vec& v) {
    require_same_dim(u.dim(), v.dim());
    cplx s{0.0, 0.0};
    for (long long i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

Mat::Mat(long long dim) : dim_(dim) {
    require_positive_dim(dim);
    a_.assign(static_cast<size_t>(dim * dim), cplx{0.0, 0.0});
}

Mat Mat::identity(long long dim) {
    Mat m(dim);
    for (long long i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    require_same_dim(dim_, o.dim_);
    Mat r(dim_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    require_same_dim(dim_, o.dim_);
    Mat r(dim_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    require_same_dim(dim_, o.dim_);
    Mat r(dim_);
    for (long long i = 0; i < dim_; ++i)
        for (long long k = 0; k < dim_; ++k) {
            cplx aik = at(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (long long j = 0; j < dim_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Mat Mat::scaled(cplx s) const {
    Mat r(dim_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

Mat Mat::adjoint() const {
    Mat r(dim_);
    for (long long i = 0; i < dim_; ++i)
        for (long long j = 0; j < dim_; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

Mat Mat::transposed() const {
    Mat r(dim_);
    for (long long i = 0; i < dim_; ++i)
        for (long long j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
    return r;
}

cplx Mat::trace() const {
    cplx s{0.0, 0.0};
    for (long long i = 0; i < dim_; ++i) s += at(i, i);
    return s;
}

double Mat::max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double Mat::frobenius() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

bool Mat::is_hermitian(double tol) const {
    for (long long i = 0; i < dim_; ++i)
        for (long long j = i; j < dim_; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    return true;
}

Vec apply(const Mat& m, const Vec& v) {
    require_same_dim(m.dim(), v.dim());
    Vec r(m.dim());
    for (long long i = 0; i < m.dim(); ++i) {
        cplx s{0.0, 0.0};
        for (long long j = 0; j < m.dim(); ++j) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Mat outer(const Vec& u, const Vec& v) {
    require_same_dim(u.dim(), v.dim());
    Mat r(u.dim());
    for (long long i = 0; i < u.dim(); ++i)
        for (long long j = 0; j < u.dim(); ++j) r.at(i, j) = u[i] * std::conj(v[j]);
    return r;
}

cplx trace_product(const Mat& a, const Mat& b) {
    require_same_dim(a.dim(), b.dim());
    cplx s{0.0, 0.0};
    for (long long i = 0; i < a.dim(); ++i)
        for (long long j = 0; j < a.dim(); ++j) s += a.at(i, j) * b.at(j, i);
    return s;
}

double max_abs_diff(const Mat& a, const Mat& b) {
    require_same_dim(a.dim(), b.dim());
    double m = 0.0;
    for (long long i = 0; i < a.dim(); ++i)
        for (long long j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
    return m;
}

namespace {

// Cyclic Jacobi for a real symmetric matrix held row-major in s, size n.
std::vector<double> jacobi_symmetric(std::vector<double>& s, long long n) {
    auto el = [&](long long i, long long j) -> double& {
        return s[static_cast<size_t>(i * n + j)];
    };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (long long p = 0; p < n; ++p)
            for (long long q = p + 1; q < n; ++q) off += el(p, q) * el(p, q);
        if (off < 1e-26) break;
        for (long long p = 0; p < n; ++p) {
            for (long long q = p + 1; q < n; ++q) {
                double apq = el(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (el(q, q) - el(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double sn = t * c;
                for (long long k = 0; k < n; ++k) {
                    double akp = el(k, p), akq = el(k, q);
                    el(k, p) = c * akp - sn * akq;
                    el(k, q) = sn * akp + c * akq;
                }
                for (long long k = 0; k < n; ++k) {
                    double apk = el(p, k), aqk = el(q, k);
                    el(p, k) = c * apk - sn * aqk;
                    el(q, k) = sn * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) eig[static_cast<size_t>(i)] = el(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Mat& m) {
    if (!m.is_hermitian(1e-8))
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    long long d = m.dim();
    long long n = 2 * d;
    std::vector<double> s(static_cast<size_t>(n * n), 0.0);
    auto el = [&](long long i, long long j) -> double& {
        return s[static_cast<size_t>(i * n + j)];
    };
    for (long long i = 0; i < d; ++i)
        for (long long j = 0; j < d; ++j) {
            double x = m.at(i, j).real(), y = m.at(i, j).imag();
            el(i, j) = x;
            el(i + d, j + d) = x;
            el(i, j + d) = -y;
            el(i + d, j) = y;
        }
    std::vector<double> doubled = jacobi_symmetric(s, n);
    // Eigenvalues come out twice each; keep every other one.
    std::vector<double> eig(static_cast<size_t>(d));
    for (long long i = 0; i < d; ++i) eig[static_cast<size_t>(i)] = doubled[static_cast<size_t>(2 * i)];
    return eig;
}

}  // namespace mubgeo
