#include "icdof/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "icdof/errors.hpp"

namespace icdof {

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

double CMatrix::norm_fro() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

bool CMatrix::all_finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw ConfigError("matrix product: shape mismatch");
    CMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ConfigError("matrix sum: shape mismatch");
    CMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

CMatrix gram(const CMatrix& a) {
    CMatrix r(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                s += a(i, k) * std::conj(a(j, k));
            r(i, j) = s;
            r(j, i) = std::conj(s);
        }
    return r;
}

namespace {

void require_hermitian(const CMatrix& m, const char* who) {
    if (m.rows() != m.cols()) throw ConfigError(std::string(who) + ": not square");
    if (!m.all_finite()) throw NumericError(std::string(who) + ": non-finite entry");
    double scale = 1.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            scale = std::max(scale, std::abs(m(i, j)));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > 1e-12 * scale)
                throw ConfigError(std::string(who) + ": matrix is not Hermitian");
}

double offdiag_norm(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
    require_hermitian(m, "hermitian_eigenvalues");
    const std::size_t n = m.rows();
    std::vector<double> ev(n);
    if (n == 0) return ev;
    if (n == 1) return {m(0, 0).real()};

    // Work on an exactly Hermitian copy.
    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }

    const double tol = 1e-12 * std::max(a.norm_fro(), 1e-300);
    constexpr int kMaxSweeps = 100;
    bool converged = false;

    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        if (offdiag_norm(a) <= tol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx b = a(p, q);
                const double babs = std::abs(b);
                if (babs == 0.0) continue;

                // Unitary 2x2 rotation U = [[c, -s*ph], [s*conj(ph), c]]
                // with ph = b/|b| annihilates the (p,q) entry of U^H A U.
                const cplx ph = b / babs;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * babs);
                const double t = (tau >= 0.0)
                                     ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Rows p,q of U^H A.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk + s * ph * aqk;
                    a(q, k) = -s * std::conj(ph) * apk + c * aqk;
                }
                // Columns p,q of (U^H A) U.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(ph) * akq;
                    a(k, q) = -s * ph * akp + c * akq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (!converged && offdiag_norm(a) > tol)
        throw NumericError("hermitian_eigenvalues: Jacobi sweeps did not converge");

    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

CMatrix cholesky_lower(const CMatrix& m) {
    require_hermitian(m, "cholesky");
    const std::size_t n = m.rows();
    CMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = m(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
        if (!(d > 0.0) || !std::isfinite(d))
            throw NumericError("cholesky: matrix is not positive definite");
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / ljj;
        }
    }
    return l;
}

double spd_logdet(const CMatrix& m) {
    const CMatrix l = cholesky_lower(m);
    double s = 0.0;
    for (std::size_t i = 0; i < l.rows(); ++i) s += std::log(l(i, i).real());
    return 2.0 * s;
}

CMatrix forward_solve(const CMatrix& l, const CMatrix& b) {
    if (l.rows() != l.cols() || l.rows() != b.rows())
        throw ConfigError("forward_solve: shape mismatch");
    CMatrix y(b.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < l.rows(); ++i) {
            cplx s = b(i, j);
            for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y(k, j);
            y(i, j) = s / l(i, i);
        }
    }
    return y;
}

}  // namespace icdof
