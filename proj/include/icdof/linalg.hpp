#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace icdof {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Everything here is sized for the small
// Hermitian systems of this project ((K-1)N stays in the tens), so the
// implementations favor robustness over blocking or vectorization.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return a_; }

    CMatrix adjoint() const;
    double norm_fro() const;
    bool all_finite() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);

// A * A^H (Hermitian positive semi-definite by construction).
CMatrix gram(const CMatrix& a);

// All eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi
// rotations. Sweeps stop when the off-diagonal Frobenius norm falls below
// 1e-12 times the matrix norm; more than 100 sweeps raises NumericError.
// Input that is not Hermitian to within 1e-12 raises ConfigError.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

// Lower Cholesky factor L with L L^H = M, for Hermitian positive definite M.
// Breakdown (non-positive pivot) raises NumericError.
CMatrix cholesky_lower(const CMatrix& m);

// log det(M) (natural log) of a Hermitian positive definite matrix,
// computed from the Cholesky factor.
double spd_logdet(const CMatrix& m);

// Solves L Y = B for lower-triangular L by forward substitution.
CMatrix forward_solve(const CMatrix& l, const CMatrix& b);

}  // namespace icdof
