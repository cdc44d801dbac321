#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qcorr {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. The universal carrier for operators,
/// density matrices and unitaries in this library (all dimensions are small,
/// at most a few dozen).
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t d);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Rank-one |v><v|.
    static ComplexMatrix outer(std::span<const cplx> v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const cplx> entries() const { return entries_; }
    std::span<cplx> entries() { return entries_; }

    ComplexMatrix dagger() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    cplx trace() const;
    double frobenius_norm() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
    friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

/// Kronecker product, size (rows_a*rows_b) x (cols_a*cols_b).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise (Schur) product; shapes must match.
ComplexMatrix hadamard_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||a - b||_F.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduce a multipartite operator to the subsystems listed in `keep`
/// (0-based, strictly increasing). Trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

enum class Side { A, B };

/// Transpose one tensor factor of a bipartite operator on C^{dA} (x) C^{dB}.
/// Involution; preserves trace and Hermiticity.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                                Side side);

}  // namespace qcorr
