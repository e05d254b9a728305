#pragma once

// Coefficient-space model of the truncated Hardy space H^2.
//
// An element f = sum a_n z^n is stored as its first N Taylor coefficients in
// the monomial basis z^0 .. z^{N-1}. Linear operators are dense N x N matrices
// in that basis; an antilinear operator is stored as C = A J, where J is
// entrywise conjugation of the coefficients and A is linear.
//
// All types are immutable values. Every operation returns a new value.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hardy/errors.hpp"

namespace hardy {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;

class CoeffVector {
public:
    explicit CoeffVector(std::vector<Complex> coeffs);
    CoeffVector(std::initializer_list<Complex> coeffs) : CoeffVector(std::vector<Complex>(coeffs)) {}

    static CoeffVector zero(std::size_t dim);
    /// The monomial z^n as an element of the N-dimensional section.
    static CoeffVector basis(std::size_t dim, std::size_t n);

    std::size_t dim() const noexcept { return coeffs_.size(); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    Complex operator[](std::size_t n) const { return coeffs_[n]; }

    double norm() const;

    friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

private:
    std::vector<Complex> coeffs_;
};

CoeffVector operator+(const CoeffVector& f, const CoeffVector& g);
CoeffVector operator-(const CoeffVector& f, const CoeffVector& g);
CoeffVector operator*(Complex s, const CoeffVector& f);

/// Dense N x N matrix in the monomial basis, row-major.
class LinearOp {
public:
    LinearOp(std::size_t dim, std::vector<Complex> row_major);
    /// Rows given as nested lists; must be square.
    LinearOp(std::initializer_list<std::initializer_list<Complex>> rows);

    static LinearOp identity(std::size_t dim);
    static LinearOp zero(std::size_t dim);
    static LinearOp diagonal(std::span<const Complex> diag);

    std::size_t dim() const noexcept { return dim_; }
    Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    std::span<const Complex> data() const noexcept { return entries_; }
    std::span<const Complex> row(std::size_t r) const { return std::span(entries_).subspan(r * dim_, dim_); }

    friend bool operator==(const LinearOp&, const LinearOp&) = default;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// C f = A conj(f).
class AntilinearOp {
public:
    explicit AntilinearOp(LinearOp a_factor) : a_(std::move(a_factor)) {}

    std::size_t dim() const noexcept { return a_.dim(); }
    const LinearOp& a_factor() const noexcept { return a_; }

    friend bool operator==(const AntilinearOp&, const AntilinearOp&) = default;

private:
    LinearOp a_;
};

/// sum_n f_n conj(g_n); linear in f, conjugate-linear in g.
Complex inner_product(const CoeffVector& f, const CoeffVector& g);

CoeffVector apply_linear(const LinearOp& T, const CoeffVector& f);
CoeffVector apply_antilinear(const AntilinearOp& C, const CoeffVector& f);

LinearOp adjoint(const LinearOp& T);
LinearOp transpose(const LinearOp& T);
/// Entrywise complex conjugate of the matrix (not the adjoint).
LinearOp conj(const LinearOp& T);
LinearOp operator*(const LinearOp& lhs, const LinearOp& rhs);
LinearOp operator-(const LinearOp& lhs, const LinearOp& rhs);

double frobenius_norm(const LinearOp& T);
/// Frobenius norm of the leading window x window block.
double frobenius_norm(const LinearOp& T, std::size_t window);

/// ||T^H T - I||_F
double unitarity_residual(const LinearOp& T);
/// ||T - T^T||_F
double transpose_residual(const LinearOp& T);

/// Smallest B with |T_jk| < threshold whenever |j - k| > B.
std::size_t bandwidth(const LinearOp& T, double threshold = 1e-12);

/// Integer power of a unimodular number by repeated squaring, renormalised to modulus 1.
Complex unit_pow(Complex z, long long k);

}  // namespace hardy
