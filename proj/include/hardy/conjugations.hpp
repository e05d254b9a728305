#pragma once

// Conjugations on the N-dimensional section of H^2.
//
// Every conjugation is carried as C = A J. The axioms (isometric, involutive)
// hold exactly when A is unitary and transpose-symmetric, so validity can be
// certified from A alone; sampled vector checks are reported alongside.

#include <cstdint>
#include <vector>

#include "hardy/core.hpp"

namespace hardy {

inline constexpr double kUnimodularTol = 1e-12;

/// Throws ValidationError unless | |z| - 1 | <= kUnimodularTol; returns z / |z|.
Complex require_unimodular(Complex z, const std::string& what, std::optional<std::size_t> index = std::nullopt);

/// zeta_1 .. zeta_{N-1}. Indexing starts at 1; the n = 0 term never depends on a zeta_0.
class UnimodularSeq {
public:
    explicit UnimodularSeq(std::vector<Complex> values);

    static UnimodularSeq constant(Complex value, std::size_t dim);

    /// Section order N this sequence covers (number of values + 1).
    std::size_t dim() const noexcept { return values_.size() + 1; }
    std::size_t length() const noexcept { return values_.size(); }
    /// zeta_j, 1 <= j <= length().
    Complex at(std::size_t j) const;
    /// zeta_n^{2n}; equals 1 at n = 0.
    Complex doubled_power(std::size_t n) const;
    const std::vector<Complex>& values() const noexcept { return values_; }

    friend bool operator==(const UnimodularSeq&, const UnimodularSeq&) = default;

private:
    std::vector<Complex> values_;
};

/// alpha_0 .. alpha_{N-1}.
class AlphaSeq {
public:
    explicit AlphaSeq(std::vector<Complex> values);

    std::size_t dim() const noexcept { return values_.size(); }
    Complex operator[](std::size_t m) const { return values_[m]; }
    const std::vector<Complex>& values() const noexcept { return values_; }

private:
    std::vector<Complex> values_;
};

struct ConjugationCert {
    double isometry_residual = 0.0;
    double involution_residual = 0.0;
    double a_unitarity_residual = 0.0;
    double a_symmetry_residual = 0.0;
    double tol = kDefaultTol;
    bool passed = false;
};

/// f(z) -> conj(f(conj z)); plain coefficient conjugation.
AntilinearOp build_J(std::size_t dim);

/// A = diag(conj(lambda^n)).
AntilinearOp build_c_lambda(Complex lambda, std::size_t dim);

/// A = diag(alpha_n).
AntilinearOp build_c_alpha(const AlphaSeq& alpha);

/// A = diag(d_n), d_0 = 1, d_n = conj(zeta_n^{2n}).
AntilinearOp build_c_zeta(const UnimodularSeq& zeta);

/// C = U^* J U, i.e. A = U^H conj(U). Rejects U with ||U^H U - I||_F > unitary_tol.
AntilinearOp build_from_unitary(const LinearOp& U, double unitary_tol = 1e-8);

/// Diagonal unitary with U z^n = (zeta_n z)^n. Its columns are the orthonormal basis {1, zeta_1 z, zeta_2^2 z^2, ...}.
LinearOp monomial_rotation(const UnimodularSeq& zeta);

/// B with B_{mn} = b_m^{(n)}, the coefficients of C(z^n) = sum_m b_m^{(n)} z^m. Equal to the A-factor.
LinearOp coefficient_matrix(const AntilinearOp& C);

/// Checks both conjugation axioms on `trials` sampled unit vector pairs and certifies the A-factor.
/// A failing candidate is reported, never thrown.
ConjugationCert verify_conjugation(const AntilinearOp& C, int trials, double tol, std::uint64_t seed);

/// Inverse of build_from_unitary for diagonal conjugations: U_nn = principal sqrt(conj(d_n)).
LinearOp factor_diagonal(const AntilinearOp& C, double tol = kDefaultTol);

/// Orthonormalised (modified Gram-Schmidt, two passes) matrix of standard complex Gaussians.
LinearOp random_unitary(std::size_t dim, std::uint64_t seed);

}  // namespace hardy
