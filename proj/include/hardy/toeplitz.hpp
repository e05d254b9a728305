#pragma once

// Band-limited Toeplitz sections and C-symmetry criteria.
//
// T_phi has matrix entries T_{jk} = phi^(j - k). A conjugation C = A J makes T
// C-symmetric when C T = T^* C, i.e. A conj(T) = T^H A. That matrix identity
// is the oracle every coefficient criterion here is compared against.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hardy/conjugations.hpp"
#include "hardy/core.hpp"

namespace hardy {

/// Laurent coefficients phi^(n), |n| <= band; everything outside the band is zero.
class LaurentSymbol {
public:
    LaurentSymbol(std::size_t band, const std::map<int, Complex>& coeffs);

    static LaurentSymbol constant(Complex c) { return LaurentSymbol(0, {{0, c}}); }

    std::size_t band() const noexcept { return band_; }
    Complex coeff(long long n) const;
    /// Non-zero coefficients keyed by n, ascending.
    std::map<int, Complex> nonzero() const;

    friend bool operator==(const LaurentSymbol&, const LaurentSymbol&) = default;

private:
    std::size_t band_;
    std::vector<Complex> coeffs_;  // index n + band
};

class ToeplitzSection {
public:
    ToeplitzSection(LinearOp matrix, std::size_t source_band) : matrix_(std::move(matrix)), band_(source_band) {}

    std::size_t dim() const noexcept { return matrix_.dim(); }
    std::size_t source_band() const noexcept { return band_; }
    const LinearOp& matrix() const noexcept { return matrix_; }

private:
    LinearOp matrix_;
    std::size_t band_;
};

struct CriterionVerdict {
    bool holds = false;
    double max_violation = 0.0;

    friend bool operator==(const CriterionVerdict&, const CriterionVerdict&) = default;
};

struct SymmetryReport {
    double residual = 0.0;
    std::size_t window = 0;
    double tol = kDefaultTol;
    /// One-sided coefficient criterion phi^(n) w_n = phi^(-n); absent when none applies.
    std::optional<CriterionVerdict> one_sided;
    /// Two-index criterion over the whole section; diagonal conjugations only.
    std::optional<CriterionVerdict> entrywise;

    bool symmetric() const { return residual <= tol; }
    std::optional<bool> agree() const;
    std::optional<bool> entrywise_agree() const;

    friend bool operator==(const SymmetryReport&, const SymmetryReport&) = default;
};

/// phi^(n) = (1/K) sum_k samples_k e^{-2 pi i k n / K}, |n| <= band. Requires K >= 2 band + 1.
LaurentSymbol fourier_coefficients(std::span<const Complex> samples, std::size_t band);

/// T_{jk} = phi^(j - k), 0 <= j, k < dim.
ToeplitzSection build_toeplitz(const LaurentSymbol& symbol, std::size_t dim);

/// ||A conj(T) - T^H A||_F on the leading window x window block.
double symmetry_residual(const AntilinearOp& C, const ToeplitzSection& T, std::size_t window);

/// N for diagonal A; otherwise N - band - bandwidth(A), falling back to N when that is not positive.
std::size_t default_window(const AntilinearOp& C, std::size_t band);

/// max over 0 <= n <= band of |phi^(n) w_n - phi^(-n)|, weights w_0 .. w_band.
CriterionVerdict check_one_sided_condition(const LaurentSymbol& symbol, std::span<const Complex> weights,
                                           double tol = kDefaultTol);

/// phi^(n) lambda^n = phi^(-n).
CriterionVerdict check_ko_lee(const LaurentSymbol& symbol, Complex lambda, double tol = kDefaultTol);

/// phi^(n) zeta_n^{2n} = phi^(-n), 0 <= n <= band.
CriterionVerdict check_zeta_condition(const LaurentSymbol& symbol, const UnimodularSeq& zeta,
                                      double tol = kDefaultTol);

/// conj(d_j) phi^(j-k) = conj(d_k) phi^(k-j) for 0 <= j, k < diag.size(), |j - k| <= band.
CriterionVerdict check_entrywise_diagonal(const LaurentSymbol& symbol, std::span<const Complex> diag,
                                          double tol = kDefaultTol);

/// phi^(j-k) zeta_j^{2j} = zeta_k^{2k} phi^(k-j) on the dim x dim section.
CriterionVerdict check_entrywise_condition(const LaurentSymbol& symbol, const UnimodularSeq& zeta, std::size_t dim,
                                           double tol = kDefaultTol);

/// Completes phi^(n), n >= 1, with phi^(-n) = phi^(n) zeta_n^{2n}.
LaurentSymbol generate_symmetric_symbol(const std::map<int, Complex>& onesided, Complex phi0,
                                        const UnimodularSeq& zeta);

enum class ExploreMode {
    random_zeta,    // independent zeta_j per index
    constant_zeta,  // zeta_j = c for all j
    random_unitary  // C = U^* J U, U dense random; residual only
};

struct ExploreOptions {
    int trials = 100;
    std::size_t dim = 32;
    std::size_t band = 4;
    std::uint64_t seed = 0;
    ExploreMode mode = ExploreMode::random_zeta;
    double tol = kDefaultTol;
    /// Share of trials whose symbol is projected onto the one-sided criterion.
    double symmetric_fraction = 0.5;
};

struct ExplorationRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::optional<UnimodularSeq> zeta;
    LaurentSymbol symbol = LaurentSymbol::constant(0.0);
    bool projected = false;
    SymmetryReport report;
};

/// Runs one trial from its own derived seed.
ExplorationRecord explore_trial(const ExploreOptions& options, std::size_t trial);

/// Runs all trials (OpenMP over chunks) and hands records to `sink` in trial order.
void explore_problem(const ExploreOptions& options, const std::function<void(const ExplorationRecord&)>& sink);

std::vector<ExplorationRecord> explore_problem(const ExploreOptions& options);

}  // namespace hardy
