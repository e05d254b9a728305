#include "hardy/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hardy/kernels.hpp"
#include "hardy/random.hpp"

namespace hardy {

namespace {

CriterionVerdict verdict(double max_violation, double tol) { return {max_violation <= tol, max_violation}; }

}  // namespace

LaurentSymbol::LaurentSymbol(std::size_t band, const std::map<int, Complex>& coeffs)
    : band_(band), coeffs_(2 * band + 1) {
    for (const auto& [n, c] : coeffs) {
        if (static_cast<std::size_t>(std::abs(n)) > band_) {
            throw ValidationError("LaurentSymbol: coefficient index " + std::to_string(n) + " exceeds band " +
                                  std::to_string(band_));
        }
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw ValidationError("LaurentSymbol: non-finite coefficient at n = " + std::to_string(n));
        }
        coeffs_[static_cast<std::size_t>(n + static_cast<int>(band_))] = c;
    }
}

Complex LaurentSymbol::coeff(long long n) const {
    const long long b = static_cast<long long>(band_);
    if (n < -b || n > b) {
        return 0.0;
    }
    return coeffs_[static_cast<std::size_t>(n + b)];
}

std::map<int, Complex> LaurentSymbol::nonzero() const {
    std::map<int, Complex> out;
    const int b = static_cast<int>(band_);
    for (int n = -b; n <= b; ++n) {
        const Complex c = coeff(n);
        if (c != Complex{}) {
            out.emplace(n, c);
        }
    }
    return out;
}

std::optional<bool> SymmetryReport::agree() const {
    if (!one_sided) {
        return std::nullopt;
    }
    return one_sided->holds == symmetric();
}

std::optional<bool> SymmetryReport::entrywise_agree() const {
    if (!entrywise) {
        return std::nullopt;
    }
    return entrywise->holds == symmetric();
}

LaurentSymbol fourier_coefficients(std::span<const Complex> samples, std::size_t band) {
    const std::size_t k_count = samples.size();
    if (k_count < 2 * band + 1) {
        throw ValidationError("fourier_coefficients: " + std::to_string(k_count) + " samples alias band " +
                              std::to_string(band) + " (need at least " + std::to_string(2 * band + 1) + ")");
    }
    const long long K = static_cast<long long>(k_count);
    const long long b = static_cast<long long>(band);
    std::map<int, Complex> coeffs;
    for (long long n = -b; n <= b; ++n) {
        Complex acc = 0.0;
        for (long long k = 0; k < K; ++k) {
            // Reduce k n mod K first so the twiddle angle stays in [0, 2 pi).
            const long long r = ((k * n) % K + K) % K;
            acc += samples[static_cast<std::size_t>(k)] *
                   std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(K));
        }
        coeffs.emplace(static_cast<int>(n), acc / static_cast<double>(K));
    }
    return LaurentSymbol(band, coeffs);
}

ToeplitzSection build_toeplitz(const LaurentSymbol& symbol, std::size_t dim) {
    if (dim == 0) {
        throw ValidationError("build_toeplitz: dimension must be positive");
    }
    std::vector<Complex> e(dim * dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            e[j * dim + k] = symbol.coeff(static_cast<long long>(j) - static_cast<long long>(k));
        }
    }
    return ToeplitzSection(LinearOp(dim, std::move(e)), symbol.band());
}

double symmetry_residual(const AntilinearOp& C, const ToeplitzSection& T, std::size_t window) {
    if (C.dim() != T.dim()) {
        throw DimensionError("symmetry_residual", C.dim(), T.dim());
    }
    if (window == 0 || window > T.dim()) {
        throw ValidationError("symmetry_residual: window " + std::to_string(window) + " outside 1.." +
                              std::to_string(T.dim()));
    }
    return kernels::parallel::symmetry_block_residual(T.dim(), C.a_factor().data(), T.matrix().data(), window);
}

std::size_t default_window(const AntilinearOp& C, std::size_t band) {
    const std::size_t n = C.dim();
    const std::size_t b = bandwidth(C.a_factor());
    if (b == 0) {
        return n;
    }
    return band + b < n ? n - band - b : n;
}

CriterionVerdict check_one_sided_condition(const LaurentSymbol& symbol, std::span<const Complex> weights, double tol) {
    if (weights.size() < symbol.band() + 1) {
        throw ValidationError("one-sided condition: " + std::to_string(weights.size()) +
                              " weights do not cover band " + std::to_string(symbol.band()));
    }
    double worst = 0.0;
    for (std::size_t n = 0; n <= symbol.band(); ++n) {
        const long long k = static_cast<long long>(n);
        worst = std::max(worst, std::abs(symbol.coeff(k) * weights[n] - symbol.coeff(-k)));
    }
    return verdict(worst, tol);
}

CriterionVerdict check_ko_lee(const LaurentSymbol& symbol, Complex lambda, double tol) {
    const Complex l = require_unimodular(lambda, "lambda");
    std::vector<Complex> w(symbol.band() + 1);
    for (std::size_t n = 0; n < w.size(); ++n) {
        w[n] = unit_pow(l, static_cast<long long>(n));
    }
    return check_one_sided_condition(symbol, w, tol);
}

CriterionVerdict check_zeta_condition(const LaurentSymbol& symbol, const UnimodularSeq& zeta, double tol) {
    if (zeta.length() < symbol.band()) {
        throw ValidationError("zeta covers indices 1.." + std::to_string(zeta.length()) + " but the symbol band is " +
                              std::to_string(symbol.band()));
    }
    std::vector<Complex> w(symbol.band() + 1);
    for (std::size_t n = 0; n < w.size(); ++n) {
        w[n] = zeta.doubled_power(n);
    }
    return check_one_sided_condition(symbol, w, tol);
}

CriterionVerdict check_entrywise_diagonal(const LaurentSymbol& symbol, std::span<const Complex> diag, double tol) {
    const long long n = static_cast<long long>(diag.size());
    const long long b = static_cast<long long>(symbol.band());
    double worst = 0.0;
    for (long long j = 0; j < n; ++j) {
        for (long long k = std::max(0LL, j - b); k <= std::min(n - 1, j + b); ++k) {
            const Complex lhs = std::conj(diag[static_cast<std::size_t>(j)]) * symbol.coeff(j - k);
            const Complex rhs = std::conj(diag[static_cast<std::size_t>(k)]) * symbol.coeff(k - j);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return verdict(worst, tol);
}

CriterionVerdict check_entrywise_condition(const LaurentSymbol& symbol, const UnimodularSeq& zeta, std::size_t dim,
                                           double tol) {
    if (dim == 0 || zeta.length() + 1 < dim) {
        throw ValidationError("zeta covers indices 1.." + std::to_string(zeta.length()) + " but the section needs 1.." +
                              std::to_string(dim == 0 ? 0 : dim - 1));
    }
    std::vector<Complex> d(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        d[j] = std::conj(zeta.doubled_power(j));
    }
    return check_entrywise_diagonal(symbol, d, tol);
}

LaurentSymbol generate_symmetric_symbol(const std::map<int, Complex>& onesided, Complex phi0,
                                        const UnimodularSeq& zeta) {
    std::map<int, Complex> coeffs{{0, phi0}};
    std::size_t band = 0;
    for (const auto& [n, c] : onesided) {
        if (n < 1) {
            throw ValidationError("generate_symmetric_symbol: one-sided index " + std::to_string(n) + " must be >= 1");
        }
        const auto un = static_cast<std::size_t>(n);
        if (un > zeta.length()) {
            throw ValidationError("generate_symmetric_symbol: zeta does not cover index " + std::to_string(n), un);
        }
        coeffs[n] = c;
        coeffs[-n] = c * zeta.doubled_power(un);
        band = std::max(band, un);
    }
    return LaurentSymbol(band, coeffs);
}

namespace {

LaurentSymbol random_symbol(std::size_t band, Rng& rng) {
    std::map<int, Complex> coeffs;
    const int b = static_cast<int>(band);
    for (int n = -b; n <= b; ++n) {
        coeffs.emplace(n, complex_gaussian(rng) / (1.0 + std::abs(n)));
    }
    return LaurentSymbol(band, coeffs);
}

void validate(const ExploreOptions& options) {
    if (options.trials < 0) {
        throw ValidationError("explore: trials must be non-negative");
    }
    if (options.band < 1 || options.dim <= options.band) {
        throw ValidationError("explore: need N > M >= 1, got N = " + std::to_string(options.dim) +
                              ", M = " + std::to_string(options.band));
    }
}

}  // namespace

ExplorationRecord explore_trial(const ExploreOptions& options, std::size_t trial) {
    validate(options);
    ExplorationRecord rec;
    rec.trial = trial;
    rec.seed = derive_seed(options.seed, trial);
    Rng rng(rec.seed);
    const std::size_t n = options.dim;
    const std::size_t m = options.band;

    if (options.mode == ExploreMode::random_unitary) {
        const LinearOp U = random_unitary(n, rng());
        const AntilinearOp C = build_from_unitary(U);
        rec.symbol = random_symbol(m, rng);
        rec.report.tol = options.tol;
        rec.report.window = default_window(C, m);
        rec.report.residual = symmetry_residual(C, build_toeplitz(rec.symbol, n), rec.report.window);
        return rec;
    }

    std::vector<Complex> values(n - 1);
    if (options.mode == ExploreMode::constant_zeta) {
        std::fill(values.begin(), values.end(), random_unimodular(rng));
    } else {
        for (Complex& z : values) {
            z = random_unimodular(rng);
        }
    }
    UnimodularSeq zeta(std::move(values));
    LaurentSymbol symbol = random_symbol(m, rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    rec.projected = coin(rng) < options.symmetric_fraction;
    if (rec.projected) {
        std::map<int, Complex> onesided;
        for (int k = 1; k <= static_cast<int>(m); ++k) {
            onesided.emplace(k, symbol.coeff(k));
        }
        symbol = generate_symmetric_symbol(onesided, symbol.coeff(0), zeta);
    }

    const AntilinearOp C = build_c_zeta(zeta);
    rec.report.tol = options.tol;
    rec.report.window = default_window(C, m);
    rec.report.residual = symmetry_residual(C, build_toeplitz(symbol, n), rec.report.window);
    rec.report.one_sided = check_zeta_condition(symbol, zeta, options.tol);
    rec.report.entrywise = check_entrywise_condition(symbol, zeta, n, options.tol);
    rec.symbol = std::move(symbol);
    rec.zeta = std::move(zeta);
    return rec;
}

void explore_problem(const ExploreOptions& options, const std::function<void(const ExplorationRecord&)>& sink) {
    validate(options);
    constexpr std::size_t kChunk = 256;
    const std::size_t total = static_cast<std::size_t>(options.trials);
    for (std::size_t start = 0; start < total; start += kChunk) {
        const std::size_t count = std::min(kChunk, total - start);
        std::vector<ExplorationRecord> chunk(count);
        const auto c = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < c; ++i) {
            chunk[static_cast<std::size_t>(i)] = explore_trial(options, start + static_cast<std::size_t>(i));
        }
        for (const ExplorationRecord& rec : chunk) {
            sink(rec);
        }
    }
}

std::vector<ExplorationRecord> explore_problem(const ExploreOptions& options) {
    std::vector<ExplorationRecord> out;
    out.reserve(static_cast<std::size_t>(std::max(options.trials, 0)));
    explore_problem(options, [&out](const ExplorationRecord& rec) { out.push_back(rec); });
    return out;
}

}  // namespace hardy
