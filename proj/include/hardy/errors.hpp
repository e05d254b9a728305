#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hardy {

/// Operands whose truncation orders disagree.
class DimensionError : public std::invalid_argument {
public:
    DimensionError(const std::string& what, std::size_t lhs, std::size_t rhs)
        : std::invalid_argument(what + ": dimension " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Input that violates a construction invariant (non-unimodular entry, non-unitary matrix, ...).
/// `index` names the offending entry when there is one.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what, std::optional<std::size_t> index = std::nullopt,
                             std::optional<double> residual = std::nullopt)
        : std::invalid_argument(what), index_(index), residual_(residual) {}

    std::optional<std::size_t> index() const noexcept { return index_; }
    std::optional<double> residual() const noexcept { return residual_; }

private:
    std::optional<std::size_t> index_;
    std::optional<double> residual_;
};

}  // namespace hardy
