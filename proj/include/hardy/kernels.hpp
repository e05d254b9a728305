#pragma once

// Dense kernels behind the operator algebra. Matrices are square, row-major,
// of order `dim`.
//
// `serial` is the plain reference: textbook loops, one running sum. It is kept
// for testing and benchmarking only. `parallel` is what the library calls; it
// splits work by output row under OpenMP and reduces per-row partials in a
// fixed order, so its results do not depend on the thread count.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hardy::kernels {

using Complex = std::complex<double>;

namespace serial {

std::vector<Complex> matvec(std::size_t dim, std::span<const Complex> a, std::span<const Complex> x);
std::vector<Complex> matmul(std::size_t dim, std::span<const Complex> a, std::span<const Complex> b);
double gram_residual(std::size_t dim, std::span<const Complex> a);
double symmetry_block_residual(std::size_t dim, std::span<const Complex> a, std::span<const Complex> t,
                               std::size_t window);

}  // namespace serial

namespace parallel {

std::vector<Complex> matvec(std::size_t dim, std::span<const Complex> a, std::span<const Complex> x);
std::vector<Complex> matmul(std::size_t dim, std::span<const Complex> a, std::span<const Complex> b);
/// ||A^H A - I||_F without forming A^H A.
double gram_residual(std::size_t dim, std::span<const Complex> a);
/// ||A conj(T) - T^H A||_F restricted to the leading window x window block.
double symmetry_block_residual(std::size_t dim, std::span<const Complex> a, std::span<const Complex> t,
                               std::size_t window);

}  // namespace parallel

}  // namespace hardy::kernels
