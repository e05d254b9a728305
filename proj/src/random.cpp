#include "hardy/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace hardy {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Complex complex_gaussian(Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

Complex random_unimodular(Rng& rng) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    return std::polar(1.0, angle(rng));
}

CoeffVector random_unit_vector(std::size_t dim, Rng& rng) {
    std::vector<Complex> v(dim);
    double sum = 0.0;
    for (Complex& a : v) {
        a = complex_gaussian(rng);
        sum += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(sum);
    for (Complex& a : v) {
        a *= scale;
    }
    return CoeffVector(std::move(v));
}

}  // namespace hardy
