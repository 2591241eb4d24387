#include "stratakit/rng.hpp"

#include <cmath>
#include <numbers>

namespace stratakit {

double standard_normal(Rng& rng) {
    double u = uniform01(rng);
    while (u <= 0.0) u = uniform01(rng);
    const double v = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

Rational small_rational(Rng& rng, long max_den) {
    const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
    const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * den + 1)) - den;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

QVector random_in(const Subspace& space, Rng& rng) {
    QVector coeffs(space.dim());
    for (std::size_t i = 0; i < space.dim(); ++i) {
        Rational top(0);
        for (const auto& x : space.basis()[i]) top = std::max(top, Rational(abs(x)));
        coeffs[i] = small_rational(rng) / top;
    }
    return space.combine(coeffs);
}

Rational dyadic(double x, int bits) {
    const double scaled = std::nearbyint(std::ldexp(x, bits));
    Rational q(Integer(static_cast<long>(scaled)), Integer(1) << bits);
    q.canonicalize();
    return q;
}

std::vector<double> uniform_ball(Rng& rng, std::size_t d) {
    std::vector<double> v(d);
    if (d == 0) return v;
    double norm = 0.0;
    do {
        norm = 0.0;
        for (auto& x : v) {
            x = standard_normal(rng);
            norm += x * x;
        }
    } while (norm == 0.0);
    const double radius = std::pow(uniform01(rng), 1.0 / static_cast<double>(d)) / std::sqrt(norm);
    for (auto& x : v) x *= radius;
    return v;
}

} // namespace stratakit
