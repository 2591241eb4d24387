#include "stratakit/polynomial.hpp"

#include "stratakit/errors.hpp"

#include <algorithm>

namespace stratakit {

void Polynomial::add_term(const Rational& coefficient, std::vector<unsigned> exponents) {
    if (exponents.size() != variables_)
        fail(ErrorKind::DimensionMismatch, "monomial has " + std::to_string(exponents.size()) + " exponents, expected " +
                                               std::to_string(variables_));
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Monomial& m) { return m.exponents == exponents; });
    if (it != terms_.end()) {
        it->coefficient += coefficient;
        if (sgn(it->coefficient) == 0) terms_.erase(it);
        return;
    }
    if (sgn(coefficient) != 0) terms_.push_back({coefficient, std::move(exponents)});
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) {
        unsigned s = 0;
        for (auto e : t.exponents) s += e;
        d = std::max(d, s);
    }
    return d;
}

Rational Polynomial::evaluate(std::span<const Rational> x) const {
    if (x.size() != variables_) fail(ErrorKind::DimensionMismatch, "polynomial evaluated at wrong dimension");
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational prod = t.coefficient;
        for (std::size_t v = 0; v < variables_; ++v)
            for (unsigned e = 0; e < t.exponents[v]; ++e) prod *= x[v];
        sum += prod;
    }
    return sum;
}

double Polynomial::evaluate(std::span<const double> x) const {
    if (x.size() != variables_) fail(ErrorKind::DimensionMismatch, "polynomial evaluated at wrong dimension");
    double sum = 0.0;
    for (const auto& t : terms_) {
        double prod = t.coefficient.get_d();
        for (std::size_t v = 0; v < variables_; ++v)
            for (unsigned e = 0; e < t.exponents[v]; ++e) prod *= x[v];
        sum += prod;
    }
    return sum;
}

} // namespace stratakit
