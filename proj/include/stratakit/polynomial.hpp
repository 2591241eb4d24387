#pragma once

#include "stratakit/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace stratakit {

struct Monomial {
    Rational coefficient;
    std::vector<unsigned> exponents;
};

/// Sparse polynomial with rational coefficients in a fixed number of variables.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t variables) : variables_(variables) {}

    /// Adds c * x^e, merging with an existing term of the same exponent.
    void add_term(const Rational& coefficient, std::vector<unsigned> exponents);

    std::size_t variables() const noexcept { return variables_; }
    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    unsigned degree() const;

    Rational evaluate(std::span<const Rational> x) const;
    double evaluate(std::span<const double> x) const;

private:
    std::size_t variables_ = 0;
    std::vector<Monomial> terms_;
};

struct NamedPolynomial {
    std::string name;
    Polynomial polynomial;
};

enum class RelationKind { Equality, NonNegative };

/// Identity among invariant values: polynomial == 0 or polynomial >= 0, in the
/// invariants' declaration order as variables.
struct RelationDecl {
    std::string name;
    RelationKind kind = RelationKind::Equality;
    Polynomial polynomial;
};

} // namespace stratakit
