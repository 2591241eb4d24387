#include "stratakit/kernels.hpp"

namespace stratakit {

CompiledPolynomial compile(const Polynomial& p) {
    CompiledPolynomial c;
    c.variables = p.variables();
    for (const auto& term : p.terms()) {
        c.coefficients.push_back(term.coefficient.get_d());
        c.exponents.insert(c.exponents.end(), term.exponents.begin(), term.exponents.end());
    }
    return c;
}

void evaluate_batch_scalar(const CompiledPolynomial& p, const double* const* columns, std::size_t count, double* out) {
    const std::size_t terms = p.coefficients.size();
    for (std::size_t i = 0; i < count; ++i) {
        double acc = 0.0;
        for (std::size_t t = 0; t < terms; ++t) {
            double prod = p.coefficients[t];
            const unsigned* e = &p.exponents[t * p.variables];
            for (std::size_t v = 0; v < p.variables; ++v)
                for (unsigned r = 0; r < e[v]; ++r) prod = prod * columns[v][i];
            acc = acc + prod;
        }
        out[i] = acc;
    }
}

} // namespace stratakit
