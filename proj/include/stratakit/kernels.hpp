#pragma once

#include "stratakit/polynomial.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace stratakit {

/// Polynomial flattened to double coefficients and a dense exponent table, for
/// batched evaluation over structure-of-arrays inputs.
struct CompiledPolynomial {
    std::size_t variables = 0;
    std::vector<double> coefficients;   // one per term
    std::vector<unsigned> exponents;    // terms x variables, row-major
};

CompiledPolynomial compile(const Polynomial& p);

/// columns[v][i] is variable v of sample i; writes count values to out.
/// Both variants use the same operation order without fused multiply-add, so
/// their results agree bit for bit.
void evaluate_batch_scalar(const CompiledPolynomial& p, const double* const* columns, std::size_t count, double* out);
void evaluate_batch_avx2(const CompiledPolynomial& p, const double* const* columns, std::size_t count, double* out);

enum class Kernel { Scalar, Avx2 };

bool avx2_supported() noexcept;
/// Selected once at first use: AVX2 when the CPU has it, unless STRATAKIT_KERNEL=scalar.
Kernel active_kernel() noexcept;
std::string_view to_string(Kernel k) noexcept;

void evaluate_batch(const CompiledPolynomial& p, const double* const* columns, std::size_t count, double* out);

/// Evaluates every polynomial on a batch of row-major points (count x variables).
std::vector<std::vector<double>> evaluate_rows(const std::vector<CompiledPolynomial>& polys,
                                               const std::vector<std::vector<double>>& rows);

} // namespace stratakit
