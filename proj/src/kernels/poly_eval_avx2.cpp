#include "stratakit/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define STRATAKIT_HAVE_X86 1
#endif

namespace stratakit {

#ifdef STRATAKIT_HAVE_X86

__attribute__((target("avx2"))) void evaluate_batch_avx2(const CompiledPolynomial& p, const double* const* columns,
                                                         std::size_t count, double* out) {
    const std::size_t terms = p.coefficients.size();
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t t = 0; t < terms; ++t) {
            __m256d prod = _mm256_set1_pd(p.coefficients[t]);
            const unsigned* e = &p.exponents[t * p.variables];
            for (std::size_t v = 0; v < p.variables; ++v) {
                if (e[v] == 0) continue;
                const __m256d x = _mm256_loadu_pd(columns[v] + i);
                for (unsigned r = 0; r < e[v]; ++r) prod = _mm256_mul_pd(prod, x);
            }
            acc = _mm256_add_pd(acc, prod);
        }
        _mm256_storeu_pd(out + i, acc);
    }
    if (i < count) {
        std::vector<const double*> tail(p.variables);
        for (std::size_t v = 0; v < p.variables; ++v) tail[v] = columns[v] + i;
        evaluate_batch_scalar(p, tail.data(), count - i, out + i);
    }
}

#else

void evaluate_batch_avx2(const CompiledPolynomial& p, const double* const* columns, std::size_t count, double* out) {
    evaluate_batch_scalar(p, columns, count, out);
}

#endif

} // namespace stratakit
