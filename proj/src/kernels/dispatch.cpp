#include "stratakit/kernels.hpp"

#include <cstdlib>
#include <string>

namespace stratakit {

bool avx2_supported() noexcept {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Kernel active_kernel() noexcept {
    static const Kernel selected = [] {
        const char* env = std::getenv("STRATAKIT_KERNEL");
        if (env && std::string(env) == "scalar") return Kernel::Scalar;
        return avx2_supported() ? Kernel::Avx2 : Kernel::Scalar;
    }();
    return selected;
}

std::string_view to_string(Kernel k) noexcept { return k == Kernel::Avx2 ? "avx2" : "scalar"; }

void evaluate_batch(const CompiledPolynomial& p, const double* const* columns, std::size_t count, double* out) {
    if (active_kernel() == Kernel::Avx2)
        evaluate_batch_avx2(p, columns, count, out);
    else
        evaluate_batch_scalar(p, columns, count, out);
}

std::vector<std::vector<double>> evaluate_rows(const std::vector<CompiledPolynomial>& polys,
                                               const std::vector<std::vector<double>>& rows) {
    std::vector<std::vector<double>> values(polys.size(), std::vector<double>(rows.size()));
    if (rows.empty() || polys.empty()) return values;
    const std::size_t vars = polys.front().variables;
    std::vector<std::vector<double>> columns(vars, std::vector<double>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t v = 0; v < vars; ++v) columns[v][i] = rows[i][v];
    std::vector<const double*> ptrs(vars);
    for (std::size_t v = 0; v < vars; ++v) ptrs[v] = columns[v].data();
    for (std::size_t j = 0; j < polys.size(); ++j) evaluate_batch(polys[j], ptrs.data(), rows.size(), values[j].data());
    return values;
}

} // namespace stratakit
