#include "stratakit/poset.hpp"

namespace stratakit {

Relation Relation::transitive_closure() const {
    Relation c = *this;
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t i = 0; i < n_; ++i) {
            if (!c(i, k)) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (c(k, j)) c.set(i, j);
        }
    return c;
}

std::vector<Edge> Relation::transitive_reduction() const {
    const Relation c = transitive_closure();
    std::vector<Edge> out;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
            if (a == b || !c(a, b)) continue;
            bool covered = false;
            for (std::size_t m = 0; m < n_ && !covered; ++m)
                covered = m != a && m != b && c(a, m) && c(m, b);
            if (!covered) out.emplace_back(a, b);
        }
    return out;
}

bool Relation::is_acyclic() const {
    const Relation c = transitive_closure();
    for (std::size_t i = 0; i < n_; ++i)
        if (c(i, i)) return false;
    return true;
}

std::vector<Edge> Relation::edges() const {
    std::vector<Edge> out;
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if ((*this)(a, b)) out.emplace_back(a, b);
    return out;
}

Relation relation_from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Relation r(n);
    for (auto [a, b] : edges) r.set(a, b);
    return r;
}

} // namespace stratakit
