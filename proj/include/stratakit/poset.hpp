#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace stratakit {

using Edge = std::pair<std::size_t, std::size_t>;

/// Dense boolean relation on nodes 0..n-1; rel(a, b) reads "a -> b".
class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t n) : n_(n), bits_(n * n, false) {}

    std::size_t size() const noexcept { return n_; }
    bool operator()(std::size_t a, std::size_t b) const { return bits_[a * n_ + b]; }
    void set(std::size_t a, std::size_t b, bool value = true) { bits_[a * n_ + b] = value; }

    Relation transitive_closure() const;
    /// Edges a -> b of a strict order with no c such that a -> c -> b.
    /// Requires an acyclic relation; edges come out sorted by (a, b).
    std::vector<Edge> transitive_reduction() const;
    bool is_acyclic() const;
    std::vector<Edge> edges() const;

    bool operator==(const Relation&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<bool> bits_;
};

Relation relation_from_edges(std::size_t n, const std::vector<Edge>& edges);

} // namespace stratakit
