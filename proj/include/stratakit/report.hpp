#pragma once

#include "stratakit/harness.hpp"
#include "stratakit/momentum.hpp"
#include "stratakit/reduced.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace stratakit {

using Json = nlohmann::ordered_json;

struct RunOptions {
    std::uint64_t seed = 42;
    std::size_t samples = 10000;
};

/// Report documents share the top-level layout
/// {"schema": 1, "command", "seed", "samples", "classes", "strata", "pieces", "lattices", "checks"}.
Json lattice_report(const IsotropyLattice& lattice, const RunOptions& opts);
Json reduce_report(const IsotropyLattice& lattice, const RunOptions& opts);

/// Runs every verification; `failures` receives the names of failed checks.
Json verify_report(const IsotropyLattice& lattice, const RunOptions& opts, std::vector<std::string>& failures);

Json to_json(const StratLattice& lattice);
Json to_json(const Piece& piece, const IsotropyLattice& lattice);

/// DOT digraph; node ids are piece labels with a dim attribute, edges R -> S for R in the frontier of S.
std::string to_dot(const StratLattice& lattice);

/// Writes through a temporary file in the same directory, then renames.
void write_atomically(const std::filesystem::path& path, const std::string& content);

} // namespace stratakit
