#include "stratakit/errors.hpp"
#include "stratakit/report.hpp"
#include "stratakit/spec_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

using namespace stratakit;

namespace {

struct RunConfig {
    std::string command;
    std::string spec_path;
    std::uint64_t seed = 42;
    std::size_t samples = 10000;
    std::optional<double> tol;
    std::string which = "coisotropic";
    std::string output_path;
};

int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::NonOrthogonalGenerator:
    case ErrorKind::InfiniteFiniteGroup:
    case ErrorKind::IncompatibleBlocks:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NonInvariantPolynomial:
    case ErrorKind::ClassNotFound:
        return 1;
    case ErrorKind::NonProductStabilizer: return 2;
    case ErrorKind::CoisotropyIdentityViolation: return 4;
    case ErrorKind::VerificationFailure: return 5;
    default: return 3;
    }
}

void emit(const RunConfig& cfg, const std::string& content) {
    if (cfg.output_path.empty())
        std::cout << content;
    else
        write_atomically(cfg.output_path, content);
}

void summarize(const IsotropyLattice& lattice) {
    if (lattice.size() == 0) return;
    std::cerr << "classes:";
    for (const auto& s : lattice.strata()) std::cerr << ' ' << s.cls.id << "(dim " << s.dim_stratum << ')';
    std::cerr << "\nprincipal: " << lattice.cls(lattice.principal()).id << '\n';
}

StratLattice selected_lattice(const RunConfig& cfg, const IsotropyLattice& lattice) {
    if (cfg.which == "symplectic") return symplectic_lattice(lattice);
    if (cfg.which == "coisotropic") return coisotropic_lattice(lattice);
    const std::string prefix = "secondary:";
    if (cfg.which.rfind(prefix, 0) == 0) return secondary_lattice(cfg.which.substr(prefix.size()), lattice);
    fail(ErrorKind::ClassNotFound, "--which must be symplectic, coisotropic or secondary:<class-id>, got '" + cfg.which + "'");
}

int run(const RunConfig& cfg) {
    ActionSpec spec = load_spec_file(cfg.spec_path);
    if (cfg.tol) spec = spec.with_tolerance(*cfg.tol);
    const auto lattice = build_isotropy_lattice(spec, cfg.seed);
    const RunOptions opts{cfg.seed, cfg.samples};

    if (cfg.command == "lattice") {
        summarize(lattice);
        emit(cfg, lattice_report(lattice, opts).dump(2) + "\n");
        return 0;
    }
    if (cfg.command == "reduce") {
        summarize(lattice);
        emit(cfg, reduce_report(lattice, opts).dump(2) + "\n");
        return 0;
    }
    if (cfg.command == "verify") {
        std::vector<std::string> failures;
        const auto report = verify_report(lattice, opts, failures);
        emit(cfg, report.dump(2) + "\n");
        if (failures.empty()) return 0;
        for (const auto& f : failures) std::cerr << "VerificationFailure: " << f << '\n';
        return exit_code(ErrorKind::VerificationFailure);
    }
    emit(cfg, to_dot(selected_lattice(cfg, lattice)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("STRATAKIT_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "STRATAKIT_SEED must be a nonnegative integer\n";
            return 1;
        }
    }

    CLI::App app{"Orbit-type, symplectic and coisotropic stratifications of linear torus-by-finite actions"};
    app.add_option("command", cfg.command, "lattice | reduce | verify | export-dot")
        ->required()
        ->check(CLI::IsMember({"lattice", "reduce", "verify", "export-dot"}));
    app.add_option("spec", cfg.spec_path, "action-spec JSON document")->required();
    app.add_option("--seed", cfg.seed, "random seed (default 42, or STRATAKIT_SEED)");
    app.add_option("--samples", cfg.samples, "sampling budget")->check(CLI::PositiveNumber);
    app.add_option("--tol", cfg.tol, "numerical tolerance (overrides the spec)")->check(CLI::PositiveNumber);
    app.add_option("--which", cfg.which, "export-dot lattice: symplectic | coisotropic | secondary:<class-id>");
    app.add_option("--out", cfg.output_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return run(cfg);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
