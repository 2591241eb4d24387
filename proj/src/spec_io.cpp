#include "stratakit/spec_io.hpp"

#include "stratakit/errors.hpp"
#include "stratakit/harness.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace stratakit {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    fail(ErrorKind::ParseError, where + ": " + what);
}

Rational rational_at(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const Error& e) {
            schema_error(where, e.what());
        }
    }
    schema_error(where, "expected an integer or a \"p/q\" string");
}

long long integer_at(const json& v, const std::string& where) {
    if (!v.is_number_integer()) schema_error(where, "expected an integer");
    return v.get<long long>();
}

const json& array_at(const json& v, const std::string& where) {
    if (!v.is_array()) schema_error(where, "expected an array");
    return v;
}

std::vector<unsigned> parse_exponents(const std::string& key, std::size_t variables, const std::string& where) {
    std::vector<unsigned> exps;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos)
            schema_error(where, "exponent key '" + key + "' must be comma-separated nonnegative integers");
        exps.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (exps.size() != variables)
        schema_error(where, "exponent key '" + key + "' has " + std::to_string(exps.size()) + " entries, expected " +
                                std::to_string(variables));
    return exps;
}

Polynomial parse_polynomial(const json& terms, std::size_t variables, const std::string& where) {
    if (!terms.is_object()) schema_error(where, "expected an object mapping exponent keys to coefficients");
    Polynomial p(variables);
    for (const auto& [key, value] : terms.items())
        p.add_term(rational_at(value, where + "[" + key + "]"), parse_exponents(key, variables, where));
    return p;
}

std::string name_at(const json& entry, const std::string& where) {
    if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string())
        schema_error(where, "expected an object with a string \"name\"");
    return entry["name"].get<std::string>();
}

ActionSpec build(const json& doc) {
    if (!doc.is_object()) schema_error("document", "expected a JSON object");
    if (!doc.contains("n")) schema_error("document", "missing required field \"n\"");
    const long long n_value = integer_at(doc["n"], "n");
    if (n_value <= 0) schema_error("n", "must be a positive integer");
    const auto n = static_cast<std::size_t>(n_value);

    std::vector<QMatrix> generators;
    if (doc.contains("finite_generators")) {
        const auto& gens = array_at(doc["finite_generators"], "finite_generators");
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const std::string where = "finite_generators[" + std::to_string(g) + "]";
            const auto& rows = array_at(gens[g], where);
            if (rows.size() != n) schema_error(where, "expected " + std::to_string(n) + " rows");
            QMatrix m(n, n);
            for (std::size_t r = 0; r < n; ++r) {
                const auto& row = array_at(rows[r], where + "[" + std::to_string(r) + "]");
                if (row.size() != n) schema_error(where + "[" + std::to_string(r) + "]", "expected " + std::to_string(n) + " entries");
                for (std::size_t c = 0; c < n; ++c)
                    m(r, c) = rational_at(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
            }
            generators.push_back(std::move(m));
        }
    }

    std::vector<TorusBlock> blocks;
    std::vector<std::vector<long long>> weights;
    if (doc.contains("torus")) {
        const auto& torus = doc["torus"];
        if (!torus.is_object()) schema_error("torus", "expected an object");
        if (torus.contains("blocks")) {
            const auto& bl = array_at(torus["blocks"], "torus.blocks");
            for (std::size_t j = 0; j < bl.size(); ++j) {
                const std::string where = "torus.blocks[" + std::to_string(j) + "]";
                const auto& pair = array_at(bl[j], where);
                if (pair.size() != 2) schema_error(where, "expected a pair of coordinate indices");
                const long long a = integer_at(pair[0], where), b = integer_at(pair[1], where);
                if (a < 1 || b < 1 || a > n_value || b > n_value)
                    schema_error(where, "coordinate indices must lie in 1.." + std::to_string(n));
                blocks.push_back({static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)});
            }
        }
        if (torus.contains("weights")) {
            const auto& ws = array_at(torus["weights"], "torus.weights");
            for (std::size_t i = 0; i < ws.size(); ++i) {
                const std::string where = "torus.weights[" + std::to_string(i) + "]";
                const auto& row = array_at(ws[i], where);
                std::vector<long long> r;
                for (std::size_t j = 0; j < row.size(); ++j) r.push_back(integer_at(row[j], where));
                weights.push_back(std::move(r));
            }
        }
    }

    double tolerance = kDefaultTolerance;
    if (doc.contains("tolerance")) {
        if (!doc["tolerance"].is_number()) schema_error("tolerance", "expected a number");
        tolerance = doc["tolerance"].get<double>();
        if (tolerance < 0) schema_error("tolerance", "must be nonnegative");
    }
    std::size_t cap = kDefaultGroupCap;
    if (doc.contains("group_cap")) {
        const long long c = integer_at(doc["group_cap"], "group_cap");
        if (c < 1) schema_error("group_cap", "must be positive");
        cap = static_cast<std::size_t>(c);
    }

    InvariantData data;
    if (doc.contains("invariants")) {
        const auto& inv = array_at(doc["invariants"], "invariants");
        for (std::size_t i = 0; i < inv.size(); ++i) {
            const std::string where = "invariants[" + std::to_string(i) + "]";
            auto name = name_at(inv[i], where);
            if (!inv[i].contains("terms")) schema_error(where, "missing \"terms\"");
            data.invariants.push_back({std::move(name), parse_polynomial(inv[i]["terms"], 2 * n, where + ".terms")});
        }
    }
    if (doc.contains("relations")) {
        const auto& rel = array_at(doc["relations"], "relations");
        for (std::size_t i = 0; i < rel.size(); ++i) {
            const std::string where = "relations[" + std::to_string(i) + "]";
            RelationDecl decl;
            decl.name = name_at(rel[i], where);
            const std::string kind = rel[i].value("kind", "eq");
            if (kind == "eq")
                decl.kind = RelationKind::Equality;
            else if (kind == "nonneg")
                decl.kind = RelationKind::NonNegative;
            else
                schema_error(where + ".kind", "expected \"eq\" or \"nonneg\"");
            if (!rel[i].contains("terms")) schema_error(where, "missing \"terms\"");
            decl.polynomial = parse_polynomial(rel[i]["terms"], data.invariants.size(), where + ".terms");
            data.relations.push_back(std::move(decl));
        }
    }
    if (doc.contains("fixtures")) {
        const auto& fx = doc["fixtures"];
        if (!fx.is_object()) schema_error("fixtures", "expected an object");
        if (fx.contains("regions")) {
            if (!fx["regions"].is_string()) schema_error("fixtures.regions", "expected a string");
            data.region_fixture = fx["regions"].get<std::string>();
        }
    }

    ActionSpec spec(n, std::move(generators), std::move(blocks), std::move(weights), tolerance, cap, std::move(data));
    check_invariance(spec, spec.invariant_data().invariants);
    return spec;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

ActionSpec load_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte);
        fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
    try {
        return build(doc);
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, e.what());
    }
}

ActionSpec load_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return load_spec(ss.str());
}

} // namespace stratakit
