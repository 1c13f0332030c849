#include "horoflex/cli/spec_io.hpp"

#include <cstdlib>
#include <limits>

namespace horoflex::cli {

using nlohmann::json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

int read_rank(const json& doc, const char* key) {
    const std::string where = std::string("/") + key;
    if (!doc.contains(key)) throw SpecError(where, "missing required field");
    const json& v = doc.at(key);
    if (!v.is_number_integer()) throw SpecError(where, "expected an integer");
    const auto r = v.get<std::int64_t>();
    if (r < 0 || r > 64) throw SpecError(where, "rank must lie in [0, 64]");
    return static_cast<int>(r);
}

}  // namespace

DatumSpec parse_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw SpecError(line_column(text, at), std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SpecError("/", "expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "torus_rank" && key != "dominant_rank" && key != "generators" && key != "label") {
            throw SpecError("/" + key, "unknown field");
        }
    }

    DatumSpec spec;
    spec.torus_rank = read_rank(doc, "torus_rank");
    spec.dominant_rank = read_rank(doc, "dominant_rank");
    const int n = spec.torus_rank + spec.dominant_rank;
    if (n == 0) throw SpecError("/torus_rank", "ambient rank torus_rank + dominant_rank must be positive");

    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw SpecError("/label", "expected a string");
        spec.label = doc["label"].get<std::string>();
    }

    if (!doc.contains("generators")) throw SpecError("/generators", "missing required field");
    const json& gens = doc["generators"];
    if (!gens.is_array()) throw SpecError("/generators", "expected an array of integer arrays");
    if (gens.empty()) throw SpecError("/generators", "generator list is empty");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string where = "/generators/" + std::to_string(i);
        const json& g = gens[i];
        if (!g.is_array()) throw SpecError(where, "expected an array of integers");
        if (g.size() != static_cast<std::size_t>(n)) {
            throw SpecError(where, "rank mismatch: " + std::to_string(g.size()) +
                                       " coordinates, expected torus_rank + dominant_rank = " + std::to_string(n));
        }
        std::vector<std::int64_t> coords;
        for (std::size_t k = 0; k < g.size(); ++k) {
            const std::string at = where + "/" + std::to_string(k);
            if (!g[k].is_number_integer()) throw SpecError(at, "expected an integer");
            if (g[k].is_number_unsigned() && g[k].get<std::uint64_t>() >
                                                 static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
                throw SpecError(at, "integer out of range");
            }
            const auto x = g[k].get<std::int64_t>();
            if (static_cast<int>(k) >= spec.torus_rank && x < 0) {
                throw SpecError(at, "dominance violation: fundamental-weight coefficient " + std::to_string(x) +
                                        " is negative");
            }
            coords.push_back(x);
        }
        spec.generators.push_back(std::move(coords));
    }
    return spec;
}

nlohmann::ordered_json to_json(const DatumSpec& spec) {
    nlohmann::ordered_json j;
    j["torus_rank"] = spec.torus_rank;
    j["dominant_rank"] = spec.dominant_rank;
    j["generators"] = spec.generators;
    if (spec.label) j["label"] = *spec.label;
    return j;
}

std::string serialize_spec(const DatumSpec& spec) {
    return to_json(spec).dump(2);
}

HorosphericalDatum to_datum(const DatumSpec& spec) {
    std::vector<LatticeVector> gens;
    for (const auto& g : spec.generators) {
        LatticeVector v(static_cast<Eigen::Index>(g.size()));
        for (std::size_t k = 0; k < g.size(); ++k) v(static_cast<Eigen::Index>(k)) = Integer(g[k]);
        gens.push_back(std::move(v));
    }
    return HorosphericalDatum(spec.torus_rank, spec.dominant_rank, std::move(gens));
}

DatumSpec from_datum(const HorosphericalDatum& d, std::optional<std::string> label) {
    DatumSpec spec{d.torus_rank(), d.dominant_rank(), {}, std::move(label)};
    for (const auto& g : d.generators()) {
        std::vector<std::int64_t> coords;
        for (Eigen::Index k = 0; k < g.size(); ++k) {
            if (!g(k).is_zero() && (g(k) > std::numeric_limits<std::int64_t>::max() ||
                                    g(k) < std::numeric_limits<std::int64_t>::min())) {
                throw std::overflow_error("from_datum: coordinate does not fit in 64 bits");
            }
            coords.push_back(g(k).convert_to<std::int64_t>());
        }
        spec.generators.push_back(std::move(coords));
    }
    return spec;
}

int max_rank_from_env() {
    const char* raw = std::getenv("HOROFLEX_MAX_RANK");
    if (!raw || !*raw) return 6;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1) throw SpecError("HOROFLEX_MAX_RANK", "expected a positive integer, got '" + std::string(raw) + "'");
    return static_cast<int>(v);
}

void enforce_max_rank(const DatumSpec& spec, int max_rank) {
    const int n = spec.torus_rank + spec.dominant_rank;
    if (n > max_rank) {
        throw SpecError("/torus_rank", "ambient rank " + std::to_string(n) + " exceeds HOROFLEX_MAX_RANK = " +
                                           std::to_string(max_rank));
    }
}

nlohmann::ordered_json integer_json(const Integer& x) {
    if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

nlohmann::ordered_json vector_json(const LatticeVector& v) {
    auto arr = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(integer_json(v(i)));
    return arr;
}

}  // namespace horoflex::cli
