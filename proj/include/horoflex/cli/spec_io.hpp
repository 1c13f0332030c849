#ifndef HOROFLEX_CLI_SPEC_IO_HPP
#define HOROFLEX_CLI_SPEC_IO_HPP

#include "horoflex/semigroup/datum.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace horoflex::cli {

/// Input error with its location: "line L, column C" for syntax errors, a
/// JSON pointer such as "/generators/1/0" for schema errors.
class SpecError : public std::invalid_argument {
public:
    SpecError(std::string location, const std::string& what)
        : std::invalid_argument(location + ": " + what), location_(std::move(location)) {}
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

/// The datum file schema:
///
///     { "torus_rank": 1, "dominant_rank": 0, "generators": [[2], [3]], "label": "cusp" }
///
/// `label` is optional; any other key is rejected.
struct DatumSpec {
    int torus_rank = 0;
    int dominant_rank = 0;
    std::vector<std::vector<std::int64_t>> generators;
    std::optional<std::string> label;

    friend bool operator==(const DatumSpec&, const DatumSpec&) = default;
};

/// Parses and validates (ranks, generator lengths, dominance, nonempty).
DatumSpec parse_spec(std::string_view text);

nlohmann::ordered_json to_json(const DatumSpec& spec);
std::string serialize_spec(const DatumSpec& spec);

HorosphericalDatum to_datum(const DatumSpec& spec);
DatumSpec from_datum(const HorosphericalDatum& d, std::optional<std::string> label = std::nullopt);

/// HOROFLEX_MAX_RANK, default 6.
int max_rank_from_env();

/// Throws SpecError when torus_rank + dominant_rank exceeds max_rank.
void enforce_max_rank(const DatumSpec& spec, int max_rank);

nlohmann::ordered_json integer_json(const Integer& x);
nlohmann::ordered_json vector_json(const LatticeVector& v);

}  // namespace horoflex::cli

#endif  // HOROFLEX_CLI_SPEC_IO_HPP
