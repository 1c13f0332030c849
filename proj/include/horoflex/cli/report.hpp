#ifndef HOROFLEX_CLI_REPORT_HPP
#define HOROFLEX_CLI_REPORT_HPP

#include "horoflex/cli/spec_io.hpp"
#include "horoflex/semigroup/variety.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace horoflex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotCovered = 2;
inline constexpr int kSchemaVersion = 1;

/// A witness failed re-verification while the report was being assembled.
class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Machine-readable body plus a human-readable rendering. The body always
/// carries "schema", "tool", "command" and "timing_ms".
struct Report {
    std::string command;
    nlohmann::ordered_json body;
    std::string text;
    int exit_code = kExitOk;
};

std::string render_json(const Report& r, bool include_timing = true);
std::string render_text(const Report& r);

/// Per-face witness rows. Each witness is re-checked first; a violation
/// throws CertificateError.
nlohmann::ordered_json witness_table(const HorosphericalDatum& d, const std::vector<GradingWitness>& witnesses);

Report run_check(const DatumSpec& spec);
Report run_saturate(const DatumSpec& spec);
Report run_orbits(const DatumSpec& spec);
Report run_grading(const DatumSpec& spec, std::size_t face_index);
Report run_ehm(std::int64_t p, std::int64_t q, std::int64_t m, unsigned bound = 10);
Report run_danielewski();

/// Certifies local nilpotency of the derivation given by `var=image` pairs in
/// the plain-text polynomial syntax and prints exp(t·D) when certified.
Report run_lnd(const std::vector<std::string>& assignments, unsigned bound = 64);

/// name -> one-line description, in registry order.
const std::vector<std::pair<std::string, std::string>>& example_registry();
Report run_example(std::string_view name);
Report run_examples_list();

}  // namespace horoflex::cli

#endif  // HOROFLEX_CLI_REPORT_HPP
