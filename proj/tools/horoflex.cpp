#include "horoflex/cli/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace horoflex::cli;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DatumSpec load(const std::string& path) {
    DatumSpec spec;
    try {
        spec = parse_spec(read_file(path));
    } catch (const SpecError& e) {
        throw SpecError(path + ": " + e.location(), std::string(e.what()).substr(e.location().size() + 2));
    }
    enforce_max_rank(spec, max_rank_from_env());
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flexibility certificates for affine horospherical varieties"};
    app.set_version_flag("--version", std::string("horoflex ") + HOROFLEX_VERSION);
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string file;
    auto* check = app.add_subcommand("check", "Decide the hypotheses and emit per-orbit grading witnesses");
    check->add_option("file", file, "Datum JSON file")->required();

    auto* saturate = app.add_subcommand("saturate", "Replace P by the Hilbert basis of ZP ∩ σ and re-check");
    saturate->add_option("file", file, "Datum JSON file")->required();

    auto* orbits = app.add_subcommand("orbits", "List orbits via faces of the weight cone");
    orbits->add_option("file", file, "Datum JSON file")->required();

    std::size_t face = 0;
    auto* grading = app.add_subcommand("grading", "Grading witness for one face");
    grading->add_option("file", file, "Datum JSON file")->required();
    grading->add_option("--face", face, "Face index as listed by `orbits`")->required();

    std::int64_t p = 0, q = 0, m = 0;
    unsigned bound = 10;
    auto* ehm = app.add_subcommand("ehm", "Verify the identities of the SL2-variety E_{h,m}, h = p/q");
    ehm->add_option("--p", p)->required();
    ehm->add_option("--q", q)->required();
    ehm->add_option("--m", m)->required();
    ehm->add_option("--bound", bound, "Degree bound for monomial enumeration")->capture_default_str();

    auto* examples = app.add_subcommand("examples", "Built-in examples");
    examples->require_subcommand(1);
    std::string name;
    auto* run = examples->add_subcommand("run", "Run one example");
    run->add_option("name", name)->required();
    auto* list = examples->add_subcommand("list", "List the examples");

    std::vector<std::string> images;
    unsigned lnd_bound = 64;
    auto* lnd = app.add_subcommand("lnd", "Certify a derivation as locally nilpotent and print exp(tD)");
    lnd->add_option("images", images, "var=polynomial, e.g. x=2*z z=y^2")->required();
    lnd->add_option("--bound", lnd_bound, "Largest power of D tried")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        Report report;
        if (*check) {
            report = run_check(load(file));
        } else if (*saturate) {
            report = run_saturate(load(file));
        } else if (*orbits) {
            report = run_orbits(load(file));
        } else if (*grading) {
            report = run_grading(load(file), face);
        } else if (*ehm) {
            report = run_ehm(p, q, m, bound);
        } else if (*run) {
            report = run_example(name);
        } else if (*list) {
            report = run_examples_list();
        } else if (*lnd) {
            report = run_lnd(images, lnd_bound);
        }
        std::cout << (format == "json" ? render_json(report) : render_text(report));
        return report.exit_code;
    } catch (const CertificateError& e) {
        std::cerr << "certificate error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitError;
}
