// Command-line front end: construct, verify, certify and export embeddings.
//
//   equibouquet construct --scheme a|b|b2r3|m3 [--genus G] [--compactify] [--out FILE]
//   equibouquet verify    [--in] FILE [--samples N] [--tol-geom X] [--tol-orth X] [--seed S] [--out FILE]
//   equibouquet certify   [--in] FILE [--out FILE]
//   equibouquet export    [--in] FILE [--format off|csv|json] [--samples N] [--out FILE]
//
// Exit codes: 0 success, 1 check or certificate failure, 2 malformed input or configuration.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "equibouquet/equibouquet.hpp"

namespace eb = equibouquet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

struct Config {
    std::string scheme;
    int genus = 0;
    bool compactify = false;
    std::string in;
    std::string out;
    int samples = 256;
    std::optional<double> tol_geom;
    std::optional<double> tol_orth;
    std::optional<std::string> seed;
    std::string format = "off";
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text) {
    try {
        std::size_t used = 0;
        const std::uint64_t value = std::stoull(text, &used, 0);
        if (used != text.size()) throw UsageError("bad seed '" + text + "'");
        return value;
    } catch (const std::logic_error&) {
        throw UsageError("bad seed '" + text + "'");
    }
}

eb::VerifyOptions verify_options(const Config& cfg) {
    eb::VerifyOptions opts;
    if (cfg.samples < 2) throw UsageError("--samples must be at least 2");
    opts.samples = cfg.samples;
    if (cfg.tol_geom) opts.tol.geom = *cfg.tol_geom;
    if (cfg.tol_orth) opts.tol.orth = *cfg.tol_orth;
    if (const char* env = std::getenv("EQUIBOUQUET_SEED"); env && *env) opts.seed = parse_seed(env);
    if (cfg.seed) opts.seed = parse_seed(*cfg.seed);
    return opts;
}

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out.empty() || cfg.out == "-") {
        std::cout << text;
    } else {
        eb::write_text_file(cfg.out, text);
    }
}

int run_construct(const Config& cfg) {
    eb::json doc;
    if (cfg.scheme == "m3") {
        if (cfg.compactify) throw UsageError("--compactify does not apply to scheme m3");
        doc = eb::to_json_value(eb::m3_demo());
    } else {
        eb::EmbeddedBouquet e;
        if (cfg.scheme == "a" || cfg.scheme == "b") {
            if (cfg.genus < 2) throw UsageError("--genus must be at least 2 for schemes a and b");
            e = cfg.scheme == "a" ? eb::construction_a(cfg.genus) : eb::construction_b(cfg.genus);
        } else if (cfg.scheme == "b2r3") {
            e = eb::b2_demo();
        } else {
            throw UsageError("unknown scheme '" + cfg.scheme + "'");
        }
        if (cfg.compactify) e = eb::compactify(e);
        doc = eb::to_json_value(e);
    }
    emit(cfg, doc.dump(2) + "\n");
    return kExitOk;
}

int run_verify(const Config& cfg) {
    const eb::VerifyOptions opts = verify_options(cfg);
    const eb::json doc = eb::read_json_file(cfg.in);
    const auto reports = eb::is_theta_document(doc) ? eb::verify_theta(eb::theta_from_json(doc), opts)
                                                    : eb::verify_all(eb::bouquet_from_json(doc), opts);
    emit(cfg, eb::to_json_value(reports).dump(2) + "\n");
    return eb::all_pass(reports) ? kExitOk : kExitFailed;
}

int run_certify(const Config& cfg) {
    const eb::VerifyOptions opts = verify_options(cfg);
    const eb::json doc = eb::read_json_file(cfg.in);
    if (eb::is_theta_document(doc)) throw UsageError("certify applies to bouquet embeddings only");
    const eb::EmbeddedBouquet e = eb::bouquet_from_json(doc);
    try {
        e.validate_shape();
    } catch (const std::exception& ex) {
        throw eb::ParseError(ex.what());
    }
    const eb::CertificateReport report = eb::certify(e, opts);
    emit(cfg, eb::to_json_value(report).dump(2) + "\n");
    return report.bound_holds ? kExitOk : kExitFailed;
}

int run_export(const Config& cfg) {
    if (cfg.samples < 2) throw UsageError("--samples must be at least 2");
    const eb::json doc = eb::read_json_file(cfg.in);
    const auto lines = eb::is_theta_document(doc) ? eb::sample_theta(eb::theta_from_json(doc), cfg.samples)
                                                  : eb::sample_bouquet(eb::bouquet_from_json(doc), cfg.samples);
    if (cfg.format == "off") {
        emit(cfg, eb::to_off(lines));
    } else if (cfg.format == "csv") {
        emit(cfg, eb::to_csv(lines));
    } else if (cfg.format == "json") {
        emit(cfg, eb::polylines_to_json(lines).dump() + "\n");
    } else {
        throw UsageError("unknown format '" + cfg.format + "'");
    }
    return kExitOk;
}

void add_input(CLI::App* cmd, Config& cfg) {
    auto* positional = cmd->add_option("file", cfg.in, "Embedding JSON file");
    auto* flag = cmd->add_option("--in", cfg.in, "Embedding JSON file");
    positional->excludes(flag);
}

void add_tolerances(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--samples", cfg.samples, "Angle samples per circle")->capture_default_str();
    cmd->add_option("--tol-geom", cfg.tol_geom, "Geometric tolerance (default 1e-9)");
    cmd->add_option("--tol-orth", cfg.tol_orth, "Orthogonality tolerance (default 1e-10)");
    cmd->add_option("--seed", cfg.seed, "Random seed (default 0x5EED; env EQUIBOUQUET_SEED)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant embeddings of the bouquet of circles"};
    app.require_subcommand(1);
    Config cfg;

    auto* construct = app.add_subcommand("construct", "Build an embedding and write it as JSON");
    construct->add_option("--scheme", cfg.scheme, "a | b | b2r3 | m3")->required();
    construct->add_option("--genus", cfg.genus, "Number of circles (schemes a, b)");
    construct->add_flag("--compactify", cfg.compactify, "Lift to the sphere by inverse stereographic projection");
    construct->add_option("--out", cfg.out, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Run the equivariant-embedding checks");
    add_input(verify, cfg);
    add_tolerances(verify, cfg);
    verify->add_option("--out", cfg.out, "Report file (default stdout)");

    auto* certify = app.add_subcommand("certify", "Check the dimension bound on a spherical embedding");
    add_input(certify, cfg);
    add_tolerances(certify, cfg);
    certify->add_option("--out", cfg.out, "Report file (default stdout)");

    auto* exporter = app.add_subcommand("export", "Sample the circles for plotting");
    add_input(exporter, cfg);
    exporter->add_option("--format", cfg.format, "off | csv | json")->capture_default_str();
    exporter->add_option("--samples", cfg.samples, "Points per circle")->capture_default_str();
    exporter->add_option("--out", cfg.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*construct) return run_construct(cfg);
        if (cfg.in.empty()) throw UsageError("an input file is required");
        if (*verify) return run_verify(cfg);
        if (*certify) return run_certify(cfg);
        if (*exporter) return run_export(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const eb::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
