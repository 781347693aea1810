// Command line front end: fdtc (coefficient only), transfer (coefficient
// plus branched cover lift), classify (transfer plus the rule engine).
// Reports go to stdout, human readable by default, canonical JSON with
// --json. Errors always emit machine readable JSON and exit 2 (bad input),
// 3 (a covering hypothesis fails), or 4 (internal invariant violation).

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fdtc/cover_spec.hpp"
#include "fdtc/report.hpp"

namespace {

using nlohmann::json;

struct CommonArgs {
    std::string braid;
    int strands = 2;
    int m_max = 12;
    int max_period = 24;
    bool json_output = false;
};

long long budget_from_env() {
    const char* env = std::getenv("FDTC_BUDGET");
    if (!env) return fdtc::kDefaultReductionBudget;
    try {
        const long long b = std::stoll(env);
        if (b < 1) throw std::invalid_argument("nonpositive");
        return b;
    } catch (const std::exception&) {
        throw fdtc::SyntaxError(std::string("FDTC_BUDGET must be a positive integer, got '") +
                                env + "'");
    }
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("braid", args.braid,
                    "braid word, e.g. \"s1 -s2\" or \"1 -2\" (may be empty)")
        ->required();
    cmd->add_option("--strands", args.strands, "number of strands")
        ->required()
        ->check(CLI::Range(1, 64));
    cmd->add_option("--mmax", args.m_max, "powers used for interval homogenization")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    cmd->add_option("--max-period", args.max_period, "largest period tried by the "
                    "periodic certifier")
        ->check(CLI::Range(1, 512))
        ->capture_default_str();
    cmd->add_flag("--json", args.json_output, "emit the canonical JSON report");
}

fdtc::FdtcRequest make_request(const CommonArgs& args) {
    fdtc::FdtcRequest req;
    req.braid_text = args.braid;
    req.strands = args.strands;
    req.opts.m_max = args.m_max;
    req.opts.max_period = args.max_period;
    req.opts.reduction_budget = budget_from_env();
    return req;
}

fdtc::CoverInput make_cover(int degree, const std::string& spec_path) {
    fdtc::CoverInput cover;
    if (!spec_path.empty()) {
        cover.rep = fdtc::load_cover_spec(spec_path);
        cover.degree = cover.rep->degree;
        cover.label = spec_path;
    } else {
        cover.degree = degree;
        cover.label = "standard_cyclic degree " + std::to_string(degree);
    }
    return cover;
}

void emit(const fdtc::Report& report, bool as_json) {
    if (as_json)
        std::cout << fdtc::to_json(report).dump(2) << '\n';
    else
        std::cout << fdtc::render_text(report);
}

int exit_code(fdtc::ErrorCategory category) {
    switch (category) {
        case fdtc::ErrorCategory::input: return 2;
        case fdtc::ErrorCategory::guard: return 3;
        case fdtc::ErrorCategory::internal: return 4;
    }
    return 4;
}

const char* category_label(fdtc::ErrorCategory category) {
    switch (category) {
        case fdtc::ErrorCategory::input: return "input";
        case fdtc::ErrorCategory::guard: return "guard";
        case fdtc::ErrorCategory::internal: return "internal";
    }
    return "internal";
}

int report_error(const fdtc::Error& e) {
    json out = {{"error",
                 {{"code", e.code()},
                  {"category", category_label(e.category())},
                  {"message", e.what()}}}};
    if (!e.detail_json().empty())
        out["error"]["detail"] = json::parse(e.detail_json());
    std::cout << out.dump(2) << '\n';
    std::cerr << "error (" << e.code() << "): " << e.what() << '\n';
    return exit_code(e.category());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified fractional Dehn twist coefficients of braids, "
                 "branched cover transfer, and contact/geometry classification"};
    app.require_subcommand(1);

    CommonArgs fdtc_args, transfer_args, classify_args;
    int transfer_degree = 0, classify_degree = 0;
    std::string transfer_spec, classify_spec, assert_path;

    CLI::App* cmd_fdtc = app.add_subcommand("fdtc", "compute the certified coefficient");
    add_common(cmd_fdtc, fdtc_args);

    CLI::App* cmd_transfer =
        app.add_subcommand("transfer", "lift the coefficient to a branched cover");
    add_common(cmd_transfer, transfer_args);
    auto* tdeg = cmd_transfer->add_option("--degree", transfer_degree,
                                          "degree of the standard cyclic cover")
                     ->check(CLI::Range(2, 1024));
    auto* tspec = cmd_transfer->add_option("--cover-spec", transfer_spec,
                                           "JSON file describing the cover")
                      ->check(CLI::ExistingFile);
    tdeg->excludes(tspec);
    tspec->excludes(tdeg);

    CLI::App* cmd_classify =
        app.add_subcommand("classify", "run the transfer pipeline and all rules");
    add_common(cmd_classify, classify_args);
    auto* cdeg = cmd_classify->add_option("--degree", classify_degree,
                                          "degree of the standard cyclic cover")
                     ->check(CLI::Range(2, 1024));
    auto* cspec = cmd_classify->add_option("--cover-spec", classify_spec,
                                           "JSON file describing the cover")
                      ->check(CLI::ExistingFile);
    cdeg->excludes(cspec);
    cspec->excludes(cdeg);
    cmd_classify->add_option("--assert", assert_path,
                             "JSON file with user asserted facts")
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help and friends, not an error
    } catch (const CLI::ParseError& e) {
        return report_error(fdtc::SyntaxError(std::string("argument error: ") + e.what()));
    }

    try {
        if (cmd_fdtc->parsed()) {
            emit(fdtc::run_fdtc(make_request(fdtc_args)), fdtc_args.json_output);
        } else if (cmd_transfer->parsed()) {
            if (transfer_degree == 0 && transfer_spec.empty())
                throw fdtc::SyntaxError("transfer needs --degree or --cover-spec");
            fdtc::TransferRequest req{make_request(transfer_args),
                                      make_cover(transfer_degree, transfer_spec)};
            emit(fdtc::run_transfer(req), transfer_args.json_output);
        } else {
            if (classify_degree == 0 && classify_spec.empty())
                throw fdtc::SyntaxError("classify needs --degree or --cover-spec");
            fdtc::ClassifyRequest req{
                fdtc::TransferRequest{make_request(classify_args),
                                      make_cover(classify_degree, classify_spec)},
                assert_path.empty() ? fdtc::Assertions{}
                                    : fdtc::load_assertions(assert_path)};
            emit(fdtc::run_classify(req), classify_args.json_output);
        }
    } catch (const fdtc::Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        return report_error(fdtc::InternalError(std::string("unexpected: ") + e.what()));
    }
    return 0;
}
