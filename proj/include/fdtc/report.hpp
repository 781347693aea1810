#ifndef FDTC_REPORT_HPP
#define FDTC_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fdtc/classifier.hpp"
#include "fdtc/cover.hpp"
#include "fdtc/fdtc.hpp"
#include "fdtc/transfer.hpp"

namespace fdtc {

// Which covering the transfer and classify pipelines use: an explicit
// monodromy representation, or the standard cyclic cover of the given
// degree. The label is echoed in reports.
struct CoverInput {
    std::optional<MonodromyRep> rep;
    int degree = 0;
    std::string label = "standard_cyclic";
};

struct FdtcRequest {
    std::string braid_text;
    int strands = 2;
    FdtcOptions opts;
};

struct TransferRequest {
    FdtcRequest braid;
    CoverInput cover;
};

struct ClassifyRequest {
    TransferRequest transfer;
    Assertions assertions;
};

struct TransferEntry {
    int base_boundary = 0; // 0-based internally, 1-based in JSON
    int component = 0;
    int divisor = 1;
    FdtcValue lifted;
};

// Everything a command computed. The JSON serialization is canonical:
// alphabetically ordered keys, every rational rendered "p/q", no floating
// point, and no timings or timestamps, so identical inputs produce byte
// identical documents. Timings appear only in the human rendering.
struct Report {
    std::string command;
    std::string braid_input;
    std::string braid_canonical;
    int strands = 2;
    int m_max = 12;
    int max_period = 24;
    long long reduction_budget = kDefaultReductionBudget;

    FdtcValue fdtc;
    RightVeering right_veering = RightVeering::indeterminate;

    std::optional<std::string> cover_label;
    std::optional<CoverGeometry> geometry;
    std::optional<bool> fully_ramified;
    std::vector<TransferEntry> transfers;
    std::optional<RightVeeringTransfer> rv_transfer;
    std::optional<Assertions> assertions;
    std::vector<Verdict> verdicts;

    std::vector<std::pair<std::string, long long>> timings_ms;
};

Report run_fdtc(const FdtcRequest& req);
Report run_transfer(const TransferRequest& req);
Report run_classify(const ClassifyRequest& req);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& doc);
std::string render_text(const Report& r);

nlohmann::json to_json(const FdtcValue& v);
FdtcValue fdtc_value_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& doc);

Assertions parse_assertions(const nlohmann::json& doc);
Assertions load_assertions(const std::string& path);
nlohmann::json to_json(const Assertions& a);

Rational parse_rational(const std::string& text);

} // namespace fdtc

#endif
