#include "fdtc/report.hpp"

#include <chrono>
#include <fstream>

namespace fdtc {

namespace {

using nlohmann::json;

class StageTimer {
public:
    explicit StageTimer(Report& report) : report_(report) {}

    template <typename F>
    auto time(const std::string& stage, F&& body) {
        const auto start = std::chrono::steady_clock::now();
        auto finish = [&] {
            const auto stop = std::chrono::steady_clock::now();
            report_.timings_ms.emplace_back(
                stage, std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                           .count());
        };
        try {
            auto result = body();
            finish();
            return result;
        } catch (...) {
            finish();
            throw;
        }
    }

private:
    Report& report_;
};

const char* rv_label(RightVeering rv) {
    switch (rv) {
        case RightVeering::right_veering: return "right_veering";
        case RightVeering::not_right_veering: return "not_right_veering";
        case RightVeering::indeterminate: return "indeterminate";
    }
    throw InternalError("unreachable right-veering status");
}

RightVeering rv_from_label(const std::string& s) {
    if (s == "right_veering") return RightVeering::right_veering;
    if (s == "not_right_veering") return RightVeering::not_right_veering;
    if (s == "indeterminate") return RightVeering::indeterminate;
    throw SyntaxError("unknown right-veering label '" + s + "'");
}

GeometryType geometry_from_label(const std::string& s) {
    if (s == "hyperbolic") return GeometryType::hyperbolic;
    if (s == "toroidal") return GeometryType::toroidal;
    if (s == "seifert_fibered") return GeometryType::seifert_fibered;
    throw SyntaxError("unknown geometry type '" + s +
                      "' (expected hyperbolic, toroidal, or seifert_fibered)");
}

NielsenThurston nt_from_label(const std::string& s) {
    if (s == "periodic") return NielsenThurston::periodic;
    if (s == "reducible") return NielsenThurston::reducible;
    if (s == "pseudo_anosov") return NielsenThurston::pseudo_anosov;
    throw SyntaxError("unknown Nielsen-Thurston type '" + s +
                      "' (expected periodic, reducible, or pseudo_anosov)");
}

HypothesisStatus hyp_status_from_label(const std::string& s) {
    if (s == "Satisfied") return HypothesisStatus::satisfied;
    if (s == "Violated") return HypothesisStatus::violated;
    if (s == "Unknown") return HypothesisStatus::unknown;
    throw SyntaxError("unknown hypothesis status '" + s + "'");
}

VerdictStatus verdict_status_from_label(const std::string& s) {
    if (s == "Proved") return VerdictStatus::proved;
    if (s == "Refuted") return VerdictStatus::refuted;
    if (s == "Inconclusive") return VerdictStatus::inconclusive;
    throw SyntaxError("unknown verdict status '" + s + "'");
}

json to_json(const CoverGeometry& g) {
    json boundaries = json::array();
    for (const BoundaryComponent& bc : g.boundaries) {
        json sheets = json::array();
        for (int s : bc.sheets) sheets.push_back(s + 1);
        boundaries.push_back({{"base_boundary", bc.base_boundary + 1},
                              {"component", bc.component + 1},
                              {"degree", bc.degree},
                              {"sheets", sheets}});
    }
    json preimages = json::array();
    for (const BranchPreimage& pre : g.branch_preimages)
        preimages.push_back({{"branch_point", pre.branch_point + 1},
                             {"count", pre.preimage_count},
                             {"ramification", pre.ramification}});
    return {{"euler_characteristic", g.euler_char},
            {"genus", g.genus},
            {"total_degree", g.total_degree},
            {"base_boundary_count", g.base_boundary_count},
            {"boundary_components", boundaries},
            {"branch_preimages", preimages}};
}

CoverGeometry geometry_from_json(const json& doc) {
    CoverGeometry g;
    g.euler_char = doc.at("euler_characteristic").get<int>();
    g.genus = doc.at("genus").get<int>();
    g.total_degree = doc.at("total_degree").get<int>();
    g.base_boundary_count = doc.at("base_boundary_count").get<int>();
    for (const json& b : doc.at("boundary_components")) {
        BoundaryComponent bc;
        bc.base_boundary = b.at("base_boundary").get<int>() - 1;
        bc.component = b.at("component").get<int>() - 1;
        bc.degree = b.at("degree").get<int>();
        for (int s : b.at("sheets")) bc.sheets.push_back(s - 1);
        g.boundaries.push_back(std::move(bc));
    }
    for (const json& p : doc.at("branch_preimages")) {
        BranchPreimage pre;
        pre.branch_point = p.at("branch_point").get<int>() - 1;
        pre.preimage_count = p.at("count").get<int>();
        pre.ramification = p.at("ramification").get<std::vector<int>>();
        g.branch_preimages.push_back(std::move(pre));
    }
    return g;
}

// Fixed counterexample cited whenever the covering surface fails the
// negative euler characteristic hypothesis.
json annulus_counterexample() {
    return {{"braid", "s1"},
            {"strands", 2},
            {"degree", 2},
            {"base_fdtc", "1/2"},
            {"true_lifted_fdtc", "1/1"},
            {"naive_formula_value", "1/2"},
            {"note",
             "the half twist on two strands lifts under the double cover branched "
             "over two points to the Dehn twist along the annulus core, whose "
             "boundary twisting is 1; dividing the base value 1/2 by the boundary "
             "covering degree 1 predicts 1/2, so no division formula can hold when "
             "the covering surface has nonnegative euler characteristic"}};
}

MonodromyRep resolve_cover(const TransferRequest& req) {
    MonodromyRep rep = req.cover.rep ? *req.cover.rep
                                     : standard_cyclic(req.braid.strands, req.cover.degree);
    if (rep.branch_points != req.braid.strands)
        throw StrandMismatchError("the cover has " + std::to_string(rep.branch_points) +
                                  " branch points but the braid has " +
                                  std::to_string(req.braid.strands) + " strands");
    return rep;
}

void run_fdtc_into(Report& r, const FdtcRequest& req, BraidWord& word_out) {
    StageTimer timer(r);
    r.braid_input = req.braid_text;
    r.strands = req.strands;
    r.m_max = req.opts.m_max;
    r.max_period = req.opts.max_period;
    r.reduction_budget = req.opts.reduction_budget;

    BraidWord word = timer.time("parse", [&] { return parse_braid(req.braid_text, req.strands); });
    r.braid_canonical = to_string(word);
    r.fdtc = timer.time("fdtc", [&] { return fdtc_bounds(word, req.opts); });
    r.right_veering = right_veering_status(r.fdtc, word, req.opts.reduction_budget);
    word_out = word;
}

void run_transfer_into(Report& r, const TransferRequest& req, BraidWord& word_out) {
    run_fdtc_into(r, req.braid, word_out);
    StageTimer timer(r);

    const MonodromyRep rep = resolve_cover(req);
    r.cover_label = req.cover.label;
    const CoverGeometry geo = timer.time("cover", [&] { return cover_geometry(rep); });
    r.geometry = geo;
    const bool ramified = is_fully_ramified(rep);
    r.fully_ramified = ramified;

    timer.time("transfer", [&]() -> int {
        for (const BoundaryComponent& bc : geo.boundaries) {
            TransferInput in{r.fdtc, geo, ramified, bc.base_boundary, bc.component};
            try {
                const TransferResult res = lift_fdtc(in);
                r.transfers.push_back(
                    TransferEntry{bc.base_boundary, bc.component, res.divisor, res.lifted_fdtc});
            } catch (const AnnulusError& raw) {
                AnnulusError e = raw;
                json divisors = json::array();
                json naive = json::array();
                for (const BoundaryComponent& c : geo.boundaries) {
                    divisors.push_back(c.degree);
                    const Rational d(c.degree);
                    if (r.fdtc.is_exact())
                        naive.push_back((r.fdtc.value() / d).str());
                    else
                        naive.push_back(json{{"lower", (r.fdtc.lower() / d).str()},
                                             {"upper", (r.fdtc.upper() / d).str()}});
                }
                const json detail = {{"base_fdtc", to_json(r.fdtc)},
                                     {"euler_characteristic", geo.euler_char},
                                     {"total_degree", geo.total_degree},
                                     {"component_divisors", divisors},
                                     {"naive_division_values", naive},
                                     {"counterexample", annulus_counterexample()}};
                e.set_detail_json(detail.dump());
                throw e;
            } catch (const NotFullyRamifiedError& raw) {
                NotFullyRamifiedError e = raw;
                json offenders = json::array();
                for (const BranchPreimage& pre : geo.branch_preimages)
                    for (int ram : pre.ramification)
                        if (ram == 1) {
                            offenders.push_back(pre.branch_point + 1);
                            break;
                        }
                e.set_detail_json(json{{"unramified_branch_points", offenders}}.dump());
                throw e;
            }
        }
        return 0;
    });

    const TransferInput representative{r.fdtc, geo, ramified, 0, 0};
    r.rv_transfer = propagate_right_veering(r.right_veering, representative);

    // Verdicts that need no user assertions.
    r.verdicts.push_back(rule_loose_lift(r.right_veering, ramified));
    r.verdicts.push_back(rule_virtually_loose(r.right_veering));
    for (const TransferEntry& t : r.transfers) {
        Verdict v = rule_overtwisted(t.lifted);
        v.notes.push_back("applied to the lifted monodromy over base boundary " +
                          std::to_string(t.base_boundary + 1) + ", component " +
                          std::to_string(t.component + 1));
        r.verdicts.push_back(std::move(v));
    }
}

} // namespace

Report run_fdtc(const FdtcRequest& req) {
    Report r;
    r.command = "fdtc";
    BraidWord word = BraidWord::identity(1);
    run_fdtc_into(r, req, word);
    return r;
}

Report run_transfer(const TransferRequest& req) {
    Report r;
    r.command = "transfer";
    BraidWord word = BraidWord::identity(1);
    run_transfer_into(r, req, word);
    return r;
}

Report run_classify(const ClassifyRequest& req) {
    Report r;
    r.command = "classify";
    BraidWord word = BraidWord::identity(1);
    run_transfer_into(r, req.transfer, word);
    r.assertions = req.assertions;

    StageTimer timer(r);
    timer.time("classify", [&]() -> int {
        const CoverGeometry& geo = *r.geometry;
        const bool ramified = *r.fully_ramified;
        const Assertions& a = req.assertions;

        std::vector<Verdict> front;
        front.push_back(rule_geometry_transfer(
            std::vector<FdtcValue>(geo.base_boundary_count, r.fdtc), geo, ramified,
            a.base_geometry));
        front.push_back(rule_lspace_obstruction(r.fdtc, r.strands, geo.total_degree,
                                                a.base_geometry));
        front.push_back(
            rule_universal_tightness(a.prongs, a.nielsen_thurston, ramified, geo));
        Verdict mag = rule_geometry_from_magnitude(r.fdtc, a.nielsen_thurston);
        mag.notes.push_back("applied to the braid's distinguished monodromy twist");
        front.push_back(std::move(mag));

        r.verdicts.insert(r.verdicts.begin(), std::make_move_iterator(front.begin()),
                          std::make_move_iterator(front.end()));
        return 0;
    });
    return r;
}

nlohmann::json to_json(const FdtcValue& v) {
    if (v.is_exact())
        return {{"kind", "exact"},
                {"value", v.value().str()},
                {"certificate",
                 {{"period", v.certificate()->period}, {"twist", v.certificate()->twist}}}};
    return {{"kind", "interval"}, {"lower", v.lower().str()}, {"upper", v.upper().str()}};
}

FdtcValue fdtc_value_from_json(const nlohmann::json& doc) {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "exact") {
        const json& cert = doc.at("certificate");
        return FdtcValue::exact(parse_rational(doc.at("value").get<std::string>()),
                                PeriodicCertificate{cert.at("period").get<std::int64_t>(),
                                                    cert.at("twist").get<std::int64_t>()});
    }
    if (kind == "interval")
        return FdtcValue::interval(parse_rational(doc.at("lower").get<std::string>()),
                                   parse_rational(doc.at("upper").get<std::string>()));
    throw SyntaxError("unknown fdtc kind '" + kind + "'");
}

nlohmann::json to_json(const Verdict& v) {
    json hyps = json::array();
    for (const Hypothesis& h : v.hypotheses)
        hyps.push_back({{"cond", h.condition}, {"status", to_label(h.status)}});
    json out = {{"rule", v.rule_id},
                {"conclusion", v.conclusion},
                {"status", to_label(v.status)},
                {"hypotheses", hyps}};
    if (!v.notes.empty()) out["notes"] = v.notes;
    return out;
}

Verdict verdict_from_json(const nlohmann::json& doc) {
    Verdict v;
    v.rule_id = doc.at("rule").get<std::string>();
    v.conclusion = doc.at("conclusion").get<std::string>();
    v.status = verdict_status_from_label(doc.at("status").get<std::string>());
    for (const json& h : doc.at("hypotheses"))
        v.hypotheses.push_back(Hypothesis{
            h.at("cond").get<std::string>(),
            hyp_status_from_label(h.at("status").get<std::string>())});
    if (doc.contains("notes")) v.notes = doc.at("notes").get<std::vector<std::string>>();
    return v;
}

Assertions parse_assertions(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw SyntaxError("assertion file: top level must be a JSON object");
    Assertions a;
    for (const auto& [key, value] : doc.items()) {
        if (key == "geometry_type") {
            a.base_geometry = geometry_from_label(value.get<std::string>());
        } else if (key == "nielsen_thurston") {
            a.nielsen_thurston = nt_from_label(value.get<std::string>());
        } else if (key == "prong_data") {
            if (!value.is_array())
                throw SyntaxError("assertion file: 'prong_data' must be an array of "
                                  "[k, p] pairs");
            std::vector<ProngDatum> prongs;
            for (const json& pair : value) {
                if (!pair.is_array() || pair.size() != 2 ||
                    !pair.at(0).is_number_integer() || !pair.at(1).is_number_integer())
                    throw SyntaxError("assertion file: each prong datum must be an "
                                      "integer pair [k, p]");
                prongs.push_back(ProngDatum{pair.at(0).get<std::int64_t>(),
                                            pair.at(1).get<std::int64_t>()});
            }
            a.prongs = std::move(prongs);
        } else if (key == "is_l_space") {
            if (!value.is_boolean())
                throw SyntaxError("assertion file: 'is_l_space' must be a boolean");
            a.is_l_space = value.get<bool>();
        } else {
            throw SyntaxError("assertion file: unknown key '" + key + "'");
        }
    }
    return a;
}

Assertions load_assertions(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SyntaxError("cannot open assertion file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SyntaxError("assertion file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_assertions(doc);
}

nlohmann::json to_json(const Assertions& a) {
    json out = json::object();
    if (a.base_geometry) out["geometry_type"] = to_label(*a.base_geometry);
    if (a.nielsen_thurston) out["nielsen_thurston"] = to_label(*a.nielsen_thurston);
    if (a.prongs) {
        json prongs = json::array();
        for (const ProngDatum& pd : *a.prongs) prongs.push_back({pd.k, pd.p});
        out["prong_data"] = prongs;
    }
    if (a.is_l_space) out["is_l_space"] = *a.is_l_space;
    return out;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        const std::int64_t num = std::stoll(text.substr(0, slash));
        const std::int64_t den = std::stoll(text.substr(slash + 1));
        if (den <= 0) throw SyntaxError("rational '" + text + "' needs a positive denominator");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw SyntaxError("malformed rational '" + text + "'");
    } catch (const std::out_of_range&) {
        throw SyntaxError("rational '" + text + "' out of range");
    }
}

nlohmann::json to_json(const Report& r) {
    json input = {{"braid", r.braid_input},
                  {"canonical_word", r.braid_canonical},
                  {"strands", r.strands},
                  {"m_max", r.m_max},
                  {"max_period", r.max_period},
                  {"reduction_budget", r.reduction_budget}};
    if (r.cover_label) input["cover"] = *r.cover_label;
    if (r.assertions) input["assertions"] = to_json(*r.assertions);

    json out = {{"command", r.command},
                {"input", input},
                {"fdtc", to_json(r.fdtc)},
                {"right_veering", rv_label(r.right_veering)}};
    if (r.geometry) out["cover_geometry"] = to_json(*r.geometry);
    if (r.fully_ramified) out["fully_ramified"] = *r.fully_ramified;
    if (!r.transfers.empty()) {
        json transfers = json::array();
        for (const TransferEntry& t : r.transfers)
            transfers.push_back({{"base_boundary", t.base_boundary + 1},
                                 {"component", t.component + 1},
                                 {"divisor", t.divisor},
                                 {"lifted_monodromy_fdtc", to_json(t.lifted)},
                                 {"lifted_braid_fdtc", to_json(t.lifted)}});
        out["transfer"] = transfers;
    }
    if (r.rv_transfer)
        out["right_veering_transfer"] = {
            {"braid", rv_label(r.rv_transfer->braid)},
            {"lifted_monodromy", rv_label(r.rv_transfer->lifted_monodromy)},
            {"lifted_braid", rv_label(r.rv_transfer->lifted_braid)}};
    if (!r.verdicts.empty()) {
        json verdicts = json::array();
        for (const Verdict& v : r.verdicts) verdicts.push_back(to_json(v));
        out["verdicts"] = verdicts;
    }
    return out;
}

Report report_from_json(const nlohmann::json& doc) {
    Report r;
    r.command = doc.at("command").get<std::string>();
    const json& input = doc.at("input");
    r.braid_input = input.at("braid").get<std::string>();
    r.braid_canonical = input.at("canonical_word").get<std::string>();
    r.strands = input.at("strands").get<int>();
    r.m_max = input.at("m_max").get<int>();
    r.max_period = input.at("max_period").get<int>();
    r.reduction_budget = input.at("reduction_budget").get<long long>();
    if (input.contains("cover")) r.cover_label = input.at("cover").get<std::string>();
    if (input.contains("assertions")) r.assertions = parse_assertions(input.at("assertions"));

    r.fdtc = fdtc_value_from_json(doc.at("fdtc"));
    r.right_veering = rv_from_label(doc.at("right_veering").get<std::string>());
    if (doc.contains("cover_geometry"))
        r.geometry = geometry_from_json(doc.at("cover_geometry"));
    if (doc.contains("fully_ramified")) r.fully_ramified = doc.at("fully_ramified").get<bool>();
    if (doc.contains("transfer"))
        for (const json& t : doc.at("transfer")) {
            TransferEntry e;
            e.base_boundary = t.at("base_boundary").get<int>() - 1;
            e.component = t.at("component").get<int>() - 1;
            e.divisor = t.at("divisor").get<int>();
            e.lifted = fdtc_value_from_json(t.at("lifted_monodromy_fdtc"));
            r.transfers.push_back(std::move(e));
        }
    if (doc.contains("right_veering_transfer")) {
        const json& rv = doc.at("right_veering_transfer");
        r.rv_transfer = RightVeeringTransfer{
            rv_from_label(rv.at("braid").get<std::string>()),
            rv_from_label(rv.at("lifted_monodromy").get<std::string>()),
            rv_from_label(rv.at("lifted_braid").get<std::string>())};
    }
    if (doc.contains("verdicts"))
        for (const json& v : doc.at("verdicts")) r.verdicts.push_back(verdict_from_json(v));
    return r;
}

std::string render_text(const Report& r) {
    std::string out;
    auto line = [&out](const std::string& s) {
        out += s;
        out += '\n';
    };

    line("command: " + r.command);
    line("braid: \"" + r.braid_input + "\" on " + std::to_string(r.strands) +
         " strands (reduced: \"" + r.braid_canonical + "\")");
    if (r.fdtc.is_exact())
        line("fdtc: exact " + r.fdtc.value().str() + " (certificate: period " +
             std::to_string(r.fdtc.certificate()->period) + ", twist " +
             std::to_string(r.fdtc.certificate()->twist) + ")");
    else
        line("fdtc: interval [" + r.fdtc.lower().str() + ", " + r.fdtc.upper().str() + "]");
    line("right veering: " + std::string(rv_label(r.right_veering)));

    if (r.cover_label) line("cover: " + *r.cover_label);
    if (r.geometry) {
        const CoverGeometry& g = *r.geometry;
        line("cover geometry: euler characteristic " + std::to_string(g.euler_char) +
             ", genus " + std::to_string(g.genus) + ", total degree " +
             std::to_string(g.total_degree) + ", fully ramified: " +
             (r.fully_ramified && *r.fully_ramified ? "yes" : "no"));
        for (const BoundaryComponent& bc : g.boundaries)
            line("  boundary component (" + std::to_string(bc.base_boundary + 1) + ", " +
                 std::to_string(bc.component + 1) + "): covering degree " +
                 std::to_string(bc.degree));
    }
    for (const TransferEntry& t : r.transfers) {
        const std::string value =
            t.lifted.is_exact() ? "exact " + t.lifted.value().str()
                                : "interval [" + t.lifted.lower().str() + ", " +
                                      t.lifted.upper().str() + "]";
        line("lifted fdtc over boundary (" + std::to_string(t.base_boundary + 1) + ", " +
             std::to_string(t.component + 1) + "), divisor " + std::to_string(t.divisor) +
             ": " + value + " (monodromy and braid coefficients coincide)");
    }
    if (r.rv_transfer)
        line("right veering transfer: braid " + std::string(rv_label(r.rv_transfer->braid)) +
             ", lifted monodromy " + rv_label(r.rv_transfer->lifted_monodromy) +
             ", lifted braid " + rv_label(r.rv_transfer->lifted_braid));
    for (const Verdict& v : r.verdicts) {
        line("verdict [" + std::string(to_label(v.status)) + "] " + v.rule_id + ": " +
             v.conclusion);
        for (const Hypothesis& h : v.hypotheses)
            line("  - " + h.condition + ": " + to_label(h.status));
        for (const std::string& n : v.notes) line("  note: " + n);
    }
    if (!r.timings_ms.empty()) {
        std::string t = "timings:";
        for (const auto& [stage, ms] : r.timings_ms)
            t += " " + stage + " " + std::to_string(ms) + "ms";
        line(t);
    }
    return out;
}

} // namespace fdtc
