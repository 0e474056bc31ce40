#include "subideal/report.hpp"

#include <cmath>
#include <sstream>

namespace subideal {

using nlohmann::json;

namespace {

json number(long double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
    return static_cast<double>(x);
}

std::string short_number(double x)
{
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

std::string range_text(const IndexRange& r)
{
    return std::to_string(r.first) + ".." + std::to_string(r.last);
}

} // namespace

json to_json(const IndexRange& r)
{
    return {{"first", r.first}, {"last", r.last}};
}

json to_json(const Verdict& v)
{
    json j = {{"outcome", to_string(v.outcome())}, {"symbolic", v.symbolic()}};
    if (v.is_yes()) {
        const auto& w = v.witness();
        j["witness"] = {{"k", w.k}, {"m", w.m}, {"constant", number(w.constant)}, {"window", to_json(w.window)}};
    }
    if (v.is_no()) {
        const auto& c = v.certificate();
        json ev = json::array();
        for (const auto& s : c.evidence) ev.push_back({{"index", s.index}, {"log_ratio", number(s.log_ratio)}});
        j["certificate"] = {{"window", to_json(c.window)}, {"evidence", ev}, {"detail", c.detail}};
    }
    if (!v.reason().empty()) j["reason"] = v.reason();
    return j;
}

json to_json(const SoftnessResult& r)
{
    json j = {{"verdict", to_json(r.verdict)}, {"witness_detail", nullptr}};
    if (r.witness_detail) {
        const auto& w = *r.witness_detail;
        j["witness_detail"] = {
            {"k", w.k}, {"m", w.m}, {"T", w.t_witness.to_string()}, {"constant", number(w.constant)}};
    }
    return j;
}

json to_json(const SubidealReport& r)
{
    json chain = json::array();
    for (const auto& l : r.chain)
        chain.push_back({{"lower", to_string(l.lower)},
                         {"upper", to_string(l.upper)},
                         {"status", to_string(l.status)},
                         {"basis", l.basis}});
    json gens = json::array();
    for (const auto& g : r.generators) gens.push_back(g.to_string());
    return {{"softness", to_json(r.softness)},
            {"is_BH_ideal", to_json(r.is_bh_ideal)},
            {"collapse_target", r.collapse_target ? json(r.collapse_target->to_string()) : json(nullptr)},
            {"chain", chain},
            {"generators", gens},
            {"J", r.j.to_string()}};
}

json to_json(const OracleReport& r)
{
    json obs = json::array();
    for (const auto& [n, v] : r.observed) obs.push_back({{"index", n}, {"value", number(v)}});
    return {{"check", r.name},
            {"window", to_json(r.window)},
            {"observed", obs},
            {"target", number(r.target)},
            {"tolerance", number(r.tolerance)},
            {"relation", to_string(r.relation)},
            {"passed", r.passed},
            {"note", r.note}};
}

json to_json(const EngineConfig& cfg)
{
    const auto& c = cfg.compare;
    return {{"window", {{"first", c.window_first}, {"last", c.window_last}}},
            {"grid_points", c.grid_points},
            {"bound_factor", c.bound_factor},
            {"divergence_threshold", c.divergence_threshold},
            {"vanishing_threshold", c.vanishing_threshold},
            {"trend_slack", c.trend_slack},
            {"dense_prefix", c.dense_prefix},
            {"force_numeric", c.force_numeric},
            {"k_max", cfg.k_max},
            {"m_max", cfg.m_max}};
}

std::string render_text(const Verdict& v)
{
    std::string out = to_string(v.outcome());
    if (!v.is_unknown()) out += v.symbolic() ? " (symbolic)" : " (sampled)";
    if (v.is_yes()) {
        const auto& w = v.witness();
        out += ": k=" + std::to_string(w.k) + " m=" + std::to_string(w.m) + " C=" + short_number(w.constant) +
               " on " + range_text(w.window);
    } else if (v.is_no()) {
        out += ": " + v.certificate().detail;
    }
    if (!v.reason().empty()) out += (v.is_unknown() ? ": " : "\n  ") + v.reason();
    return out;
}

std::string render_text(const SoftnessResult& r)
{
    std::string out = render_text(r.verdict);
    if (r.witness_detail) out += "\n  T = " + r.witness_detail->t_witness.to_string();
    return out;
}

std::string render_text(const SubidealReport& r)
{
    std::string out = "J = " + r.j.to_string() + "\ngenerators:";
    for (const auto& g : r.generators) out += " " + g.to_string();
    out += "\nB(H)-ideal: " + render_text(r.softness);
    if (r.collapse_target) out += "\ncollapses to " + r.collapse_target->to_string();
    out += "\nchain:";
    for (const auto& l : r.chain)
        out += "\n  " + to_string(l.lower) + " vs " + to_string(l.upper) + ": " + to_string(l.status) + " (" +
               l.basis + ")";
    return out;
}

std::string render_text(const OracleReport& r)
{
    std::string out = r.name + ": " + (r.passed ? "passed" : "FAILED") + "\n  window " + range_text(r.window) +
                      ", target " + to_string(r.relation) + " " + short_number(r.target) + ", tolerance " +
                      short_number(r.tolerance) + "\n  " + r.note;
    for (const auto& [n, v] : r.observed) out += "\n  n=" + std::to_string(n) + "  " + short_number(v);
    return out;
}

} // namespace subideal
