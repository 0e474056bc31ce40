#include "subideal/query.hpp"

#include "subideal/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace subideal {

namespace {

const std::vector<std::string> kCommands = {"member",        "soft",  "classify", "classify-fg",
                                            "principality2", "equal", "oracle"};

Index parse_index(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used == s.size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(what) + ": expected a positive integer, got '" + s + "'");
}

std::pair<Index, Index> split_pair(const std::string& s, char sep, const char* what)
{
    const auto at = s.find(sep);
    if (at == std::string::npos) throw UsageError(std::string(what) + ": expected a" + sep + "b, got '" + s + "'");
    return {parse_index(s.substr(0, at), what), parse_index(s.substr(at + 1), what)};
}

std::string render_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<Argument> typed_arguments(const std::string& cmd, const std::vector<std::string>& raw)
{
    const auto need = [&](std::size_t n) {
        if (raw.size() != n)
            throw UsageError(cmd + ": expected " + std::to_string(n) + " arguments, got " + std::to_string(raw.size()));
    };
    std::vector<Argument> out;
    if (cmd == "member" || cmd == "soft" || cmd == "classify") {
        need(2);
        out = {parse_seq(raw[0]), parse_ideal(raw[1])};
    } else if (cmd == "classify-fg") {
        if (raw.size() < 2) throw UsageError("classify-fg: expected generators followed by an ideal");
        for (std::size_t i = 0; i + 1 < raw.size(); ++i) out.emplace_back(parse_seq(raw[i]));
        out.emplace_back(parse_ideal(raw.back()));
    } else if (cmd == "principality2") {
        need(3);
        out = {parse_seq(raw[0]), parse_seq(raw[1]), parse_ideal(raw[2])};
    } else if (cmd == "equal") {
        need(2);
        out = {parse_ideal(raw[0]), parse_ideal(raw[1])};
    } else if (cmd == "oracle") {
        if (raw.empty()) throw UsageError("oracle: expected a check name (ratio, divergence, split, softness)");
        const auto& kind = raw[0];
        if (kind == "ratio" || kind == "divergence") {
            need(2);
            out = {kind, parse_index(raw[1], "m")};
        } else if (kind == "split") {
            need(4);
            out = {kind, parse_seq(raw[1]), parse_ideal(raw[2]), parse_ideal(raw[3])};
        } else if (kind == "softness") {
            need(3);
            out = {kind, parse_seq(raw[1]), parse_ideal(raw[2])};
        } else {
            throw UsageError("oracle: unknown check '" + kind + "'");
        }
    }
    return out;
}

const SeqExpr& seq_at(const Query& q, std::size_t i)
{
    return std::get<SeqExpr>(q.arguments.at(i));
}

const IdealDesc& ideal_at(const Query& q, std::size_t i)
{
    return std::get<IdealDesc>(q.arguments.at(i));
}

int exit_for(const Verdict& v)
{
    return v.is_unknown() ? 2 : 0;
}

struct Delivered {
    int exit_code;
    nlohmann::json result;
    std::string text;
};

template <typename R>
Delivered deliver(const R& r, int code)
{
    return {code, to_json(r), render_text(r)};
}

Delivered dispatch(const Query& q, const EngineConfig& cfg)
{
    const auto& c = q.command;
    if (c == "member") {
        const auto v = member(seq_at(q, 0), ideal_at(q, 1), cfg);
        return deliver(v, exit_for(v));
    }
    if (c == "soft") {
        const auto r = is_soft(seq_at(q, 0), ideal_at(q, 1), cfg);
        return deliver(r, exit_for(r.verdict));
    }
    if (c == "classify") {
        const auto r = classify_principal(seq_at(q, 0), ideal_at(q, 1), cfg);
        return deliver(r, exit_for(r.is_bh_ideal));
    }
    if (c == "classify-fg") {
        std::vector<SeqExpr> gens;
        for (std::size_t i = 0; i + 1 < q.arguments.size(); ++i) gens.push_back(seq_at(q, i));
        const auto r = classify_finitely_generated(gens, ideal_at(q, q.arguments.size() - 1), cfg);
        return deliver(r, exit_for(r.is_bh_ideal));
    }
    if (c == "principality2") {
        const auto v = two_generator_principality(seq_at(q, 0), seq_at(q, 1), ideal_at(q, 2), cfg);
        return deliver(v, exit_for(v));
    }
    if (c == "equal") {
        const auto v = ideal_equal(ideal_at(q, 0), ideal_at(q, 1), cfg);
        return deliver(v, exit_for(v));
    }
    const auto& kind = std::get<std::string>(q.arguments.at(0));
    const auto& w = q.options.window;
    if (kind == "ratio")
        return deliver(verify_ratio_1_over_m(std::get<Index>(q.arguments.at(1)), w ? w->last : 1'000'000,
                                             q.options.tol.value_or(1e-3)),
                       0);
    if (kind == "divergence")
        return deliver(verify_divergence_E2(std::get<Index>(q.arguments.at(1)), w ? w->last : 1'000'000,
                                            cfg.compare.divergence_threshold),
                       0);
    if (kind == "split")
        return deliver(verify_product_split(seq_at(q, 1), ideal_at(q, 2), ideal_at(q, 3), w ? w->last : 100'000, cfg),
                       0);
    const auto& s = seq_at(q, 1);
    const auto res = is_soft(s, ideal_at(q, 2), cfg);
    if (!res.verdict.is_yes()) {
        Delivered o = deliver(res, exit_for(res.verdict));
        o.text = "no softness witness to verify: " + o.text;
        return o;
    }
    return deliver(verify_softness_witness(s, res, w ? w->last : 100'000), 0);
}

} // namespace

bool operator==(const QueryOptions& a, const QueryOptions& b)
{
    const auto win = [](const std::optional<IndexRange>& r) {
        return r ? std::optional<std::pair<Index, Index>>(std::pair{r->first, r->last}) : std::nullopt;
    };
    return win(a.window) == win(b.window) && a.tol == b.tol && a.grid == b.grid &&
           a.force_numeric == b.force_numeric && a.json == b.json;
}

bool operator==(const Query& a, const Query& b)
{
    return a.command == b.command && a.arguments == b.arguments && a.options == b.options;
}

Query parse_query(const std::vector<std::string>& args)
{
    CLI::App app{"subideal"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string window, grid;
    double tol = 0;
    bool force_numeric = false, json = false;
    auto* window_opt = app.add_option("--window", window, "index window N0:N1");
    auto* tol_opt = app.add_option("--tol", tol, "oracle tolerance / vanishing threshold");
    auto* grid_opt = app.add_option("--grid", grid, "search grid k_max,m_max");
    app.add_flag("--force-numeric", force_numeric, "sample instead of using normal forms");
    app.add_flag("--json", json, "machine-readable output");

    std::vector<std::string> raw;
    for (const auto& name : kCommands) app.add_subcommand(name)->add_option("args", raw)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Query q;
    q.command = app.get_subcommands().front()->get_name();
    q.arguments = typed_arguments(q.command, raw);
    if (*window_opt) {
        const auto [a, b] = split_pair(window, ':', "--window");
        if (a > b) throw UsageError("--window: N0 must not exceed N1");
        q.options.window = IndexRange{a, b};
    }
    if (*tol_opt) {
        if (!(tol > 0)) throw UsageError("--tol: must be positive");
        q.options.tol = tol;
    }
    if (*grid_opt) q.options.grid = split_pair(grid, ',', "--grid");
    q.options.force_numeric = force_numeric;
    q.options.json = json;
    return q;
}

Query parse_query(std::string_view line)
{
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    return parse_query(tokens);
}

std::vector<std::string> render_tokens(const Query& q)
{
    std::vector<std::string> out{q.command};
    for (const auto& a : q.arguments)
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Index>)
                    out.push_back(std::to_string(v));
                else if constexpr (std::is_same_v<T, std::string>)
                    out.push_back(v);
                else
                    out.push_back(v.to_string());
            },
            a);
    const auto& o = q.options;
    if (o.window) out.insert(out.end(), {"--window", std::to_string(o.window->first) + ":" + std::to_string(o.window->last)});
    if (o.tol) out.insert(out.end(), {"--tol", render_double(*o.tol)});
    if (o.grid) out.insert(out.end(), {"--grid", std::to_string(o.grid->first) + "," + std::to_string(o.grid->second)});
    if (o.force_numeric) out.push_back("--force-numeric");
    if (o.json) out.push_back("--json");
    return out;
}

std::string render_query(const Query& q)
{
    std::string out;
    for (const auto& t : render_tokens(q)) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

EngineConfig engine_config(const QueryOptions& options)
{
    EngineConfig cfg;
    if (options.window) {
        cfg.compare.window_first = options.window->first;
        cfg.compare.window_last = options.window->last;
    }
    if (options.tol) cfg.compare.vanishing_threshold = *options.tol;
    if (options.grid) {
        cfg.k_max = options.grid->first;
        cfg.m_max = options.grid->second;
    }
    cfg.compare.force_numeric = options.force_numeric;
    return cfg;
}

RunResult run(const Query& q)
{
    const auto cfg = engine_config(q.options);
    Delivered o{};
    try {
        o = dispatch(q, cfg);
    } catch (const std::invalid_argument& e) {
        // DomainError, PreconditionError, UsageError
        if (!q.options.json) return {1, std::string("error: ") + e.what()};
        nlohmann::json doc = {{"schema", kReportSchema}, {"query", render_tokens(q)}, {"error", e.what()}};
        return {1, doc.dump(2)};
    }
    if (!q.options.json) return {o.exit_code, o.text};
    nlohmann::json doc = {{"schema", kReportSchema},
                          {"query", render_tokens(q)},
                          {"config", to_json(cfg)},
                          {"result", o.result}};
    return {o.exit_code, doc.dump(2)};
}

} // namespace subideal
