#pragma once

/**
 * @file query.hpp
 * @brief One command-line query: parsing, rendering and dispatch.
 *
 *   member S I | soft S J | classify S J | classify-fg S1 ... Sn J
 *   principality2 S T J | equal I1 I2
 *   oracle ratio m | oracle divergence m | oracle split c I J | oracle softness S J
 *
 * Options: --window N0:N1, --tol x, --grid k_max,m_max, --force-numeric, --json.
 */

#include "subideal/grammar.hpp"
#include "subideal/ideal.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace subideal {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct QueryOptions {
    std::optional<IndexRange> window;
    std::optional<double> tol;
    std::optional<std::pair<Index, Index>> grid;
    bool force_numeric = false;
    bool json = false;
};

bool operator==(const QueryOptions& a, const QueryOptions& b);

/// Oracle sub-checks are carried as a leading std::string argument.
using Argument = std::variant<SeqExpr, IdealDesc, Index, std::string>;

struct Query {
    std::string command;
    std::vector<Argument> arguments;
    QueryOptions options;
};

bool operator==(const Query& a, const Query& b);

/// argv without the program name.
Query parse_query(const std::vector<std::string>& args);
/// Whitespace-separated form; expressions never contain spaces.
Query parse_query(std::string_view line);

std::vector<std::string> render_tokens(const Query& q);
std::string render_query(const Query& q);

EngineConfig engine_config(const QueryOptions& options);

struct RunResult {
    int exit_code = 0; ///< 0 Yes/No delivered, 2 Unknown, 1 error
    std::string output;
};

/// Engine errors (DomainError, PreconditionError) become exit code 1.
RunResult run(const Query& q);

} // namespace subideal
