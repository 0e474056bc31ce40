#pragma once

/**
 * @file grammar.hpp
 * @brief Text form of sequences and ideals.
 *
 *   seq   := pow(r) | pow(r,r) | geo(r) | fin(r,...) | scale(r,seq)
 *          | amp(n,seq) | dec(n,seq) | sum(seq,seq) | max(seq,seq) | prod(seq,seq)
 *   ideal := prin(seq) | KH | FH | prod(ideal,ideal) | sum(ideal,ideal) | pow(ideal,n)
 *
 * Rationals are `a`, `a/b` or decimals. Parsing keeps the tree exactly as
 * written, so rendering a parsed canonical text gives the same text back.
 */

#include "subideal/ideal.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace subideal {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    /// 0-based offset into the input.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

SeqExpr parse_seq(std::string_view text);
IdealDesc parse_ideal(std::string_view text);

} // namespace subideal
