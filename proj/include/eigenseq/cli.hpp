#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eigenseq/operators.hpp"
#include "eigenseq/series.hpp"
#include "eigenseq/worpitzky.hpp"

namespace eigenseq::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

// Comma-separated ops, each "L:h=<r>,y=<r>" | "I:x=<r>" | "R"; "identity" is L:h=1,y=0.
// For L, h defaults to 1. Throws std::invalid_argument on malformed input.
OperatorChain parse_chain(std::string_view text);

// SequenceDocument: {"name": string?, "offset": int, "terms": ["p/q", ...]}.
struct SequenceDocument {
    Sequence sequence;
    long offset = 0;
};

SequenceDocument parse_sequence_document(std::string_view json_text);
std::string to_json(const SequenceDocument &doc);

// PolySequence document: {"name": string?, "polys": [["c0", "c1", ...], ...]}.
PolySequence parse_poly_document(std::string_view json_text);
std::string to_json(const PolySequence &ps);

// argv excludes the program name.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace eigenseq::cli
