#pragma once

#include <string>

#include "knots/diagram.hpp"

namespace knots {

// Plain-text diagram format:
//
//   diagram crossings=<c> loops=<f>
//   X <a0> <a1> <a2> <a3> h=<L|R>     (one line per crossing)
//
// Crossing ids are the 0-based line positions; arc labels are positive
// integers, each appearing exactly twice in the file. h=L means the
// over-strand enters from the under-strand's left (a positive crossing),
// h=R from the right. '#' starts a comment.
//
// encode_text canonicalizes: crossings in ascending id order become lines
// 0..c-1 and arcs are renumbered 1..2c in order of first appearance, so
// encode(decode(t)) == t for canonical text and decode(encode(d)) == d
// whenever d already uses contiguous labels (always true for freshly built
// or decoded diagrams).
std::string encode_text(const Diagram& d);
Diagram decode_text(const std::string& text);  // throws ParseError

// JSON mirror carrying explicit ids; round-trips any valid diagram exactly.
// {"crossings":[{"id":0,"ports":[a0,a1,a2,a3],"over_in":1|3},...],"free_loops":f}
std::string encode_json(const Diagram& d);
Diagram decode_json(const std::string& text);  // throws ParseError

}  // namespace knots
