#pragma once

// Text syntax for multisegments and representation specs.
//
//   rep   := "(" mseg ")" ("*" "(" mseg ")")* ["@@" ident] | mseg
//   mseg  := "empty" | seg (("+" | ",") seg)* ["@@" ident]
//   seg   := "[" num ["," num] "]" ["@" ident]
//   num   := ["-"] digits ["/2"]
//
// "@@ident" names the line of every segment written without "@ident".
// Whitespace is ignored. Canonical output has no whitespace, uses "+",
// writes point segments as "[x]" and lists segments in canonical order.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zelcalc/errors.hpp"
#include "zelcalc/segment.hpp"
#include "zelcalc/universe.hpp"

namespace zelcalc {

struct SegmentAst {
  std::optional<std::string> line;
  HalfInt b;
  HalfInt e;
  SourceSpan span;
  SourceSpan line_span;
};

struct MultiSegmentAst {
  std::vector<SegmentAst> segments;
  std::optional<std::string> default_line;
  SourceSpan span;
};

struct RepAst {
  std::vector<MultiSegmentAst> factors;
  bool parenthesized = false;
};

// Syntax-level parse; needs no universe. Rejects empty segments and mixed lattices.
// Every segment ends up with a line (explicit or by default directive) or a SyntaxError is raised.
MultiSegmentAst parse_multisegment_syntax(std::string_view text);
RepAst parse_rep_syntax(std::string_view text);

// Canonical text of a syntax tree, without consulting a universe.
std::string format_ast(const MultiSegmentAst& m);
std::string format_ast(const RepAst& r);

MultiSegment resolve(const MultiSegmentAst& m, const Universe& u);
RepSpec resolve(const RepAst& r, const Universe& u);

MultiSegment parse_multisegment(std::string_view text, const Universe& u);
RepSpec parse_rep(std::string_view text, const Universe& u);

std::string format_segment(const Segment& s, const Universe& u);
std::string format_multisegment(const MultiSegment& m, const Universe& u);
std::string format_rep(const RepSpec& r, const Universe& u);

// Parses a number of the form [-]digits[/2].
std::optional<HalfInt> parse_half_int(std::string_view text);

}  // namespace zelcalc
