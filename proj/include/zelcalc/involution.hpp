#pragma once

#include <vector>

#include "zelcalc/segment.hpp"

namespace zelcalc {

// One round of the Moeglin-Waldspurger algorithm.
struct MwRound {
  std::vector<Segment> chain;  // chosen segments, ends decreasing by one
  Segment produced;            // [e - r + 1, e] for a chain of length r
  MultiSegment residue;        // what is left to process after the round
};

struct MwTrace {
  std::vector<MwRound> rounds;
};

struct MwResult {
  MultiSegment dual;
  MwTrace trace;
};

// Selection rule for the chain. Only ShortestStrict computes the Zelevinsky
// involution; the others exist so the property suites can be shown to catch
// a wrong rule.
enum class MwRule {
  ShortestStrict,     // b maximal; next link must satisfy b(next) < b(current)
  ShortestNonStrict,  // b maximal; b(next) <= b(current) allowed
  Longest,            // b minimal; b(next) < b(current)
};

// m -> m^t. Effective lines are processed one after another in canonical order.
MwResult mw_dual(const MultiSegment& m, MwRule rule = MwRule::ShortestStrict);

// Same computation without recording the trace.
MultiSegment zelevinsky_dual(const MultiSegment& m, MwRule rule = MwRule::ShortestStrict);

}  // namespace zelcalc
