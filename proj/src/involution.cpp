#include "zelcalc/involution.hpp"

#include <algorithm>
#include <utility>

namespace zelcalc {

namespace {

struct Interval {
  std::int64_t b;  // doubled exponents
  std::int64_t e;
};

struct Group {
  LineKey key;
  std::vector<Interval> items;
};

// Few effective lines per input, so a linear scan beats a map.
std::vector<Group> group_by_line(const MultiSegment& m) {
  std::vector<Group> out;
  for (const Segment& s : m) {
    const LineKey key = s.key();
    auto it = std::find_if(out.begin(), out.end(), [&](const Group& g) { return g.key == key; });
    if (it == out.end()) {
      it = out.insert(out.end(), Group{key, {}});
      it->items.reserve(m.size());
    }
    it->items.push_back({s.b().doubled(), s.e().doubled()});
  }
  std::sort(out.begin(), out.end(), [](const Group& x, const Group& y) { return x.key < y.key; });
  return out;
}

Segment to_segment(LineId line, Interval iv) {
  return Segment(line, HalfInt::from_doubled(iv.b), HalfInt::from_doubled(iv.e));
}

MultiSegment remaining(const std::vector<Group>& groups, std::size_t from) {
  std::vector<Segment> out;
  for (std::size_t g = from; g < groups.size(); ++g) {
    for (const Interval& iv : groups[g].items) out.push_back(to_segment(groups[g].key.line, iv));
  }
  return MultiSegment(std::move(out));
}

bool better(const Interval& candidate, const Interval& best, MwRule rule) {
  return rule == MwRule::Longest ? candidate.b < best.b : candidate.b > best.b;
}

// Runs the rounds of one effective line. Returns produced intervals; appends rounds when traced.
void dual_group(std::vector<Group>& groups, std::size_t g, MwRule rule,
                std::vector<Interval>& produced, MwTrace* trace) {
  std::vector<Interval>& items = groups[g].items;
  const LineId line = groups[g].key.line;
  std::vector<std::size_t> chain;
  chain.reserve(items.size());
  while (!items.empty()) {
    chain.clear();
    std::int64_t e_max = items[0].e;
    for (const Interval& iv : items) e_max = std::max(e_max, iv.e);

    std::size_t first = items.size();
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].e == e_max && (first == items.size() || better(items[i], items[first], rule))) first = i;
    }
    chain.push_back(first);
    for (;;) {
      const Interval cur = items[chain.back()];
      std::size_t next = items.size();
      for (std::size_t i = 0; i < items.size(); ++i) {
        const Interval& iv = items[i];
        if (iv.e != cur.e - 2) continue;
        bool ok = rule == MwRule::ShortestNonStrict ? iv.b <= cur.b : iv.b < cur.b;
        if (ok && (next == items.size() || better(iv, items[next], rule))) next = i;
      }
      if (next == items.size()) break;
      chain.push_back(next);
    }

    const auto r = static_cast<std::int64_t>(chain.size());
    const Interval out{e_max - 2 * (r - 1), e_max};
    produced.push_back(out);

    std::vector<Segment> chain_segments;
    if (trace) {
      for (std::size_t i : chain) chain_segments.push_back(to_segment(line, items[i]));
    }
    for (std::size_t i : chain) items[i].e -= 2;
    items.erase(std::remove_if(items.begin(), items.end(), [](const Interval& iv) { return iv.b > iv.e; }),
                items.end());
    if (trace) {
      trace->rounds.push_back(MwRound{std::move(chain_segments), to_segment(line, out), remaining(groups, g)});
    }
  }
}

MultiSegment run(const MultiSegment& m, MwRule rule, MwTrace* trace) {
  std::vector<Group> groups = group_by_line(m);
  std::vector<Segment> out;
  out.reserve(2 * m.size());
  std::vector<Interval> produced;
  produced.reserve(2 * m.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    produced.clear();
    dual_group(groups, g, rule, produced, trace);
    for (const Interval& iv : produced) out.push_back(to_segment(groups[g].key.line, iv));
  }
  return MultiSegment(std::move(out));
}

}  // namespace

MwResult mw_dual(const MultiSegment& m, MwRule rule) {
  MwResult result;
  result.dual = run(m, rule, &result.trace);
  return result;
}

MultiSegment zelevinsky_dual(const MultiSegment& m, MwRule rule) { return run(m, rule, nullptr); }

}  // namespace zelcalc
