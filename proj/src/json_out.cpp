#include "zelcalc/json_out.hpp"

#include <algorithm>

namespace zelcalc {

using nlohmann::json;

std::string describe(const DistinctionVerdict& v) {
  if (v.tag == DistTag::OnlyExponent) return "OnlyExponent(" + std::to_string(v.exponent) + ")";
  return std::string(to_string(v.tag));
}

std::string describe(const InducedVerdict& v) {
  if (v.distinguished) return "Distinguished";
  return "NotDistinguished(" + std::string(to_string(*v.obstruction)) + ")";
}

json to_json(const Segment& s, const Universe& u) {
  return {{"line", u.name(s.line())}, {"b", s.b().str()}, {"e", s.e().str()}};
}

json to_json(const MwTrace& trace, const Universe& u) {
  json rounds = json::array();
  for (const MwRound& r : trace.rounds) {
    json chain = json::array();
    for (const Segment& s : r.chain) chain.push_back(format_segment(s, u));
    rounds.push_back({{"chain", std::move(chain)},
                      {"produced", format_segment(r.produced, u)},
                      {"residue", format_multisegment(r.residue, u)}});
  }
  return rounds;
}

json to_json(const BaseChangeClass& c) {
  return {{"tag", to_string(c.tag)}, {"n", c.n}, {"parity_set", c.parity_set}, {"s", c.s}};
}

json to_json(const DistinctionVerdict& v) {
  json j = {{"tag", to_string(v.tag)}, {"k", v.k}, {"t", v.t}};
  if (v.tag == DistTag::OnlyExponent) j["exponent"] = v.exponent;
  j["gamma"] = v.gamma ? json(*v.gamma) : json(nullptr);
  return j;
}

json to_json(const InducedVerdict& v) {
  json j = {{"distinguished", v.distinguished}};
  if (v.distinguished) {
    json w = json::array();
    for (std::size_t i : v.witness) w.push_back(i + 1);
    j["witness"] = std::move(w);
  } else {
    j["obstruction"] = to_string(*v.obstruction);
    if (v.obstructing_factor) j["factor"] = *v.obstructing_factor + 1;
  }
  return j;
}

json to_json(const RepAst& r) {
  json factors = json::array();
  for (const MultiSegmentAst& f : r.factors) {
    std::vector<SegmentAst> segs = f.segments;
    for (SegmentAst& s : segs) {
      if (!s.line) s.line = f.default_line;
    }
    std::sort(segs.begin(), segs.end(), [](const SegmentAst& x, const SegmentAst& y) {
      if (*x.line != *y.line) return *x.line < *y.line;
      if (x.b != y.b) return x.b > y.b;
      return x.e > y.e;
    });
    json out = json::array();
    for (const SegmentAst& s : segs) {
      out.push_back({{"line", *s.line},
                     {"b", s.b.str()},
                     {"e", s.e.str()},
                     {"length", (s.e - s.b).doubled() / 2 + 1},
                     {"lattice", s.b.is_integral() ? "int" : "half"}});
    }
    factors.push_back(std::move(out));
  }
  return {{"factors", std::move(factors)}};
}

}  // namespace zelcalc
