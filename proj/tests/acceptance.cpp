// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "zelcalc/basechange.hpp"
#include "zelcalc/catalog.hpp"
#include "zelcalc/distinction.hpp"
#include "zelcalc/dsl.hpp"
#include "zelcalc/errors.hpp"
#include "zelcalc/involution.hpp"
#include "zelcalc/testkit.hpp"
#include "zelcalc/universe_io.hpp"

using namespace zelcalc;

namespace {

int failed = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("[%s] %d %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failed;
}

void guarded(int id, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, std::string("error: ") + e.what());
  }
}

SuiteReport suite(const std::string& name) {
  SuiteConfig c;
  c.name = name;
  return run_suite(c);
}

std::string summary(const SuiteReport& r) {
  std::ostringstream s;
  s << r.suite << ": " << r.cases << " cases, " << r.failure_count << " failures";
  if (!r.failures.empty()) s << " (first: " << r.failures[0].input << ": " << r.failures[0].message << ")";
  return s.str();
}

Universe one_line() { return Universe({LineSpec{"one", 1, SelfDual{1, 0}}}); }

}  // namespace

int main() {
  guarded(1, [] {
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport inv = suite("involution");
    const SuiteReport com = suite("commutation");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream s;
    s << summary(inv) << "; " << summary(com) << "; " << secs << " s single-threaded (target < 30 s)";
    report(1, inv.failure_count == 0 && com.failure_count == 0 && secs < 30.0, s.str());
  });

  guarded(2, [] {
    const Universe u = one_line();
    const std::pair<const char*, const char*> cases[] = {
        {"[0,2]@one", "[2]@one+[1]@one+[0]@one"},
        {"[0,1]@one+[1,2]@one", "[1,2]@one+[0,1]@one"},
        {"[0,2]@one+[1,1]@one", "[2]@one+[1]@one+[1]@one+[0]@one"},
    };
    int ok = 0;
    std::string detail = "MW ground truth:";
    for (const auto& [in, out] : cases) {
      const std::string got = format_multisegment(zelevinsky_dual(parse_multisegment(in, u)), u);
      ok += got == out;
      detail += std::string(" ") + in + " -> " + got + ";";
    }
    report(2, ok == 3, detail);
  });

  SuiteReport parity;
  guarded(3, [&] {
    parity = suite("parity");
    report(3, parity.failure_count == 0, "rigid csd never NoParity, non-csd NotConjSelfDual; " + summary(parity));
  });

  guarded(4, [] {
    const SuiteReport r = suite("chi-swap");
    report(4, r.failure_count == 0, "chi-twist swaps StableOnly/UnstableOnly, fixes Both; " + summary(r));
  });

  guarded(5, [&] {
    const Universe u = one_line();
    const BcTag points = bc_class(parse_multisegment("[-1/2]@one+[1/2]@one", u), u).tag;
    const BcTag steinberg = bc_class(parse_multisegment("[-1/2,1/2]@one", u), u).tag;
    const bool pair_ok = points == BcTag::Both && steinberg == BcTag::StableOnly;
    report(5, parity.cases > 0 && parity.failure_count == 0 && pair_ok,
           "dual keeps csd and the single image; {[-1/2],[1/2]} -> " + std::string(to_string(points)) +
               ", {[-1/2,1/2]} -> " + std::string(to_string(steinberg)) + "; " + summary(parity));
  });

  guarded(6, [] {
    const SuiteReport r = suite("t-even");
    report(6, r.cases > 0 && r.failure_count == 0, "csd ladders: Both iff |m| even; " + summary(r));
  });

  guarded(7, [] {
    const SuiteReport r = suite("rf-cases");
    report(7, r.cases > 0 && r.failure_count == 0, "no ConsistencyViolation over eta0 x dist_a; " + summary(r));
  });

  guarded(8, [] {
    const SuiteReport r = suite("induced-hereditary");
    report(8, r.cases == 2000 && r.failure_count == 0,
           "1000 paired constructions + 1000 mixed, seed " + std::to_string(*r.seed) + "; " + summary(r));
  });

  guarded(9, [] {
    bool all = true;
    std::string detail = "catalog:";
    for (const EntryReport& r : verify_catalog()) {
      all = all && r.pass;
      detail += " " + r.id + (r.pass ? " ok" : " MISMATCH");
    }
    const CatalogEntry& e3 = catalog()[2];
    const Universe u3 = universe_from_json(e3.universe);
    const RepSpec r3 = parse_rep(e3.input, u3);
    const bool e3_ok = is_conj_self_dual(r3.concatenated(), u3) && !induced_distinction(r3, u3, 0).distinguished &&
                       !induced_distinction(r3, u3, 1).distinguished;
    const CatalogEntry& e4 = catalog()[3];
    const Universe u4 = universe_from_json(e4.universe);
    const MultiSegment theta = parse_multisegment(e4.input, u4);
    const BcTag t4 = bc_class(theta, u4).tag;
    const bool e4_ok = is_conj_self_dual(theta, u4) && !is_ladder(theta) &&
                       (t4 == BcTag::StableOnly || t4 == BcTag::UnstableOnly);
    report(9, all && catalog().size() == 4 && e3_ok && e4_ok, detail);
  });

  guarded(10, [] {
    const SuiteReport r = suite("roundtrip");
    struct Bad {
      const char* text;
      SourceSpan span;
    };
    const Bad corpus[] = {{"()", {0, 2}},         {"[0,1", {4, 4}},         {"[1/3]@one", {1, 4}},
                          {"[0]@", {4, 4}},       {"[0]@one+", {8, 8}},     {"([0]@one)*()", {10, 12}},
                          {"[0;1]@one", {2, 3}},  {"[0]@one [1]@one", {8, 9}}};
    int spans_ok = 0;
    for (const Bad& b : corpus) {
      try {
        parse_rep_syntax(b.text);
      } catch (const ParseError& e) {
        spans_ok += e.code() == ErrorCode::SyntaxError && e.span() == b.span;
      }
    }
    const int total = static_cast<int>(std::size(corpus));
    report(10, r.failure_count == 0 && r.cases > 0 && spans_ok == total,
           summary(r) + "; malformed corpus " + std::to_string(spans_ok) + "/" + std::to_string(total) +
               " SyntaxError with expected span");
  });

  return failed == 0 ? 0 : 1;
}
