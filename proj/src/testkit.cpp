#include "zelcalc/testkit.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "zelcalc/basechange.hpp"
#include "zelcalc/catalog.hpp"
#include "zelcalc/distinction.hpp"
#include "zelcalc/dsl.hpp"
#include "zelcalc/errors.hpp"
#include "zelcalc/universe_io.hpp"

namespace zelcalc {

std::optional<LatticeMode> parse_lattice_mode(std::string_view text) {
  if (text == "int") return LatticeMode::Int;
  if (text == "half") return LatticeMode::Half;
  if (text == "both") return LatticeMode::Both;
  return std::nullopt;
}

std::string_view to_string(LatticeMode mode) {
  switch (mode) {
    case LatticeMode::Int: return "int";
    case LatticeMode::Half: return "half";
    case LatticeMode::Both: return "both";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::vector<HalfInt> lattice_points(HalfInt lo, HalfInt hi, bool integral) {
  std::vector<HalfInt> out;
  for (std::int64_t d = lo.doubled(); d <= hi.doubled(); ++d) {
    if ((d % 2 == 0) == integral) out.push_back(HalfInt::from_doubled(d));
  }
  return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace

std::vector<Segment> segment_alphabet(const EnumSpec& spec) {
  std::vector<Segment> out;
  for (LineId line : spec.lines) {
    for (bool integral : {true, false}) {
      if (integral && spec.lattice == LatticeMode::Half) continue;
      if (!integral && spec.lattice == LatticeMode::Int) continue;
      const std::vector<HalfInt> pts = lattice_points(spec.lo, spec.hi, integral);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i; j < pts.size(); ++j) out.emplace_back(line, pts[i], pts[j]);
      }
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t case_count(const EnumSpec& spec) {
  // Multisets of size k over A letters: C(A + k - 1, k), built incrementally.
  const std::uint64_t a = segment_alphabet(spec).size();
  std::uint64_t total = 1;
  if (a == 0) return total;
  std::uint64_t term = 1;
  for (int k = 1; k <= spec.max_segments; ++k) {
    const std::uint64_t factor = a + k - 1;
    if (term > std::numeric_limits<std::uint64_t>::max() / factor) return std::numeric_limits<std::uint64_t>::max();
    term = term * factor / k;
    total = saturating_add(total, term);
  }
  return total;
}

MultisegmentEnumerator::MultisegmentEnumerator(const EnumSpec& spec)
    : alphabet_(segment_alphabet(spec)), max_segments_(spec.max_segments), count_(case_count(spec)) {
  if (count_ > spec.bound) {
    throw Error(ErrorCode::BoundExceeded, "enumeration has " + std::to_string(count_) + " cases, bound is " +
                                              std::to_string(spec.bound));
  }
}

bool MultisegmentEnumerator::next(MultiSegment& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    std::size_t i = cursor_.size();
    while (i > 0 && cursor_[i - 1] + 1 == alphabet_.size()) --i;
    if (i > 0) {
      const std::size_t v = ++cursor_[i - 1];
      std::fill(cursor_.begin() + static_cast<std::ptrdiff_t>(i), cursor_.end(), v);
    } else if (static_cast<int>(cursor_.size()) < max_segments_ && !alphabet_.empty()) {
      cursor_.assign(cursor_.size() + 1, 0);
    } else {
      done_ = true;
      return false;
    }
  }
  std::vector<Segment> segs;
  segs.reserve(cursor_.size());
  for (std::size_t c : cursor_) segs.push_back(alphabet_[c]);
  out = MultiSegment(std::move(segs));
  return true;
}

std::vector<MultiSegment> enumerate_multisegments(const EnumSpec& spec) {
  MultisegmentEnumerator en(spec);
  std::vector<MultiSegment> out;
  out.reserve(en.count());
  MultiSegment m;
  while (en.next(m)) out.push_back(m);
  return out;
}

// ---------------------------------------------------------------------------
// Suites

namespace {

constexpr std::array<std::string_view, 8> kSuites = {
    "involution", "commutation", "parity", "chi-swap", "t-even", "rf-cases", "induced-hereditary", "roundtrip"};

using Check = std::function<std::optional<std::string>(const MultiSegment&, const Universe&)>;

struct Variant {
  Universe universe;
  std::string label;
};

Universe single_line(int eta0, int dist_a) { return Universe({LineSpec{"one", 1, SelfDual{eta0, dist_a}}}); }

std::vector<Variant> variants(bool vary_eta0, bool vary_dist_a) {
  std::vector<Variant> out;
  for (int eta0 : {1, -1}) {
    for (int dist_a : {0, 1}) {
      if ((!vary_eta0 && eta0 != 1) || (!vary_dist_a && dist_a != 0)) continue;
      out.push_back({single_line(eta0, dist_a), "eta0=" + std::to_string(eta0) + ",dist_a=" + std::to_string(dist_a)});
    }
  }
  return out;
}

struct Collected {
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<SuiteFailure> failures;

  void add(SuiteFailure f) {
    ++failure_count;
    failures.push_back(std::move(f));
    if (failures.size() > 4 * kMaxReportedFailures) trim();
  }
  void trim() {
    std::sort(failures.begin(), failures.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    if (failures.size() > kMaxReportedFailures) failures.resize(kMaxReportedFailures);
  }
  void merge(Collected&& o) {
    cases += o.cases;
    failure_count += o.failure_count;
    for (SuiteFailure& f : o.failures) failures.push_back(std::move(f));
    trim();
  }
};

std::optional<std::string> guarded(const Check& check, const MultiSegment& m, const Universe& u) {
  try {
    return check(m, u);
  } catch (const std::exception& ex) {
    return std::string("error: ") + ex.what();
  }
}

// Runs check over (variant, case) pairs; filter == nullptr accepts every case.
Collected run_enumerated(const SuiteConfig& cfg, const std::vector<Variant>& vars, const Check& check,
                         const std::function<bool(const MultiSegment&, const Universe&)>& filter,
                         std::uint64_t stride = 1) {
  const unsigned jobs = std::max(1u, cfg.jobs);
  std::vector<Collected> parts(jobs);

  auto worker = [&](unsigned w) {
    Collected& out = parts[w];
    for (std::size_t vi = 0; vi < vars.size(); ++vi) {
      const Universe& u = vars[vi].universe;
      EnumSpec spec{{u.at("one")}, cfg.lo, cfg.hi, cfg.max_segments, cfg.lattice, cfg.bound};
      MultisegmentEnumerator en(spec);
      const std::uint64_t base = vi * en.count();
      MultiSegment m;
      for (std::uint64_t i = 0; en.next(m); ++i) {
        if (i % stride != 0 || (i / stride) % jobs != w) continue;
        if (filter && !filter(m, u)) continue;
        ++out.cases;
        if (auto msg = guarded(check, m, u)) {
          out.add({base + i, format_multisegment(m, u) + " [" + vars[vi].label + "]", *msg});
        }
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (std::thread& t : threads) t.join();
  }
  Collected all;
  for (Collected& p : parts) all.merge(std::move(p));
  return all;
}

std::vector<std::pair<LineKey, std::int64_t>> covered_points(const MultiSegment& m) {
  std::vector<std::pair<LineKey, std::int64_t>> out;
  for (const Segment& s : m) {
    for (std::int64_t d = s.b().doubled(); d <= s.e().doubled(); d += 2) out.emplace_back(s.key(), d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool consecutive_points(const MultiSegment& m) {
  if (m.empty() || !is_rigid(m)) return false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].length() != 1) return false;
    if (i > 0 && m[i].b() != m[i - 1].b() - 1) return false;
  }
  return true;
}

Check involution_check(MwRule rule) {
  return [rule](const MultiSegment& m, const Universe&) -> std::optional<std::string> {
    const MultiSegment d = zelevinsky_dual(m, rule);
    if (zelevinsky_dual(d, rule) != m) return "dual of dual differs from input";
    if (covered_points(d) != covered_points(m)) return "support multiplicities differ";
    if (m.size() == 1 && (d.size() != static_cast<std::size_t>(m[0].length()) ||
                          std::any_of(d.begin(), d.end(), [](const Segment& s) { return s.length() != 1; }))) {
      return "single segment does not map to its points";
    }
    if (consecutive_points(m) && d.size() != 1) return "consecutive points do not map to one segment";
    return std::nullopt;
  };
}

Check commutation_check(MwRule rule) {
  return [rule](const MultiSegment& m, const Universe& u) -> std::optional<std::string> {
    if (zelevinsky_dual(conj_dual(m, u), rule) != conj_dual(zelevinsky_dual(m, rule), u)) {
      return "dual does not commute with conj_dual";
    }
    if (zelevinsky_dual(chi_twist(m, u), rule) != chi_twist(zelevinsky_dual(m, rule), u)) {
      return "dual does not commute with chi_twist";
    }
    return std::nullopt;
  };
}

bool single_image(BcTag t) { return t == BcTag::StableOnly || t == BcTag::UnstableOnly; }

Check parity_check(MwRule rule) {
  return [rule](const MultiSegment& m, const Universe& u) -> std::optional<std::string> {
    const BaseChangeClass c = bc_class(m, u);
    const bool csd = is_conj_self_dual(m, u);
    if (!csd) {
      if (c.tag != BcTag::NotConjSelfDual) return "non conjugate self-dual input classified " + std::string(to_string(c.tag));
      return std::nullopt;
    }
    if (!is_rigid(m)) return std::nullopt;
    if (c.tag == BcTag::NotConjSelfDual || c.tag == BcTag::ConjSelfDualNoParity) {
      return "rigid conjugate self-dual input classified " + std::string(to_string(c.tag));
    }
    const MultiSegment d = zelevinsky_dual(m, rule);
    if (!is_conj_self_dual(d, u)) return "dual lost conjugate self-duality";
    const BaseChangeClass cd = bc_class(d, u);
    if (cd.tag == BcTag::NotConjSelfDual || cd.tag == BcTag::ConjSelfDualNoParity) {
      return "dual classified " + std::string(to_string(cd.tag));
    }
    if (single_image(c.tag) && !in_image_of(cd, c.tag)) {
      return "dual left the " + std::string(to_string(c.tag)) + " image (now " + std::string(to_string(cd.tag)) + ")";
    }
    return std::nullopt;
  };
}

std::optional<std::string> chi_swap_check(const MultiSegment& m, const Universe& u) {
  const BaseChangeClass c = bc_class(m, u);
  const BaseChangeClass ct = bc_class(chi_twist(m, u), u);
  BcTag expected = c.tag;
  if (c.tag == BcTag::StableOnly) expected = BcTag::UnstableOnly;
  if (c.tag == BcTag::UnstableOnly) expected = BcTag::StableOnly;
  if (ct.tag != expected || ct.n != c.n) {
    return std::string(to_string(c.tag)) + " twisted to " + std::string(to_string(ct.tag));
  }
  return std::nullopt;
}

bool csd_ladder(const MultiSegment& m, const Universe& u) {
  return !m.empty() && is_ladder(m) && is_conj_self_dual(m, u);
}

bool nonempty_ladder(const MultiSegment& m, const Universe&) { return !m.empty() && is_ladder(m); }

std::optional<std::string> t_even_check(const MultiSegment& m, const Universe& u) {
  const bool both = bc_class(m, u).tag == BcTag::Both;
  const bool even = m.size() % 2 == 0;
  if (both != even) return std::string("|m| ") + (even ? "even" : "odd") + (both ? " but" : " but not") + " in both images";
  return std::nullopt;
}

std::optional<std::string> rf_check(const MultiSegment& m, const Universe& u) {
  const RfCase rc = rf_case(m, u);
  const DistinctionVerdict tv = ladder_distinction(chi_twist(m, u), u);
  const DistinctionVerdict& v = rc.verdict;
  if (tv.tag != v.tag) return "chi-twist changed the verdict kind";
  if (v.tag == DistTag::OnlyExponent && tv.exponent != 1 - v.exponent) return "chi-twist did not flip the exponent";
  const int admitted = static_cast<int>(v.admits(0)) + static_cast<int>(v.admits(1));
  if (v.tag != DistTag::NotConjSelfDual && admitted == 0) return "conjugate self-dual ladder admits no exponent";
  return std::nullopt;
}

Check roundtrip_check() {
  return [](const MultiSegment& m, const Universe& u) -> std::optional<std::string> {
    const std::string text = format_multisegment(m, u);
    const MultiSegment back = parse_multisegment(text, u);
    if (back != m) return "parse(format(m)) != m";
    if (format_multisegment(back, u) != text) return "format is not idempotent";
    return std::nullopt;
  };
}

// ---- induced-hereditary

struct LadderPools {
  Universe universe;
  std::vector<MultiSegment> all;        // proper ladders, any line
  std::vector<MultiSegment> csd;        // conjugate self-dual proper ladders
  std::vector<MultiSegment> csd_h;      // ... that are H-distinguished
};

LadderPools build_pools() {
  LadderPools p{Universe({LineSpec{"one", 1, SelfDual{1, 0}}, LineSpec{"two", 2, SelfDual{-1, 1}},
                         LineSpec{"pi", 3, PartnerOf{"pi_b"}}, LineSpec{"pi_b", 3, PartnerOf{"pi"}}}),
                {}, {}, {}};
  for (std::uint32_t li = 0; li < p.universe.size(); ++li) {
    EnumSpec spec{{LineId{li}}, HalfInt::from_int(-3), HalfInt::from_int(3), 3, LatticeMode::Both};
    MultisegmentEnumerator en(spec);
    MultiSegment m;
    while (en.next(m)) {
      if (m.empty() || !is_proper_ladder(m)) continue;
      p.all.push_back(m);
      if (is_conj_self_dual(m, p.universe)) {
        p.csd.push_back(m);
        if (ladder_distinction(m, p.universe).admits(0)) p.csd_h.push_back(m);
      }
    }
  }
  return p;
}

bool factors_ok(const std::vector<MultiSegment>& f) {
  return mutually_unlinked(std::span<const MultiSegment>(f));
}

std::string induced_key(const InducedVerdict& v) {
  return v.distinguished ? "D" : std::string(to_string(*v.obstruction));
}

template <typename T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// Hereditary: pairs (C, conj_dual C) plus H-distinguished fixed factors.
// Mixed: fixed factors of either kind, and sometimes a partner that does not match.
std::vector<MultiSegment> random_rep(const LadderPools& p, std::mt19937_64& rng, bool hereditary) {
  std::uniform_int_distribution<int> slots(1, 3);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution rare(0.2);
  for (;;) {
    std::vector<MultiSegment> f;
    const int n = slots(rng);
    for (int i = 0; i < n; ++i) {
      if (coin(rng)) {
        const MultiSegment& c = pick(p.all, rng);
        f.push_back(c);
        if (hereditary || !rare(rng)) {
          f.push_back(conj_dual(c, p.universe));
        } else {
          f.push_back(pick(p.all, rng));
        }
      } else {
        f.push_back(hereditary ? pick(p.csd_h, rng) : pick(p.csd, rng));
      }
    }
    std::shuffle(f.begin(), f.end(), rng);
    if (factors_ok(f)) return f;
  }
}

Collected run_induced(const SuiteConfig& cfg) {
  const LadderPools pools = build_pools();
  const Universe& u = pools.universe;
  std::mt19937_64 rng(cfg.seed);
  Collected out;
  for (std::uint64_t key = 0; key < 2 * cfg.random_cases; ++key) {
    const bool hereditary = key < cfg.random_cases;
    const RepSpec r(random_rep(pools, rng, hereditary));
    std::vector<MultiSegment> permuted = r.factors();
    std::shuffle(permuted.begin(), permuted.end(), rng);
    ++out.cases;
    auto fail = [&](const std::string& msg) { out.add({key, format_rep(r, u), msg}); };
    try {
      const InducedVerdict v0 = induced_distinction(r, u, 0);
      const InducedVerdict v1 = induced_distinction(r, u, 1);
      if (hereditary && !v0.distinguished) {
        fail("paired construction reported " + induced_key(v0));
        continue;
      }
      for (int twist : {0, 1}) {
        const InducedVerdict& v = twist == 0 ? v0 : v1;
        if (v.distinguished && !is_valid_witness(r, u, twist, v.witness)) {
          fail("invalid witness for twist " + std::to_string(twist));
        }
        if (v.distinguished != brute_force_induced_distinguished(r, u, twist)) {
          fail("verdict disagrees with permutation search for twist " + std::to_string(twist));
        }
        if (induced_key(induced_distinction(RepSpec(permuted), u, twist)) != induced_key(v)) {
          fail("verdict changed under factor permutation for twist " + std::to_string(twist));
        }
      }
      std::vector<MultiSegment> twisted;
      for (const MultiSegment& f : r.factors()) twisted.push_back(chi_twist(f, u));
      const RepSpec rt(std::move(twisted));
      if (induced_key(induced_distinction(rt, u, 0)) != induced_key(v1) ||
          induced_key(induced_distinction(rt, u, 1)) != induced_key(v0)) {
        fail("twist 1 is not distinction of the chi-twisted product");
      }
    } catch (const std::exception& ex) {
      fail(std::string("error: ") + ex.what());
    }
  }
  out.trim();
  return out;
}

Collected run_catalog_roundtrip() {
  Collected out;
  std::uint64_t key = std::numeric_limits<std::uint64_t>::max() / 2;
  for (const CatalogEntry& e : catalog()) {
    ++out.cases;
    try {
      const Universe u = universe_from_json(e.universe);
      const RepSpec r = parse_rep(e.input, u);
      const std::string text = format_rep(r, u);
      if (parse_rep(text, u) != r || format_rep(parse_rep(text, u), u) != text) {
        out.add({key, e.input, "catalog input does not round-trip"});
      }
    } catch (const std::exception& ex) {
      out.add({key, e.input, std::string("error: ") + ex.what()});
    }
    ++key;
  }
  return out;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

bool brute_force_induced_distinguished(const RepSpec& r, const Universe& u, int twist) {
  std::vector<MultiSegment> f;
  for (const MultiSegment& x : r.factors()) f.push_back(twist == 1 ? chi_twist(x, u) : x);
  std::vector<MultiSegment> duals;
  std::vector<bool> h;
  for (const MultiSegment& x : f) {
    duals.push_back(conj_dual(x, u));
    h.push_back(ladder_distinction(x, u).admits(0));
  }
  std::vector<std::size_t> w(f.size());
  std::iota(w.begin(), w.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < f.size(); ++i) {
      ok = w[w[i]] == i && f[w[i]] == duals[i] && (w[i] != i || h[i]);
    }
    if (ok) return true;
  } while (std::next_permutation(w.begin(), w.end()));
  return false;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = cfg.name;
  Collected c;

  if (cfg.name == "involution") {
    c = run_enumerated(cfg, variants(false, false), involution_check(cfg.rule), nullptr);
  } else if (cfg.name == "commutation") {
    c = run_enumerated(cfg, variants(false, false), commutation_check(cfg.rule), nullptr);
  } else if (cfg.name == "parity") {
    c = run_enumerated(cfg, variants(true, false), parity_check(cfg.rule),
                       [](const MultiSegment& m, const Universe&) { return !m.empty(); });
  } else if (cfg.name == "chi-swap") {
    c = run_enumerated(cfg, variants(true, false), chi_swap_check,
                       [](const MultiSegment& m, const Universe&) { return !m.empty(); });
  } else if (cfg.name == "t-even") {
    c = run_enumerated(cfg, variants(true, false), t_even_check, csd_ladder);
  } else if (cfg.name == "rf-cases") {
    c = run_enumerated(cfg, variants(true, true), rf_check, nonempty_ladder);
  } else if (cfg.name == "induced-hereditary") {
    c = run_induced(cfg);
    report.seed = cfg.seed;
  } else if (cfg.name == "roundtrip") {
    EnumSpec spec{{LineId{0}}, cfg.lo, cfg.hi, cfg.max_segments, cfg.lattice, cfg.bound};
    const std::uint64_t total = case_count(spec);
    const std::uint64_t limit = std::max<std::uint64_t>(1, cfg.sample_limit);
    const std::uint64_t stride = (total + limit - 1) / limit;
    c = run_enumerated(cfg, variants(false, false), roundtrip_check(), nullptr, std::max<std::uint64_t>(1, stride));
    c.merge(run_catalog_roundtrip());
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + cfg.name + "'");
  }

  c.trim();
  report.cases = c.cases;
  report.failure_count = c.failure_count;
  report.failures = std::move(c.failures);
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const SuiteReport& report, bool include_timing) {
  nlohmann::json failures = nlohmann::json::array();
  for (const SuiteFailure& f : report.failures) {
    failures.push_back({{"key", f.key}, {"input", f.input}, {"message", f.message}});
  }
  nlohmann::json j = {{"suite", report.suite},
                      {"cases", report.cases},
                      {"failure_count", report.failure_count},
                      {"failures", std::move(failures)}};
  j["seed"] = report.seed ? nlohmann::json(*report.seed) : nlohmann::json(nullptr);
  if (include_timing) j["wall_ms"] = report.wall_ms;
  return j;
}

}  // namespace zelcalc
