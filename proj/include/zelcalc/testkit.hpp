#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zelcalc/involution.hpp"
#include "zelcalc/segment.hpp"
#include "zelcalc/universe.hpp"

namespace zelcalc {

enum class LatticeMode { Int, Half, Both };

std::optional<LatticeMode> parse_lattice_mode(std::string_view text);
std::string_view to_string(LatticeMode mode);

inline constexpr std::uint64_t kDefaultCaseBound = 10'000'000;

// Exponent window [lo, hi]: integral points in it for the int lattice, half-odd points for the half lattice.
struct EnumSpec {
  std::vector<LineId> lines;
  HalfInt lo;
  HalfInt hi;
  int max_segments = 0;
  LatticeMode lattice = LatticeMode::Int;
  std::uint64_t bound = kDefaultCaseBound;
};

// All segments within the spec, in canonical order.
std::vector<Segment> segment_alphabet(const EnumSpec& spec);

// Number of multisegments the spec describes (saturates at UINT64_MAX).
std::uint64_t case_count(const EnumSpec& spec);

// Streams every multisegment within the bounds exactly once: by size, then
// lexicographically in the canonical alphabet order. Case i is the i-th one produced.
class MultisegmentEnumerator {
 public:
  // Throws Error(BoundExceeded) when case_count(spec) > spec.bound.
  explicit MultisegmentEnumerator(const EnumSpec& spec);

  // Writes the next case; false when exhausted.
  bool next(MultiSegment& out);
  std::uint64_t count() const { return count_; }

 private:
  std::vector<Segment> alphabet_;
  int max_segments_;
  std::uint64_t count_;
  std::vector<std::size_t> cursor_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<MultiSegment> enumerate_multisegments(const EnumSpec& spec);

// Names accepted by run_suite.
std::span<const std::string_view> suite_names();

struct SuiteConfig {
  std::string name;
  HalfInt lo = HalfInt::from_int(-3);
  HalfInt hi = HalfInt::from_int(3);
  int max_segments = 5;
  LatticeMode lattice = LatticeMode::Both;
  unsigned jobs = 1;
  std::uint64_t seed = 20241016;
  std::size_t random_cases = 1000;  // induced-hereditary
  std::uint64_t sample_limit = 100000;  // roundtrip
  std::uint64_t bound = kDefaultCaseBound;
  MwRule rule = MwRule::ShortestStrict;  // test fixtures swap in a wrong rule
};

struct SuiteFailure {
  std::uint64_t key = 0;  // case index; the lowest key is the minimal failing case
  std::string input;
  std::string message;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<SuiteFailure> failures;  // lowest keys first, at most kMaxReportedFailures
  std::optional<std::uint64_t> seed;
  double wall_ms = 0;
};

inline constexpr std::size_t kMaxReportedFailures = 20;

// Throws Error(InvalidArgument) for an unknown suite, Error(BoundExceeded) for an oversize space.
SuiteReport run_suite(const SuiteConfig& config);

nlohmann::json to_json(const SuiteReport& report, bool include_timing = true);

// Independent check used by the induced-hereditary suite: searches every
// involution of the factors for one satisfying the pairing and fixed-point conditions.
// Non-involutive permutations are excluded: three copies of a conjugate self-dual,
// non-distinguished factor admit a 3-cycle but the product is not distinguished.
bool brute_force_induced_distinguished(const RepSpec& r, const Universe& u, int twist);

}  // namespace zelcalc
