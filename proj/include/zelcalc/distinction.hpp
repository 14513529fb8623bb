#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zelcalc/basechange.hpp"
#include "zelcalc/segment.hpp"
#include "zelcalc/universe.hpp"

namespace zelcalc {

// gamma(sigma) of the line supporting m: dist_a on the integral lattice, 1 - dist_a on the half lattice.
// Throws Error(EmptyInput), Error(NotRigid) or Error(NotSelfDualLine).
int gamma_of(const MultiSegment& m, const Universe& u);

// Rigid, and sorted by b descending both b and e strictly decrease. The empty multisegment is a ladder.
bool is_ladder(const MultiSegment& m);
// A ladder whose consecutive segments satisfy Delta_{i+1} precedes Delta_i.
bool is_proper_ladder(const MultiSegment& m);
// Maximal consecutive precedence chains of a ladder, in b-descending order.
// Throws Error(NotALadder).
std::vector<MultiSegment> proper_ladder_factors(const MultiSegment& m);

enum class DistTag { NotConjSelfDual, BothExponents, OnlyExponent };

struct DistinctionVerdict {
  DistTag tag = DistTag::NotConjSelfDual;
  int exponent = 0;  // meaningful for OnlyExponent: L(m) is (H, omega^exponent)-distinguished
  std::size_t k = 0;  // proper ladder factors
  std::size_t t = 0;  // |m|
  std::optional<int> gamma;

  // Whether L(m) is (H, omega^e)-distinguished.
  bool admits(int e) const {
    return tag == DistTag::BothExponents || (tag == DistTag::OnlyExponent && exponent == e);
  }

  bool operator==(const DistinctionVerdict&) const = default;
};

std::string_view to_string(DistTag tag);

// Distinction of a ladder representation L(m).
// Throws Error(EmptyInput), Error(NotRigid), Error(NotALadder).
DistinctionVerdict ladder_distinction(const MultiSegment& m, const Universe& u);

// Ladder verdict and base change class side by side, checked against each other.
struct RfCase {
  bool k_odd = false;
  bool t_odd = false;
  DistinctionVerdict verdict;
  BaseChangeClass bc;
};

// Throws Error(ConsistencyViolation) if the verdict and the class disagree.
RfCase rf_case(const MultiSegment& m, const Universe& u);

// No segment of one factor is linked with a segment of another.
bool mutually_unlinked(std::span<const MultiSegment> factors);

enum class Obstruction { NotConjSelfDual, UnpairedFixedFactorNotHDistinguished };

std::string_view to_string(Obstruction o);

struct InducedVerdict {
  bool distinguished = false;
  // witness[i] = w(i), zero-based; an involution. Set when distinguished.
  std::vector<std::size_t> witness;
  std::optional<Obstruction> obstruction;
  // Zero-based index of a factor exhibiting the obstruction.
  std::optional<std::size_t> obstructing_factor;

  bool operator==(const InducedVerdict&) const = default;
};

// H-distinction (twist 0) or (H, omega)-distinction (twist 1) of pi_1 x ... x pi_k
// for mutually unlinked proper ladders. Throws HypothesisViolated when the factors
// are not proper ladders or not mutually unlinked.
InducedVerdict induced_distinction(const RepSpec& r, const Universe& u, int twist);

// Checks that w is an involution pairing each factor with its conjugate dual and
// that every fixed factor is H-distinguished (after the twist). Independent of the search.
bool is_valid_witness(const RepSpec& r, const Universe& u, int twist, std::span<const std::size_t> w);

}  // namespace zelcalc
