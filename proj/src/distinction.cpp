#include "zelcalc/distinction.hpp"

#include <string>

#include "zelcalc/errors.hpp"

namespace zelcalc {

std::string_view to_string(DistTag tag) {
  switch (tag) {
    case DistTag::NotConjSelfDual: return "NotConjSelfDual";
    case DistTag::BothExponents: return "BothExponents";
    case DistTag::OnlyExponent: return "OnlyExponent";
  }
  return "Unknown";
}

std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::NotConjSelfDual: return "NotConjSelfDual";
    case Obstruction::UnpairedFixedFactorNotHDistinguished: return "UnpairedFixedFactorNotHDistinguished";
  }
  return "Unknown";
}

int gamma_of(const MultiSegment& m, const Universe& u) {
  if (m.empty()) throw Error(ErrorCode::EmptyInput, "gamma of the empty multisegment");
  if (!is_rigid(m)) throw Error(ErrorCode::NotRigid, "gamma needs a multisegment on a single cuspidal line");
  const LineSpec& spec = u.spec(m[0].line());
  if (!spec.is_self()) {
    throw Error(ErrorCode::NotSelfDualLine, "line '" + spec.id + "' has no conjugate self-dual point");
  }
  const int a = spec.self().dist_a;
  return m[0].lattice() == Lattice::Integral ? a : 1 - a;
}

bool is_ladder(const MultiSegment& m) {
  if (!is_rigid(m)) return false;
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (!(m[i].b() < m[i - 1].b() && m[i].e() < m[i - 1].e())) return false;
  }
  return true;
}

bool is_proper_ladder(const MultiSegment& m) {
  if (!is_ladder(m)) return false;
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (!precedes(m[i], m[i - 1])) return false;
  }
  return true;
}

std::vector<MultiSegment> proper_ladder_factors(const MultiSegment& m) {
  if (!is_ladder(m)) throw Error(ErrorCode::NotALadder, "multisegment is not a ladder");
  std::vector<MultiSegment> out;
  std::vector<Segment> chain;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0 && !precedes(m[i], m[i - 1])) {
      out.emplace_back(std::move(chain));
      chain.clear();
    }
    chain.push_back(m[i]);
  }
  if (!chain.empty()) out.emplace_back(std::move(chain));
  return out;
}

DistinctionVerdict ladder_distinction(const MultiSegment& m, const Universe& u) {
  if (m.empty()) throw Error(ErrorCode::EmptyInput, "distinction of the empty multisegment");
  if (!is_rigid(m)) throw Error(ErrorCode::NotRigid, "ladders live on a single cuspidal line");
  DistinctionVerdict v;
  v.k = proper_ladder_factors(m).size();
  v.t = m.size();
  if (u.spec(m[0].line()).is_self()) v.gamma = gamma_of(m, u);
  if (!is_conj_self_dual(m, u)) {
    v.tag = DistTag::NotConjSelfDual;
    return v;
  }
  if (v.k % 2 == 0) {
    v.tag = DistTag::BothExponents;
  } else {
    v.tag = DistTag::OnlyExponent;
    v.exponent = static_cast<int>((*v.gamma + v.t + 1) % 2);
  }
  return v;
}

RfCase rf_case(const MultiSegment& m, const Universe& u) {
  RfCase rc;
  rc.verdict = ladder_distinction(m, u);
  rc.bc = bc_class(m, u);
  rc.k_odd = rc.verdict.k % 2 == 1;
  rc.t_odd = rc.verdict.t % 2 == 1;

  auto violation = [](const std::string& what) {
    throw Error(ErrorCode::ConsistencyViolation, "ladder distinction and base change disagree: " + what);
  };
  const bool csd_verdict = rc.verdict.tag != DistTag::NotConjSelfDual;
  const bool csd_class = rc.bc.tag != BcTag::NotConjSelfDual;
  if (csd_verdict != csd_class) violation("conjugate self-duality");
  if (!csd_verdict) return rc;

  const int gamma = *rc.verdict.gamma;
  if (!rc.k_odd) {
    if (rc.t_odd) violation("k even with t odd");
    if (rc.verdict.tag != DistTag::BothExponents || rc.bc.tag != BcTag::Both) violation("k even");
  } else if (!rc.t_odd) {
    if (rc.verdict.tag != DistTag::OnlyExponent || rc.verdict.exponent != (gamma + 1) % 2 ||
        rc.bc.tag != BcTag::Both) {
      violation("k odd, t even");
    }
  } else {
    if (rc.verdict.tag != DistTag::OnlyExponent || rc.verdict.exponent != gamma ||
        (rc.bc.tag != BcTag::StableOnly && rc.bc.tag != BcTag::UnstableOnly)) {
      violation("k odd, t odd");
    }
  }
  return rc;
}

bool mutually_unlinked(std::span<const MultiSegment> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      for (const Segment& x : factors[i]) {
        for (const Segment& y : factors[j]) {
          if (is_linked(x, y)) return false;
        }
      }
    }
  }
  return true;
}

namespace {

std::vector<MultiSegment> twisted_factors(const RepSpec& r, const Universe& u, int twist) {
  if (twist != 0 && twist != 1) throw Error(ErrorCode::InvalidArgument, "twist must be 0 or 1");
  std::vector<MultiSegment> out;
  out.reserve(r.size());
  for (const MultiSegment& f : r.factors()) out.push_back(twist == 1 ? chi_twist(f, u) : f);
  return out;
}

bool h_distinguished(const MultiSegment& f, const Universe& u) {
  return ladder_distinction(f, u).admits(0);
}

}  // namespace

InducedVerdict induced_distinction(const RepSpec& r, const Universe& u, int twist) {
  const std::vector<MultiSegment>& raw = r.factors();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!is_proper_ladder(raw[i])) {
      throw HypothesisViolated(HypothesisKind::NotProperLadder, i,
                               "factor " + std::to_string(i + 1) + " is not a proper ladder");
    }
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      const MultiSegment pair[] = {raw[i], raw[j]};
      if (!mutually_unlinked(pair)) {
        throw HypothesisViolated(HypothesisKind::NotMutuallyUnlinked, i,
                                 "factors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                     " contain linked segments");
      }
    }
  }

  const std::vector<MultiSegment> f = twisted_factors(r, u, twist);
  const std::size_t k = f.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> w(k, unset);
  InducedVerdict verdict;

  // Pair each factor with the lowest free index carrying its conjugate dual.
  for (std::size_t i = 0; i < k; ++i) {
    if (w[i] != unset) continue;
    const MultiSegment dual = conj_dual(f[i], u);
    std::size_t j = i + 1;
    while (j < k && !(w[j] == unset && f[j] == dual)) ++j;
    if (j < k) {
      w[i] = j;
      w[j] = i;
    } else if (dual == f[i]) {
      w[i] = i;
    } else {
      verdict.obstruction = Obstruction::NotConjSelfDual;
      verdict.obstructing_factor = i;
      return verdict;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (w[i] == i && !h_distinguished(f[i], u)) {
      verdict.obstruction = Obstruction::UnpairedFixedFactorNotHDistinguished;
      verdict.obstructing_factor = i;
      return verdict;
    }
  }
  verdict.distinguished = true;
  verdict.witness = std::move(w);
  return verdict;
}

bool is_valid_witness(const RepSpec& r, const Universe& u, int twist, std::span<const std::size_t> w) {
  const std::vector<MultiSegment> f = twisted_factors(r, u, twist);
  if (w.size() != f.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (w[i] >= f.size() || w[w[i]] != i) return false;
    if (f[w[i]] != conj_dual(f[i], u)) return false;
    if (w[i] == i && !h_distinguished(f[i], u)) return false;
  }
  return true;
}

}  // namespace zelcalc
