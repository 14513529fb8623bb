#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace zelcalc {

// Suffix marking the line obtained by twisting with the quadratic-extending character.
inline constexpr std::string_view kChiSuffix = "!chi";

// Attributes of a line whose normalized origin is conjugate self-dual.
struct SelfDual {
  int eta0 = 1;    // parity of the origin point, +1 or -1
  int dist_a = 0;  // the origin is (H, omega^dist_a)-distinguished, 0 or 1

  bool operator==(const SelfDual&) const = default;
};

// The conjugate dual of this line is another declared line.
struct PartnerOf {
  std::string id;

  bool operator==(const PartnerOf&) const = default;
};

using ConjDual = std::variant<SelfDual, PartnerOf>;

// An abstract cuspidal line sigma^Z.
struct LineSpec {
  std::string id;
  int deg = 1;
  ConjDual conj_dual = SelfDual{};

  bool is_self() const { return std::holds_alternative<SelfDual>(conj_dual); }
  // Requires is_self().
  const SelfDual& self() const { return std::get<SelfDual>(conj_dual); }

  bool operator==(const LineSpec&) const = default;
};

// Index of a line inside a Universe. Indices follow lexicographic order of ids.
struct LineId {
  std::uint32_t index = 0;

  auto operator<=>(const LineId&) const = default;
};

// The configured cuspidal data: declared lines plus their derived chi-twists.
// Immutable after construction.
class Universe {
 public:
  // Validates ids, partner symmetry and attributes; throws Error on failure.
  explicit Universe(std::vector<LineSpec> declared);

  const std::vector<LineSpec>& declared() const { return declared_; }

  std::size_t size() const { return lines_.size(); }
  const LineSpec& spec(LineId id) const { return lines_[id.index].spec; }
  const std::string& name(LineId id) const { return lines_[id.index].spec.id; }

  std::optional<LineId> find(std::string_view name) const;
  // Throws Error(UnknownLine).
  LineId at(std::string_view name) const;

  // Line carrying the conjugate duals of this line's points.
  LineId dual_line(LineId id) const { return lines_[id.index].dual; }
  // L <-> L!chi.
  LineId chi_line(LineId id) const { return lines_[id.index].chi; }

  bool operator==(const Universe& other) const { return declared_ == other.declared_; }

 private:
  struct Entry {
    LineSpec spec;
    LineId dual;
    LineId chi;
  };

  std::vector<LineSpec> declared_;
  std::vector<Entry> lines_;
  std::unordered_map<std::string, LineId> by_name_;
};

// Name of the chi-twisted line: "one" -> "one!chi", "one!chi" -> "one".
std::string chi_twist_name(std::string_view id);

// The derived attributes of the chi-twisted line: eta0 negated, dist_a flipped.
LineSpec chi_twist_spec(const LineSpec& spec);

}  // namespace zelcalc
