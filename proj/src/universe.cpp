#include "zelcalc/universe.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "zelcalc/errors.hpp"

namespace zelcalc {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string line_path(std::size_t i, std::string_view field) {
  return "/lines/" + std::to_string(i) + "/" + std::string(field);
}

}  // namespace

std::string chi_twist_name(std::string_view id) {
  if (id.size() > kChiSuffix.size() && id.substr(id.size() - kChiSuffix.size()) == kChiSuffix) {
    return std::string(id.substr(0, id.size() - kChiSuffix.size()));
  }
  return std::string(id) + std::string(kChiSuffix);
}

LineSpec chi_twist_spec(const LineSpec& spec) {
  LineSpec out = spec;
  out.id = chi_twist_name(spec.id);
  if (spec.is_self()) {
    const SelfDual& s = spec.self();
    out.conj_dual = SelfDual{-s.eta0, 1 - s.dist_a};
  } else {
    out.conj_dual = PartnerOf{chi_twist_name(std::get<PartnerOf>(spec.conj_dual).id)};
  }
  return out;
}

Universe::Universe(std::vector<LineSpec> declared) : declared_(std::move(declared)) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < declared_.size(); ++i) {
    const LineSpec& l = declared_[i];
    if (!is_identifier(l.id)) {
      throw SchemaError(line_path(i, "id"),
                        "line id '" + l.id + "' must match [A-Za-z_][A-Za-z0-9_]*");
    }
    if (l.deg <= 0) throw SchemaError(line_path(i, "deg"), "deg must be a positive integer");
    if (l.is_self()) {
      const SelfDual& s = l.self();
      if (s.eta0 != 1 && s.eta0 != -1) throw SchemaError(line_path(i, "eta0"), "eta0 must be 1 or -1");
      if (s.dist_a != 0 && s.dist_a != 1) throw SchemaError(line_path(i, "dist_a"), "dist_a must be 0 or 1");
    }
    if (!index.emplace(l.id, i).second) {
      throw SchemaError(line_path(i, "id"), "duplicate line id '" + l.id + "'");
    }
  }
  for (std::size_t i = 0; i < declared_.size(); ++i) {
    const LineSpec& l = declared_[i];
    if (l.is_self()) continue;
    const std::string& p = std::get<PartnerOf>(l.conj_dual).id;
    auto it = index.find(p);
    if (p == l.id) {
      throw Error(ErrorCode::InconsistentPartners, "line '" + l.id + "' is declared as its own partner");
    }
    if (it == index.end()) {
      throw Error(ErrorCode::InconsistentPartners,
                  "line '" + l.id + "' names unknown partner '" + p + "'");
    }
    const LineSpec& q = declared_[it->second];
    if (q.is_self() || std::get<PartnerOf>(q.conj_dual).id != l.id) {
      throw Error(ErrorCode::InconsistentPartners,
                  "partner relation between '" + l.id + "' and '" + p + "' is not symmetric");
    }
    if (q.deg != l.deg) {
      throw Error(ErrorCode::InconsistentPartners,
                  "partners '" + l.id + "' and '" + p + "' have different deg");
    }
  }

  std::vector<LineSpec> all;
  all.reserve(2 * declared_.size());
  for (const LineSpec& l : declared_) {
    all.push_back(l);
    all.push_back(chi_twist_spec(l));
  }
  std::sort(all.begin(), all.end(), [](const LineSpec& a, const LineSpec& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < all.size(); ++i) {
    by_name_.emplace(all[i].id, LineId{static_cast<std::uint32_t>(i)});
  }
  lines_.reserve(all.size());
  for (LineSpec& l : all) {
    LineId chi = by_name_.at(chi_twist_name(l.id));
    LineId self = by_name_.at(l.id);
    LineId dual = l.is_self() ? self : by_name_.at(std::get<PartnerOf>(l.conj_dual).id);
    lines_.push_back(Entry{std::move(l), dual, chi});
  }
}

std::optional<LineId> Universe::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

LineId Universe::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error(ErrorCode::UnknownLine, "unknown line '" + std::string(name) + "'");
}

}  // namespace zelcalc
