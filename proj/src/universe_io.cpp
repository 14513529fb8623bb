#include "zelcalc/universe_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "zelcalc/errors.hpp"

namespace zelcalc {

namespace {

using nlohmann::json;

std::string at(const std::string& base, std::string_view key) { return base + "/" + std::string(key); }

int small_int(const json& j, const std::string& path, std::string_view what) {
  if (!j.is_number_integer()) throw SchemaError(path, std::string(what) + " must be an integer");
  return j.get<int>();
}

LineSpec line_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "line entry must be an object");
  static const std::set<std::string> allowed = {"id", "deg", "conj_dual", "eta0", "dist_a"};
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw SchemaError(at(path, key), "unknown field");
  }
  LineSpec l;
  if (!j.contains("id")) throw SchemaError(at(path, "id"), "missing field");
  if (!j["id"].is_string()) throw SchemaError(at(path, "id"), "id must be a string");
  l.id = j["id"].get<std::string>();

  if (!j.contains("deg")) throw SchemaError(at(path, "deg"), "missing field");
  l.deg = small_int(j["deg"], at(path, "deg"), "deg");

  if (!j.contains("conj_dual")) throw SchemaError(at(path, "conj_dual"), "missing field");
  const json& cd = j["conj_dual"];
  if (cd.is_string() && cd.get<std::string>() == "self") {
    SelfDual s;
    for (const char* key : {"eta0", "dist_a"}) {
      if (!j.contains(key)) throw SchemaError(at(path, key), "required on a self line");
    }
    s.eta0 = small_int(j["eta0"], at(path, "eta0"), "eta0");
    s.dist_a = small_int(j["dist_a"], at(path, "dist_a"), "dist_a");
    l.conj_dual = s;
  } else if (cd.is_object()) {
    if (cd.size() != 1 || !cd.contains("partner") || !cd["partner"].is_string()) {
      throw SchemaError(at(path, "conj_dual"), "expected {\"partner\": \"<id>\"}");
    }
    for (const char* key : {"eta0", "dist_a"}) {
      if (j.contains(key)) throw SchemaError(at(path, key), "not allowed on a partner line");
    }
    l.conj_dual = PartnerOf{cd["partner"].get<std::string>()};
  } else {
    throw SchemaError(at(path, "conj_dual"), "expected \"self\" or {\"partner\": \"<id>\"}");
  }
  return l;
}

}  // namespace

Universe universe_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("", "universe must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "lines") throw SchemaError("/" + key, "unknown field");
  }
  if (!j.contains("lines")) throw SchemaError("/lines", "missing field");
  if (!j["lines"].is_array()) throw SchemaError("/lines", "must be an array");
  std::vector<LineSpec> lines;
  for (std::size_t i = 0; i < j["lines"].size(); ++i) {
    lines.push_back(line_from_json(j["lines"][i], "/lines/" + std::to_string(i)));
  }
  return Universe(std::move(lines));
}

Universe parse_universe(std::string_view json_text) {
  json j = json::parse(json_text.begin(), json_text.end(), nullptr, false);
  if (j.is_discarded()) throw SchemaError("", "not valid JSON");
  return universe_from_json(j);
}

json universe_to_json(const Universe& u) {
  json lines = json::array();
  for (const LineSpec& l : u.declared()) {
    json e = {{"id", l.id}, {"deg", l.deg}};
    if (l.is_self()) {
      e["conj_dual"] = "self";
      e["eta0"] = l.self().eta0;
      e["dist_a"] = l.self().dist_a;
    } else {
      e["conj_dual"] = {{"partner", std::get<PartnerOf>(l.conj_dual).id}};
    }
    lines.push_back(std::move(e));
  }
  return {{"lines", std::move(lines)}};
}

Universe load_universe(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read universe file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_universe(buf.str());
}

}  // namespace zelcalc
