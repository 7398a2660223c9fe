#include "skolemlab/scene.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "skolemlab/parser.hpp"

namespace skolemlab::scene {

using json = nlohmann::json;
using residue_field::FieldDescriptor;
using residue_field::FieldPtr;
using valgroup::GroupDescriptor;
using valgroup::GroupKind;

namespace {

FieldPtr parse_field(const json& j) {
  if (!j.contains("kind")) throw SchemaError("field.kind", "missing");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "PrimeFinite") {
    if (!j.contains("p")) throw SchemaError("field.p", "missing");
    return FieldDescriptor::prime_finite(j["p"].get<long>());
  }
  if (kind == "ExtFinite") {
    if (!j.contains("p") || !j.contains("minpoly"))
      throw SchemaError("field", "ExtFinite needs p and minpoly");
    std::vector<Rat> mp;
    for (const auto& c : j["minpoly"]) {
      if (c.is_string()) mp.push_back(rat_from_string(c.get<std::string>()));
      else mp.push_back(Rat(c.get<long>()));
    }
    std::string gen = j.value("generator", "w");
    return FieldDescriptor::ext_finite(j["p"].get<long>(), std::move(mp), gen);
  }
  if (kind == "Rationals") return FieldDescriptor::rationals();
  if (kind == "QuadraticExt") {
    if (!j.contains("d")) throw SchemaError("field.d", "missing");
    Rat d = j["d"].is_string() ? rat_from_string(j["d"].get<std::string>())
                               : Rat(j["d"].get<long>());
    std::string gen = j.value("generator", "i");
    return FieldDescriptor::quadratic(d, gen);
  }
  throw SchemaError("field.kind", "unknown kind " + kind);
}

GroupDescriptor parse_group(const json& j) {
  if (!j.contains("kind")) throw SchemaError("group.kind", "missing");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "Integers") return GroupDescriptor::integers();
  if (kind == "Rationals") return GroupDescriptor::rationals();
  if (kind == "LocalizedIntegers") {
    if (!j.contains("primes")) throw SchemaError("group.primes", "missing");
    std::vector<long> primes;
    for (const auto& p : j["primes"]) primes.push_back(p.get<long>());
    return GroupDescriptor::localized(std::move(primes));
  }
  throw SchemaError("group.kind", "unknown kind " + kind);
}

}  // namespace

Scene scene_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  Scene s;
  s.name = j.value("name", "unnamed");
  if (!j.contains("field")) throw SchemaError("field", "missing");
  if (!j.contains("group")) throw SchemaError("group", "missing");
  FieldPtr field = parse_field(j["field"]);
  GroupDescriptor group = parse_group(j["group"]);

  if (j.contains("puiseux")) {
    bool puiseux = j["puiseux"].get<bool>();
    if (puiseux != (group.kind != GroupKind::Integers))
      throw SchemaError("puiseux",
                        "puiseux flag must match (group != Integers)");
  }

  auto kd = std::make_shared<valued_field::ValuedFieldDescriptor>();
  kd->base = field;
  kd->group = group;
  s.K = kd;

  std::string dkind = "Valuation";
  if (j.contains("domain")) {
    if (!j["domain"].contains("kind"))
      throw SchemaError("domain.kind", "missing");
    dkind = j["domain"]["kind"].get<std::string>();
  }
  if (dkind == "Valuation") {
    s.domain = DomainDescriptor::valuation(s.K);
  } else if (dkind == "PVD") {
    try {
      s.domain = DomainDescriptor::pvd(s.K);
    } catch (const domains::DomainError& e) {
      throw SchemaError("domain", e.what());
    }
    if (j["domain"].contains("basis")) {
      for (const auto& b : j["domain"]["basis"])
        s.pvd_basis.push_back(
            parser::parse_element(b.get<std::string>(), s));
    }
  } else {
    throw SchemaError("domain.kind", "unknown kind " + dkind);
  }

  s.seed = j.value("seed", 0);
  s.sample_den_bound = j.value("sample_den_bound", 16);
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("$", "cannot open scene file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return scene_from_json_text(ss.str());
}

std::string scene_digest(const Scene& s) {
  std::string d = s.name + ":";
  switch (s.K->base->kind()) {
    case residue_field::FieldKind::PrimeFinite:
      d += "F" + std::to_string(s.K->base->p());
      break;
    case residue_field::FieldKind::ExtFinite:
      d += "F" + std::to_string(s.K->base->order());
      break;
    case residue_field::FieldKind::Rationals:
      d += "Q";
      break;
    case residue_field::FieldKind::QuadraticExt:
      d += "Q(" + s.K->base->generator_symbol() + ")";
      break;
  }
  d += ":";
  switch (s.K->group.kind) {
    case GroupKind::Integers: d += "Z"; break;
    case GroupKind::Rationals: d += "Q"; break;
    case GroupKind::LocalizedIntegers: {
      d += "Z[";
      for (size_t i = 0; i < s.K->group.primes.size(); ++i) {
        if (i) d += ",";
        d += "1/" + std::to_string(s.K->group.primes[i]);
      }
      d += "]";
      break;
    }
  }
  d += s.is_pvd() ? ":PVD" : ":V";
  return d;
}

}  // namespace skolemlab::scene
