// Scene descriptions: a residue field, a value group, and a domain, loaded
// from JSON. Four presets ship in scenes/: a DVR over F_3, a Z[1/2]-valued
// Puiseux field over F_3, and the Q(i)/Q and F_9/F_3 pseudovaluation
// domains.
#pragma once

#include <map>
#include <string>

#include "skolemlab/domains.hpp"

namespace skolemlab::scene {

using domains::DomainDescriptor;
using valued_field::KPtr;
using valued_field::ValuedElement;

struct SchemaError : std::runtime_error {
  std::string path;  // JSON path of the offending field
  SchemaError(std::string p, const std::string& what)
      : std::runtime_error(what + " (at " + p + ")"), path(std::move(p)) {}
};

struct Scene {
  std::string name;
  KPtr K;
  DomainDescriptor domain;
  // PVD basis (unit representatives); empty for valuation scenes.
  std::vector<ValuedElement> pvd_basis;
  uint64_t seed = 0;
  long sample_den_bound = 16;  // denominator bound for dense-group sampling

  bool is_pvd() const { return domain.kind == domains::DomainKind::PVD; }
};

Scene load_scene(const std::string& path);
Scene scene_from_json_text(const std::string& text);

// Stable digest of the scene for reports (name + descriptor summary).
std::string scene_digest(const Scene& s);

}  // namespace skolemlab::scene
