// Report JSON assembly: stable key order, rationals as "p/q" strings,
// the closed status vocabulary {pass, fail, evidence, theorem-level}.
#pragma once

#include <json.hpp>

#include "skolemlab/spectra.hpp"

namespace skolemlab::report {

inline constexpr const char* kVersion = "1.0.0";

using json = nlohmann::ordered_json;

std::string check_status_name(skolem::CheckStatus s);

json rat_json(const Rat& r);  // "p/q" string

// {suite, scene, checks: [{name, status, details}], seed, version}
json report_json(const skolem::SuiteReport& rep,
                 const std::string& scene_digest, uint64_t seed);

json plfunction_json(const valgroup::PLFunction& f);
json valat_json(const ratfunc::ValAt& v);
json exactness_json(const newton::ExactnessReport& r);
json skreport_json(const skolem::SkReport& r);
json certificate_json(const skolem::Certificate& c);

}  // namespace skolemlab::report
