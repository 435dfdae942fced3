#pragma once

#include <string>

#include <json.hpp>

#include "coxchain/bruhat.hpp"
#include "coxchain/cambrian.hpp"
#include "coxchain/report.hpp"

namespace coxchain {

using Json = nlohmann::ordered_json;

Json roots_json(const RootSystem& rs);
Json lattice_json(const Lattice& L);
Json mg_json(const MGPoset& mg, const ChainSet& chains);
Json report_json(const Report& r);
Json contraction_json(const ContractionReport& r);
Json bruhat_json(const HigherBruhat& b);

std::string weak_order_dot(const WeakOrder& wo);
// Congruence classes become clusters when theta is given.
std::string lattice_dot(const Lattice& L, const Congruence* theta = nullptr);

std::string dump(const Json& j);

}  // namespace coxchain
