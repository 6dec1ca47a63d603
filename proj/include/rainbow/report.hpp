#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/exact_rc.hpp"
#include "rainbow/experiment.hpp"
#include "rainbow/theorems.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace rainbow {

using Json = nlohmann::json;

inline constexpr std::string_view kSchemaVersion = "1.0";

/// Envelope written by every CLI command. `timing` is null unless timing was
/// requested, so repeated runs produce byte-identical reports.
struct Report {
    std::string schema_version{kSchemaVersion};
    std::string command;
    Json inputs = Json::object();
    Json result = Json::object();
    std::optional<double> wall_ms;

    bool operator==(const Report &) const = default;
};

void to_json(Json &j, const Report &r);
void from_json(const Json &j, Report &r);

Json rational_to_json(const Rational &r);
Rational rational_from_json(const Json &j);

void to_json(Json &j, const VertexPair &p);
void from_json(const Json &j, VertexPair &p);
void to_json(Json &j, const RainbowWitness &w);
void from_json(const Json &j, RainbowWitness &w);
void to_json(Json &j, const EdgeColoring &c);
void from_json(const Json &j, EdgeColoring &c);
void to_json(Json &j, const VerifyResult &r);
void from_json(const Json &j, VerifyResult &r);
void to_json(Json &j, const LasVegasResult &r);
void from_json(const Json &j, LasVegasResult &r);

void to_json(Json &j, const SearchStats &s);
void from_json(const Json &j, SearchStats &s);
void to_json(Json &j, const RcResult &r);
void from_json(const Json &j, RcResult &r);

void to_json(Json &j, const PairBranch &b);
void from_json(const Json &j, PairBranch &b);
void to_json(Json &j, const TheoremCheck &c);
void from_json(const Json &j, TheoremCheck &c);
void to_json(Json &j, const BoundReport &b);
void from_json(const Json &j, BoundReport &b);

void to_json(Json &j, const WilsonInterval &w);
void from_json(const Json &j, WilsonInterval &w);
void to_json(Json &j, const TrialStats &s);
void from_json(const Json &j, TrialStats &s);
void to_json(Json &j, const FamilySpec &s);
void from_json(const Json &j, FamilySpec &s);

} // namespace rainbow
