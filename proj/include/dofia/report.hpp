#pragma once

#include <string>

#include <json.hpp>

#include "dofia/config.hpp"
#include "dofia/geometry.hpp"
#include "dofia/regions.hpp"
#include "dofia/schemes.hpp"
#include "dofia/simulator.hpp"

namespace dofia {

// Insertion-ordered so identical inputs serialize byte-identically and the
// fields read in a sensible order.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);  // "num/den"
Json to_json(const DofPoint& p);
Json to_json(const Polytope2D& p);
Json to_json(const AntennaConfig& cfg);
Json classification_json(const AntennaConfig& cfg);
Json to_json(const RegionBundle& b);
Json to_json(const SchemeSpec& s);
Json to_json(const RankTerms& t);
Json to_json(const CountConstraints& c);
Json to_json(const TrialReport& r);
// Aggregate without the per-trial reports.
Json to_json(const Aggregate& a);

std::string trial_csv_header();
std::string to_csv_row(const TrialReport& r, const std::string& class_name);
std::string to_csv(const Aggregate& a);

// Self-contained SVG: no-CSIT, achievable and outer regions as nested
// polygons, corner labels and a legend.
std::string render_svg(const RegionBundle& b);

}  // namespace dofia
