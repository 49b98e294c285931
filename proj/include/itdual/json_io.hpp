#ifndef ITDUAL_JSON_IO_HPP
#define ITDUAL_JSON_IO_HPP

#include "itdual/catalog.hpp"
#include "itdual/distribution.hpp"
#include "itdual/expr.hpp"
#include "itdual/shannon.hpp"

#include <json.hpp>

#include <string>

namespace itdual {

// Distribution files: {"variables": ["A","B"],
//                      "atoms": [{"t": ["0","1"], "p": "1/4"}, ...]}
// Masses are parsed as exact rationals; the distribution invariants are
// enforced on load.
JointDistribution distribution_from_json(const nlohmann::json& j);
JointDistribution load_distribution(const std::string& path);
nlohmann::json distribution_to_json(const JointDistribution& d);

// Coefficient map {"AC": "1", "C": "-1", ...}; subset keys use
// GroundSet::subset_name, rationals are "p/q" strings.
nlohmann::json expr_to_json(const InfExpr& c);

nlohmann::json point_to_json(const EntropyPoint& h);
nlohmann::json point_to_json(const RealPoint& h);

// {"verdict": ..., "multipliers": {"3": "1/2", ...}, "separator": {...}}
// with multipliers keyed by elemental index.
nlohmann::json certificate_to_json(const ShannonCertificate& cert,
                                   const GroundSet& ground);

nlohmann::json selfdual_to_json(const SelfDualCertificate& cert);
nlohmann::json eval_report_to_json(const EvalReport& report, const GroundSet& ground);
nlohmann::json theorem_report_to_json(const TheoremReport& report);

}

#endif
