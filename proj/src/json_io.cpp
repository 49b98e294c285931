#include "itdual/json_io.hpp"

#include "itdual/parse.hpp"

#include <fstream>
#include <stdexcept>

namespace itdual {

using nlohmann::json;

JointDistribution distribution_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("variables") || !j.contains("atoms"))
        throw std::invalid_argument(
            "distribution must be {\"variables\": [...], \"atoms\": [...]}");

    std::vector<std::string> labels;
    for (const auto& v : j.at("variables"))
        labels.push_back(v.get<std::string>());
    GroundSet ground(labels);

    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms")) {
        Atom atom;
        for (const auto& s : a.at("t"))
            atom.tuple.push_back(s.is_string() ? s.get<std::string>() : s.dump());
        atom.mass = parse_rational(a.at("p").get<std::string>());
        atoms.push_back(std::move(atom));
    }
    return JointDistribution(std::move(ground), std::move(atoms));
}

JointDistribution load_distribution(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open distribution file '" + path + "'");
    json j;
    in >> j;
    return distribution_from_json(j);
}

json distribution_to_json(const JointDistribution& d)
{
    json atoms = json::array();
    for (const auto& atom : d.atoms())
        atoms.push_back({{"t", atom.tuple}, {"p", rat_to_string(atom.mass)}});
    return {{"variables", d.ground().labels()}, {"atoms", atoms}};
}

json expr_to_json(const InfExpr& c)
{
    json coeffs = json::object();
    for (const auto& [mask, coef] : c.coeffs())
        coeffs[c.ground().subset_name(mask)] = rat_to_string(coef);
    return {{"ground", c.ground().labels()}, {"coefficients", coeffs}};
}

json point_to_json(const EntropyPoint& h)
{
    json values = json::object();
    for (Mask m = 1; m <= h.ground.full_mask(); ++m)
        values[h.ground.subset_name(m)] = rat_to_string(h.value(m));
    return values;
}

json point_to_json(const RealPoint& h)
{
    json values = json::object();
    for (Mask m = 1; m <= h.ground.full_mask(); ++m)
        values[h.ground.subset_name(m)] = h.value(m);
    return values;
}

json certificate_to_json(const ShannonCertificate& cert, const GroundSet& ground)
{
    json out;
    if (cert.verdict == ShannonVerdict::ShannonType) {
        out["verdict"] = "shannon-type";
        json multipliers = json::object();
        for (const auto& [index, value] : cert.multipliers)
            multipliers[std::to_string(index)] = rat_to_string(value);
        out["multipliers"] = multipliers;
    } else {
        out["verdict"] = "not-shannon-type";
        out["separator"] = point_to_json(*cert.separator);
    }
    out["ground"] = ground.labels();
    return out;
}

json selfdual_to_json(const SelfDualCertificate& cert)
{
    json out;
    switch (cert.verdict) {
    case SelfDualVerdict::Instance:
        out["verdict"] = "instance";
        break;
    case SelfDualVerdict::ConditionalVersion:
        out["verdict"] = "conditional-version";
        break;
    case SelfDualVerdict::NotFound:
        out["verdict"] = "not-found";
        return out;
    }
    const Substitution& s = *cert.witness;
    json images = json::object();
    for (int i = 0; i < s.source.size(); ++i)
        images[s.source.label(i)] = s.target.labels_of(s.images[i]);
    out["substitution"] = images;
    if (cert.fresh) {
        out["fresh"] = *cert.fresh;
        out["order"] = cert.substitute_first ? "substitute-then-condition"
                                             : "condition-then-substitute";
    }
    return out;
}

json eval_report_to_json(const EvalReport& report, const GroundSet& ground)
{
    json terms = json::object();
    for (const auto& [mask, value] : report.terms)
        terms[ground.subset_name(mask)] = value;
    return {{"value", report.value}, {"terms", terms}};
}

json theorem_report_to_json(const TheoremReport& r)
{
    json zero_terms = json::object();
    for (const auto& [name, value] : r.zero_terms)
        zero_terms[name] = value;
    return {
        {"eps", rat_to_string(r.eps)},
        {"eps_half", rat_to_string(r.eps_half)},
        {"zero_terms", zero_terms},
        {"I(C;D|E)", r.icd_e},
        {"I(A;B|CD)", r.iab_cd},
        {"dual_total", r.total},
        {"mmrv_value", r.mmrv_on_h},
        {"mmrv_on_dual_point", r.mmrv_on_dual_point},
        {"ratios", {{"I(C;D|E)", r.icd_e_ratio}, {"I(A;B|CD)", r.iab_cd_ratio}}},
        {"checks",
         {{"zero_terms", r.zero_terms_ok},
          {"dual_negative", r.dual_negative},
          {"mmrv_nonnegative", r.mmrv_nonnegative},
          {"dual_point_negative", r.dual_point_negative},
          {"ratios", r.ratios_ok}}},
        {"pass", r.all_ok},
    };
}

}
