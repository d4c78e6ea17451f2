#include "plyfold/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace plyfold {

namespace {

using nlohmann::json;

json spec_json(const MaterialSpec& s) {
    return json{{"h", s.h}, {"L", s.L}, {"N", s.N}, {"gamma", s.gamma}};
}

MaterialSpec spec_from(const json& j) {
    MaterialSpec s;
    s.h = j.at("h").get<double>();
    s.L = j.at("L").get<double>();
    s.N = j.at("N").get<int>();
    s.gamma = j.at("gamma").get<double>();
    return s;
}

json params_json(const ConstructionParams& p) {
    return json{{"beta", p.beta}, {"n", p.n}, {"l_arc", p.l_arc}, {"boundaries", p.boundaries}};
}

ConstructionParams params_from(const json& j) {
    ConstructionParams p;
    p.beta = j.at("beta").get<double>();
    p.n = j.at("n").get<int>();
    p.l_arc = j.at("l_arc").get<double>();
    p.boundaries = j.at("boundaries").get<std::vector<double>>();
    return p;
}

json breakdown_json(const EnergyBreakdown& b) {
    return json{{"elastic", b.elastic},
                {"delamination", b.delamination},
                {"total", b.total},
                {"jump_lengths", b.jump_lengths}};
}

json field_json(const DeformationField& f) {
    json j{{"kind", to_string(f.kind)}, {"spec", spec_json(f.spec)}, {"alpha", f.alpha}};
    if (f.kind == FieldKind::Cpa) j["beta"] = f.beta;
    if (f.kind == FieldKind::Multilayer) j["params"] = params_json(f.params);
    return j;
}

}  // namespace

std::string to_json_string(const MaterialSpec& spec) { return spec_json(spec).dump(2); }

std::string to_json_string(const EnergyBreakdown& b) { return breakdown_json(b).dump(2); }

std::string to_json_string(const DeformationField& f) { return field_json(f).dump(2); }

std::string to_json_string(const CertificateReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"value", c.value},
                              {"witness", c.witness},
                              {"note", c.note}});
    }
    return json{{"certified", r.certified}, {"checks", checks}}.dump(2);
}

std::string to_json_string(const OptimizeResult& r) {
    json j{{"delaminated", r.delaminated},
           {"split", r.split},
           {"plate_energy", r.plate_energy},
           {"fold_spec", spec_json(r.fold_spec)},
           {"fold_alpha", r.fold_alpha},
           {"breakdown", breakdown_json(r.breakdown)}};
    if (r.delaminated) j["params"] = params_json(r.params);
    return j.dump(2);
}

std::string to_json_string(const ScalingReport& r) {
    json pts = json::array();
    for (const ScalingPoint& p : r.points) {
        pts.push_back(json{{"value", p.value},
                           {"energy", p.energy},
                           {"upper_bound", p.upper},
                           {"lower_bound", p.lower},
                           {"regime", to_string(p.label)}});
    }
    return json{{"param", r.param},
                {"declared_regime", to_string(r.declared)},
                {"slope", r.slope},
                {"expected_exponent", r.expected},
                {"max_residual", r.max_residual},
                {"regime_ok", r.regime_ok},
                {"slope_ok", r.slope_ok},
                {"points", pts}}
        .dump(2);
}

std::string to_json_string(const MomentCurve& mc) {
    json rows = json::array();
    for (const MomentRow& r : mc.rows) {
        rows.push_back(json{{"alpha", r.alpha},
                            {"energy", r.energy},
                            {"moment", r.moment},
                            {"regime", to_string(r.label)},
                            {"transition", r.transition}});
    }
    return json{{"alpha_star", mc.alpha_star}, {"has_crossing", mc.has_crossing}, {"rows", rows}}
        .dump(2);
}

std::string to_json_string(const std::vector<RegimeInterval>& table) {
    json intervals = json::array();
    for (const RegimeInterval& r : table) {
        intervals.push_back(json{{"lo", r.lo}, {"hi", r.hi}, {"regime", to_string(r.label)}});
    }
    return json{{"intervals", intervals}}.dump(2);
}

DeformationField field_from_json_string(const std::string& text) {
    const json j = json::parse(text);
    const MaterialSpec spec = spec_from(j.at("spec"));
    const double alpha = j.at("alpha").get<double>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "plate") return build_plate(spec, alpha);
    if (kind == "cpa") return build_cpa(spec, alpha, j.at("beta").get<double>());
    if (kind == "multilayer") return build_multilayer(spec, alpha, params_from(j.at("params")));
    throw std::invalid_argument("field_from_json_string: unknown kind " + kind);
}

namespace {

std::string comment_line(const std::string& flags) {
    std::ostringstream os;
    os << "# plyfold " << kVersion << " | " << flags << "\n";
    return os.str();
}

void fmt(std::ostringstream& os, double v) {
    os.precision(17);
    os << v;
}

}  // namespace

std::string moment_csv(const MomentCurve& mc, const std::string& flags) {
    std::ostringstream os;
    os << comment_line(flags);
    os << "alpha,energy,moment,regime,transition\n";
    for (const MomentRow& r : mc.rows) {
        fmt(os, r.alpha);
        os << ",";
        fmt(os, r.energy);
        os << ",";
        fmt(os, r.moment);
        os << "," << to_string(r.label) << "," << (r.transition ? 1 : 0) << "\n";
    }
    os << "# alpha_star,";
    if (mc.has_crossing) {
        fmt(os, mc.alpha_star);
    } else {
        os << "none";
    }
    os << "\n";
    return os.str();
}

std::string scaling_csv(const ScalingReport& r, const std::string& flags) {
    std::ostringstream os;
    os << comment_line(flags);
    os << r.param << ",energy,regime,upper_bound,lower_bound\n";
    for (const ScalingPoint& p : r.points) {
        fmt(os, p.value);
        os << ",";
        fmt(os, p.energy);
        os << "," << to_string(p.label) << ",";
        fmt(os, p.upper);
        os << ",";
        fmt(os, p.lower);
        os << "\n";
    }
    return os.str();
}

std::string phase_csv(const std::vector<PhaseCell>& cells, const std::string& axis1,
                      const std::string& axis2, const std::string& flags) {
    std::ostringstream os;
    os << comment_line(flags);
    os << axis1 << "," << axis2 << ",regime,bound\n";
    for (const PhaseCell& c : cells) {
        fmt(os, c.v1);
        os << ",";
        fmt(os, c.v2);
        os << "," << c.regime << ",";
        fmt(os, c.bound);
        os << "\n";
    }
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace plyfold
