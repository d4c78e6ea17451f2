#pragma once

#include "plyfold/scaling.hpp"

#include <string>

namespace plyfold {

inline constexpr const char* kVersion = "0.1.0";

// JSON documents (nlohmann behind the scenes); fields reconstruct
// bit-identically, curves are recomputed rather than stored.
std::string to_json_string(const MaterialSpec& spec);
std::string to_json_string(const EnergyBreakdown& b);
std::string to_json_string(const DeformationField& f);
std::string to_json_string(const CertificateReport& r);
std::string to_json_string(const OptimizeResult& r);
std::string to_json_string(const ScalingReport& r);
std::string to_json_string(const MomentCurve& mc);
std::string to_json_string(const std::vector<RegimeInterval>& table);

DeformationField field_from_json_string(const std::string& text);

/// CSV with a comment line carrying the artifact version and the full
/// flag set, then a header row.
std::string moment_csv(const MomentCurve& mc, const std::string& flags);
std::string scaling_csv(const ScalingReport& r, const std::string& flags);

struct PhaseCell {
    double v1 = 0.0, v2 = 0.0;
    std::string regime;
    double bound = 0.0;
};
std::string phase_csv(const std::vector<PhaseCell>& cells, const std::string& axis1,
                      const std::string& axis2, const std::string& flags);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace plyfold
