#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>

#include "blowup/ode/diagnostics.hpp"
#include "blowup/ode/integrator.hpp"
#include "blowup/odi/certificate.hpp"
#include "blowup/spectral/simulate.hpp"

namespace blowup::cli {

using ordered_json = nlohmann::ordered_json;

ordered_json region_json(const odi::RegionKind& region);
ordered_json certificate_json(const odi::Certificate& cert);
ordered_json not_certified_json(const odi::CertifyResult& result);
ordered_json termination_json(const ode::Termination& term);
ordered_json blowup_fit_json(const ode::BlowupFit& fit);
ordered_json envelope_report_json(const ode::EnvelopeReport& rep);
ordered_json theorem_report_json(const spectral::TheoremReport& rep);

void write_text_file(const std::filesystem::path& path, const std::string& text);
void write_json_file(const std::filesystem::path& path, const ordered_json& j);

}  // namespace blowup::cli
