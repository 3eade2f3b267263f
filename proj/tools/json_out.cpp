#include "json_out.hpp"

#include <fstream>
#include <stdexcept>

namespace blowup::cli {

ordered_json region_json(const odi::RegionKind& region) {
  struct Visitor {
    ordered_json operator()(const odi::SubQuadraticRegion& r) const {
      return ordered_json{{"kind", "sub_quadratic"},
                          {"alpha", r.constants.alpha},
                          {"v1_threshold", r.constants.v1_threshold},
                          {"x1", r.constants.x1},
                          {"x2", r.constants.x2},
                          {"plateau", r.constants.plateau}};
    }
    ordered_json operator()(const odi::SuperQuadraticRegion& r) const {
      return ordered_json{{"kind", "super_quadratic"}, {"epsilon", r.epsilon}, {"A", r.A}};
    }
    ordered_json operator()(const odi::SystemRegion& r) const {
      return ordered_json{{"kind", "system"},
                          {"a", r.params.a},
                          {"p", r.params.p},
                          {"q", r.params.q},
                          {"alpha_sys", r.params.alpha_sys},
                          {"beta_sys", r.params.beta_sys}};
    }
    ordered_json operator()(const odi::LevineRegion& r) const {
      return ordered_json{{"kind", "levine"}, {"s0", r.s0}};
    }
  };
  return std::visit(Visitor{}, region);
}

ordered_json certificate_json(const odi::Certificate& cert) {
  ordered_json j;
  j["certified"] = true;
  j["provenance"] = odi::provenance_name(cert.provenance);
  j["params"] = {{"a", cert.params.a}, {"b", cert.params.b}, {"q", cert.params.q}};
  j["initial"] = {{"v0", cert.v0}, {"v1", cert.v1}};
  j["epsilon"] = cert.epsilon;
  j["t_star"] = cert.t_star;
  j["envelope"] = {{"base", cert.envelope.base}, {"slope", cert.envelope.slope}};
  j["region"] = region_json(cert.region);
  if (cert.l1_factor) j["l1_factor"] = *cert.l1_factor;
  return j;
}

ordered_json not_certified_json(const odi::CertifyResult& result) {
  ordered_json j;
  j["certified"] = false;
  j["status"] = result.status == odi::CertifyStatus::HypothesisViolated
                    ? "hypothesis_violated"
                    : "not_in_region";
  j["reason"] = result.detail;
  return j;
}

ordered_json termination_json(const ode::Termination& term) {
  ordered_json j;
  j["kind"] = ode::termination_name(term.kind);
  j["time"] = term.time;
  if (term.component >= 0) j["component"] = term.component;
  return j;
}

ordered_json blowup_fit_json(const ode::BlowupFit& fit) {
  return ordered_json{{"t_est", fit.t_est},
                      {"exponent", fit.exponent},
                      {"residual", fit.residual},
                      {"tail_points", fit.tail_points}};
}

ordered_json envelope_report_json(const ode::EnvelopeReport& rep) {
  ordered_json j;
  j["pass"] = rep.pass;
  j["worst_margin"] = rep.worst_margin;
  j["worst_time"] = rep.worst_time;
  j["checked"] = rep.checked;
  j["t_detect"] = rep.t_detect;
  j["t_star"] = rep.t_star;
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  return j;
}

ordered_json theorem_report_json(const spectral::TheoremReport& rep) {
  ordered_json j;
  j["pass"] = rep.pass;
  j["checked"] = rep.checked;
  j["worst_projection_margin"] = rep.worst_projection_margin;
  j["worst_l1_margin"] = rep.worst_l1_margin;
  j["min_jensen"] = rep.min_jensen;
  j["identity_error"] = rep.identity_error;
  j["t_star"] = rep.t_star;
  j["last_checked_time"] = rep.last_checked_time;
  if (!rep.failure.empty()) j["failure"] = rep.failure;
  return j;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << text;
}

void write_json_file(const std::filesystem::path& path, const ordered_json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace blowup::cli
