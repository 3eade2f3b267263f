#include <cmath>
#include <iostream>

#include "blowup/odi/region.hpp"
#include "blowup/util/random.hpp"
#include "commands.hpp"
#include "exit_codes.hpp"
#include "json_out.hpp"

namespace blowup::cli {

namespace {

bool in_ours(const odi::OdiParams& params, double v0, double v1) {
  return params.q <= 2.0 ? odi::in_region_sub_quadratic(params, v0, v1)
                         : odi::in_region_super_quadratic(params, v0, v1);
}

}  // namespace

int cmd_compare_levine(double lambda, double C, double q, long long samples,
                       std::uint64_t seed) {
  if (samples < 0) throw std::invalid_argument("compare-levine: samples must be >= 0");
  const odi::OdiParams params(lambda, C, q);
  const double s0 = odi::levine_s0(lambda, C, q);
  util::Rng rng(seed);

  // Pass 1: points drawn from the wedge, tested against our region.
  long long levine_in_ours = 0;
  for (long long i = 0; i < samples; ++i) {
    const double v0 = s0 * (1.0 + 1e-9 + 3.0 * rng.uniform());
    const double v1 = v0 * (1.0 + 1e-9 + 2.0 * rng.uniform());
    if (in_ours(params, v0, v1)) ++levine_in_ours;
  }

  // Pass 2: points drawn from our region, tested against the wedge;
  // non-members are witnesses that our region is strictly larger.
  long long ours_not_levine = 0;
  ordered_json witnesses = ordered_json::array();
  long long negative_witnesses = 0, positive_witnesses = 0;
  auto record_witness = [&](double v0, double v1) {
    if (v0 < 0.0 && negative_witnesses < 8) {
      ++negative_witnesses;
      witnesses.push_back({{"v0", v0}, {"v1", v1}});
    } else if (v0 >= 0.0 && positive_witnesses < 8) {
      ++positive_witnesses;
      witnesses.push_back({{"v0", v0}, {"v1", v1}});
    }
  };
  if (params.q <= 2.0) {
    const auto consts = odi::sub_quadratic_constants(params);
    const double lo = consts.x1 - std::max(1.0, std::abs(consts.x1));
    const double hi = std::max(consts.x2 + 2.0, s0 + 2.0);
    for (long long i = 0; i < samples; ++i) {
      const double v0 = rng.uniform(lo, hi);
      const double v1 = odi::boundary_F(consts, params, v0) + rng.uniform(0.05, 3.0);
      if (!odi::levine_region(lambda, C, q, v0, v1)) {
        ++ours_not_levine;
        record_witness(v0, v1);
      }
    }
  } else {
    for (long long i = 0; i < samples; ++i) {
      const double v1 = rng.uniform(0.5, 4.0);
      const double bound = (params.b * std::pow(v1, q) -
                            params.a / (params.b * q * std::pow(v1, q - 2.0))) /
                           params.a;
      const double v0 = bound - rng.uniform(0.05, 3.0);
      if (!in_ours(params, v0, v1)) continue;
      if (!odi::levine_region(lambda, C, q, v0, v1)) {
        ++ours_not_levine;
        record_witness(v0, v1);
      }
    }
  }

  ordered_json j;
  j["params"] = {{"lambda", lambda}, {"C", C}, {"q", q}};
  j["seed"] = seed;
  j["samples"] = samples;
  j["s0"] = s0;
  // The wedge-inclusion claim is sampled for q <= 2 only.
  j["inclusion_claimed"] = q <= 2.0;
  j["levine_in_ours"] = {{"count", levine_in_ours}, {"total", samples}};
  j["ours_not_levine"] = {{"count", ours_not_levine}, {"total", samples}};
  j["witnesses"] = witnesses;
  std::cout << j.dump(2) << "\n";
  return kOk;
}

}  // namespace blowup::cli
