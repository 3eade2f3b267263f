#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "blowup/odi/region.hpp"
#include "commands.hpp"
#include "exit_codes.hpp"

namespace blowup::cli {

namespace {

std::string polyline_csv(const RegionArgs& args) {
  if (!(args.hi > args.lo)) throw std::invalid_argument("region: empty range");
  if (args.samples < 1) throw std::invalid_argument("region: samples must be positive");

  std::ostringstream os;
  os << "x,y\n";
  char buf[64];
  auto row = [&](double x, double y) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x, y);
    os << buf;
  };

  const int n = args.samples;
  auto grid = [&](int i) { return args.lo + (args.hi - args.lo) * i / n; };

  if (args.kind == "subq") {
    const odi::OdiParams params(args.a, args.b, args.q);
    const auto consts = odi::sub_quadratic_constants(params);
    for (int i = 0; i <= n; ++i)
      row(grid(i), odi::boundary_F(consts, params, grid(i)));
  } else if (args.kind == "superq") {
    const odi::OdiParams params(args.a, args.b, args.q);
    const double eps = odi::epsilon_min(params, args.v0, args.v1);
    const double A = eps * params.b * std::pow(args.v1, params.q) - params.a * args.v0;
    for (int i = 0; i <= n; ++i)
      row(grid(i), odi::boundary_F2(params, eps, A, grid(i)));
  } else if (args.kind == "levine") {
    const double s0 = odi::levine_s0(args.lambda, args.C, args.q);
    // Wedge boundary: admissible iff v1 > max(v0, s0).
    for (int i = 0; i <= n; ++i) row(grid(i), std::max(grid(i), s0));
  } else if (args.kind == "system") {
    for (int i = 0; i <= n; ++i) row(grid(i), odi::boundary_fp(args.a, args.p, grid(i)));
  } else {
    throw std::invalid_argument("region: kind must be one of subq, superq, levine, system");
  }
  return os.str();
}

}  // namespace

int cmd_region(const RegionArgs& args) {
  const std::string csv = polyline_csv(args);
  if (args.out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream os(args.out, std::ios::binary);
    if (!os) throw std::runtime_error("region: cannot open " + args.out);
    os << csv;
  }
  return kOk;
}

}  // namespace blowup::cli
