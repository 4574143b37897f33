#pragma once

#include <array>
#include <complex>
#include <cstdio>
#include <memory>
#include <string>

#include "sectoria/matrix.hpp"

namespace test_util {

inline double max_diff(const sectoria::Matrix& a, const sectoria::Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double rel_frobenius_diff(const sectoria::Matrix& a, const sectoria::Matrix& b) {
  const double denom = std::max(1e-300, b.norm());
  return (a - b).norm() / denom;
}

// Independent scalar oracle for the accretive geometric mean: trapezoid
// integration of sin(v pi)/pi int_0^inf s^{v-1} (a^-1 + s b^-1)^-1 ds after
// splitting at s = 1 and substituting s = t^{1/w} on each segment to remove
// the endpoint singularity.
inline std::complex<double> scalar_geometric_mean_trapezoid(std::complex<double> a,
                                                            std::complex<double> b, double v,
                                                            long nodes = 1000000) {
  auto head = [nodes](std::complex<double> x, std::complex<double> y, double w) {
    std::complex<double> sum = 0.0;
    for (long k = 0; k <= nodes; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(nodes);
      const double s = std::pow(t, 1.0 / w);
      std::complex<double> g = 1.0 / (1.0 / x + s / y);
      const double weight = (k == 0 || k == nodes) ? 0.5 : 1.0;
      sum += weight * g;
    }
    return sum / (static_cast<double>(nodes) * w);
  };
  return std::sin(v * M_PI) / M_PI * (head(a, b, v) + head(b, a, 1.0 - v));
}

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

inline CommandResult run_command(const std::string& cmd) {
  CommandResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace test_util
