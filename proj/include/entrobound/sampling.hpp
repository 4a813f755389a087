#ifndef ENTROBOUND_SAMPLING_HPP
#define ENTROBOUND_SAMPLING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "entrobound/angular.hpp"
#include "entrobound/states.hpp"

namespace entrobound {

// Counter-free splittable generator (SplitMix64).  The 64-bit output stream
// is a pure function of the seed, identical on every platform; uniform()
// maps the top 53 bits to [0, 1) exactly.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  double uniform();
};

// N points in d dimensions, row-major: point i occupies
// coords[i*d ... i*d + d - 1].
struct PointCloud {
  int d = 0;
  std::vector<double> coords;

  std::size_t size() const { return d > 0 ? coords.size() / d : 0; }
};

// Tabulated inverse CDF of a nonnegative density on [a, b]: the CDF is
// accumulated by composite Simpson on a uniform grid and inverted by binary
// search with linear interpolation inside the bracketing cell.
class InverseCdfTable {
 public:
  InverseCdfTable(const std::function<double(double)>& density, double a,
                  double b, int intervals);

  double sample(double u) const;  // u in [0, 1) -> abscissa

 private:
  double a_ = 0.0;
  double h_ = 0.0;
  std::vector<double> cdf_;
};

// i.i.d. draws from the separable density R(r)^2 |Y_mu|^2: the radius and
// each angle are inverted from their own 1D marginal CDF, then assembled
// into Cartesian coordinates.  Deterministic for a fixed seed.
PointCloud sample_state(const RadialState& state,
                        const QuantumNumberChain& chain, std::size_t count,
                        std::uint64_t seed);

// Second-moment matrix of a cloud about the origin and its trace-normalized
// form C_x.
struct CovarianceEstimate {
  int d = 0;
  std::vector<double> second_moment;  // row-major d x d
  std::vector<double> normalized;     // second_moment / trace

  std::vector<double> normalized_diagonal() const;
};

CovarianceEstimate empirical_covariance(const PointCloud& points);

}  // namespace entrobound

#endif
