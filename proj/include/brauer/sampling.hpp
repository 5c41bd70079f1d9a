#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "brauer/tensor_rep.hpp"

namespace brauer {

/// xoshiro256++ seeded through SplitMix64, with per-worker substreams derived
/// from (seed, worker index). Gaussian variates use Box-Muller on the raw
/// 64-bit stream, so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng substream(std::uint64_t seed, std::uint64_t worker);

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal.
  double gaussian();
  /// Complex normal with E|z|^2 = 1.
  std::complex<double> gaussian_complex();

 private:
  std::uint64_t state_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

enum class EnsembleKind { orthogonal_orbit, unitary_haar };

/// Which ensemble to average: the orthogonal orbit of seed_state, or Haar
/// unitaries applied to |0> (any fixed state gives the same moments).
struct EnsembleSpec {
  EnsembleKind kind;
  StateVector seed_state;
  int d;
  int t;
};

/// Outcome of the optimal two-outcome discrimination experiment.
struct ExperimentResult {
  std::int64_t n_samples;
  double empirical_success;
  double predicted_success;  // 1/2 + TD/2
  double std_error;          // sqrt(p(1-p)/n)
  std::uint64_t seed;
  int workers;
  double elapsed_seconds;
};

/// Haar-distributed real orthogonal matrix: Gaussian entries, QR, and the
/// R-diagonal signs folded into Q (uncorrected QR is not Haar).
Eigen::MatrixXd sample_haar_orthogonal(int d, Rng& rng);

/// Haar-distributed unitary matrix; phase fix analogous to the real case.
Eigen::MatrixXcd sample_haar_unitary(int d, Rng& rng);

/// Average of n samples of (g |psi><psi| g^{-dagger})^{(x)t}. Deterministic
/// for a fixed (seed, workers) pair; worker partials are merged in fixed
/// order.
DenseOperator empirical_moment(const EnsembleSpec& spec, std::int64_t n, std::uint64_t seed,
                               int workers = 1, std::size_t cap = kDefaultTensorCap);

/// Simulates the Helstrom measurement distinguishing t copies of a Haar
/// random real state from t copies of a Haar random complex state. Per trial
/// only the ensemble coin and the Haar draw are random; the measurement
/// outcome enters through its exact Born probability.
ExperimentResult helstrom_experiment(int t, int d, std::int64_t n, std::uint64_t seed,
                                     int workers = 1, std::size_t cap = kDefaultTensorCap);

}  // namespace brauer
