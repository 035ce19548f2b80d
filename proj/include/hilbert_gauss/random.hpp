#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hilbert_gauss {

/// Source of standard normal and uniform(0,1) variates. Samplers take one by
/// reference; instances are never shared between workers.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual double normal() = 0;
  /// Uniform on the open interval (0, 1).
  virtual double uniform() = 0;
};

/// 64-bit Mersenne twister stream.
class Rng final : public RandomSource {
 public:
  explicit Rng(std::uint64_t seed);
  explicit Rng(std::seed_seq& seq);

  double normal() override { return normal_(engine_); }
  double uniform() override;
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Replays a fixed list of normals (cycling); uniform() returns 0.5.
/// Used to make sampling deterministic in tests.
class FixedNormals final : public RandomSource {
 public:
  explicit FixedNormals(std::vector<double> values);

  double normal() override;
  double uniform() override { return 0.5; }

 private:
  std::vector<double> values_;
  std::size_t next_ = 0;
};

/// Stream for replicate `replicate` of an experiment seeded with `master_seed`.
/// Identical inputs give identical streams; distinct replicates give
/// independent ones.
Rng derive_stream(std::uint64_t master_seed, std::uint64_t replicate);

}  // namespace hilbert_gauss
