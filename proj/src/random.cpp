#include "hilbert_gauss/random.hpp"

#include "hilbert_gauss/error.hpp"

namespace hilbert_gauss {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

Rng::Rng(std::seed_seq& seq) : engine_(seq) {}

double Rng::uniform() {
  // 53 random mantissa bits, shifted off zero.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u + 0x1.0p-54;
}

FixedNormals::FixedNormals(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::invalid_argument, "fixed normal list is empty");
}

double FixedNormals::normal() {
  const double v = values_[next_];
  next_ = (next_ + 1) % values_.size();
  return v;
}

Rng derive_stream(std::uint64_t master_seed, std::uint64_t replicate) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(replicate), static_cast<std::uint32_t>(replicate >> 32),
                    0x68696c62u};
  return Rng(seq);
}

}  // namespace hilbert_gauss
