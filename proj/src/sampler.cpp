#include "bbgroup/sampler.hpp"

#include <algorithm>
#include <string>

#include "bbgroup/error.hpp"

namespace bbgroup {

ReplacementCell::ReplacementCell(const GroupOracle& oracle, SamplerConfig config)
    : oracle_(oracle), rng_(config.seed) {
  const auto& gens = oracle.generators();
  if (gens.empty()) throw Error(ErrorKind::Precondition, "empty generator list");
  const std::size_t min_size = std::max<std::size_t>(gens.size() + 2, 5);
  if (config.cell_size < min_size)
    throw Error(ErrorKind::Precondition,
                "cell size " + std::to_string(config.cell_size) + " below minimum " +
                    std::to_string(min_size));
  slots_.reserve(config.cell_size);
  for (std::size_t i = 0; i < config.cell_size; ++i)
    slots_.push_back(gens[i % gens.size()]);
  for (std::uint64_t s = 0; s < config.burn_in; ++s) draw();
}

std::uint64_t ReplacementCell::uniform(std::uint64_t bound) {
  // rejection sampling keeps the stream identical across standard libraries
  const std::uint64_t limit = rng_.max() - rng_.max() % bound;
  std::uint64_t v;
  do {
    v = rng_();
  } while (v >= limit);
  return v % bound;
}

Element ReplacementCell::draw() {
  const std::uint64_t n = slots_.size();
  const std::uint64_t i = uniform(n);
  std::uint64_t j = uniform(n - 1);
  if (j >= i) ++j;
  const std::uint64_t mode = uniform(4);
  const Element other = (mode & 1) ? oracle_.inv(slots_[j]) : slots_[j];
  slots_[i] = (mode & 2) ? oracle_.mul(other, slots_[i]) : oracle_.mul(slots_[i], other);
  ++steps_;
  return slots_[i];
}

}  // namespace bbgroup
