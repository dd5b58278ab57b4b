#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bbgroup/oracle.hpp"

namespace bbgroup {

struct SamplerConfig {
  std::size_t cell_size = 10;
  std::uint64_t burn_in = 50;
  std::uint64_t seed = 0;
};

/// Product-replacement random element generator.
///
/// The cell starts as the generator list repeated cyclically, then is
/// advanced `burn_in` steps. Each step picks slots i != j, replaces slot i by
/// slot_i * slot_j^(+-1) or slot_j^(+-1) * slot_i, and returns the new
/// slot i. The draw sequence is a pure function of (seed, cell_size,
/// burn_in) for a given oracle. Single owner; use one cell per worker.
class ReplacementCell {
 public:
  /// Throws Error(Precondition) if cell_size < max(#generators + 2, 5).
  ReplacementCell(const GroupOracle& oracle, SamplerConfig config);

  Element draw();

  const std::vector<Element>& slots() const noexcept { return slots_; }
  std::uint64_t steps_taken() const noexcept { return steps_; }
  const GroupOracle& oracle() const noexcept { return oracle_; }

 private:
  std::uint64_t uniform(std::uint64_t bound);  // in [0, bound)

  const GroupOracle& oracle_;
  std::vector<Element> slots_;
  std::mt19937_64 rng_;
  std::uint64_t steps_ = 0;
};

inline ReplacementCell seed_cell(const GroupOracle& oracle, std::size_t cell_size,
                                 std::uint64_t burn_in, std::uint64_t seed) {
  return ReplacementCell(oracle, SamplerConfig{cell_size, burn_in, seed});
}

}  // namespace bbgroup
