#include "dsaudit/kernels.hpp"

#include <bit>
#include <cstdint>

#include "dsaudit/error.hpp"

namespace dsaudit::kernels {

namespace {

std::size_t frame_bits(std::size_t table_size) {
  if (table_size == 0 || !std::has_single_bit(table_size)) {
    throw Error(ErrorKind::InternalConsistency, "table size must be a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(table_size));
}

// In-place transform: for every bit, table[S] op= table[S ^ bit] for S holding the bit.
// Within one bit pass, writes go to masks with the bit set and reads to masks
// without it, so iterations of the inner loop are independent.
template <bool Subtract>
void subset_transform(std::vector<Rational>& table) {
  const std::size_t bits = frame_bits(table.size());
  const auto count = static_cast<std::int64_t>(table.size());
  for (std::size_t b = 0; b < bits; ++b) {
    const std::int64_t bit = std::int64_t{1} << b;
#pragma omp parallel for schedule(static) if (table.size() >= kParallelThreshold)
    for (std::int64_t s = 0; s < count; ++s) {
      if ((s & bit) == 0) continue;
      if constexpr (Subtract) {
        table[static_cast<std::size_t>(s)] -= table[static_cast<std::size_t>(s ^ bit)];
      } else {
        table[static_cast<std::size_t>(s)] += table[static_cast<std::size_t>(s ^ bit)];
      }
    }
  }
}

}  // namespace

std::vector<Rational> dense_mass(const BodyOfEvidence& body) {
  std::vector<Rational> table(body.frame().subset_count());
  for (const auto& e : body.focal()) table[e.set.bits()] = e.mass;
  return table;
}

std::vector<Rational> belief_reference(const BodyOfEvidence& body) {
  std::vector<Rational> table(body.frame().subset_count());
  for (std::size_t s = 0; s < table.size(); ++s) {
    const auto mask = static_cast<Mask>(s);
    for (const auto& e : body.focal()) {
      if ((e.set.bits() & ~mask) == 0) table[s] += e.mass;
    }
  }
  return table;
}

std::vector<Rational> belief_parallel(const BodyOfEvidence& body) {
  auto table = dense_mass(body);
  subset_transform<false>(table);
  return table;
}

std::vector<Rational> mobius_reference(std::span<const Rational> belief) {
  frame_bits(belief.size());
  std::vector<Rational> mass(belief.size());
  for (std::size_t s = 0; s < belief.size(); ++s) {
    const auto target = static_cast<Mask>(s);
    Mask sub = target;
    // Walk every submask of target, including the empty one.
    while (true) {
      const int parity = std::popcount(static_cast<Mask>(target & ~sub)) & 1;
      if (parity) {
        mass[s] -= belief[sub];
      } else {
        mass[s] += belief[sub];
      }
      if (sub == 0) break;
      sub = (sub - 1) & target;
    }
  }
  return mass;
}

std::vector<Rational> mobius_parallel(std::span<const Rational> belief) {
  std::vector<Rational> table(belief.begin(), belief.end());
  subset_transform<true>(table);
  return table;
}

std::vector<Rational> plausibility_from_belief(std::span<const Rational> belief) {
  const std::size_t n = belief.size();
  const Mask universe = static_cast<Mask>(n - 1);
  std::vector<Rational> pl(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::int64_t s = 0; s < count; ++s) {
    pl[static_cast<std::size_t>(s)] = Rational(1) - belief[universe & ~static_cast<Mask>(s)];
  }
  return pl;
}

}  // namespace dsaudit::kernels
