#pragma once

// Hand-rolled random generators for property tests. Fixed seeds keep every
// run reproducible.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dsaudit/evidence.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline dsaudit::Frame frame(std::size_t size) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return dsaudit::make_frame(std::move(labels));
}

/// Splits `den` into `parts` positive integers uniformly at random.
inline std::vector<std::int64_t> composition(Rng& rng, std::int64_t den, std::size_t parts) {
  std::vector<std::int64_t> cuts;
  std::vector<std::int64_t> pool;
  for (std::int64_t i = 1; i < den; ++i) pool.push_back(i);
  std::shuffle(pool.begin(), pool.end(), rng);
  cuts.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(parts - 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::int64_t> out;
  std::int64_t prev = 0;
  for (auto c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(den - prev);
  return out;
}

/// Random body with distinct non-empty focal masks drawn from `allowed`
/// (all non-empty subsets when empty) and masses p/d, d <= max_den.
inline dsaudit::BodyOfEvidence body(Rng& rng, const dsaudit::Frame& f, std::int64_t max_den = 64,
                                    std::vector<dsaudit::Mask> allowed = {}) {
  if (allowed.empty()) {
    for (dsaudit::Mask m = 1; m <= f.universe_mask(); ++m) allowed.push_back(m);
  }
  std::shuffle(allowed.begin(), allowed.end(), rng);
  const std::size_t k = uniform(rng, 1, std::min<std::size_t>(allowed.size(), 6));
  const auto den = static_cast<std::int64_t>(uniform(rng, k, static_cast<std::size_t>(max_den)));
  const auto parts = composition(rng, den, k);
  std::vector<dsaudit::FocalElement> focal;
  for (std::size_t i = 0; i < k; ++i) {
    focal.push_back({f.from_mask(allowed[i]), dsaudit::Rational(parts[i], den)});
  }
  return dsaudit::make_body(f, std::move(focal));
}

/// Random partition of the frame into 1..size blocks, with random masses.
inline dsaudit::BodyOfEvidence partition_body(Rng& rng, const dsaudit::Frame& f, std::int64_t max_den = 64) {
  const std::size_t blocks = uniform(rng, 1, f.size());
  std::vector<dsaudit::Mask> masks(blocks, 0);
  // Each element goes to a random block; every block gets at least one.
  std::vector<std::size_t> owner(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) owner[i] = i < blocks ? i : uniform(rng, 0, blocks - 1);
  std::shuffle(owner.begin(), owner.end(), rng);
  for (std::size_t i = 0; i < f.size(); ++i) masks[owner[i]] |= dsaudit::Mask{1} << i;
  const auto den = static_cast<std::int64_t>(uniform(rng, blocks, static_cast<std::size_t>(max_den)));
  const auto parts = composition(rng, den, blocks);
  std::vector<dsaudit::FocalElement> focal;
  for (std::size_t b = 0; b < blocks; ++b) focal.push_back({f.from_mask(masks[b]), dsaudit::Rational(parts[b], den)});
  return dsaudit::make_body(f, std::move(focal));
}

}  // namespace gen
