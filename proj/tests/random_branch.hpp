#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "octic/branch.hpp"

namespace octic::testing {

// Randomized consistent branch models exercising all six step kinds.
// Surfaces are abstract; curve Euler numbers range over {-4..4} and point
// placement keeps every t-count within {0..12}. Layouts: 0 = no triple
// curves, 1 = one triple curve, 2 = two triple curves sharing one surface.
inline BranchModel make_random_branch(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> layout_dist(0, 2);
  std::uniform_int_distribution<long long> euler_dist(-4, 4);
  std::uniform_int_distribution<long long> surface_euler(0, 24);
  std::uniform_int_distribution<int> count_dist(0, 4);

  const int layout = layout_dist(rng);
  const int n = 7 + static_cast<int>(rng() % 3);  // 7..9 surfaces

  BranchModel model;
  for (int i = 0; i < n; ++i)
    model.add_surface("S" + std::to_string(i), surface_euler(rng));

  std::vector<std::vector<int>> triples;
  if (layout >= 1) triples.push_back({0, 1, 2});
  if (layout == 2) triples.push_back({2, 3, 4});

  std::set<std::pair<int, int>> triple_pairs;
  for (const auto& t : triples) {
    model.add_curve(t, euler_dist(rng));
    triple_pairs.insert({t[0], t[1]});
    triple_pairs.insert({t[0], t[2]});
    triple_pairs.insert({t[1], t[2]});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!triple_pairs.count({i, j})) model.add_curve({i, j}, euler_dist(rng));

  auto pair_in_triple = [&](int a, int b) {
    return triple_pairs.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  auto free_of_triple_pairs = [&](const std::vector<int>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j)
        if (pair_in_triple(set[i], set[j])) return false;
    return true;
  };
  auto random_subset = [&](int size) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(size);
    std::sort(all.begin(), all.end());
    return all;
  };

  // Isolated triple points and plain 4-/5-fold points avoid triple-curve
  // pairs entirely.
  for (int kind_size : {3, 3, 3, 4, 5}) {
    int wanted = count_dist(rng);
    for (int made = 0, attempts = 0; made < wanted && attempts < 40; ++attempts) {
      auto candidate = random_subset(kind_size);
      if (!free_of_triple_pairs(candidate)) continue;
      model.add_point(candidate);
      ++made;
    }
  }

  if (layout >= 1) {
    // 4-fold and 5-fold points on the first triple curve.
    for (int extra = 0; extra < count_dist(rng); ++extra) {
      int f = 3 + static_cast<int>(rng() % (n - 3));
      if (layout == 2 && (f == 3 || f == 4)) f = 5 + static_cast<int>(rng() % (n - 5));
      model.add_point({0, 1, 2, f});
    }
    if (count_dist(rng) > 1) {
      // One 5-fold point on exactly one triple curve.
      int f = layout == 2 ? 5 : 3;
      int g = layout == 2 ? 6 : 4;
      if (g < n) model.add_point({0, 1, 2, f, g});
    }
  }
  if (layout == 2 && count_dist(rng) > 0)
    model.add_point({0, 1, 2, 3, 4});  // on both triple curves

  model.ambient_euler = 4;
  model.link_incidences();
  return model;
}

}  // namespace octic::testing
