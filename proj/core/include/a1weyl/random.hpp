#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "a1weyl/geometry.hpp"
#include "a1weyl/hyperbolic.hpp"
#include "a1weyl/lattice.hpp"
#include "a1weyl/weyl.hpp"

namespace a1weyl {

using Rng = std::mt19937_64;

/// A root of R^x with ‖p‖_∞ <= radius and random sign.
Root random_root(Rng& rng, const Semilattice& s, std::int64_t radius = 3);

/// Length drawn uniformly from [0, max_len].
Word random_word(Rng& rng, const Semilattice& s, std::size_t max_len, std::int64_t radius = 3);

/// Index word over Π_0 = {0..ν}, length uniform in [0, max_len].
std::vector<std::size_t> random_pi0_word(Rng& rng, std::size_t nu, std::size_t max_len);

/// A relation over Π_0 of length <= max_len, grown from the empty word by
/// inserting x_k² and (x_r x_s x_t)² and applying triple reversals.
std::vector<std::size_t> random_relation(Rng& rng, std::size_t nu, std::size_t max_len);

WeylElement random_weyl_element(Rng& rng, std::size_t rank, std::int64_t radius = 5);
Simplex random_simplex(Rng& rng, std::size_t rank, std::int64_t radius = 5);

}  // namespace a1weyl
