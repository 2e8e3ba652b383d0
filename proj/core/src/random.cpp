#include "a1weyl/random.hpp"

#include <algorithm>

#include "a1weyl/error.hpp"

namespace a1weyl {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

LatticeVector random_vector(Rng& rng, std::size_t rank, std::int64_t radius) {
  std::uniform_int_distribution<std::int64_t> d(-radius, radius);
  LatticeVector v(rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = d(rng);
  return v;
}

}  // namespace

Root random_root(Rng& rng, const Semilattice& s, std::int64_t radius) {
  if (radius < 1) throw DomainError("random_root needs radius >= 1");
  // Pick a coset, then a lift τ + 2λ inside the box.
  const auto& tau = s.cosets[uniform(rng, 0, s.cosets.size() - 1)];
  LatticeVector p(s.rank);
  for (std::size_t i = 0; i < s.rank; ++i) {
    const std::int64_t lo = -((radius + tau[i]) / 2), hi = (radius - tau[i]) / 2;
    const std::int64_t k = std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    p[i] = tau[i] + 2 * k;
  }
  return Root{uniform(rng, 0, 1) ? 1 : -1, std::move(p)};
}

Word random_word(Rng& rng, const Semilattice& s, std::size_t max_len, std::int64_t radius) {
  Word w(s.rank);
  const std::size_t n = uniform(rng, 0, max_len);
  for (std::size_t i = 0; i < n; ++i) w.letters.push_back(random_root(rng, s, radius));
  return w;
}

std::vector<std::size_t> random_pi0_word(Rng& rng, std::size_t nu, std::size_t max_len) {
  std::vector<std::size_t> w(uniform(rng, 0, max_len));
  for (auto& x : w) x = uniform(rng, 0, nu);
  return w;
}

std::vector<std::size_t> random_relation(Rng& rng, std::size_t nu, std::size_t max_len) {
  std::vector<std::size_t> w;
  const std::size_t rounds = uniform(rng, 1, max_len);
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t kind = uniform(rng, 0, 2);
    if (kind == 0 && w.size() + 2 <= max_len) {
      const std::size_t k = uniform(rng, 0, nu);
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, w.size())), {k, k});
    } else if (kind == 1 && w.size() + 6 <= max_len) {
      const std::size_t a = uniform(rng, 0, nu), b = uniform(rng, 0, nu), c = uniform(rng, 0, nu);
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(uniform(rng, 0, w.size())), {a, b, c, a, b, c});
    } else if (w.size() >= 3) {
      const std::size_t i = uniform(rng, 0, w.size() - 3);
      std::swap(w[i], w[i + 2]);
    }
  }
  return w;
}

WeylElement random_weyl_element(Rng& rng, std::size_t rank, std::int64_t radius) {
  return {uniform(rng, 0, 1) ? 1 : -1, random_vector(rng, rank, radius)};
}

Simplex random_simplex(Rng& rng, std::size_t rank, std::int64_t radius) {
  return {random_vector(rng, rank, radius), uniform(rng, 0, 1) ? 1 : -1};
}

}  // namespace a1weyl
