#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "a1weyl/lattice.hpp"

namespace a1weyl {

/// A product w_{α_1} ⋯ w_{α_k}. Letters keep the signs they were written
/// with; normalized() rewrites each as its sign +1 representative.
struct Word {
  std::size_t rank = 0;
  std::vector<Root> letters;

  Word() = default;
  explicit Word(std::size_t rank) : rank(rank) {}
  Word(std::size_t rank, std::vector<Root> letters);

  /// x_{k_1} ⋯ x_{k_n} with x_k = w_{α_k}, α_k the k-th base root.
  static Word from_base(const ReflectableBase& base, std::span<const std::size_t> indices);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  Word normalized() const;
  /// The inverse element, since every letter is an involution.
  Word reversed() const;
  Word slice(std::size_t pos, std::size_t len) const;

  friend Word operator+(Word a, const Word& b);
  bool operator==(const Word&) const = default;

  std::string to_string() const;
};

/// Throws DomainError naming the first letter outside R^x.
void require_in_rx(const Semilattice& s, const Word& w);

/// Canonical form (ε(w), T(w)) of an element of W.
struct WeylElement {
  int eps = 1;
  LatticeVector t;

  static WeylElement identity(std::size_t rank) { return {1, LatticeVector(rank)}; }

  std::size_t rank() const { return t.rank(); }
  bool is_identity() const { return eps == 1 && t.is_zero(); }
  bool operator==(const WeylElement&) const = default;
};

/// ((−1)^k, Σ (−1)^{k−i} sgn(α_i) p(α_i)).
WeylElement eval_word(const Word& w);

/// T(ab) = ε(b) T(a) + T(b).
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& a);

/// w(β) = ε(w) sgn(β) ε + p(β) − 2 sgn(β) T(w). Isotropic roots are fixed.
Root act_on_root(const WeylElement& a, const Root& beta);

/// Even length and vanishing alternating sum Σ (−1)^i sgn(α_i) p(α_i).
bool is_relation_w(const Word& w);

/// Every letter is in P and the tuple is a relation.
bool is_alternating(std::span<const Root> P, const Word& tuple);

inline constexpr std::size_t kAltMaxLength = 12;
inline constexpr std::size_t kAltMaxSetSize = 8;

/// Streams the alternating k-tuples over P as index tuples, in
/// lexicographic order. Depth-first with a per-coordinate reachability
/// bound, so dead prefixes are cut early.
class AlternatingEnumerator {
 public:
  AlternatingEnumerator(std::vector<Root> P, std::size_t k, std::size_t max_length = kAltMaxLength,
                        std::size_t max_set_size = kAltMaxSetSize);

  std::optional<std::vector<std::size_t>> next();

 private:
  bool feasible(std::size_t depth, std::size_t idx, LatticeVector& sum) const;
  bool search(std::size_t from);

  std::vector<Root> set_;
  std::vector<LatticeVector> contrib_;  // sgn(α) p(α)
  LatticeVector lo_, hi_;               // coordinatewise min/max of contrib_
  std::size_t k_;
  std::vector<std::size_t> current_;
  std::vector<LatticeVector> sums_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<std::vector<std::size_t>> enumerate_alternating(std::span<const Root> P, std::size_t k);

}  // namespace a1weyl
