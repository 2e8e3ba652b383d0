#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "a1weyl/lattice.hpp"
#include "a1weyl/matrix.hpp"
#include "a1weyl/weyl.hpp"

namespace a1weyl {

/// Canonical form of an element w of the hyperbolic Weyl group, acting on
/// the basis (ε, σ_1..σ_ν, λ_1..λ_ν):
///
///   w(ε)   = eps·ε − 2 Σ_k t_k σ_k
///   w(σ_k) = σ_k
///   w(λ_j) = λ_j − s_j ε − Σ_k q[j][k] σ_k
///
/// so s_j = sgn(λ_j − wλ_j) and row j of q is p(λ_j − wλ_j). Indices of
/// s and q are 0-based (row j is λ_{j+1}).
struct HyperbolicElement {
  int eps = 1;
  LatticeVector t;
  LatticeVector s;
  std::vector<LatticeVector> q;

  static HyperbolicElement identity(std::size_t rank);

  std::size_t rank() const { return t.rank(); }
  bool is_identity() const;
  WeylElement projection() const { return {eps, t}; }
  bool operator==(const HyperbolicElement&) const = default;
};

/// Closed-form evaluation:
///   s_j = Σ_i (−1)^{i−1} sgn(α_i) p_j(α_i)
///   q_j = Σ_s p_j(α_s) p(α_s)
///         + 2 Σ_{s≥2} (−1)^s p_j(α_s) sgn(α_s) Σ_{r<s} (−1)^r sgn(α_r) p(α_r)
/// Signs of the letters are honoured, so unnormalized words work as well.
HyperbolicElement eval_word_hyp(const Word& w);

HyperbolicElement compose(const HyperbolicElement& a, const HyperbolicElement& b);
HyperbolicElement inverse(const HyperbolicElement& a);

/// Even length and both the alternating-sum and the λ conditions hold.
bool is_relation_hyp(const Word& w);

/// w is central in the hyperbolic group iff it is trivial in W. Only valid
/// when R^0 ≠ {0}; rank 0 throws.
bool is_central(const Word& w);

/// Gram matrices on (ε, σ_1..σ_ν) and (ε, σ_1..σ_ν, λ_1..λ_ν).
IntMatrix weyl_gram(std::size_t rank);
IntMatrix hyperbolic_gram(std::size_t rank);

/// Products of reflection matrices built from the Gram matrix alone; used as
/// an oracle against the canonical forms.
IntMatrix weyl_matrix_of_word(const Word& w);
IntMatrix matrix_of_word(const Word& w);

IntMatrix to_matrix(const WeylElement& e);
IntMatrix to_matrix(const HyperbolicElement& e);

struct CenterGenerator {
  std::pair<std::size_t, std::size_t> pair;  // (i, j), 1-based, i < j
  Word word;
  HyperbolicElement element;
  /// 1 when z_ij = c_ij (pair in B_Π), 2 when z_ij = c_ij².
  int power = 1;
};

/// z_ij = w_{ε+τ_{i_j}} w_{ε+τ_i} w_ε w_{ε+τ_j} for (i,j) ∈ B_Π and
/// (w_{ε+τ_i} w_ε w_{ε+τ_j})² otherwise. Each result is checked to be central
/// and to act as c_ij^power on the λ_k; a failure throws CheckFailed.
std::vector<CenterGenerator> center_basis(const ReflectableBase& b);

}  // namespace a1weyl
