#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace a1weyl {

/// An element of Λ = Z^ν in the basis σ_1..σ_ν. Arithmetic is exact and
/// throws OverflowError rather than wrapping.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank, 0) {}
  explicit LatticeVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  /// e_i, with i counted from 1 like σ_i.
  static LatticeVector unit(std::size_t rank, std::size_t i);

  std::size_t rank() const { return coords_.size(); }
  std::int64_t operator[](std::size_t k) const { return coords_[k]; }
  std::int64_t& operator[](std::size_t k) { return coords_[k]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  bool is_zero() const;
  /// Componentwise reduction into {0,1}: the coset of 2Λ.
  LatticeVector mod2() const;
  std::int64_t sup_norm() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  LatticeVector operator-() const;
  friend LatticeVector operator*(std::int64_t k, const LatticeVector& v);

  auto operator<=>(const LatticeVector&) const = default;

  /// "c1,c2,...,cν"
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

void require_same_rank(const LatticeVector& a, const LatticeVector& b);

/// S = ∪ (τ_i + 2Λ), stored by its 0/1 coset representatives with τ_0 = 0
/// and τ_1..τ_ν = e_1..e_ν.
struct Semilattice {
  std::size_t rank = 0;
  std::vector<LatticeVector> cosets;

  static Semilattice baby(std::size_t nu);
  /// S = Λ; the representatives beyond e_i are ordered by support size, then
  /// lexicographically by support.
  static Semilattice toroidal(std::size_t nu);

  std::size_t m() const { return cosets.empty() ? 0 : cosets.size() - 1; }
  bool contains(const LatticeVector& p) const;
};

/// Empty when every invariant holds; one message per violation otherwise.
std::vector<std::string> validate_semilattice(const Semilattice& s);

/// Throws ConfigError listing every violation.
void require_valid(const Semilattice& s);

/// α = sign·ε + p. sign == 0 marks an isotropic root.
struct Root {
  int sign = 1;
  LatticeVector p;

  static Root epsilon(std::size_t rank) { return Root{1, LatticeVector(rank)}; }
  /// ε + Σ c_i σ_i
  static Root positive(LatticeVector p) { return Root{1, std::move(p)}; }

  std::size_t rank() const { return p.rank(); }
  bool is_isotropic() const { return sign == 0; }
  /// The same reflection written with sign +1 (w_α = w_{-α}).
  Root normalized() const;
  Root operator-() const;

  auto operator<=>(const Root&) const = default;

  /// "+e:1,0", "-e:0,2", "0e:1,1"
  std::string to_string() const;
};

bool root_in_rx(const Semilattice& s, const Root& a);
bool root_in_r0(const Semilattice& s, const Root& a);

/// w_α(β) = β − 2 sgn(β) sgn(α) α; the identity when α is isotropic.
Root reflect(const Root& alpha, const Root& beta);

/// 1-based indices i with (p mod 2)_i = 1. Requires a ∈ R^x.
std::vector<std::size_t> supp(const Semilattice& s, const Root& a);

/// Π = {ε, ε+τ_1, ..., ε+τ_m}.
class ReflectableBase {
 public:
  explicit ReflectableBase(Semilattice s);

  const Semilattice& semilattice() const { return semilattice_; }
  std::size_t rank() const { return semilattice_.rank; }
  std::size_t size() const { return roots_.size(); }
  const Root& operator[](std::size_t k) const { return roots_.at(k); }
  const std::vector<Root>& roots() const { return roots_; }

  /// Index of the base root equal to ±a, if any.
  std::optional<std::size_t> index_of(const Root& a) const;

 private:
  Semilattice semilattice_;
  std::vector<Root> roots_;
};

bool is_elliptic_like(const ReflectableBase& b);

/// (i, j) with i < j, 1-based, mapped to the index i_j of the base root whose
/// support is exactly {i, j}.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> b_pi(const ReflectableBase& b);

/// R^x restricted to ‖p‖_∞ <= radius, sorted.
std::vector<Root> roots_in_box(const Semilattice& s, std::int64_t radius);

struct ReflectableReport {
  bool covered = false;
  std::int64_t radius = 0;
  std::size_t box_roots = 0;
  std::size_t reached = 0;
  std::vector<Root> uncovered;  // sorted
};

inline constexpr std::int64_t kDefaultReflectableRadius = 4;

/// Closure of P under reflections in P, kept inside the box ‖p‖_∞ <= radius.
/// An uncovered root is a definite counterexample; full coverage is only
/// evidence that P is reflectable.
ReflectableReport check_reflectable_set(const Semilattice& s, std::span<const Root> P,
                                        std::int64_t radius = kDefaultReflectableRadius);

}  // namespace a1weyl
