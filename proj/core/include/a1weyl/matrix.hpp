#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace a1weyl {

/// Dense square integer matrix, row-major, with checked arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0) {}

  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;
  IntMatrix transposed() const;

  bool operator==(const IntMatrix&) const = default;

  std::vector<std::vector<std::int64_t>> rows() const;
  std::string to_string() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> data_;
};

/// v ↦ v − (v, a^∨) a for the form with Gram matrix `gram`; columns hold
/// images of basis vectors. Requires (a, a) ≠ 0 and 2(v, a)/(a, a) integral.
IntMatrix reflection_matrix(const IntMatrix& gram, std::span<const std::int64_t> a);

/// Rank over Q of a list of integer vectors (fraction-free elimination).
std::size_t rational_rank(std::vector<std::vector<std::int64_t>> rows);

}  // namespace a1weyl
