#include "a1weyl/matrix.hpp"

#include <sstream>

#include "a1weyl/checked.hpp"
#include "a1weyl/error.hpp"

namespace a1weyl {

namespace {

__extension__ typedef __int128 i128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch");
  IntMatrix c(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.dim_; ++j) {
        c(i, j) = checked::add(c(i, j), checked::mul(aik, b(k, j)));
      }
    }
  }
  return c;
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != dim_) throw DomainError("vector dimension mismatch");
  std::vector<std::int64_t> out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out[i] = checked::add(out[i], checked::mul((*this)(i, j), v[j]));
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<std::vector<std::int64_t>> IntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i].assign(data_.begin() + i * dim_, data_.begin() + (i + 1) * dim_);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dim_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < dim_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

IntMatrix reflection_matrix(const IntMatrix& gram, std::span<const std::int64_t> a) {
  const std::size_t n = gram.dim();
  if (a.size() != n) throw DomainError("root dimension mismatch");
  auto ga = gram.apply(a);  // (e_j, a) for every basis vector e_j
  std::int64_t aa = 0;
  for (std::size_t j = 0; j < n; ++j) aa = checked::add(aa, checked::mul(a[j], ga[j]));
  if (aa == 0) throw DomainError("reflection in an isotropic vector");
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t num = checked::mul(2, ga[j]);
    if (num % aa != 0) throw DomainError("non-integral coroot pairing");
    const std::int64_t c = num / aa;
    for (std::size_t i = 0; i < n; ++i) m(i, j) = checked::sub(m(i, j), checked::mul(c, a[i]));
  }
  return m;
}

std::size_t rational_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<i128>> m;
  for (auto& r : rows) m.emplace_back(r.begin(), r.end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const i128 a = m[rank][c], b = m[r][c];
      i128 g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        m[r][k] = a * m[r][k] - b * m[rank][k];
        g = gcd128(g, m[r][k]);
      }
      if (g > 1)
        for (auto& x : m[r]) x /= g;
    }
    ++rank;
  }
  return rank;
}

}  // namespace a1weyl
