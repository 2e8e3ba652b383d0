#include "a1weyl/hyperbolic.hpp"

#include "a1weyl/checked.hpp"
#include "a1weyl/error.hpp"

namespace a1weyl {

HyperbolicElement HyperbolicElement::identity(std::size_t rank) {
  return {1, LatticeVector(rank), LatticeVector(rank), std::vector<LatticeVector>(rank, LatticeVector(rank))};
}

bool HyperbolicElement::is_identity() const {
  if (eps != 1 || !t.is_zero() || !s.is_zero()) return false;
  for (const auto& row : q)
    if (!row.is_zero()) return false;
  return true;
}

HyperbolicElement eval_word_hyp(const Word& w) {
  const std::size_t nu = w.rank;
  HyperbolicElement h = HyperbolicElement::identity(nu);
  // prefix = Σ_{r<s} (−1)^r sgn(α_r) p(α_r), positions 1-based
  LatticeVector prefix(nu);
  for (std::size_t pos = 1; pos <= w.size(); ++pos) {
    const Root& a = w.letters[pos - 1];
    if (a.sign != 1 && a.sign != -1) throw DomainError("letter " + a.to_string() + " is not a non-isotropic root");
    const std::int64_t alt = pos % 2 == 0 ? 1 : -1;  // (−1)^pos
    const std::int64_t sg = a.sign;
    for (std::size_t j = 0; j < nu; ++j) {
      const std::int64_t pj = a.p[j];
      if (pj == 0) continue;
      h.s[j] = checked::sub(h.s[j], checked::mul(checked::mul(alt, sg), pj));
      h.q[j] += pj * a.p;
      if (pos >= 2) h.q[j] += checked::mul(checked::mul(2, alt), checked::mul(pj, sg)) * prefix;
    }
    prefix += checked::mul(alt, sg) * a.p;
  }
  const WeylElement e = eval_word(w);
  h.eps = e.eps;
  h.t = e.t;
  return h;
}

HyperbolicElement compose(const HyperbolicElement& a, const HyperbolicElement& b) {
  require_same_rank(a.t, b.t);
  HyperbolicElement c;
  c.eps = a.eps * b.eps;
  c.t = b.eps * a.t + b.t;
  c.s = a.s + a.eps * b.s;
  c.q.reserve(a.rank());
  for (std::size_t j = 0; j < a.rank(); ++j) {
    c.q.push_back(a.q[j] + b.q[j] - checked::mul(2, b.s[j]) * a.t);
  }
  return c;
}

HyperbolicElement inverse(const HyperbolicElement& a) {
  HyperbolicElement b;
  b.eps = a.eps;
  b.t = -(a.eps * a.t);
  b.s = -(a.eps * a.s);
  b.q.reserve(a.rank());
  for (std::size_t j = 0; j < a.rank(); ++j) {
    b.q.push_back(checked::mul(2, b.s[j]) * a.t - a.q[j]);
  }
  return b;
}

bool is_relation_hyp(const Word& w) {
  if (w.size() % 2 != 0) {
    eval_word(w);  // still rejects isotropic letters
    return false;
  }
  return eval_word_hyp(w).is_identity();
}

bool is_central(const Word& w) {
  if (w.rank == 0) {
    throw DomainError("is_central needs R^0 != {0}; rank 0 is not supported");
  }
  return is_relation_w(w);
}

IntMatrix weyl_gram(std::size_t rank) {
  IntMatrix g(rank + 1);
  g(0, 0) = 2;
  return g;
}

IntMatrix hyperbolic_gram(std::size_t rank) {
  IntMatrix g(2 * rank + 1);
  g(0, 0) = 2;
  for (std::size_t i = 0; i < rank; ++i) {
    g(1 + i, 1 + rank + i) = 1;
    g(1 + rank + i, 1 + i) = 1;
  }
  return g;
}

namespace {

IntMatrix product_of_reflections(const Word& w, const IntMatrix& gram) {
  IntMatrix m = IntMatrix::identity(gram.dim());
  std::vector<std::int64_t> coords(gram.dim(), 0);
  for (const auto& a : w.letters) {
    std::fill(coords.begin(), coords.end(), 0);
    coords[0] = a.sign;
    for (std::size_t k = 0; k < w.rank; ++k) coords[1 + k] = a.p[k];
    m = m * reflection_matrix(gram, coords);
  }
  return m;
}

}  // namespace

IntMatrix weyl_matrix_of_word(const Word& w) { return product_of_reflections(w, weyl_gram(w.rank)); }

IntMatrix matrix_of_word(const Word& w) { return product_of_reflections(w, hyperbolic_gram(w.rank)); }

IntMatrix to_matrix(const WeylElement& e) {
  const std::size_t nu = e.rank();
  IntMatrix m = IntMatrix::identity(nu + 1);
  m(0, 0) = e.eps;
  for (std::size_t k = 0; k < nu; ++k) m(1 + k, 0) = checked::mul(-2, e.t[k]);
  return m;
}

IntMatrix to_matrix(const HyperbolicElement& e) {
  const std::size_t nu = e.rank();
  IntMatrix m = IntMatrix::identity(2 * nu + 1);
  m(0, 0) = e.eps;
  for (std::size_t k = 0; k < nu; ++k) m(1 + k, 0) = checked::mul(-2, e.t[k]);
  for (std::size_t j = 0; j < nu; ++j) {
    const std::size_t col = 1 + nu + j;
    m(0, col) = checked::neg(e.s[j]);
    for (std::size_t k = 0; k < nu; ++k) m(1 + k, col) = checked::neg(e.q[j][k]);
  }
  return m;
}

std::vector<CenterGenerator> center_basis(const ReflectableBase& b) {
  if (!is_elliptic_like(b)) throw DomainError("center_basis needs an elliptic-like base");
  const std::size_t nu = b.rank();
  const auto pairs = b_pi(b);
  std::vector<CenterGenerator> out;
  for (std::size_t i = 1; i <= nu; ++i) {
    for (std::size_t j = i + 1; j <= nu; ++j) {
      CenterGenerator z;
      z.pair = {i, j};
      std::vector<std::size_t> idx;
      if (auto it = pairs.find({i, j}); it != pairs.end()) {
        idx = {it->second, i, 0, j};
        z.power = 1;
      } else {
        idx = {i, 0, j, i, 0, j};
        z.power = 2;
      }
      z.word = Word::from_base(b, idx);
      z.element = eval_word_hyp(z.word);

      if (!is_central(z.word)) throw CheckFailed("z_" + std::to_string(i) + std::to_string(j) + " is not central");
      HyperbolicElement expected = HyperbolicElement::identity(nu);
      // c_ij^n λ_k = λ_k − n δ_kj σ_i + n δ_ki σ_j
      expected.q[j - 1][i - 1] = z.power;
      expected.q[i - 1][j - 1] = -z.power;
      if (z.element != expected) {
        throw CheckFailed("z_" + std::to_string(i) + std::to_string(j) + " does not act as c_ij^" +
                          std::to_string(z.power));
      }
      out.push_back(std::move(z));
    }
  }
  return out;
}

}  // namespace a1weyl
