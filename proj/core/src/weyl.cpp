#include "a1weyl/weyl.hpp"

#include <algorithm>

#include "a1weyl/checked.hpp"
#include "a1weyl/error.hpp"

namespace a1weyl {

Word::Word(std::size_t rank, std::vector<Root> letters) : rank(rank), letters(std::move(letters)) {
  for (const auto& a : this->letters) {
    if (a.rank() != rank) throw DomainError("word letter " + a.to_string() + " has the wrong rank");
  }
}

Word Word::from_base(const ReflectableBase& base, std::span<const std::size_t> indices) {
  Word w(base.rank());
  w.letters.reserve(indices.size());
  for (auto k : indices) {
    if (k >= base.size()) throw DomainError("generator index " + std::to_string(k) + " out of range");
    w.letters.push_back(base[k]);
  }
  return w;
}

Word Word::normalized() const {
  Word w(rank);
  w.letters.reserve(letters.size());
  for (const auto& a : letters) w.letters.push_back(a.normalized());
  return w;
}

Word Word::reversed() const {
  Word w = *this;
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos > letters.size() || len > letters.size() - pos) throw DomainError("word slice out of range");
  return Word(rank, {letters.begin() + pos, letters.begin() + pos + len});
}

Word operator+(Word a, const Word& b) {
  if (a.rank != b.rank) throw DomainError("cannot concatenate words of different rank");
  a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
  return a;
}

std::string Word::to_string() const {
  std::string out;
  for (const auto& a : letters) {
    if (!out.empty()) out += ' ';
    out += a.to_string();
  }
  return out;
}

void require_in_rx(const Semilattice& s, const Word& w) {
  if (w.rank != s.rank) throw DomainError("word rank does not match the semilattice");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!root_in_rx(s, w.letters[i])) {
      throw DomainError("letter " + std::to_string(i) + " (" + w.letters[i].to_string() +
                        ") is not in R^x");
    }
  }
}

namespace {

void require_non_isotropic(const Root& a) {
  if (a.sign != 1 && a.sign != -1) {
    throw DomainError("letter " + a.to_string() + " is not a non-isotropic root");
  }
}

}  // namespace

WeylElement eval_word(const Word& w) {
  WeylElement e = WeylElement::identity(w.rank);
  for (const auto& a : w.letters) {
    require_non_isotropic(a);
    e.eps = -e.eps;
    e.t = a.sign > 0 ? a.p - e.t : -a.p - e.t;
  }
  return e;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  require_same_rank(a.t, b.t);
  return {a.eps * b.eps, b.eps * a.t + b.t};
}

WeylElement inverse(const WeylElement& a) { return {a.eps, -(a.eps * a.t)}; }

Root act_on_root(const WeylElement& a, const Root& beta) {
  require_same_rank(a.t, beta.p);
  return Root{a.eps * beta.sign, beta.p - checked::mul(2, beta.sign) * a.t};
}

bool is_relation_w(const Word& w) {
  if (w.size() % 2 != 0) {
    for (const auto& a : w.letters) require_non_isotropic(a);
    return false;
  }
  return eval_word(w).is_identity();
}

bool is_alternating(std::span<const Root> P, const Word& tuple) {
  for (const auto& a : tuple.letters) {
    if (std::find(P.begin(), P.end(), a) == P.end()) return false;
  }
  return is_relation_w(tuple);
}

// ---------------------------------------------------------------------------

AlternatingEnumerator::AlternatingEnumerator(std::vector<Root> P, std::size_t k,
                                             std::size_t max_length, std::size_t max_set_size)
    : set_(std::move(P)), k_(k) {
  if (k % 2 != 0) throw DomainError("alternating tuples have even length; got k = " + std::to_string(k));
  if (k > max_length) {
    throw DomainError("k = " + std::to_string(k) + " exceeds the enumeration cap " + std::to_string(max_length));
  }
  if (set_.size() > max_set_size) {
    throw DomainError("|P| = " + std::to_string(set_.size()) + " exceeds the enumeration cap " +
                      std::to_string(max_set_size));
  }
  const std::size_t rank = set_.empty() ? 0 : set_.front().rank();
  lo_ = LatticeVector(rank);
  hi_ = LatticeVector(rank);
  for (std::size_t i = 0; i < set_.size(); ++i) {
    const auto& a = set_[i];
    require_non_isotropic(a);
    if (a.rank() != rank) throw DomainError("roots of different rank in P");
    contrib_.push_back(a.sign * a.p);
    for (std::size_t j = 0; j < rank; ++j) {
      lo_[j] = i == 0 ? contrib_.back()[j] : std::min(lo_[j], contrib_.back()[j]);
      hi_[j] = i == 0 ? contrib_.back()[j] : std::max(hi_[j], contrib_.back()[j]);
    }
  }
  sums_.push_back(LatticeVector(rank));
}

// Position d (0-based) carries the sign (−1)^{d+1}.
bool AlternatingEnumerator::feasible(std::size_t depth, std::size_t idx, LatticeVector& sum) const {
  sum = depth % 2 == 0 ? sums_[depth] - contrib_[idx] : sums_[depth] + contrib_[idx];
  const std::size_t remaining = k_ - depth - 1;
  // remaining positions depth+1 .. k-1: odd positions add, even subtract
  std::size_t plus = 0;
  for (std::size_t d = depth + 1; d < k_; ++d) plus += d % 2;
  const auto n_plus = static_cast<std::int64_t>(plus);
  const auto n_minus = static_cast<std::int64_t>(remaining - plus);
  for (std::size_t j = 0; j < sum.rank(); ++j) {
    const std::int64_t reach_lo = checked::sub(checked::mul(n_plus, lo_[j]), checked::mul(n_minus, hi_[j]));
    const std::int64_t reach_hi = checked::sub(checked::mul(n_plus, hi_[j]), checked::mul(n_minus, lo_[j]));
    const std::int64_t need = checked::neg(sum[j]);
    if (need < reach_lo || need > reach_hi) return false;
  }
  return true;
}

bool AlternatingEnumerator::search(std::size_t from) {
  LatticeVector sum;
  while (true) {
    const std::size_t depth = current_.size();
    if (depth == k_) return true;
    bool placed = false;
    for (std::size_t idx = from; idx < set_.size(); ++idx) {
      if (feasible(depth, idx, sum)) {
        current_.push_back(idx);
        sums_.push_back(std::move(sum));
        placed = true;
        break;
      }
    }
    if (placed) {
      from = 0;
      continue;
    }
    if (current_.empty()) return false;
    from = current_.back() + 1;
    current_.pop_back();
    sums_.pop_back();
  }
}

std::optional<std::vector<std::size_t>> AlternatingEnumerator::next() {
  if (done_) return std::nullopt;
  bool found;
  if (!started_) {
    started_ = true;
    found = search(0);
  } else if (current_.empty()) {
    found = false;
  } else {
    const std::size_t from = current_.back() + 1;
    current_.pop_back();
    sums_.pop_back();
    found = search(from);
  }
  if (!found) {
    done_ = true;
    return std::nullopt;
  }
  return current_;
}

std::vector<std::vector<std::size_t>> enumerate_alternating(std::span<const Root> P, std::size_t k) {
  AlternatingEnumerator e({P.begin(), P.end()}, k);
  std::vector<std::vector<std::size_t>> out;
  while (auto t = e.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace a1weyl
