#include "a1weyl/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>

#include "a1weyl/checked.hpp"
#include "a1weyl/error.hpp"

namespace a1weyl {

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t i) {
  if (i == 0 || i > rank) throw DomainError("unit vector index out of range");
  LatticeVector v(rank);
  v.coords_[i - 1] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

LatticeVector LatticeVector::mod2() const {
  LatticeVector r(rank());
  for (std::size_t k = 0; k < rank(); ++k) r.coords_[k] = coords_[k] & 1;
  return r;
}

std::int64_t LatticeVector::sup_norm() const {
  std::int64_t n = 0;
  for (auto c : coords_) n = std::max(n, c < 0 ? checked::neg(c) : c);
  return n;
}

void require_same_rank(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) {
    throw DomainError("rank mismatch: " + std::to_string(a.rank()) + " vs " +
                      std::to_string(b.rank()));
  }
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_same_rank(*this, o);
  for (std::size_t k = 0; k < rank(); ++k) coords_[k] = checked::add(coords_[k], o.coords_[k]);
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  require_same_rank(*this, o);
  for (std::size_t k = 0; k < rank(); ++k) coords_[k] = checked::sub(coords_[k], o.coords_[k]);
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(rank());
  for (std::size_t k = 0; k < rank(); ++k) r.coords_[k] = checked::neg(coords_[k]);
  return r;
}

LatticeVector operator*(std::int64_t k, const LatticeVector& v) {
  LatticeVector r(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) r.coords_[i] = checked::mul(k, v.coords_[i]);
  return r;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) os << ',';
    os << coords_[k];
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Semilattice Semilattice::baby(std::size_t nu) {
  Semilattice s{nu, {LatticeVector(nu)}};
  for (std::size_t i = 1; i <= nu; ++i) s.cosets.push_back(LatticeVector::unit(nu, i));
  return s;
}

Semilattice Semilattice::toroidal(std::size_t nu) {
  if (nu >= 20) throw DomainError("toroidal semilattice rank too large");
  Semilattice s = baby(nu);
  std::vector<LatticeVector> rest;
  for (std::uint32_t mask = 0; mask < (1u << nu); ++mask) {
    if (std::popcount(mask) < 2) continue;
    LatticeVector v(nu);
    for (std::size_t k = 0; k < nu; ++k) v[k] = (mask >> k) & 1u;
    rest.push_back(std::move(v));
  }
  auto support = [](const LatticeVector& v) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < v.rank(); ++k)
      if (v[k]) idx.push_back(k);
    return idx;
  };
  std::sort(rest.begin(), rest.end(), [&](const auto& a, const auto& b) {
    auto sa = support(a), sb = support(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
  });
  s.cosets.insert(s.cosets.end(), rest.begin(), rest.end());
  return s;
}

bool Semilattice::contains(const LatticeVector& p) const {
  if (p.rank() != rank) throw DomainError("rank mismatch against semilattice");
  auto r = p.mod2();
  return std::find(cosets.begin(), cosets.end(), r) != cosets.end();
}

std::vector<std::string> validate_semilattice(const Semilattice& s) {
  std::vector<std::string> errors;
  if (s.cosets.empty()) {
    errors.push_back("no coset representatives (tau_0 = 0 is required)");
    return errors;
  }
  bool shapes_ok = true;
  for (std::size_t i = 0; i < s.cosets.size(); ++i) {
    const auto& t = s.cosets[i];
    if (t.rank() != s.rank) {
      errors.push_back("tau_" + std::to_string(i) + " has length " + std::to_string(t.rank()) +
                       ", expected " + std::to_string(s.rank));
      shapes_ok = false;
      continue;
    }
    for (auto c : t.coords()) {
      if (c != 0 && c != 1) {
        errors.push_back("tau_" + std::to_string(i) + " has a non-0/1 entry: " + t.to_string());
        shapes_ok = false;
        break;
      }
    }
  }
  if (!shapes_ok) return errors;

  if (!s.cosets[0].is_zero()) errors.push_back("tau_0 must be the zero vector");
  for (std::size_t i = 0; i < s.cosets.size(); ++i) {
    for (std::size_t j = i + 1; j < s.cosets.size(); ++j) {
      if (s.cosets[i] == s.cosets[j]) {
        errors.push_back("duplicate coset: tau_" + std::to_string(i) + " = tau_" +
                         std::to_string(j) + " = " + s.cosets[i].to_string());
      }
    }
  }
  if (s.cosets.size() < s.rank + 1) {
    errors.push_back("need at least " + std::to_string(s.rank + 1) + " representatives, got " +
                     std::to_string(s.cosets.size()));
  }
  for (std::size_t i = 1; i <= s.rank && i < s.cosets.size(); ++i) {
    if (s.cosets[i] != LatticeVector::unit(s.rank, i)) {
      errors.push_back("tau_" + std::to_string(i) + " must be the standard basis vector e_" +
                       std::to_string(i) + ", got " + s.cosets[i].to_string());
    }
  }
  for (std::size_t k = s.rank + 1; k < s.cosets.size(); ++k) {
    auto ones = std::count(s.cosets[k].coords().begin(), s.cosets[k].coords().end(), 1);
    if (ones < 2) {
      errors.push_back("tau_" + std::to_string(k) + " (beyond the basis) needs >= 2 nonzero entries");
    }
  }
  return errors;
}

void require_valid(const Semilattice& s) {
  auto errors = validate_semilattice(s);
  if (errors.empty()) return;
  std::string msg = "invalid semilattice:";
  for (const auto& e : errors) msg += "\n  " + e;
  throw ConfigError(msg);
}

// ---------------------------------------------------------------------------

Root Root::normalized() const {
  if (sign >= 0) return *this;
  return Root{1, -p};
}

Root Root::operator-() const { return Root{-sign, -p}; }

std::string Root::to_string() const {
  const char* s = sign > 0 ? "+" : sign < 0 ? "-" : "0";
  return std::string(s) + "e:" + p.to_string();
}

bool root_in_rx(const Semilattice& s, const Root& a) {
  if (a.rank() != s.rank) throw DomainError("rank mismatch against semilattice");
  return (a.sign == 1 || a.sign == -1) && s.contains(a.p);
}

bool root_in_r0(const Semilattice& s, const Root& a) {
  if (a.rank() != s.rank) throw DomainError("rank mismatch against semilattice");
  if (a.sign != 0) return false;
  auto r = a.p.mod2();
  for (const auto& ti : s.cosets) {
    for (const auto& tj : s.cosets) {
      if ((ti + tj).mod2() == r) return true;
    }
  }
  return false;
}

Root reflect(const Root& alpha, const Root& beta) {
  require_same_rank(alpha.p, beta.p);
  if (alpha.is_isotropic()) return beta;
  const std::int64_t c = checked::mul(2, checked::mul(beta.sign, alpha.sign));
  return Root{static_cast<int>(checked::sub(beta.sign, checked::mul(c, alpha.sign))),
              beta.p - c * alpha.p};
}

std::vector<std::size_t> supp(const Semilattice& s, const Root& a) {
  if (!root_in_rx(s, a)) throw DomainError("supp: root " + a.to_string() + " is not in R^x");
  std::vector<std::size_t> idx;
  auto r = a.p.mod2();
  for (std::size_t k = 0; k < r.rank(); ++k)
    if (r[k]) idx.push_back(k + 1);
  return idx;
}

// ---------------------------------------------------------------------------

ReflectableBase::ReflectableBase(Semilattice s) : semilattice_(std::move(s)) {
  require_valid(semilattice_);
  for (const auto& t : semilattice_.cosets) roots_.push_back(Root::positive(t));
}

std::optional<std::size_t> ReflectableBase::index_of(const Root& a) const {
  if (a.is_isotropic()) return std::nullopt;
  auto n = a.normalized();
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k] == n) return k;
  return std::nullopt;
}

bool is_elliptic_like(const ReflectableBase& b) {
  return std::all_of(b.roots().begin(), b.roots().end(), [&](const Root& a) {
    return supp(b.semilattice(), a).size() <= 2;
  });
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> b_pi(const ReflectableBase& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (std::size_t k = 0; k < b.size(); ++k) {
    auto sp = supp(b.semilattice(), b[k]);
    if (sp.size() == 2) out.emplace(std::pair{sp[0], sp[1]}, k);
  }
  return out;
}

std::vector<Root> roots_in_box(const Semilattice& s, std::int64_t radius) {
  if (radius < 0) throw DomainError("negative box radius");
  std::vector<Root> out;
  LatticeVector p(s.rank);
  for (std::size_t k = 0; k < s.rank; ++k) p[k] = -radius;
  while (true) {
    if (s.contains(p)) {
      out.push_back(Root{-1, p});
      out.push_back(Root{1, p});
    }
    std::size_t k = 0;
    while (k < s.rank && p[k] == radius) p[k++] = -radius;
    if (k == s.rank) break;
    ++p[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReflectableReport check_reflectable_set(const Semilattice& s, std::span<const Root> P,
                                        std::int64_t radius) {
  if (P.empty()) throw DomainError("check_reflectable_set: empty root set");
  if (radius < 1) throw DomainError("check_reflectable_set: radius must be >= 1");
  for (const auto& a : P) {
    if (!root_in_rx(s, a)) throw DomainError("check_reflectable_set: " + a.to_string() + " is not in R^x");
  }

  std::set<Root> seen;
  std::deque<Root> queue;
  for (const auto& a : P) {
    if (a.p.sup_norm() <= radius && seen.insert(a).second) queue.push_back(a);
  }
  while (!queue.empty()) {
    Root beta = std::move(queue.front());
    queue.pop_front();
    for (const auto& alpha : P) {
      Root img = reflect(alpha, beta);
      if (img.p.sup_norm() > radius) continue;
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }

  ReflectableReport report;
  report.radius = radius;
  auto box = roots_in_box(s, radius);
  report.box_roots = box.size();
  report.reached = seen.size();
  for (auto& r : box)
    if (!seen.count(r)) report.uncovered.push_back(std::move(r));
  report.covered = report.uncovered.empty();
  return report;
}

}  // namespace a1weyl
