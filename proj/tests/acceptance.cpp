// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "a1weyl/error.hpp"
#include "a1weyl/geometry.hpp"
#include "a1weyl/hyperbolic.hpp"
#include "a1weyl/presentation.hpp"
#include "a1weyl/random.hpp"
#include "support/oracle.hpp"

using namespace a1weyl;

namespace {

using Letters = std::vector<std::size_t>;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Simplex B(std::int64_t s1, std::int64_t s2, int eta) { return Simplex{LatticeVector{s1, s2}, eta}; }

oracle::Mat column_major(const IntMatrix& m) {
  oracle::Mat out(m.dim(), oracle::Vec(m.dim()));
  for (std::size_t c = 0; c < m.dim(); ++c)
    for (std::size_t r = 0; r < m.dim(); ++r) out[c][r] = m(r, c);
  return out;
}

Outcome worked_example() {
  Outcome o;
  const ReflectableBase b(Semilattice::baby(2));
  const Letters w{2, 0, 2, 1, 0, 1, 0, 2, 1, 2, 1, 0};
  const std::vector<Simplex> pw{B(0, 0, 1),   B(0, 0, -1), B(-1, 0, 1), B(-1, 1, -1), B(-2, 1, 1),
                                B(-2, 2, -1), B(-2, 2, 1), B(-1, 2, -1), B(-1, 2, 1), B(0, 2, -1),
                                B(0, 1, 1),   B(0, 1, -1), B(0, 0, 1)};
  const std::vector<Simplex> pw1{B(0, 0, 1),  B(0, 0, -1), B(-1, 0, 1), B(-1, 1, -1), B(-2, 1, 1), B(-2, 2, -1),
                                 B(-2, 2, 1), B(-1, 2, -1), B(-1, 1, 1), B(0, 1, -1),  B(0, 0, 1)};
  const std::vector<Simplex> pw2{B(0, 0, 1),  B(0, 0, -1), B(-1, 0, 1), B(-1, 1, -1),
                                 B(-1, 1, 1), B(0, 1, -1), B(0, 0, 1)};
  const Path p = path_of_word(Word::from_base(b, w), B(0, 0, 1));
  o.require(p.simplices == pw, "P(w) differs from the 13-entry path");
  const auto snaps = replay_moves(b, reduce_loop(b, p));
  o.require(snaps.size() >= 3, "fewer than two macro-moves");
  if (o.ok) {
    o.require(snaps[1].simplices == pw1, "first macro-move does not give P(w1)");
    o.require(snaps[2].simplices == pw2, "second macro-move does not give P(w2)");
    o.require(snaps[2].simplices == path_of_word(Word::from_base(b, Letters{2, 1, 0, 2, 1, 0}), B(0, 0, 1)).simplices,
              "P(w2) is not the path of (x2 x1 x0)^2");
    o.require(snaps.back().word.empty(), "reduction does not reach the trivial loop");
  }
  o.detail = o.ok ? "13-entry path, P(w1) and P(w2) exact" : o.detail;
  return o;
}

Outcome center_action() {
  Outcome o;
  const ReflectableBase baby(Semilattice::baby(2));
  const Word z = Word::from_base(baby, Letters{1, 0, 2, 1, 0, 2});
  const auto h = eval_word_hyp(z);
  const auto m = column_major(matrix_of_word(z));
  // columns: ε, σ1, σ2, λ1, λ2
  o.require(m[0] == oracle::Vec({1, 0, 0, 0, 0}) && m[1] == oracle::Vec({0, 1, 0, 0, 0}) &&
                m[2] == oracle::Vec({0, 0, 1, 0, 0}),
            "(x1 x0 x2)^2 moves ε or σ");
  o.require(m[3] == oracle::Vec({0, 0, 2, 1, 0}), "λ1 is not sent to λ1 + 2σ2");
  o.require(m[4] == oracle::Vec({0, -2, 0, 0, 1}), "λ2 is not sent to λ2 - 2σ1");
  o.require(column_major(to_matrix(h)) == oracle::word_matrix(z, true), "canonical form disagrees with matrices");

  // c12: λ1 ↦ λ1 + σ2, λ2 ↦ λ2 − σ1
  const ReflectableBase tor(Semilattice::toroidal(2));
  const Word c = Word::from_base(tor, Letters{3, 1, 0, 2});
  const auto mc = oracle::word_matrix(c, true);
  o.require(mc[3] == oracle::Vec({0, 0, 1, 1, 0}) && mc[4] == oracle::Vec({0, -1, 0, 0, 1}) &&
                mc[0] == oracle::Vec({1, 0, 0, 0, 0}),
            "toroidal word does not realize c12");
  o.require(column_major(to_matrix(eval_word_hyp(c))) == mc, "toroidal canonical form disagrees with matrices");
  const auto gens = center_basis(tor);
  o.require(gens.size() == 1 && gens[0].word == c && gens[0].power == 1, "center_basis differs for toroidal rank 2");
  if (o.ok) o.detail = "(x1x0x2)^2 = c12^2 and w_{e+s1+s2} w_{e+s1} w_e w_{e+s2} = c12";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Rng rng(0);
  std::size_t mismatches = 0, n = 0;
  std::vector<Semilattice> lattices;
  for (std::size_t nu = 1; nu <= 3; ++nu) {
    lattices.push_back(Semilattice::baby(nu));
    lattices.push_back(Semilattice::toroidal(nu));
  }
  for (int i = 0; i < 1000; ++i) {
    const Word w = random_word(rng, lattices[i % lattices.size()], 16);
    ++n;
    const bool ok_w = to_matrix(eval_word(w)) == weyl_matrix_of_word(w) &&
                      column_major(to_matrix(eval_word(w))) == oracle::word_matrix(w, false);
    const bool ok_h = to_matrix(eval_word_hyp(w)) == matrix_of_word(w) &&
                      column_major(to_matrix(eval_word_hyp(w))) == oracle::word_matrix(w, true);
    mismatches += !ok_w + !ok_h;
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.ok) o.detail = std::to_string(n) + " words, 0 mismatches";
  return o;
}

Outcome presentation_soundness() {
  Outcome o;
  for (std::size_t nu = 0; nu <= 4; ++nu) {
    const ReflectableBase b(Semilattice::baby(nu));
    o.require(verify_presentation(presentation_baby_w(nu), TargetGroup::W, b).ok(),
              "baby presentation fails in W at rank " + std::to_string(nu));
  }
  std::vector<std::string> unavailable;
  for (std::size_t nu = 1; nu <= 3; ++nu) {
    for (const auto& [name, s] : {std::pair{"baby", Semilattice::baby(nu)}, std::pair{"toroidal", Semilattice::toroidal(nu)}}) {
      const ReflectableBase b(s);
      const std::string label = std::string(name) + " rank " + std::to_string(nu);
      try {
        o.require(verify_presentation(presentation_hyp(b), TargetGroup::Wt, b).ok(),
                  "hyperbolic presentation fails for " + label);
      } catch (const DomainError& e) {
        unavailable.push_back(label + " (" + e.what() + ")");
      }
    }
  }
  const ReflectableBase b2(Semilattice::baby(2));
  const auto gap = verify_presentation(presentation_baby_w(2), TargetGroup::Wt, b2);
  const auto& rel = presentation_baby_w(2).relators;
  o.require(gap.failed.size() == 1 && rel[gap.failed[0]] == Letters({0, 1, 2, 0, 1, 2}),
            "(x0 x1 x2)^2 does not fail alone in Wt");
  for (const auto& u : unavailable) o.require(false, "no hyperbolic presentation for " + u);
  if (o.ok) o.detail = "all pass; (x0x1x2)^2 fails in Wt as expected";
  else if (o.detail.rfind("no hyperbolic presentation", 0) == 0) o.detail += "; every other item matches the expected pattern";
  return o;
}

Outcome completeness() {
  Outcome o;
  Rng rng(0);
  std::size_t failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t nu = 1 + i % 4;
    const ReflectableBase b(Semilattice::baby(nu));
    const Letters w = random_relation(rng, nu, 24);
    try {
      const auto cert = rewrite_to_identity(b, w);
      const auto trail = replay_certificate(b, cert);
      bool ok = cert.final_empty && trail.back().empty();
      for (const auto& x : trail) ok = ok && is_relation_w(Word::from_base(b, x));
      failures += !ok;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  o.require(failures == 0, std::to_string(failures) + " failures");
  if (o.ok) o.detail = "1000 relation words reduced and replayed";
  return o;
}

Outcome algebraic_laws() {
  Outcome o;
  Rng rng(0);
  const auto s = Semilattice::toroidal(3);
  std::uniform_int_distribution<std::int64_t> d(-3, 3);
  std::uniform_int_distribution<int> kd(-5, 5);
  std::size_t failures = 0;
  constexpr int kInstances = 250;
  for (int i = 0; i < kInstances; ++i) {
    const Word u = random_word(rng, s, 10), v = random_word(rng, s, 10);
    failures += !(eval_word(u + v) == compose(eval_word(u), eval_word(v)));

    const Root a = random_root(rng, s);
    failures += !(eval_word(u + Word(3, {a}) + u.reversed()) == eval_word(Word(3, {act_on_root(eval_word(u), a)})));

    Word t = random_word(rng, s, 10);
    t.letters.push_back(random_root(rng, s));
    t.letters.push_back(random_root(rng, s));
    t.letters.push_back(random_root(rng, s));
    const auto at = std::uniform_int_distribution<std::size_t>(0, t.size() - 3)(rng);
    Word r = t;
    std::swap(r.letters[at], r.letters[at + 2]);
    failures += !(eval_word(t) == eval_word(r));

    Word odd = random_word(rng, s, 9);
    if (odd.size() % 2 == 0) odd.letters.push_back(random_root(rng, s));
    failures += !is_relation_w(odd + odd);

    const LatticeVector sig{d(rng), d(rng), d(rng)}, del{d(rng), d(rng), d(rng)};
    const Root as{a.sign, a.p + sig}, ad{a.sign, a.p + del}, asd{a.sign, a.p + sig + del};
    failures += !(eval_word(Word(3, {asd})) == eval_word(Word(3, {as, a, ad})));

    const int k = kd(rng);
    const Root ak{a.sign, a.p + k * sig};
    WeylElement pw = WeylElement::identity(3);
    const auto step = eval_word(Word(3, {as, a}));
    for (int j = 0; j < std::abs(k); ++j) pw = compose(pw, k >= 0 ? step : inverse(step));
    failures += !(eval_word(Word(3, {ak, a})) == pw);
  }
  o.require(failures == 0, std::to_string(failures) + " failures");
  if (o.ok) o.detail = "6 laws x " + std::to_string(kInstances) + " instances";
  return o;
}

Outcome geometric_action() {
  Outcome o;
  Rng rng(0);
  std::size_t failures = 0;
  for (int i = 0; i < 500; ++i) {
    const auto a = random_weyl_element(rng, 2, 2);
    const auto sx = random_simplex(rng, 2);
    failures += (act_on_simplex(a, sx) == sx) != a.is_identity();
  }
  const ReflectableBase b(Semilattice::baby(2));
  const Simplex b0 = B(0, 0, 1);
  for (std::int64_t x = -3; x <= 3; ++x)
    for (std::int64_t y = -3; y <= 3; ++y)
      for (int eta : {1, -1}) {
        // translation by ±σ as a product of w_ε w_{ε+σ_i}, then w_ε for η = −1
        const LatticeVector shift = eta > 0 ? LatticeVector{x, y} : LatticeVector{-x, -y};
        Letters w;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::int64_t k = 0; k < std::abs(shift[i]); ++k) {
            const Letters pair = shift[i] > 0 ? Letters{0, i + 1} : Letters{i + 1, 0};
            w.insert(w.end(), pair.begin(), pair.end());
          }
        if (eta < 0) w.push_back(0);
        failures += !(act_on_simplex(eval_word(Word::from_base(b, w)), b0) == B(x, y, eta));
      }
  for (int i = 0; i < 500; ++i) {
    const auto a = random_weyl_element(rng, 2), c = random_weyl_element(rng, 2);
    const auto sx = random_simplex(rng, 2);
    failures += !(act_on_simplex(compose(a, c), sx) == act_on_simplex(a, act_on_simplex(c, sx)));
  }
  o.require(failures == 0, std::to_string(failures) + " failures");
  if (o.ok) o.detail = "freeness 500, transitivity 98 simplices, action law 500";
  return o;
}

Outcome cardinalities() {
  Outcome o;
  const auto p = presentation_baby_w(2);
  const auto h = presentation_hyp(ReflectableBase(Semilattice::baby(2)));
  o.require(p.generators.size() == 3 && p.relators.size() == 4, "baby W(2) is not 3/4");
  o.require(h.generators.size() == 3 && h.relators.size() == 6, "hyperbolic baby(2) is not 3/6");
  o.require(h.relators.size() == stated_hyp_relator_count(2), "count formula mismatch at rank 2");
  if (o.ok) o.detail = "3/4 and 3/6";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double limit_seconds;  // 0 = no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked example path and macro-moves", worked_example, 1.0},
      {2, "center action", center_action, 1.0},
      {3, "oracle equivalence", oracle_equivalence, 10.0},
      {4, "presentation soundness", presentation_soundness, 0.0},
      {5, "completeness witness", completeness, 30.0},
      {6, "algebraic laws", algebraic_laws, 0.0},
      {7, "geometric action", geometric_action, 0.0},
      {8, "cardinalities", cardinalities, 0.0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail = "took longer than " + std::to_string(c.limit_seconds) + " s";
    }
    failed += !o.ok;
    std::printf("%s [%d] %s: %s (%.3f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
