#include "a1weyl/presentation.hpp"

#include <algorithm>
#include <regex>

#include "a1weyl/error.hpp"
#include "a1weyl/hyperbolic.hpp"
#include "a1weyl/io.hpp"

namespace a1weyl {

const char* to_string(TargetGroup g) { return g == TargetGroup::W ? "W" : "Wt"; }

TargetGroup parse_target(const std::string& s) {
  if (s == "W") return TargetGroup::W;
  if (s == "Wt") return TargetGroup::Wt;
  throw ParseError("unknown target group '" + s + "' (expected W or Wt)");
}

namespace {

std::string gen_label(std::size_t k) { return "x" + std::to_string(k); }

std::vector<std::size_t> commutator(std::size_t k, const std::vector<std::size_t>& b) {
  // [a, b] = a b a^-1 b^-1 with a = x_k; inverses of involution words are reversals
  std::vector<std::size_t> r{k};
  r.insert(r.end(), b.begin(), b.end());
  r.push_back(k);
  r.insert(r.end(), b.rbegin(), b.rend());
  return r;
}

void add_involutions(Presentation& p, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) p.relators.push_back({k, k});
}

}  // namespace

Presentation presentation_alternating(std::span<const Root> P, std::size_t kmax) {
  if (kmax % 2 != 0) throw DomainError("kmax must be even");
  if (kmax > kAltMaxLength) throw DomainError("kmax exceeds the enumeration cap");
  Presentation p;
  for (const auto& a : P) p.generators.push_back(a.to_string());
  for (std::size_t k = 2; k <= kmax; k += 2) {
    for (auto& t : enumerate_alternating(P, k)) p.relators.push_back(std::move(t));
  }
  p.target = TargetGroup::W;
  p.truncated_at = kmax;
  return p;
}

Presentation presentation_alternating(const ReflectableBase& b, std::size_t kmax) {
  Presentation p = presentation_alternating(b.roots(), kmax);
  for (std::size_t k = 0; k < p.generators.size(); ++k) p.generators[k] = gen_label(k);
  return p;
}

Presentation presentation_baby_w(std::size_t nu) { return presentation_w_spre(nu, {}); }

Presentation presentation_w_spre(std::size_t nu, const std::set<std::pair<std::size_t, std::size_t>>& B) {
  for (const auto& [i, j] : B) {
    if (!(1 <= i && i < j && j <= nu)) {
      throw DomainError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
  }
  Presentation p;
  for (std::size_t k = 0; k <= nu; ++k) p.generators.push_back(gen_label(k));
  std::vector<std::pair<std::size_t, std::size_t>> composite(B.begin(), B.end());
  for (const auto& [i, j] : composite) {
    p.generators.push_back("x(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  add_involutions(p, p.generators.size());
  for (std::size_t c = 0; c < composite.size(); ++c) {
    const auto [i, j] = composite[c];
    p.relators.push_back({nu + 1 + c, i, 0, j});
  }
  for (std::size_t i = 1; i <= nu; ++i) {
    for (std::size_t j = i + 1; j <= nu; ++j) {
      if (B.count({i, j})) continue;
      if (B.empty()) {
        p.relators.push_back({0, i, j, 0, i, j});
      } else {
        p.relators.push_back({i, 0, j, i, 0, j});
      }
    }
  }
  p.target = TargetGroup::W;
  return p;
}

Presentation presentation_hyp(const ReflectableBase& b) {
  if (!is_elliptic_like(b)) throw DomainError("presentation_hyp needs an elliptic-like base");
  const std::size_t nu = b.rank();
  const auto pairs = b_pi(b);
  Presentation p;
  for (std::size_t k = 0; k < b.size(); ++k) p.generators.push_back(gen_label(k));
  add_involutions(p, b.size());
  for (std::size_t i = 1; i <= nu; ++i) {
    for (std::size_t j = i + 1; j <= nu; ++j) {
      std::vector<std::size_t> f;
      if (auto it = pairs.find({i, j}); it != pairs.end()) {
        f = {it->second, i, 0, j};
      } else {
        f = {i, 0, j, i, 0, j};
      }
      for (std::size_t k = 0; k < b.size(); ++k) p.relators.push_back(commutator(k, f));
    }
  }
  p.target = TargetGroup::Wt;
  return p;
}

std::size_t stated_hyp_relator_count(std::size_t nu) { return nu * (nu + 1) / 2 + nu + 1; }

std::vector<Word> resolve_generators(const Presentation& p, const ReflectableBase& b) {
  static const std::regex simple(R"(x(\d+))");
  static const std::regex composite(R"(x\((\d+),(\d+)\))");
  std::vector<Word> out;
  for (const auto& label : p.generators) {
    std::smatch m;
    if (std::regex_match(label, m, simple)) {
      const std::size_t k = std::stoul(m[1]);
      if (k >= b.size()) throw DomainError("generator " + label + " has no base root");
      out.push_back(Word(b.rank(), {b[k]}));
    } else if (std::regex_match(label, m, composite)) {
      const std::size_t i = std::stoul(m[1]), j = std::stoul(m[2]);
      if (!(1 <= i && i < j && j <= b.rank())) throw DomainError("composite generator " + label + " out of range");
      // y_(i,j) := y_j y_0 y_i
      const std::size_t idx[] = {j, 0, i};
      out.push_back(Word::from_base(b, idx));
    } else {
      Word w;
      try {
        w = parse_word(label, b);
      } catch (const ParseError&) {
        throw DomainError("unresolvable generator label '" + label + "'");
      }
      if (w.size() != 1) throw DomainError("unresolvable generator label '" + label + "'");
      out.push_back(std::move(w));
    }
  }
  return out;
}

Word expand_relator(const std::vector<Word>& generators, std::span<const std::size_t> relator) {
  if (generators.empty()) throw DomainError("presentation has no generators");
  Word w(generators.front().rank);
  for (auto g : relator) {
    if (g >= generators.size()) throw DomainError("relator index " + std::to_string(g) + " out of range");
    w = w + generators[g];
  }
  return w;
}

VerificationReport verify_presentation(const Presentation& p, TargetGroup target, const ReflectableBase& b) {
  const auto gens = resolve_generators(p, b);
  for (const auto& g : gens) require_in_rx(b.semilattice(), g);
  VerificationReport report;
  report.target = target;
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const Word w = expand_relator(gens, p.relators[r]);
    const bool trivial = target == TargetGroup::W ? is_relation_w(w) : is_relation_hyp(w);
    ++report.checked;
    if (!trivial) report.failed.push_back(r);
  }
  return report;
}

// ---------------------------------------------------------------------------

const char* to_string(RewriteRule r) {
  switch (r) {
    case RewriteRule::CancelInvolution: return "cancel-involution";
    case RewriteRule::TripleReverse: return "triple-reverse";
    case RewriteRule::InsertRelator: return "insert-relator";
    case RewriteRule::DeleteRelator: return "delete-relator";
  }
  return "?";
}

RewriteRule parse_rule(const std::string& s) {
  for (auto r : {RewriteRule::CancelInvolution, RewriteRule::TripleReverse, RewriteRule::InsertRelator,
                 RewriteRule::DeleteRelator}) {
    if (s == to_string(r)) return r;
  }
  throw ParseError("unknown rewrite rule '" + s + "'");
}

bool is_zero_hexagon(std::span<const std::size_t> w) {
  if (w.size() != 6) return false;
  if (w[0] != w[3] || w[1] != w[4] || w[2] != w[5]) return false;
  if (w[0] == w[1] || w[1] == w[2] || w[0] == w[2]) return false;
  return w[0] == 0 || w[1] == 0 || w[2] == 0;
}

namespace {

using Letters = std::vector<std::size_t>;

std::optional<std::size_t> leftmost_pair(const Letters& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return i;
  return std::nullopt;
}

std::optional<std::size_t> leftmost_hexagon(const Letters& w) {
  for (std::size_t i = 0; i + 6 <= w.size(); ++i)
    if (is_zero_hexagon(std::span(w).subspan(i, 6))) return i;
  return std::nullopt;
}

bool is_relation_over(const ReflectableBase& b, const Letters& w) {
  return is_relation_w(Word::from_base(b, w));
}

class Rewriter {
 public:
  explicit Rewriter(Letters w) : word_(std::move(w)) {}

  RewriteCertificate run() {
    RewriteCertificate cert;
    cert.input = word_;
    while (!word_.empty()) {
      if (leftmost_pair(word_)) {
        cancel_cascade();
      } else if (auto h = leftmost_hexagon(word_)) {
        Letters hex(word_.begin() + *h, word_.begin() + *h + 6);
        push(*h, RewriteRule::DeleteRelator, std::move(hex));
      } else {
        bubble_first_letter();
        cancel_cascade();
      }
      ++macro_;
    }
    cert.steps = std::move(steps_);
    cert.final_empty = true;
    return cert;
  }

 private:
  void push(std::size_t pos, RewriteRule rule, Letters letters = {}) {
    RewriteStep step{pos, rule, word_.size(), 0, std::move(letters), macro_};
    word_ = apply_step(std::move(word_), step);
    step.after = word_.size();
    steps_.push_back(std::move(step));
  }

  void cancel_cascade() {
    while (auto p = leftmost_pair(word_)) push(*p, RewriteRule::CancelInvolution);
  }

  void bubble_first_letter() {
    // partner: smallest odd 0-based index holding the same generator
    std::size_t partner = 1;
    while (partner < word_.size() && word_[partner] != word_[0]) partner += 2;
    if (partner >= word_.size()) throw CheckFailed("rewriter: first letter has no partner at an even position");
    for (std::size_t i = 0; i + 1 < partner; i += 2) {
      if (word_[i] == word_[i + 2]) continue;
      push(i, RewriteRule::TripleReverse);
      if (leftmost_pair(word_)) return;
    }
  }

  Letters word_;
  std::vector<RewriteStep> steps_;
  std::size_t macro_ = 0;
};

}  // namespace

RewriteCertificate rewrite_to_identity(const ReflectableBase& b, std::span<const std::size_t> word) {
  Letters w(word.begin(), word.end());
  for (auto g : w) {
    if (g > b.rank()) throw DomainError("letter x" + std::to_string(g) + " is outside Pi_0");
  }
  if (!is_relation_over(b, w)) throw DomainError("word is not a relation in W; no certificate exists");
  return Rewriter(std::move(w)).run();
}

std::vector<std::size_t> apply_step(std::vector<std::size_t> w, const RewriteStep& step) {
  const std::size_t p = step.position;
  if (w.size() != step.before && step.before != 0) {
    throw CheckFailed("step expects length " + std::to_string(step.before) + ", word has " + std::to_string(w.size()));
  }
  switch (step.rule) {
    case RewriteRule::CancelInvolution:
      if (p + 1 >= w.size() || w[p] != w[p + 1]) throw CheckFailed("cancel-involution: no equal pair at " + std::to_string(p));
      w.erase(w.begin() + p, w.begin() + p + 2);
      break;
    case RewriteRule::TripleReverse:
      if (p + 2 >= w.size()) throw CheckFailed("triple-reverse: position out of range");
      std::swap(w[p], w[p + 2]);
      break;
    case RewriteRule::InsertRelator:
      if (p > w.size()) throw CheckFailed("insert-relator: position out of range");
      w.insert(w.begin() + p, step.letters.begin(), step.letters.end());
      break;
    case RewriteRule::DeleteRelator:
      if (step.letters.empty() || p + step.letters.size() > w.size() ||
          !std::equal(step.letters.begin(), step.letters.end(), w.begin() + p)) {
        throw CheckFailed("delete-relator: window does not match at " + std::to_string(p));
      }
      w.erase(w.begin() + p, w.begin() + p + step.letters.size());
      break;
  }
  if (step.after != 0 && w.size() != step.after) throw CheckFailed("step produced an unexpected length");
  return w;
}

std::vector<std::vector<std::size_t>> replay_certificate(const ReflectableBase& b, const RewriteCertificate& cert) {
  std::vector<Letters> trail{cert.input};
  if (!is_relation_over(b, cert.input)) throw CheckFailed("certificate input is not a relation");
  for (const auto& step : cert.steps) {
    if (step.rule == RewriteRule::InsertRelator || step.rule == RewriteRule::DeleteRelator) {
      if (!is_relation_over(b, step.letters)) throw CheckFailed("relator step uses a non-relation");
    }
    Letters next = apply_step(trail.back(), step);
    if (!is_relation_over(b, next)) throw CheckFailed("intermediate word is not a relation");
    trail.push_back(std::move(next));
  }
  if (!trail.back().empty()) throw CheckFailed("certificate does not end with the empty word");
  if (!cert.final_empty) throw CheckFailed("certificate is not flagged as reaching the empty word");
  return trail;
}

}  // namespace a1weyl
