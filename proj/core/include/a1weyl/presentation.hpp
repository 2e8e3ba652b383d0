#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "a1weyl/lattice.hpp"
#include "a1weyl/weyl.hpp"

namespace a1weyl {

enum class TargetGroup { W, Wt };

const char* to_string(TargetGroup g);
TargetGroup parse_target(const std::string& s);

/// Generators are labels; relators are words over generator indices.
///
/// Labels resolve against a ReflectableBase: "x<k>" is w_{α_k}, "x(i,j)" is
/// the composite w_{ε+σ_j} w_ε w_{ε+σ_i}, and anything else is read as an
/// explicit root "(+|-)e:c1,...,cν".
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<std::size_t>> relators;
  TargetGroup target = TargetGroup::W;
  /// Set for the alternating presentation, which is infinite and only
  /// materialized up to this length.
  std::optional<std::size_t> truncated_at;

  bool operator==(const Presentation&) const = default;
};

/// Generators indexed by P, relators every alternating tuple of length
/// 2..kmax.
Presentation presentation_alternating(std::span<const Root> P, std::size_t kmax);
/// Same, over the base roots, with labels x0..xm.
Presentation presentation_alternating(const ReflectableBase& b, std::size_t kmax);

/// ⟨x_0..x_ν | x_k², (x_0 x_i x_j)², 1 <= i < j <= ν⟩
Presentation presentation_baby_w(std::size_t nu);

/// Generators x_0..x_ν plus x_(i,j) for (i,j) ∈ B; relators x_k², x_(i,j)²,
/// x_(i,j) x_i x_0 x_j for (i,j) ∈ B and (x_i x_0 x_j)² for (i,j) ∉ B.
Presentation presentation_w_spre(std::size_t nu, const std::set<std::pair<std::size_t, std::size_t>>& B);

/// Presentation of the hyperbolic Weyl group for an elliptic-like base:
/// x̃_k², and for every 1 <= i < j <= ν and every k the commutator
/// [x̃_k, x̃_s x̃_i x̃_0 x̃_j] when {i,j} = supp(α_s), else [x̃_k, (x̃_i x̃_0 x̃_j)²].
/// [a, b] = a b a⁻¹ b⁻¹.
Presentation presentation_hyp(const ReflectableBase& b);

/// The closed count ν(ν+1)/2 + ν + 1. It matches the number of relators of
/// presentation_hyp for a baby base only at ν = 2 (3 vs 2 at ν = 1, 10 vs 16
/// at ν = 3).
std::size_t stated_hyp_relator_count(std::size_t nu);

std::vector<Word> resolve_generators(const Presentation& p, const ReflectableBase& b);
Word expand_relator(const std::vector<Word>& generators, std::span<const std::size_t> relator);

struct VerificationReport {
  TargetGroup target = TargetGroup::W;
  std::size_t checked = 0;
  std::vector<std::size_t> failed;  // relator indices

  bool ok() const { return failed.empty(); }
};

/// Evaluates every relator in the target group; identity means pass.
VerificationReport verify_presentation(const Presentation& p, TargetGroup target, const ReflectableBase& b);

// ---------------------------------------------------------------------------
// Rewriting relation words over Π_0 = {α_0, ..., α_ν} to the empty word.

enum class RewriteRule { CancelInvolution, TripleReverse, InsertRelator, DeleteRelator };

const char* to_string(RewriteRule r);
RewriteRule parse_rule(const std::string& s);

struct RewriteStep {
  std::size_t position = 0;  // 0-based letter index
  RewriteRule rule = RewriteRule::CancelInvolution;
  std::size_t before = 0;  // word length before the step
  std::size_t after = 0;
  /// Inserted or deleted letters for the relator rules; empty otherwise.
  std::vector<std::size_t> letters;
  /// Steps sharing a macro index form one length-reducing macro-step.
  std::size_t macro = 0;

  bool operator==(const RewriteStep&) const = default;
};

struct RewriteCertificate {
  std::vector<std::size_t> input;
  std::vector<RewriteStep> steps;
  bool final_empty = false;

  std::size_t macro_count() const { return steps.empty() ? 0 : steps.back().macro + 1; }
  bool operator==(const RewriteCertificate&) const = default;
};

/// (x_r x_s x_t)² with r, s, t distinct and 0 among them.
bool is_zero_hexagon(std::span<const std::size_t> letters);

/// Rewrites a relation word over Π_0 to the empty word. Each macro-step
/// either deletes a zero-hexagon window, or cancels the leftmost adjacent
/// pair, or bubbles the first letter towards its partner at the smallest
/// even position (1-based) by triple reversals x_r x_s x_t → x_t x_s x_r.
/// Cancellation is taken as soon as a reversal creates an adjacent pair, and
/// a macro-step always ends with the cascade of leftmost cancellations, so
/// the length strictly drops. Throws DomainError when the input is not a
/// relation in W or uses letters outside Π_0.
RewriteCertificate rewrite_to_identity(const ReflectableBase& b, std::span<const std::size_t> word);

/// Applies one step; throws CheckFailed when the step does not match.
std::vector<std::size_t> apply_step(std::vector<std::size_t> word, const RewriteStep& step);

/// Replays the certificate, checking that every intermediate word is a
/// relation in W and the last one is empty. Returns the intermediate words
/// (input first). Throws CheckFailed on any violation.
std::vector<std::vector<std::size_t>> replay_certificate(const ReflectableBase& b, const RewriteCertificate& cert);

}  // namespace a1weyl
