#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "a1weyl/lattice.hpp"
#include "a1weyl/weyl.hpp"

namespace a1weyl {

/// B_{σ,η} = { Σ (2k_i + η t_i) σ_i : t_i >= 0, Σ t_i <= 1 } for σ = Σ k_i σ_i.
struct Simplex {
  LatticeVector sigma;
  int eta = 1;

  static Simplex origin(std::size_t rank) { return {LatticeVector(rank), 1}; }

  auto operator<=>(const Simplex&) const = default;
  /// "B_{(k1,k2),η}"
  std::string to_string() const;
};

/// w·B_{σ,η} = B_{σ + η T(w), ε(w) η}
Simplex act_on_simplex(const WeylElement& a, const Simplex& b);

/// (B, w_{α_k}·B, w_{α_{k−1}} w_{α_k}·B, ..., w·B): entry m is the suffix of
/// length m applied to the base.
struct Path {
  std::vector<Simplex> simplices;
  Word word;

  const Simplex& base() const { return simplices.front(); }
  std::size_t length() const { return word.size(); }
  bool operator==(const Path&) const = default;
};

Path path_of_word(const Word& w, const Simplex& base);

/// First == last. Throws CheckFailed if that disagrees with the word being
/// a relation (the action is free).
bool is_loop(const Path& p);

enum class MoveKind { Insert, Delete };

const char* to_string(MoveKind k);

/// Insertion or deletion of a 𝒫-loop: x_k² (one generator) or (x_r x_s x_t)²
/// (three distinct generators, 0 among them).
struct Move {
  MoveKind kind = MoveKind::Delete;
  Simplex base;                        // base point of the sub-loop
  std::vector<std::size_t> generators;  // {k} or {r, s, t}
  std::size_t position = 0;             // word position of the sub-loop
  std::size_t macro = 0;

  std::vector<std::size_t> loop_letters() const;
  bool operator==(const Move&) const = default;
};

struct MoveTrace {
  Path start;
  std::vector<Move> moves;

  std::size_t macro_count() const { return moves.empty() ? 0 : moves.back().macro + 1; }
};

/// Lifts the rewrite certificate of the loop's word to a sequence of
/// 𝒫-moves. Cancellations and hexagon deletions map to single deletions; a
/// triple reversal through 0 becomes the insertion of (x_t x_s x_r)² followed
/// by three square deletions, and a reversal of three nonzero generators is
/// routed through an inserted x_0².
MoveTrace reduce_loop(const ReflectableBase& b, const Path& loop);

/// Applies a single move, checking its base point and 𝒫-membership.
Path apply_move(const ReflectableBase& b, const Path& path, const Move& move);

/// Replays the trace and returns the path after each macro-move (the start
/// path first). Every intermediate path must remain a loop at the same base
/// and the last must be trivial; violations throw CheckFailed.
std::vector<Path> replay_moves(const ReflectableBase& b, const MoveTrace& trace);

struct SvgOptions {
  double unit = 40.0;  // pixels per lattice unit
  double margin = 1.5;  // lattice units around the drawing
};

/// Draws each visited simplex of a rank-2 path as the triangle 2σ, 2σ+ηe_1,
/// 2σ+ηe_2, labelled B0, B1, ... in visiting order (the closing entry of a
/// loop is not labelled again), with the σ_1/σ_2 axes.
std::string render_svg(const Path& p, const SvgOptions& options = {});

}  // namespace a1weyl
