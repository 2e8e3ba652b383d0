#include "a1weyl/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "a1weyl/error.hpp"
#include "a1weyl/presentation.hpp"

namespace a1weyl {

std::string Simplex::to_string() const {
  return "B_{(" + sigma.to_string() + ")," + (eta > 0 ? "1" : "-1") + "}";
}

Simplex act_on_simplex(const WeylElement& a, const Simplex& b) {
  require_same_rank(a.t, b.sigma);
  return {b.sigma + b.eta * a.t, a.eps * b.eta};
}

Path path_of_word(const Word& w, const Simplex& base) {
  require_same_rank(base.sigma, LatticeVector(w.rank));
  Path p;
  p.word = w;
  p.simplices.reserve(w.size() + 1);
  p.simplices.push_back(base);
  WeylElement suffix = WeylElement::identity(w.rank);
  for (std::size_t m = 1; m <= w.size(); ++m) {
    // prepend letter k−m: suffix ← w_α · suffix
    const Word letter(w.rank, {w.letters[w.size() - m]});
    suffix = compose(eval_word(letter), suffix);
    p.simplices.push_back(act_on_simplex(suffix, base));
  }
  return p;
}

bool is_loop(const Path& p) {
  const bool closed = p.simplices.front() == p.simplices.back();
  if (closed != is_relation_w(p.word)) throw CheckFailed("path closure disagrees with the word relation test");
  return closed;
}

const char* to_string(MoveKind k) { return k == MoveKind::Insert ? "insert" : "delete"; }

std::vector<std::size_t> Move::loop_letters() const {
  if (generators.size() == 1) return {generators[0], generators[0]};
  if (generators.size() == 3) {
    return {generators[0], generators[1], generators[2], generators[0], generators[1], generators[2]};
  }
  throw DomainError("a move carries one generator or a triple");
}

namespace {

using Letters = std::vector<std::size_t>;

bool in_move_set(const Move& m, std::size_t nu) {
  for (auto g : m.generators)
    if (g > nu) return false;
  if (m.generators.size() == 1) return true;
  return m.generators.size() == 3 && is_zero_hexagon(m.loop_letters());
}

Letters pi0_letters(const ReflectableBase& b, const Word& w) {
  Letters out;
  for (const auto& a : w.letters) {
    auto k = b.index_of(a);
    if (!k || *k > b.rank()) throw DomainError("letter " + a.to_string() + " is not in Pi_0");
    out.push_back(*k);
  }
  return out;
}

// Base point of the sub-loop that starts at word position pos and spans len
// letters: the suffix after it applied to the path base.
Simplex subloop_base(const ReflectableBase& b, const Letters& w, std::size_t pos, std::size_t len,
                     const Simplex& base) {
  Letters suffix(w.begin() + pos + len, w.end());
  return act_on_simplex(eval_word(Word::from_base(b, suffix)), base);
}

class Lifter {
 public:
  Lifter(const ReflectableBase& b, Letters w, Simplex base) : b_(b), word_(std::move(w)), base_(std::move(base)) {}

  void cancel(std::size_t pos) { emit(MoveKind::Delete, {word_[pos]}, pos); }

  void delete_hexagon(std::size_t pos) { emit(MoveKind::Delete, {word_[pos], word_[pos + 1], word_[pos + 2]}, pos); }

  void reverse(std::size_t pos) {
    const std::size_t r = word_[pos], s = word_[pos + 1], t = word_[pos + 2];
    if (r == t) return;
    if (r == s || s == t) throw CheckFailed("triple reversal across an adjacent pair cannot be lifted");
    if (r == 0 || s == 0 || t == 0) {
      emit(MoveKind::Insert, {t, s, r}, pos);
      emit(MoveKind::Delete, {r}, pos + 5);
      emit(MoveKind::Delete, {s}, pos + 4);
      emit(MoveKind::Delete, {t}, pos + 3);
      return;
    }
    // x_r x_s x_t = x0 x0 x_r x_s x_t → x0 x_s x_r x0 x_t → x0 x_s x_t x0 x_r
    //             → x_t x_s x0 x0 x_r → x_t x_s x_r
    emit(MoveKind::Insert, {0}, pos);
    reverse(pos + 1);
    reverse(pos + 2);
    reverse(pos);
    emit(MoveKind::Delete, {0}, pos + 2);
  }

  std::vector<Move> take() { return std::move(moves_); }
  const Letters& word() const { return word_; }
  std::size_t macro = 0;

 private:
  void emit(MoveKind kind, Letters gens, std::size_t pos) {
    Move m;
    m.kind = kind;
    m.generators = std::move(gens);
    m.position = pos;
    m.macro = macro;
    const auto loop = m.loop_letters();
    if (kind == MoveKind::Insert) {
      m.base = subloop_base(b_, word_, pos, 0, base_);
      word_.insert(word_.begin() + pos, loop.begin(), loop.end());
    } else {
      m.base = subloop_base(b_, word_, pos, loop.size(), base_);
      word_.erase(word_.begin() + pos, word_.begin() + pos + loop.size());
    }
    moves_.push_back(std::move(m));
  }

  const ReflectableBase& b_;
  Letters word_;
  Simplex base_;
  std::vector<Move> moves_;
};

}  // namespace

MoveTrace reduce_loop(const ReflectableBase& b, const Path& loop) {
  if (!is_loop(loop)) throw DomainError("reduce_loop: path is not a loop");
  const Letters letters = pi0_letters(b, loop.word);
  const RewriteCertificate cert = rewrite_to_identity(b, letters);

  Lifter lifter(b, letters, loop.base());
  for (const auto& step : cert.steps) {
    lifter.macro = step.macro;
    switch (step.rule) {
      case RewriteRule::CancelInvolution: lifter.cancel(step.position); break;
      case RewriteRule::DeleteRelator: lifter.delete_hexagon(step.position); break;
      case RewriteRule::TripleReverse: lifter.reverse(step.position); break;
      case RewriteRule::InsertRelator: throw CheckFailed("unexpected insert-relator step in a reduction");
    }
  }
  if (!lifter.word().empty()) throw CheckFailed("lifted moves do not reach the trivial loop");
  return MoveTrace{loop, lifter.take()};
}

Path apply_move(const ReflectableBase& b, const Path& path, const Move& move) {
  if (!in_move_set(move, b.rank())) throw CheckFailed("move loop is not in the move set");
  Letters w = pi0_letters(b, path.word);
  const auto loop = move.loop_letters();
  if (move.kind == MoveKind::Insert) {
    if (move.position > w.size()) throw CheckFailed("insert position out of range");
    if (subloop_base(b, w, move.position, 0, path.base()) != move.base) throw CheckFailed("insert base point mismatch");
    w.insert(w.begin() + move.position, loop.begin(), loop.end());
  } else {
    if (move.position + loop.size() > w.size() ||
        !std::equal(loop.begin(), loop.end(), w.begin() + move.position)) {
      throw CheckFailed("delete: sub-path does not match the move loop");
    }
    if (subloop_base(b, w, move.position, loop.size(), path.base()) != move.base) {
      throw CheckFailed("delete base point mismatch");
    }
    w.erase(w.begin() + move.position, w.begin() + move.position + loop.size());
  }
  return path_of_word(Word::from_base(b, w), path.base());
}

std::vector<Path> replay_moves(const ReflectableBase& b, const MoveTrace& trace) {
  std::vector<Path> snapshots{trace.start};
  Path cur = trace.start;
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    cur = apply_move(b, cur, trace.moves[i]);
    if (!is_loop(cur) || cur.base() != trace.start.base()) throw CheckFailed("move left the loop space");
    const bool macro_ends = i + 1 == trace.moves.size() || trace.moves[i + 1].macro != trace.moves[i].macro;
    if (macro_ends) snapshots.push_back(cur);
  }
  if (cur.simplices.size() != 1) throw CheckFailed("trace does not end at the trivial loop");
  return snapshots;
}

// ---------------------------------------------------------------------------

std::string render_svg(const Path& p, const SvgOptions& opt) {
  if (p.word.rank != 2 || p.base().sigma.rank() != 2) throw DomainError("render_svg needs rank 2");

  std::size_t visits = p.simplices.size();
  if (visits > 1 && p.simplices.front() == p.simplices.back()) --visits;

  // distinct simplices in first-visit order, with every visit index
  std::vector<Simplex> order;
  std::map<Simplex, std::vector<std::size_t>> labels;
  for (std::size_t v = 0; v < visits; ++v) {
    auto [it, fresh] = labels.try_emplace(p.simplices[v]);
    if (fresh) order.push_back(p.simplices[v]);
    it->second.push_back(v);
  }

  auto vertices = [](const Simplex& s) {
    const double x = 2.0 * s.sigma[0], y = 2.0 * s.sigma[1];
    return std::array<std::pair<double, double>, 3>{
        {{x, y}, {x + s.eta, y}, {x, y + s.eta}}};
  };

  double extent = 1.0;
  for (const auto& s : order)
    for (auto [x, y] : vertices(s)) extent = std::max({extent, std::abs(x), std::abs(y)});
  extent += opt.margin;
  const double size = 2.0 * extent * opt.unit;
  const double c = size / 2.0;
  auto px = [&](double x) { return c + x * opt.unit; };
  auto py = [&](double y) { return c - y * opt.unit; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <g stroke=\"#888\" stroke-width=\"1\">\n";
  os << "    <line x1=\"" << px(-extent) << "\" y1=\"" << py(0) << "\" x2=\"" << px(extent) << "\" y2=\"" << py(0)
     << "\"/>\n";
  os << "    <line x1=\"" << px(0) << "\" y1=\"" << py(-extent) << "\" x2=\"" << px(0) << "\" y2=\"" << py(extent)
     << "\"/>\n";
  os << "  </g>\n";
  os << "  <text x=\"" << px(extent) - 20 << "\" y=\"" << py(0) - 6 << "\" font-size=\"14\">σ1</text>\n";
  os << "  <text x=\"" << px(0) + 6 << "\" y=\"" << py(extent) + 16 << "\" font-size=\"14\">σ2</text>\n";

  os << "  <g fill=\"#cfe3f7\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& s : order) {
    os << "    <polygon data-simplex=\"" << s.to_string() << "\" points=\"";
    bool first = true;
    for (auto [x, y] : vertices(s)) {
      os << (first ? "" : " ") << px(x) << ',' << py(y);
      first = false;
    }
    os << "\"/>\n";
  }
  os << "  </g>\n";

  // visiting order through the centroids
  os << "  <polyline fill=\"none\" stroke=\"#d33\" stroke-dasharray=\"4 3\" points=\"";
  for (std::size_t v = 0; v < p.simplices.size(); ++v) {
    const auto vs = vertices(p.simplices[v]);
    const double cx = (vs[0].first + vs[1].first + vs[2].first) / 3.0;
    const double cy = (vs[0].second + vs[1].second + vs[2].second) / 3.0;
    os << (v ? " " : "") << px(cx) << ',' << py(cy);
  }
  os << "\"/>\n";

  os << "  <g font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">\n";
  for (const auto& s : order) {
    const auto vs = vertices(s);
    const double cx = (vs[0].first + vs[1].first + vs[2].first) / 3.0;
    const double cy = (vs[0].second + vs[1].second + vs[2].second) / 3.0;
    std::string text;
    for (auto v : labels[s]) text += (text.empty() ? "B" : ",B") + std::to_string(v);
    os << "    <text x=\"" << px(cx) << "\" y=\"" << py(cy) << "\">" << text << "</text>\n";
  }
  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace a1weyl
