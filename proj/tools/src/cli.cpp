#include "a1weyl_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "a1weyl/error.hpp"
#include "a1weyl/geometry.hpp"
#include "a1weyl/hyperbolic.hpp"
#include "a1weyl/io.hpp"
#include "a1weyl/presentation.hpp"
#include "a1weyl/random.hpp"

namespace a1weyl::cli {

namespace {

struct Session {
  std::string config;
  std::string group = "W";
  std::string format = "text";
  std::uint64_t seed = 0;

  bool json() const { return format == "json"; }
  TargetGroup target() const { return parse_target(group); }
};

ReflectableBase load_base(const Session& s) {
  if (s.config.empty()) throw ConfigError("--config is required for this command");
  return ReflectableBase(load_semilattice(s.config));
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

Word read_word(const ReflectableBase& b, const std::vector<std::string>& tokens) {
  Word w = parse_word(join(tokens), b);
  require_in_rx(b.semilattice(), w);
  return w;
}

std::vector<std::size_t> pi0_indices(const ReflectableBase& b, const Word& w) {
  std::vector<std::size_t> out;
  for (const auto& a : w.letters) {
    auto k = b.index_of(a);
    if (!k || *k > b.rank()) throw DomainError("letter " + a.to_string() + " is not one of g0..g" + std::to_string(b.rank()));
    out.push_back(*k);
  }
  return out;
}

std::string index_text(std::span<const std::size_t> w) {
  if (w.empty()) return "(empty)";
  std::string out;
  for (auto k : w) out += (out.empty() ? "" : " ") + std::to_string(k);
  return out;
}

std::string paren(const LatticeVector& v) { return "(" + v.to_string() + ")"; }

// "λ1 -> λ1 + 2σ2"
std::string lambda_line(const HyperbolicElement& e, std::size_t j) {
  std::string out = "λ" + std::to_string(j + 1) + " -> λ" + std::to_string(j + 1);
  auto term = [&](std::int64_t c, const std::string& sym) {
    if (c == 0) return;
    out += c > 0 ? " + " : " - ";
    const auto a = c > 0 ? c : -c;
    if (a != 1) out += std::to_string(a);
    out += sym;
  };
  term(-e.s[j], "ε");
  for (std::size_t k = 0; k < e.rank(); ++k) term(-e.q[j][k], "σ" + std::to_string(k + 1));
  return out;
}

void print_element_text(std::ostream& out, const WeylElement& e) {
  out << "(" << e.eps << ", " << paren(e.t) << ")\n";
}

void print_element_text(std::ostream& out, const HyperbolicElement& e) {
  out << "eps = " << e.eps << "\n"
      << "t = " << paren(e.t) << "\n"
      << "s = " << paren(e.s) << "\n";
  for (std::size_t j = 0; j < e.rank(); ++j) out << lambda_line(e, j) << "\n";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------

int cmd_validate(const Session& s, std::ostream& out) {
  if (s.config.empty()) throw ConfigError("--config is required");
  const Semilattice sl = load_semilattice(s.config);
  const ReflectableBase b(sl);
  if (s.json()) {
    out << json{{"valid", true}, {"rank", sl.rank}, {"m", sl.m()}, {"elliptic_like", is_elliptic_like(b)}}.dump(2)
        << "\n";
  } else {
    out << "valid: rank " << sl.rank << ", m = " << sl.m() << ", elliptic-like: " << bool_text(is_elliptic_like(b))
        << "\n";
  }
  return kOk;
}

int cmd_eval(const Session& s, const std::vector<std::string>& tokens, std::ostream& out) {
  const auto b = load_base(s);
  const Word w = read_word(b, tokens);
  if (s.target() == TargetGroup::W) {
    const auto e = eval_word(w);
    const bool rel = is_relation_w(w);
    if (s.json()) {
      out << json{{"group", "W"}, {"element", e}, {"relation", rel}}.dump(2) << "\n";
    } else {
      print_element_text(out, e);
      out << "relation: " << bool_text(rel) << "\n";
    }
  } else {
    const auto e = eval_word_hyp(w);
    const bool rel = is_relation_hyp(w);
    const bool central = is_central(w);
    if (s.json()) {
      out << json{{"group", "Wt"}, {"element", e}, {"relation", rel}, {"central", central}}.dump(2) << "\n";
    } else {
      print_element_text(out, e);
      out << "relation: " << bool_text(rel) << "\n"
          << "central: " << bool_text(central) << "\n";
    }
  }
  return kOk;
}

int cmd_check(const Session& s, const std::vector<std::string>& tokens, bool reflectable, std::int64_t radius,
              std::ostream& out) {
  const auto b = load_base(s);
  const Word w = read_word(b, tokens);
  if (reflectable) {
    const auto report = check_reflectable_set(b.semilattice(), w.letters, radius);
    if (s.json()) {
      out << json(report).dump(2) << "\n";
    } else {
      out << "covered: " << bool_text(report.covered) << " (" << report.reached << " of " << report.box_roots
          << " roots within radius " << report.radius << ")\n";
      for (const auto& r : report.uncovered) out << "uncovered " << r.to_string() << "\n";
    }
    return kOk;
  }
  const bool rel_w = is_relation_w(w);
  const bool rel_h = is_relation_hyp(w);
  const std::optional<bool> central = b.rank() > 0 ? std::optional<bool>(is_central(w)) : std::nullopt;
  if (s.json()) {
    json j{{"length", w.size()}, {"relation_W", rel_w}, {"relation_Wt", rel_h}};
    j["central_Wt"] = central ? json(*central) : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "length: " << w.size() << "\n"
        << "relation in W: " << bool_text(rel_w) << "\n"
        << "relation in Wt: " << bool_text(rel_h) << "\n";
    if (central) out << "central in Wt: " << bool_text(*central) << "\n";
  }
  return kOk;
}

int cmd_alt_enum(const Session& s, std::size_t k, const std::vector<std::string>& set_tokens, std::size_t limit,
                 std::ostream& out) {
  const auto b = load_base(s);
  std::vector<Root> P = set_tokens.empty() ? b.roots() : read_word(b, set_tokens).letters;
  AlternatingEnumerator en(P, k);
  std::vector<std::vector<std::size_t>> tuples;
  bool truncated = false;
  while (auto t = en.next()) {
    if (limit && tuples.size() == limit) {
      truncated = true;
      break;
    }
    tuples.push_back(std::move(*t));
  }
  if (s.json()) {
    out << json{{"set", P}, {"k", k}, {"tuples", tuples}, {"truncated", truncated}}.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < P.size(); ++i) out << "# " << i << " = " << P[i].to_string() << "\n";
    for (const auto& t : tuples) out << index_text(t) << "\n";
    out << tuples.size() << " tuple(s)" << (truncated ? " (truncated)" : "") << "\n";
  }
  return kOk;
}

int cmd_presentation(const Session& s, std::string kind, std::size_t kmax, bool verify, std::ostream& out) {
  const auto b = load_base(s);
  if (kind.empty()) kind = s.target() == TargetGroup::W ? "spre" : "hyp";
  Presentation p;
  if (kind == "alt") {
    p = presentation_alternating(b, kmax);
  } else if (kind == "baby") {
    p = presentation_baby_w(b.rank());
  } else if (kind == "spre") {
    std::set<std::pair<std::size_t, std::size_t>> B;
    for (const auto& [pair, idx] : b_pi(b)) B.insert(pair);
    p = presentation_w_spre(b.rank(), B);
  } else {
    p = presentation_hyp(b);
  }
  std::optional<VerificationReport> report;
  if (verify) report = verify_presentation(p, s.target(), b);

  if (s.json()) {
    json j{{"presentation", p}};
    if (report) {
      j["verification"] = {{"target", to_string(report->target)}, {"checked", report->checked}, {"failed", report->failed}};
    }
    out << j.dump(2) << "\n";
  } else {
    out << "target: " << to_string(p.target) << "\n";
    out << "generators (" << p.generators.size() << "):";
    for (const auto& g : p.generators) out << " " << g;
    out << "\nrelators (" << p.relators.size() << "):\n";
    for (const auto& r : p.relators) {
      std::string line;
      for (auto g : r) line += (line.empty() ? "" : " ") + p.generators[g];
      out << "  " << line << "\n";
    }
    if (p.truncated_at) out << "truncated at length " << *p.truncated_at << "\n";
    if (report) {
      out << "verified against " << to_string(report->target) << ": " << report->checked - report->failed.size()
          << " of " << report->checked << " relators hold\n";
      for (auto i : report->failed) out << "  fails: relator " << i << "\n";
    }
  }
  return report && !report->ok() ? kCheckFailed : kOk;
}

int cmd_reduce(const Session& s, const std::vector<std::string>& tokens, bool replay, std::ostream& out) {
  const auto b = load_base(s);
  const auto letters = pi0_indices(b, read_word(b, tokens));
  const auto cert = rewrite_to_identity(b, letters);
  std::vector<std::vector<std::size_t>> trail;
  if (replay) trail = replay_certificate(b, cert);
  if (s.json()) {
    json j{{"certificate", cert}};
    j["replay"] = replay ? json("ok") : json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    out << "input: " << index_text(cert.input) << "\n";
    std::vector<std::size_t> w = cert.input;
    for (const auto& step : cert.steps) {
      w = apply_step(std::move(w), step);
      out << "[" << step.macro << "] " << to_string(step.rule) << " at " << step.position << ": " << index_text(w)
          << "\n";
    }
    out << cert.macro_count() << " macro-step(s), " << cert.steps.size() << " step(s)\n";
    if (replay) out << "replay: ok\n";
  }
  return kOk;
}

Simplex read_simplex(std::size_t rank, const std::string& sigma, int eta) {
  LatticeVector v(rank);
  if (!sigma.empty()) v = parse_root("+e:" + sigma, rank).p;
  if (eta != 1 && eta != -1) throw ParseError("--eta must be 1 or -1");
  return {v, eta};
}

void print_path_text(std::ostream& out, const Path& p) {
  for (std::size_t i = 0; i < p.simplices.size(); ++i) out << "B" << i << " " << p.simplices[i].to_string() << "\n";
}

int cmd_path(const Session& s, const std::vector<std::string>& tokens, const std::string& sigma, int eta,
             bool reduce, std::ostream& out) {
  const auto b = load_base(s);
  const Path p = path_of_word(read_word(b, tokens), read_simplex(b.rank(), sigma, eta));
  const bool loop = is_loop(p);
  std::optional<MoveTrace> trace;
  std::vector<Path> snapshots;
  if (reduce) {
    trace = reduce_loop(b, p);
    snapshots = replay_moves(b, *trace);
  }
  if (s.json()) {
    json j{{"path", p}, {"loop", loop}};
    if (trace) {
      j["moves"] = trace->moves;
      j["snapshots"] = snapshots;
    }
    out << j.dump(2) << "\n";
  } else {
    print_path_text(out, p);
    out << "loop: " << bool_text(loop) << "\n";
    if (trace) {
      std::size_t snap = 1;
      for (std::size_t i = 0; i < trace->moves.size(); ++i) {
        const auto& m = trace->moves[i];
        out << "[" << m.macro << "] " << to_string(m.kind) << " " << index_text(m.loop_letters()) << " at "
            << m.position << " based at " << m.base.to_string() << "\n";
        if (i + 1 == trace->moves.size() || trace->moves[i + 1].macro != m.macro) {
          out << "  path length " << snapshots[snap++].length() << "\n";
        }
      }
    }
  }
  return kOk;
}

int cmd_render(const Session& s, const std::vector<std::string>& tokens, const std::string& sigma, int eta,
               const std::string& file, std::ostream& out) {
  const auto b = load_base(s);
  const Path p = path_of_word(read_word(b, tokens), read_simplex(b.rank(), sigma, eta));
  const std::string svg = render_svg(p);
  std::ofstream f(file);
  if (!f || !(f << svg)) throw IoError("cannot write '" + file + "'");
  out << "wrote " << file << " (" << p.simplices.size() << " path entries)\n";
  return kOk;
}

int cmd_center(const Session& s, std::ostream& out) {
  const auto b = load_base(s);
  const auto gens = center_basis(b);
  if (s.json()) {
    json arr = json::array();
    for (const auto& g : gens) {
      arr.push_back({{"pair", {g.pair.first, g.pair.second}},
                     {"word", g.word},
                     {"power", g.power},
                     {"element", g.element}});
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& g : gens) {
      out << "z(" << g.pair.first << "," << g.pair.second << ") = " << g.word.to_string() << "  [c^" << g.power
          << "]\n";
      for (std::size_t j = 0; j < g.element.rank(); ++j) out << "  " << lambda_line(g.element, j) << "\n";
    }
    out << gens.size() << " generator(s)\n";
  }
  return kOk;
}

struct OracleMismatch {
  std::size_t index;
  std::string group;
  std::string word;
};

int cmd_oracle(const Session& s, std::size_t n, std::size_t len, std::size_t threads, std::ostream& out) {
  std::vector<Semilattice> lattices;
  if (!s.config.empty()) {
    lattices.push_back(load_semilattice(s.config));
  } else {
    for (std::size_t nu = 1; nu <= 3; ++nu) {
      lattices.push_back(Semilattice::baby(nu));
      lattices.push_back(Semilattice::toroidal(nu));
    }
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(n, 1));

  // Word i depends only on (seed, i), so the sharding cannot change results.
  std::vector<std::vector<OracleMismatch>> found(threads);
  auto work = [&](std::size_t shard) {
    for (std::size_t i = shard; i < n; i += threads) {
      std::seed_seq seq{static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32),
                        static_cast<std::uint32_t>(i)};
      Rng rng(seq);
      const auto& sl = lattices[i % lattices.size()];
      const Word w = random_word(rng, sl, len);
      if (to_matrix(eval_word(w)) != weyl_matrix_of_word(w)) found[shard].push_back({i, "W", w.to_string()});
      if (to_matrix(eval_word_hyp(w)) != matrix_of_word(w)) found[shard].push_back({i, "Wt", w.to_string()});
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& t : pool) t.join();

  std::vector<OracleMismatch> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return std::tie(a.index, a.group) < std::tie(b.index, b.group);
  });

  if (s.json()) {
    json list = json::array();
    for (const auto& m : all) list.push_back({{"index", m.index}, {"group", m.group}, {"word", m.word}});
    out << json{{"words", n}, {"mismatches", all.size()}, {"failures", list}}.dump(2) << "\n";
  } else {
    for (const auto& m : all) out << "mismatch #" << m.index << " in " << m.group << ": " << m.word << "\n";
    out << n << " words, " << all.size() << " mismatches\n";
  }
  return all.empty() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl and hyperbolic Weyl groups of type A1 affine reflection systems"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "Exit codes: 0 ok, 2 invalid configuration, 3 I/O error, 4 parse error,\n"
      "5 outside the domain (e.g. a letter not in R^x), 6 self-check failed.\n"
      "Words: whitespace-separated tokens g<k> (k-th base root) or (+|-)e:c1,...,cn.");

  Session s;
  app.add_option("--config", s.config, "Semilattice JSON {\"rank\":n,\"cosets\":[[...],...]}");
  app.add_option("--group", s.group, "Target group")->check(CLI::IsMember({"W", "Wt"}));
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", s.seed, "Random seed");

  std::function<int()> action;
  std::vector<std::string> word;

  auto* validate = app.add_subcommand("validate", "Check a semilattice configuration");
  validate->callback([&] { action = [&] { return cmd_validate(s, out); }; });

  auto* eval = app.add_subcommand("eval", "Evaluate a word to its canonical form");
  eval->add_option("word", word, "Word tokens")->required();
  eval->callback([&] { action = [&] { return cmd_eval(s, word, out); }; });

  bool reflectable = false;
  std::int64_t radius = kDefaultReflectableRadius;
  auto* check = app.add_subcommand("check", "Relation and centrality tests for a word");
  check->add_option("word", word, "Word tokens")->required();
  check->add_flag("--reflectable", reflectable, "Treat the letters as a set and test reflectability");
  check->add_option("--radius", radius, "Box radius for --reflectable")->check(CLI::PositiveNumber);
  check->callback([&] { action = [&] { return cmd_check(s, word, reflectable, radius, out); }; });

  std::size_t k = 0, limit = 0;
  std::vector<std::string> set_tokens;
  auto* alt = app.add_subcommand("alt-enum", "Enumerate alternating k-tuples");
  alt->add_option("-k,--k", k, "Tuple length")->required();
  alt->add_option("--set", set_tokens, "Root set (defaults to the base)");
  alt->add_option("--limit", limit, "Stop after this many tuples (0 = all)");
  alt->callback([&] { action = [&] { return cmd_alt_enum(s, k, set_tokens, limit, out); }; });

  std::string kind;
  std::size_t kmax = 4;
  bool verify = false;
  auto* pres = app.add_subcommand("presentation", "Emit a presentation, optionally verifying its relators");
  pres->add_option("--kind", kind, "alt, baby, spre or hyp (default: spre for W, hyp for Wt)")
      ->check(CLI::IsMember({"alt", "baby", "spre", "hyp"}));
  pres->add_option("--kmax", kmax, "Longest relator for --kind alt");
  pres->add_flag("--verify", verify, "Evaluate every relator in --group");
  pres->callback([&] { action = [&] { return cmd_presentation(s, kind, kmax, verify, out); }; });

  bool no_replay = false;
  auto* reduce = app.add_subcommand("reduce", "Rewrite a relation over g0..gn to the empty word");
  reduce->add_option("word", word, "Word tokens")->required();
  reduce->add_flag("--no-replay", no_replay, "Skip replaying the certificate");
  reduce->callback([&] { action = [&] { return cmd_reduce(s, word, !no_replay, out); }; });

  std::string sigma;
  int eta = 1;
  bool reduce_path = false;
  auto* path = app.add_subcommand("path", "Simplex path of a word");
  path->add_option("word", word, "Word tokens")->required();
  path->add_option("--sigma", sigma, "Base simplex lattice point c1,...,cn");
  path->add_option("--eta", eta, "Base simplex orientation (1 or -1)");
  path->add_flag("--reduce", reduce_path, "Reduce the loop by elementary moves");
  path->callback([&] { action = [&] { return cmd_path(s, word, sigma, eta, reduce_path, out); }; });

  std::string file;
  auto* render = app.add_subcommand("render-svg", "Draw the path of a rank-2 word");
  render->add_option("word", word, "Word tokens")->required();
  render->add_option("--sigma", sigma, "Base simplex lattice point c1,c2");
  render->add_option("--eta", eta, "Base simplex orientation (1 or -1)");
  render->add_option("--out", file, "SVG file")->required();
  render->callback([&] { action = [&] { return cmd_render(s, word, sigma, eta, file, out); }; });

  auto* center = app.add_subcommand("center-basis", "Generators of the center of Wt");
  center->callback([&] { action = [&] { return cmd_center(s, out); }; });

  std::size_t n = 1000, len = 16, threads = 0;
  auto* oracle = app.add_subcommand("oracle-compare", "Compare canonical forms with matrix products");
  oracle->add_option("--n", n, "Number of random words");
  oracle->add_option("--len", len, "Maximum word length");
  oracle->add_option("--threads", threads, "Worker threads (0 = hardware)");
  oracle->callback([&] { action = [&] { return cmd_oracle(s, n, len, threads, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    return action();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace a1weyl::cli
