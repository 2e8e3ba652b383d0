#include "a1weyl/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "a1weyl/error.hpp"

namespace a1weyl {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (first == last || ec != std::errc() || ptr != last) {
    throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Root parse_root(std::string_view tok, std::size_t rank) {
  if (tok.size() < 3 || (tok[0] != '+' && tok[0] != '-') || tok[1] != 'e' || tok[2] != ':') {
    throw ParseError("bad root token '" + std::string(tok) + "'");
  }
  std::vector<std::int64_t> c;
  std::string_view rest = tok.substr(3);
  if (!rest.empty()) {
    std::size_t start = 0;
    while (true) {
      auto comma = rest.find(',', start);
      c.push_back(parse_int(rest.substr(start, comma - start), tok));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (c.size() != rank) {
    throw ParseError("root '" + std::string(tok) + "' has " + std::to_string(c.size()) + " coordinates, expected " +
                     std::to_string(rank));
  }
  return Root{tok[0] == '+' ? 1 : -1, LatticeVector(std::move(c))};
}

Word parse_word(std::string_view text, const ReflectableBase& b) {
  Word w(b.rank());
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok[0] == 'g') {
      const auto k = parse_int(std::string_view(tok).substr(1), tok);
      if (k < 0 || static_cast<std::size_t>(k) >= b.size()) {
        throw ParseError("'" + tok + "': base has " + std::to_string(b.size()) + " roots");
      }
      w.letters.push_back(b[static_cast<std::size_t>(k)]);
    } else {
      w.letters.push_back(parse_root(tok, b.rank()));
    }
  }
  return w;
}

Semilattice semilattice_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  if (!j.contains("rank") || !j["rank"].is_number_integer() || j["rank"].get<std::int64_t>() < 0) {
    throw ConfigError("'rank' must be a non-negative integer");
  }
  if (!j.contains("cosets") || !j["cosets"].is_array()) throw ConfigError("'cosets' must be an array");
  Semilattice s;
  s.rank = j["rank"].get<std::size_t>();
  for (const auto& c : j["cosets"]) {
    if (!c.is_array()) throw ConfigError("each coset must be an array of integers");
    std::vector<std::int64_t> v;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw ConfigError("coset entries must be integers");
      v.push_back(x.get<std::int64_t>());
    }
    s.cosets.emplace_back(std::move(v));
  }
  return s;
}

json semilattice_to_json(const Semilattice& s) {
  json cosets = json::array();
  for (const auto& c : s.cosets) cosets.push_back(c);
  return {{"rank", s.rank}, {"cosets", cosets}};
}

Semilattice load_semilattice(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ConfigError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  Semilattice s = semilattice_from_json(j);
  require_valid(s);
  return s;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

void to_json(json& j, const LatticeVector& v) { j = std::vector<std::int64_t>(v.coords().begin(), v.coords().end()); }

void from_json(const json& j, LatticeVector& v) {
  if (!j.is_array()) throw ParseError("lattice vector must be an array");
  try {
    v = LatticeVector(j.get<std::vector<std::int64_t>>());
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

void to_json(json& j, const Root& r) { j = r.to_string(); }

void from_json(const json& j, Root& r) {
  if (!j.is_string()) throw ParseError("root must be a string");
  auto s = j.get<std::string>();
  const std::size_t rank = s.size() > 3 ? static_cast<std::size_t>(std::count(s.begin(), s.end(), ',')) + 1 : 0;
  const bool isotropic = !s.empty() && s[0] == '0';
  if (isotropic) s[0] = '+';
  r = parse_root(s, rank);
  if (isotropic) r.sign = 0;
}

void to_json(json& j, const Word& w) { j = {{"rank", w.rank}, {"letters", w.letters}}; }

void from_json(const json& j, Word& w) {
  w = Word(get_field<std::size_t>(j, "rank"), get_field<std::vector<Root>>(j, "letters"));
}

void to_json(json& j, const WeylElement& e) { j = {{"eps", e.eps}, {"t", e.t}}; }

void from_json(const json& j, WeylElement& e) {
  e.eps = get_field<int>(j, "eps");
  e.t = get_field<LatticeVector>(j, "t");
  if (e.eps != 1 && e.eps != -1) throw ParseError("eps must be 1 or -1");
}

void to_json(json& j, const HyperbolicElement& e) {
  j = {{"eps", e.eps}, {"t", e.t}, {"s", e.s}, {"q", e.q}};
}

void from_json(const json& j, HyperbolicElement& e) {
  e.eps = get_field<int>(j, "eps");
  e.t = get_field<LatticeVector>(j, "t");
  e.s = get_field<LatticeVector>(j, "s");
  e.q = get_field<std::vector<LatticeVector>>(j, "q");
  if (e.eps != 1 && e.eps != -1) throw ParseError("eps must be 1 or -1");
  if (e.s.rank() != e.t.rank() || e.q.size() != e.t.rank()) throw ParseError("inconsistent ranks in element");
  for (const auto& row : e.q)
    if (row.rank() != e.t.rank()) throw ParseError("inconsistent ranks in element");
}

void to_json(json& j, const IntMatrix& m) { j = m.rows(); }

void from_json(const json& j, IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> rows;
  try {
    rows = j.get<std::vector<std::vector<std::int64_t>>>();
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  m = IntMatrix(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw ParseError("matrix must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
}

void to_json(json& j, const Presentation& p) {
  j = {{"generators", p.generators},
       {"relators", p.relators},
       {"target", to_string(p.target)},
       {"truncated_at", p.truncated_at ? json(*p.truncated_at) : json(nullptr)}};
}

void from_json(const json& j, Presentation& p) {
  p.generators = get_field<std::vector<std::string>>(j, "generators");
  p.relators = get_field<std::vector<std::vector<std::size_t>>>(j, "relators");
  p.target = parse_target(get_field<std::string>(j, "target"));
  const auto& t = j.contains("truncated_at") ? j["truncated_at"] : json(nullptr);
  if (t.is_null()) {
    p.truncated_at.reset();
  } else {
    p.truncated_at = get_field<std::size_t>(j, "truncated_at");
  }
  for (const auto& r : p.relators)
    for (auto g : r)
      if (g >= p.generators.size()) throw ParseError("relator refers to an unknown generator");
}

void to_json(json& j, const RewriteStep& s) {
  j = {{"position", s.position}, {"rule", to_string(s.rule)}, {"before", s.before},
       {"after", s.after},       {"letters", s.letters},        {"macro", s.macro}};
}

void from_json(const json& j, RewriteStep& s) {
  s.position = get_field<std::size_t>(j, "position");
  s.rule = parse_rule(get_field<std::string>(j, "rule"));
  s.before = get_field<std::size_t>(j, "before");
  s.after = get_field<std::size_t>(j, "after");
  s.letters = get_field<std::vector<std::size_t>>(j, "letters");
  s.macro = get_field<std::size_t>(j, "macro");
}

void to_json(json& j, const RewriteCertificate& c) {
  j = {{"input", c.input}, {"steps", c.steps}, {"final_empty", c.final_empty}};
}

void from_json(const json& j, RewriteCertificate& c) {
  c.input = get_field<std::vector<std::size_t>>(j, "input");
  c.steps = get_field<std::vector<RewriteStep>>(j, "steps");
  c.final_empty = get_field<bool>(j, "final_empty");
}

void to_json(json& j, const Simplex& s) { j = {{"sigma", s.sigma}, {"eta", s.eta}}; }

void from_json(const json& j, Simplex& s) {
  s.sigma = get_field<LatticeVector>(j, "sigma");
  s.eta = get_field<int>(j, "eta");
  if (s.eta != 1 && s.eta != -1) throw ParseError("eta must be 1 or -1");
}

void to_json(json& j, const Path& p) { j = {{"word", p.word}, {"simplices", p.simplices}}; }

void from_json(const json& j, Path& p) {
  p.word = get_field<Word>(j, "word");
  p.simplices = get_field<std::vector<Simplex>>(j, "simplices");
  if (p.simplices.size() != p.word.size() + 1) throw ParseError("path needs one simplex more than letters");
}

void to_json(json& j, const Move& m) {
  j = {{"kind", to_string(m.kind)}, {"base", m.base},   {"generators", m.generators},
       {"position", m.position},   {"macro", m.macro}};
}

void from_json(const json& j, Move& m) {
  const auto kind = get_field<std::string>(j, "kind");
  if (kind == "insert") {
    m.kind = MoveKind::Insert;
  } else if (kind == "delete") {
    m.kind = MoveKind::Delete;
  } else {
    throw ParseError("unknown move kind '" + kind + "'");
  }
  m.base = get_field<Simplex>(j, "base");
  m.generators = get_field<std::vector<std::size_t>>(j, "generators");
  m.position = get_field<std::size_t>(j, "position");
  m.macro = get_field<std::size_t>(j, "macro");
}

void to_json(json& j, const MoveTrace& t) { j = {{"start", t.start}, {"moves", t.moves}}; }

void from_json(const json& j, MoveTrace& t) {
  t.start = get_field<Path>(j, "start");
  t.moves = get_field<std::vector<Move>>(j, "moves");
}

void to_json(json& j, const ReflectableReport& r) {
  j = {{"covered", r.covered},
       {"radius", r.radius},
       {"box_roots", r.box_roots},
       {"reached", r.reached},
       {"uncovered", r.uncovered}};
}

}  // namespace a1weyl
