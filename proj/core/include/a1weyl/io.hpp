#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "a1weyl/geometry.hpp"
#include "a1weyl/hyperbolic.hpp"
#include "a1weyl/lattice.hpp"
#include "a1weyl/matrix.hpp"
#include "a1weyl/presentation.hpp"
#include "a1weyl/weyl.hpp"

namespace a1weyl {

using json = nlohmann::json;

/// Whitespace-separated tokens, each "g<k>" (the k-th base root) or
/// "(+|-)e:c1,...,cν". Throws ParseError.
Word parse_word(std::string_view text, const ReflectableBase& b);
/// A single explicit root token.
Root parse_root(std::string_view token, std::size_t rank);

/// {"rank": ν, "cosets": [[0,...], ...]}. Shape errors throw ConfigError;
/// the semilattice invariants are not checked here.
Semilattice semilattice_from_json(const json& j);
json semilattice_to_json(const Semilattice& s);

/// Reads and validates a configuration file. IoError when the file cannot be
/// read, ConfigError for anything wrong with its content.
Semilattice load_semilattice(const std::filesystem::path& path);

void to_json(json& j, const LatticeVector& v);
void from_json(const json& j, LatticeVector& v);
void to_json(json& j, const Root& r);
void from_json(const json& j, Root& r);
void to_json(json& j, const Word& w);
void from_json(const json& j, Word& w);
void to_json(json& j, const WeylElement& e);
void from_json(const json& j, WeylElement& e);
void to_json(json& j, const HyperbolicElement& e);
void from_json(const json& j, HyperbolicElement& e);
void to_json(json& j, const IntMatrix& m);
void from_json(const json& j, IntMatrix& m);
void to_json(json& j, const Presentation& p);
void from_json(const json& j, Presentation& p);
void to_json(json& j, const RewriteStep& s);
void from_json(const json& j, RewriteStep& s);
void to_json(json& j, const RewriteCertificate& c);
void from_json(const json& j, RewriteCertificate& c);
void to_json(json& j, const Simplex& s);
void from_json(const json& j, Simplex& s);
void to_json(json& j, const Path& p);
void from_json(const json& j, Path& p);
void to_json(json& j, const Move& m);
void from_json(const json& j, Move& m);
void to_json(json& j, const MoveTrace& t);
void from_json(const json& j, MoveTrace& t);
void to_json(json& j, const ReflectableReport& r);

/// Parses JSON text, turning library exceptions into ParseError.
json parse_json(std::string_view text);

}  // namespace a1weyl
