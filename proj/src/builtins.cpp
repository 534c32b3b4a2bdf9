#include "flipcalc/builtins.hpp"

#include <map>

namespace flipcalc::builtins {

namespace {

// Each asset carries a "note" saying where its numbers come from; the reader
// ignores keys other than "dim" and "entries".
const std::map<std::string, std::string>& assets() {
  static const std::map<std::string, std::string> kAssets = {
      {"point", R"({"note": "a single point", "dim": 0, "entries": [[0,0,1]]})"},
      {"p1", R"({"note": "projective line", "dim": 1, "entries": [[0,0,1],[1,1,1]]})"},
      {"p2", R"({"note": "projective plane", "dim": 2,
                 "entries": [[0,0,1],[1,1,1],[2,2,1]]})"},
      {"p3", R"({"note": "projective 3-space", "dim": 3,
                 "entries": [[0,0,1],[1,1,1],[2,2,1],[3,3,1]]})"},
      // Welters: h^{2,1} = 10 and rank one Picard group.
      {"quartic-double-solid", R"({"note": "double cover of P^3 branched in a quartic; Welters",
                 "dim": 3,
                 "entries": [[0,0,1],[1,1,1],[1,2,10],[2,1,10],[2,2,1],[3,3,1]]})"},
      // Welters: h^0(O) = 1, h^1(Omega^1) = 220; h^2(K) = 1 by Serre duality.
      // Only the (p,p) entries are recorded.
      {"f1-quartic-double-solid", R"({"note": "Fano surface of lines, (p,p) entries only; Welters",
                 "dim": 2, "entries": [[0,0,1],[1,1,220],[2,2,1]]})"},
      // Blowup of P^2 in 7 points.
      {"degree2-del-pezzo-surface", R"({"note": "P^2 blown up in 7 points", "dim": 2,
                 "entries": [[0,0,1],[1,1,8],[2,2,1]]})"},
      // P^2 blown up in 6 points.
      {"cubic-surface", R"({"note": "P^2 blown up in 6 points", "dim": 2,
                 "entries": [[0,0,1],[1,1,7],[2,2,1]]})"},
      // Intermediate Jacobian of dimension 5.
      {"cubic-threefold", R"({"note": "smooth cubic in P^4", "dim": 3,
                 "entries": [[0,0,1],[1,1,1],[1,2,5],[2,1,5],[2,2,1],[3,3,1]]})"},
      // Middle cohomology is that of the genus 3 curve C, shifted to (3,2).
      {"two-quadrics-5", R"({"note": "intersection of two quadrics in P^7, C of genus 3",
                 "dim": 5,
                 "entries": [[0,0,1],[1,1,1],[2,2,1],[2,3,3],[3,2,3],[3,3,1],[4,4,1],[5,5,1]]})"},
  };
  return kAssets;
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : assets()) out.push_back(name);
  return out;
}

const std::string& source(const std::string& name) {
  auto it = assets().find(name);
  if (it == assets().end()) throw DomainError("unknown builtin '" + name + "'");
  return it->second;
}

hodge::HodgeDiamond diamond(const std::string& name) {
  if (name.rfind("curve:", 0) == 0) {
    return hodge::HodgeDiamond::curve(parse_integer(name.substr(6)));
  }
  return hodge::from_json(nlohmann::json::parse(source(name))).validated();
}

}  // namespace flipcalc::builtins
