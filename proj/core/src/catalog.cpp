#include "subgrowth/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace subgrowth::groups {

namespace {

// Z^ell: zeta(s) zeta(s-1) ... zeta(s-ell+1); Heis(Z): Smith's formula
// zeta(s) zeta(s-1) zeta(2s-2) zeta(2s-3) / zeta(3s-3).
const char* kBuiltinCatalog = R"({
  "version": 1,
  "groups": [
    {
      "name": "Z1",
      "numer": [[1, 0]],
      "denom": [],
      "alpha": "1",
      "m": 1,
      "gamma": {"rational": "1", "zetas": []},
      "presentation": "infinite_cyclic",
      "rank": 1,
      "linear_growth": false,
      "hirsch_ab": 1
    },
    {
      "name": "Z2",
      "numer": [[1, 0], [1, 1]],
      "denom": [],
      "alpha": "2",
      "m": 1,
      "gamma": {"rational": "1", "zetas": [[2, 1]]},
      "presentation": "free_abelian",
      "rank": 2,
      "linear_growth": true,
      "hirsch_ab": 2
    },
    {
      "name": "Z3",
      "numer": [[1, 0], [1, 1], [1, 2]],
      "denom": [],
      "alpha": "3",
      "m": 1,
      "gamma": {"rational": "1", "zetas": [[2, 1], [3, 1]]},
      "presentation": "free_abelian",
      "rank": 3,
      "linear_growth": true,
      "hirsch_ab": 3
    },
    {
      "name": "Z4",
      "numer": [[1, 0], [1, 1], [1, 2], [1, 3]],
      "denom": [],
      "alpha": "4",
      "m": 1,
      "gamma": {"rational": "1", "zetas": [[2, 1], [3, 1], [4, 1]]},
      "presentation": "free_abelian",
      "rank": 4,
      "linear_growth": true,
      "hirsch_ab": 4
    },
    {
      "name": "heis",
      "numer": [[1, 0], [1, 1], [2, 2], [2, 3]],
      "denom": [[3, 3]],
      "alpha": "2",
      "m": 2,
      "gamma": {"rational": "1/2", "zetas": [[2, 2], [3, -1]]},
      "presentation": "heisenberg",
      "rank": 2,
      "linear_growth": true,
      "hirsch_ab": 2
    }
  ]
})";

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::runtime_error("catalog: bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

Presentation parse_presentation(const std::string& s) {
  if (s == "free_abelian") return Presentation::FreeAbelian;
  if (s == "heisenberg") return Presentation::Heisenberg;
  if (s == "infinite_cyclic") return Presentation::InfiniteCyclic;
  throw std::runtime_error("catalog: unknown presentation '" + s + "'");
}

std::vector<dirichlet::ZetaFactor> parse_factors(const nlohmann::json& arr) {
  std::vector<dirichlet::ZetaFactor> out;
  for (const auto& pair : arr) {
    dirichlet::ZetaFactor f;
    f.scale = pair.at(0).get<unsigned>();
    f.shift = pair.at(1).get<unsigned>();
    out.push_back(f);
  }
  return out;
}

}  // namespace

Catalog Catalog::parse(const std::string& json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text);
  Catalog cat;
  cat.version_ = doc.at("version").get<int>();
  for (const auto& g : doc.at("groups")) {
    GroupSpec spec;
    spec.name = g.at("name").get<std::string>();
    spec.zeta_numer = parse_factors(g.at("numer"));
    spec.zeta_denom = parse_factors(g.at("denom"));
    spec.alpha = parse_rational(g.at("alpha").get<std::string>());
    spec.pole_order = g.at("m").get<int>();
    spec.gamma.rational_factor = parse_rational(g.at("gamma").at("rational").get<std::string>());
    for (const auto& zf : g.at("gamma").at("zetas"))
      spec.gamma.zeta_factors.emplace_back(zf.at(0).get<int>(), zf.at(1).get<int>());
    spec.presentation = parse_presentation(g.at("presentation").get<std::string>());
    spec.rank = g.value("rank", 0);
    spec.linear_growth = g.at("linear_growth").get<bool>();
    spec.hirsch_ab = g.at("hirsch_ab").get<int>();
    spec.validate();
    cat.specs_.push_back(std::move(spec));
  }
  return cat;
}

Catalog Catalog::builtin() { return parse(kBuiltinCatalog); }

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("catalog: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const GroupSpec& Catalog::get(const std::string& name) const {
  for (const auto& s : specs_)
    if (s.name == name) return s;
  throw std::invalid_argument("unknown group '" + name + "'");
}

bool Catalog::contains(const std::string& name) const {
  for (const auto& s : specs_)
    if (s.name == name) return true;
  return false;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& s : specs_) out.push_back(s.name);
  return out;
}

}  // namespace subgrowth::groups
