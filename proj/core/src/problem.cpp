#include "torimult/problem.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace torimult {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& msg, size_t line = 0, size_t col = 0) {
  throw ParseError{msg, line, col};
}

std::pair<size_t, size_t> offset_to_linecol(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Rat parse_rat(const ordered_json& j, const std::string& what) {
  if (!j.is_string()) fail(what + ": rationals must be strings like \"p/q\"");
  auto r = Rat::parse(j.get<std::string>());
  if (!r) fail(what + ": malformed rational '" + j.get<std::string>() + "'");
  return *r;
}

template <Lattice L>
Vec<L> parse_vec(const ordered_json& j, size_t rank, const std::string& what) {
  if (!j.is_array() || j.size() != rank)
    fail(what + ": expected an integer vector of length " + std::to_string(rank));
  Vec<L> v(rank);
  for (size_t i = 0; i < rank; ++i) {
    if (!j[i].is_number_integer()) fail(what + ": vector entries must be integers");
    v.e[i] = Int(j[i].get<long>());
  }
  return v;
}

std::vector<Rat> parse_rat_array(const ordered_json& j, size_t rank, const std::string& what) {
  if (!j.is_array() || j.size() != rank)
    fail(what + ": expected a rational array of length " + std::to_string(rank));
  std::vector<Rat> out;
  for (size_t i = 0; i < rank; ++i) out.push_back(parse_rat(j[i], what));
  return out;
}

} // namespace

const TWeilDivisor& ProblemDocument::divisor(const std::string& name) const {
  auto it = divisors.find(name);
  if (it == divisors.end()) throw Error("UNKNOWN_NAME", "no divisor named '" + name + "'");
  return it->second;
}

const MonomialFractionalIdeal& ProblemDocument::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw Error("UNKNOWN_NAME", "no ideal named '" + name + "'");
  return it->second;
}

const TWeilDivisor& ProblemDocument::boundary(const std::string& name) const {
  auto it = boundaries.find(name);
  if (it == boundaries.end()) throw Error("UNKNOWN_NAME", "no boundary named '" + name + "'");
  return it->second;
}

PairSpec ProblemDocument::pair(const std::string& name) const {
  auto it = pairs.find(name);
  if (it == pairs.end()) throw Error("UNKNOWN_NAME", "no pair named '" + name + "'");
  std::vector<PairTerm> terms;
  for (const auto& [coeff, body] : it->second) {
    if (divisors.count(body)) terms.push_back({coeff, divisors.at(body)});
    else if (ideals.count(body)) terms.push_back({coeff, ideals.at(body)});
    else throw Error("UNKNOWN_NAME", "pair body '" + body + "' is not defined");
  }
  return PairSpec(X, std::move(terms));
}

ProblemDocument parse_problem(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = offset_to_linecol(text, e.byte ? e.byte - 1 : 0);
    fail(e.what(), line, col);
  }
  if (!j.is_object()) fail("top level must be a JSON object");
  if (!j.contains("lattice_rank") || !j["lattice_rank"].is_number_integer())
    fail("missing integer field 'lattice_rank'");
  size_t rank = j["lattice_rank"].get<size_t>();
  if (rank == 0 || rank > 8) fail("lattice_rank out of range");
  if (!j.contains("cone_rays") || !j["cone_rays"].is_array() || j["cone_rays"].empty())
    fail("missing ray list 'cone_rays'");

  std::vector<NVec> declared;
  for (const auto& r : j["cone_rays"]) declared.push_back(parse_vec<Lattice::N>(r, rank, "cone_rays"));

  ProblemDocument doc;
  try {
    doc.X = AffineToricVariety(NCone(declared, rank));
  } catch (const Error& e) {
    fail(std::string("cone_rays: ") + e.what());
  }
  if (doc.X.rays().size() != declared.size())
    fail("cone_rays must list exactly the primitive extreme rays");
  // declared order -> canonical lex order
  std::vector<size_t> perm(declared.size());
  for (size_t i = 0; i < doc.X.rays().size(); ++i) {
    bool found = false;
    for (size_t k = 0; k < declared.size(); ++k)
      if (declared[k] == doc.X.rays()[i]) {
        perm[i] = k;
        found = true;
        break;
      }
    if (!found) fail("cone_rays must list exactly the primitive extreme rays");
  }
  auto permute = [&](std::vector<Rat> cs) {
    std::vector<Rat> out(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) out[i] = cs[perm[i]];
    return TWeilDivisor(out);
  };

  std::set<std::string> names;
  auto claim = [&](const std::string& n) {
    if (!names.insert(n).second) fail("duplicate name '" + n + "'");
  };

  if (j.contains("divisors")) {
    if (!j["divisors"].is_object()) fail("'divisors' must be an object");
    for (auto it = j["divisors"].begin(); it != j["divisors"].end(); ++it) {
      claim(it.key());
      doc.divisors[it.key()] = permute(parse_rat_array(it.value(), declared.size(), "divisor " + it.key()));
    }
  }
  if (j.contains("ideals")) {
    if (!j["ideals"].is_object()) fail("'ideals' must be an object");
    for (auto it = j["ideals"].begin(); it != j["ideals"].end(); ++it) {
      claim(it.key());
      if (!it.value().is_array() || it.value().empty())
        fail("ideal " + it.key() + ": expected a nonempty list of exponent vectors");
      std::vector<MVec> gens;
      for (const auto& g : it.value())
        gens.push_back(parse_vec<Lattice::M>(g, rank, "ideal " + it.key()));
      doc.ideals.emplace(it.key(), MonomialFractionalIdeal(gens, doc.X));
    }
  }
  if (j.contains("boundaries")) {
    if (!j["boundaries"].is_object()) fail("'boundaries' must be an object");
    for (auto it = j["boundaries"].begin(); it != j["boundaries"].end(); ++it) {
      claim(it.key());
      doc.boundaries[it.key()] =
          permute(parse_rat_array(it.value(), declared.size(), "boundary " + it.key()));
    }
  }
  if (j.contains("pairs")) {
    if (!j["pairs"].is_object()) fail("'pairs' must be an object");
    for (auto it = j["pairs"].begin(); it != j["pairs"].end(); ++it) {
      claim(it.key());
      if (!it.value().is_array()) fail("pair " + it.key() + ": expected a list of terms");
      std::vector<std::pair<Rat, std::string>> terms;
      for (const auto& t : it.value()) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("body"))
          fail("pair " + it.key() + ": each term needs 'coeff' and 'body'");
        Rat c = parse_rat(t["coeff"], "pair " + it.key());
        if (c.sign() < 0) fail("pair " + it.key() + ": coefficients must be nonnegative");
        if (!t["body"].is_string()) fail("pair " + it.key() + ": 'body' must be a name");
        std::string body = t["body"].get<std::string>();
        terms.emplace_back(c, body);
      }
      doc.pairs[it.key()] = std::move(terms);
    }
    // referenced names must exist
    for (const auto& [pname, terms] : doc.pairs)
      for (const auto& [c, body] : terms)
        if (!doc.divisors.count(body) && !doc.ideals.count(body))
          fail("pair " + pname + ": body '" + body + "' is not defined");
  }
  return doc;
}

std::string serialize_problem(const ProblemDocument& doc) {
  ordered_json j;
  j["lattice_rank"] = doc.X.rank();
  ordered_json rays = ordered_json::array();
  for (const auto& r : doc.X.rays()) {
    ordered_json row = ordered_json::array();
    for (const auto& x : r.e) row.push_back(std::stoll(x.get_str()));
    rays.push_back(row);
  }
  j["cone_rays"] = rays;
  auto rat_array = [](const TWeilDivisor& D) {
    ordered_json a = ordered_json::array();
    for (const auto& c : D.c) a.push_back(c.str());
    return a;
  };
  if (!doc.divisors.empty()) {
    ordered_json d = ordered_json::object();
    for (const auto& [n, D] : doc.divisors) d[n] = rat_array(D);
    j["divisors"] = d;
  }
  if (!doc.ideals.empty()) {
    ordered_json d = ordered_json::object();
    for (const auto& [n, I] : doc.ideals) {
      ordered_json gens = ordered_json::array();
      for (const auto& g : I.gens()) {
        ordered_json row = ordered_json::array();
        for (const auto& x : g.e) row.push_back(std::stoll(x.get_str()));
        gens.push_back(row);
      }
      d[n] = gens;
    }
    j["ideals"] = d;
  }
  if (!doc.pairs.empty()) {
    ordered_json d = ordered_json::object();
    for (const auto& [n, terms] : doc.pairs) {
      ordered_json list = ordered_json::array();
      for (const auto& [c, body] : terms)
        list.push_back(ordered_json{{"coeff", c.str()}, {"body", body}});
      d[n] = list;
    }
    j["pairs"] = d;
  }
  if (!doc.boundaries.empty()) {
    ordered_json d = ordered_json::object();
    for (const auto& [n, D] : doc.boundaries) d[n] = rat_array(D);
    j["boundaries"] = d;
  }
  return j.dump(2) + "\n";
}

std::vector<std::string> gallery_names() {
  return {"quadric-cone", "conifold", "nqg-cone", "cusp-plane"};
}

std::string gallery_json(const std::string& name) {
  if (name == "quadric-cone") {
    return R"({
  "lattice_rank": 2,
  "cone_rays": [[1, 0], [1, 2]],
  "divisors": {
    "K": ["-1", "-1"],
    "L": ["1", "0"],
    "M": ["0", "1"]
  },
  "ideals": {
    "max": [[0, 1], [1, 0], [2, -1]]
  },
  "pairs": {
    "L-pair": [{"coeff": "1", "body": "L"}],
    "trivial": [],
    "vertex": [{"coeff": "1", "body": "max"}]
  },
  "boundaries": {
    "half-LM": ["1/2", "1/2"]
  }
}
)";
  }
  if (name == "conifold") {
    return R"({
  "lattice_rank": 3,
  "cone_rays": [[0, 0, 1], [0, 1, 1], [1, 0, 1], [1, 1, 1]],
  "divisors": {
    "D": ["1", "0", "0", "0"],
    "K": ["-1", "-1", "-1", "-1"]
  },
  "ideals": {
    "max": [[0, 1, 0], [1, 0, 0], [-1, 0, 1], [0, -1, 1]]
  },
  "pairs": {
    "trivial": [],
    "vertex": [{"coeff": "1", "body": "max"}]
  }
}
)";
  }
  if (name == "nqg-cone") {
    return R"({
  "lattice_rank": 3,
  "cone_rays": [[0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 2, -1]],
  "divisors": {
    "A": ["1", "0", "0", "0"],
    "K": ["-1", "-1", "-1", "-1"]
  },
  "ideals": {
    "max": [[0, 1, 0], [0, 1, 1], [0, 1, 2], [1, 0, 0], [1, 0, 1]]
  },
  "pairs": {
    "trivial": [],
    "vertex54": [{"coeff": "5/4", "body": "max"}]
  }
}
)";
  }
  if (name == "cusp-plane") {
    return R"({
  "lattice_rank": 2,
  "cone_rays": [[0, 1], [1, 0]],
  "divisors": {
    "H": ["0", "1"]
  },
  "ideals": {
    "cusp-ideal": [[2, 0], [0, 3]],
    "line-ideal": [[1, 0]]
  },
  "pairs": {
    "cusp": [{"coeff": "1", "body": "cusp-ideal"}],
    "line": [{"coeff": "1", "body": "line-ideal"}]
  }
}
)";
  }
  throw Error("UNKNOWN_NAME", "no gallery model named '" + name + "'");
}

ProblemDocument gallery_model(const std::string& name) { return parse_problem(gallery_json(name)); }

} // namespace torimult
