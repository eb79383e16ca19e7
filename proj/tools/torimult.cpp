// torimult: exact toric computations of valuations, pullbacks, relative
// canonical divisors, multiplier/adjoint ideals, thresholds and singularity
// classifications on affine normal toric varieties. All arithmetic is exact;
// results are emitted as JSON with rationals rendered "p/q".

#include "torimult/problem.hpp"
#include "torimult/singularity.hpp"
#include "torimult/surface.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

using namespace torimult;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string input;
  bool timing = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IO", "cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NVec parse_w(const std::string& s, size_t rank) {
  std::vector<Int> e;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) e.emplace_back(tok);
  if (e.size() != rank) throw Error("BAD_W", "expected " + std::to_string(rank) + " coordinates");
  return NVec{e};
}

ordered_json vec_json(const std::vector<Int>& e) {
  ordered_json a = ordered_json::array();
  for (const auto& x : e) a.push_back(std::stoll(x.get_str()));
  return a;
}

ordered_json rat_list_json(const std::vector<Rat>& rs) {
  ordered_json a = ordered_json::array();
  for (const auto& r : rs) a.push_back(r.str());
  return a;
}

ordered_json gens_json(const MonomialFractionalIdeal& I) {
  ordered_json a = ordered_json::array();
  for (const auto& g : I.gens()) a.push_back(vec_json(g.e));
  return a;
}

ordered_json fan_json(const FanRefinement& f) {
  ordered_json j;
  ordered_json rays = ordered_json::array();
  for (const auto& r : f.rays()) rays.push_back(vec_json(r.e));
  j["rays"] = rays;
  ordered_json cones = ordered_json::array();
  for (const auto& c : f.max_cones()) {
    ordered_json ids = ordered_json::array();
    for (size_t i : c) ids.push_back(i);
    cones.push_back(ids);
  }
  j["cones"] = cones;
  ordered_json exc = ordered_json::array();
  for (size_t i : f.exceptional_rays()) exc.push_back(i);
  j["exceptional_rays"] = exc;
  return j;
}

// The command handlers below fill `result` and return the exit code.
int run_command(const std::string& cmd, const Options& opt, CLI::App* sub, ordered_json& result) {
  auto t0 = std::chrono::steady_clock::now();
  ProblemDocument doc = parse_problem(read_file(opt.input));
  const auto& X = doc.X;
  result["command"] = cmd;
  result["input"] = opt.input;

  if (cmd == "val") {
    std::string divisor = sub->get_option("--divisor")->as<std::string>();
    std::string ideal = sub->get_option("--ideal")->as<std::string>();
    std::string mode = sub->get_option("--mode")->as<std::string>();
    NVec w = parse_w(sub->get_option("--w")->as<std::string>(), X.rank());
    long q = sub->get_option("--q")->as<long>();
    if (q < 1) throw Error("BAD_ARGS", "--q must be a positive integer");
    DivisorialValuation v{primitive(w), Int(q)};
    result["w"] = vec_json(v.w.e);
    result["q"] = q;
    if (!divisor.empty() && !ideal.empty())
      throw Error("BAD_ARGS", "pass exactly one of --divisor/--ideal");
    if (!divisor.empty()) {
      const auto& D = doc.divisor(divisor);
      Rat value = (mode == "natural") ? nat_val(X, v, D) : limit_val(X, v, D);
      result["mode"] = mode;
      result["value"] = value.str();
    } else if (!ideal.empty()) {
      result["value"] = val_ideal(v, doc.ideal(ideal)).str();
    } else {
      throw Error("BAD_ARGS", "pass exactly one of --divisor/--ideal");
    }
  } else if (cmd == "pullback") {
    std::string divisor = sub->get_option("--divisor")->as<std::string>();
    std::string mode = sub->get_option("--mode")->as<std::string>();
    const auto& D = doc.divisor(divisor);
    auto f = resolve(FanRefinement::identity(X));
    TWeilDivisor out;
    unsigned threads = 1;
    if (const char* env = std::getenv("TORIMULT_THREADS")) {
      long t = std::strtol(env, nullptr, 10);
      if (t > 1) threads = static_cast<unsigned>(t);
    }
    if (threads <= 1 || f.ray_count() < 2) {
      out = (mode == "natural") ? nat_pullback(f, D) : pullback(f, D);
    } else {
      // per-ray jobs on fresh polyhedra; the library functions are pure
      out = TWeilDivisor(f.ray_count());
      std::vector<std::future<Rat>> jobs;
      for (size_t i = 0; i < f.ray_count(); ++i)
        jobs.push_back(std::async(std::launch::async, [&, i] {
          auto P = section_polyhedron(X, D);
          return (mode == "natural") ? P.ilp_min(f.rays()[i]).value : P.lp_min(f.rays()[i]).value;
        }));
      for (size_t i = 0; i < f.ray_count(); ++i) out.c[i] = jobs[i].get();
    }
    result["mode"] = mode;
    result["fan"] = fan_json(f);
    ordered_json table = ordered_json::array();
    for (size_t i = 0; i < f.ray_count(); ++i)
      table.push_back(ordered_json{{"ray", vec_json(f.rays()[i].e)}, {"coeff", out.c[i].str()}});
    result["coefficients"] = table;
  } else if (cmd == "relcan") {
    std::string kind = sub->get_option("--kind")->as<std::string>();
    auto f = resolve(FanRefinement::identity(X));
    TWeilDivisor out;
    if (kind == "m") {
      long m = sub->get_option("--m")->as<long>();
      if (m < 1) throw Error("BAD_M", "--m must be a positive integer");
      out = limiting_relcan(f, Int(m));
      result["m"] = m;
    } else if (kind == "plus") {
      out = relcan(f);
    } else if (kind == "minus") {
      out = relcan_minus(f);
    } else if (kind == "delta") {
      std::string bname = sub->get_option("--boundary")->as<std::string>();
      out = log_relcan(f, doc.boundary(bname));
      result["boundary"] = bname;
    } else {
      throw Error("BAD_ARGS", "--kind must be m|plus|minus|delta");
    }
    result["kind"] = kind;
    result["fan"] = fan_json(f);
    ordered_json table = ordered_json::array();
    for (size_t i = 0; i < f.ray_count(); ++i)
      table.push_back(ordered_json{{"ray", vec_json(f.rays()[i].e)}, {"coeff", out.c[i].str()}});
    result["coefficients"] = table;
  } else if (cmd == "mult") {
    std::string pname = sub->get_option("--pair")->as<std::string>();
    auto P = doc.pair(pname);
    auto S = stabilize(P);
    auto J = mult_ideal_at(S, Rat(1));
    result["pair"] = pname;
    result["generators"] = gens_json(J);
    ordered_json cert;
    cert["m_star"] = std::stoll(S.cert.m_star.get_str());
    ordered_json verts = ordered_json::array();
    ordered_json dens = ordered_json::array();
    for (const auto& v : S.cert.p1_vertices) {
      verts.push_back(rat_list_json(v.e));
      Int den = 1;
      for (const auto& x : v.e) den = lcm(den, x.den());
      dens.push_back(std::stoll(den.get_str()));
    }
    cert["p1_vertices"] = verts;
    cert["vertex_denominators"] = dens;
    ordered_json rays = ordered_json::array();
    for (const auto& r : S.fan.rays()) rays.push_back(vec_json(r.e));
    cert["resolution_rays"] = rays;
    result["certificate"] = cert;
  } else if (cmd == "lct") {
    std::string pname = sub->get_option("--pair")->as<std::string>();
    auto t = lct(doc.pair(pname));
    result["pair"] = pname;
    result["value"] = t ? ordered_json(t->str()) : ordered_json("infinity");
  } else if (cmd == "jumping") {
    std::string pname = sub->get_option("--pair")->as<std::string>();
    auto tmax = Rat::parse(sub->get_option("--t-max")->as<std::string>());
    if (!tmax) throw Error("BAD_ARGS", "--t-max must be a rational p/q");
    auto js = jumping_numbers(doc.pair(pname), *tmax);
    result["pair"] = pname;
    result["t_max"] = tmax->str();
    result["values"] = rat_list_json(js);
  } else if (cmd == "asym") {
    std::string divisor = sub->get_option("--divisor")->as<std::string>();
    auto c = Rat::parse(sub->get_option("--c")->as<std::string>());
    if (!c) throw Error("BAD_ARGS", "--c must be a rational p/q");
    auto J = asymptotic_mult_ideal(X, doc.divisor(divisor), *c);
    result["divisor"] = divisor;
    result["c"] = c->str();
    result["generators"] = gens_json(J);
  } else if (cmd == "adjoint") {
    std::string pname = sub->get_option("--pair")->as<std::string>();
    std::string hname = sub->get_option("--h")->as<std::string>();
    auto J = adjoint_ideal(doc.pair(pname), doc.divisor(hname));
    result["pair"] = pname;
    result["h"] = hname;
    result["generators"] = gens_json(J);
  } else if (cmd == "classify") {
    std::string pname = sub->get_option("--pair")->as<std::string>();
    auto P = doc.pair(pname);
    auto cl = classify_log(P);
    auto cc = classify_can(P);
    result["pair"] = pname;
    result["log_level"] = to_string(cl.log_level);
    result["can_level"] = to_string(cc.can_level);
    auto witnesses = [](const std::vector<Witness>& ws) {
      ordered_json a = ordered_json::array();
      for (const auto& w : ws)
        a.push_back(ordered_json{{"w", vec_json(w.w.e)}, {"value", w.value.str()}});
      return a;
    };
    result["log_witnesses"] = witnesses(cl.log_witnesses);
    result["can_witnesses"] = witnesses(cc.can_witnesses);
  } else if (cmd == "resolve") {
    auto f = resolve(FanRefinement::identity(X));
    result["fan"] = fan_json(f);
  } else {
    throw Error("BAD_ARGS", "unknown subcommand " + cmd);
  }

  if (opt.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    result["timing_ms"] = ms;
  }
  return 0;
}

int run_examples(CLI::App* sub) {
  std::string dir = sub->get_option("--build")->as<std::string>();
  if (dir.empty()) {
    for (const auto& n : gallery_names()) std::cout << n << "\n";
    return 0;
  }
  for (const auto& n : gallery_names()) {
    std::string path = dir + "/" + n + ".json";
    std::ofstream out(path);
    if (!out) throw Error("IO", "cannot write '" + path + "'");
    out << gallery_json(n);
    std::cout << path << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toric multiplier-ideal calculator"};
  app.set_help_flag("--help", "print help"); // frees -h for the adjoint --h flag
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "problem JSON file")->required();
    sub->add_flag("--timing", opt.timing, "include timing_ms in the output");
  };

  auto* val = app.add_subcommand("val", "valuation of a divisor or ideal along w");
  add_common(val);
  val->add_option("--divisor", "divisor name");
  val->add_option("--ideal", "ideal name");
  val->add_option("--w", "valuation vector, comma-separated")->required();
  val->add_option("--q", "positive multiplier")->default_val(1l);
  val->add_option("--mode", "natural|limit")->default_val(std::string("limit"));

  auto* pb = app.add_subcommand("pullback", "per-ray pullback table on the resolved fan");
  add_common(pb);
  pb->add_option("--divisor")->required();
  pb->add_option("--mode", "natural|limit")->default_val(std::string("limit"));

  auto* rc = app.add_subcommand("relcan", "relative canonical divisors on the resolved fan");
  add_common(rc);
  rc->add_option("--kind", "m|plus|minus|delta")->required();
  rc->add_option("--m")->default_val(1l);
  rc->add_option("--boundary");

  auto* mu = app.add_subcommand("mult", "multiplier ideal with stabilization certificate");
  add_common(mu);
  mu->add_option("--pair")->required();

  auto* lc = app.add_subcommand("lct", "log canonical threshold");
  add_common(lc);
  lc->add_option("--pair")->required();

  auto* ju = app.add_subcommand("jumping", "jumping numbers in (0, t-max]");
  add_common(ju);
  ju->add_option("--pair")->required();
  ju->add_option("--t-max")->required();

  auto* as = app.add_subcommand("asym", "asymptotic multiplier ideal");
  add_common(as);
  as->add_option("--divisor")->required();
  as->add_option("--c")->required();

  auto* ad = app.add_subcommand("adjoint", "adjoint ideal along a Cartier divisor");
  add_common(ad);
  ad->add_option("--pair")->required();
  ad->add_option("--h")->required();

  auto* cf = app.add_subcommand("classify", "log and canonical classification ladders");
  add_common(cf);
  cf->add_option("--pair")->required();

  auto* re = app.add_subcommand("resolve", "smooth refinement of sigma");
  add_common(re);

  auto* ex = app.add_subcommand("examples", "list or build the model gallery");
  ex->add_option("--build", "directory to write the gallery JSON files into");

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();

  try {
    if (sub->get_name() == "examples") return run_examples(sub);

    // honor TORIMULT_TIMEOUT_SECS: run the command on a worker and abandon it
    // if the deadline passes
    long timeout = 0;
    if (const char* env = std::getenv("TORIMULT_TIMEOUT_SECS")) timeout = std::strtol(env, nullptr, 10);
    ordered_json result;
    if (timeout > 0) {
      auto fut = std::async(std::launch::async, [&] {
        ordered_json r;
        int code = run_command(sub->get_name(), opt, sub, r);
        return std::make_pair(code, r);
      });
      if (fut.wait_for(std::chrono::seconds(timeout)) != std::future_status::ready) {
        std::cerr << "TIMEOUT: exceeded TORIMULT_TIMEOUT_SECS=" << timeout << "\n";
        std::_Exit(2);
      }
      auto [code, r] = fut.get();
      result = r;
      if (code != 0) return code;
    } else {
      int code = run_command(sub->get_name(), opt, sub, result);
      if (code != 0) return code;
    }
    std::cout << result.dump(2) << "\n";
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line << ", column " << e.column << ": " << e.message
              << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
