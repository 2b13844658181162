#pragma once

// The command-line surface: compute (dim, iso, normalize, k0, act, orbit,
// clopen, burnside, sheaf) and verify (the property suites).  Output is a
// JSON report by default; --format human prints compact values.  Exit
// codes: 0 success, 1 parse error, 2 domain error, 3 a verify property
// failed, 4 a verify bound was exhausted before the property could be
// decided.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catdiv/verify.hpp"

namespace catdiv::cli {

using nlohmann::json;

inline Int parse_int(const std::string& s) { return Int(s); }

inline std::vector<Int> parse_prime_list(const std::string& s) {
  std::vector<Int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
  return out;
}

inline TorsionElement parse_fraction(const PrimeSet& S, const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return TorsionElement::make(S, parse_int(s), 1);
  return TorsionElement::make(S, parse_int(s.substr(0, slash)),
                              parse_int(s.substr(slash + 1)));
}

inline long long env_or(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  return v ? std::stoll(v) : fallback;
}

struct Options {
  std::string primes = "2,3";
  long long primes_upto = 0;
  std::string format = "json";

  PrimeSet session() const {
    if (primes_upto > 0) return PrimeSet::up_to(primes_upto);
    return PrimeSet(parse_prime_list(primes));
  }
};

inline void emit(const Options& opt, std::ostream& out, const std::string& command,
                 const json& result, const std::string& human) {
  if (opt.format == "human") {
    out << human << "\n";
    return;
  }
  out << json{{"command", command}, {"result", result}}.dump(2) << "\n";
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"categorified division of an additive category at desk scale"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--primes", opt.primes, "session primes, comma separated");
  app.add_option("--primes-upto", opt.primes_upto,
                 "use every prime up to the bound instead of --primes");
  app.add_option("--format", opt.format, "json or human")
      ->check(CLI::IsMember({"json", "human"}));

  std::string object_json, x_json, y_json, morphism_json, t_arg, point_json;
  std::string sheaf_json, source_json, target_json, chain_json, square_json;
  std::string f_json, g_json, a_json, b_json;
  long long bound = 0, m_arg = 0, n_arg = 0;
  int depth_arg = 2;
  std::size_t coset_bound = 3;

  auto* dim = app.add_subcommand("dim", "dimension of an object in the localized integers");
  dim->add_option("--object", object_json, "object JSON")->required();

  auto* iso = app.add_subcommand("iso", "decide isomorphism below a level bound");
  iso->add_option("--x", x_json)->required();
  iso->add_option("--y", y_json)->required();
  iso->add_option("--bound", bound, "level bound (default: join of the levels)");

  auto* normalize = app.add_subcommand("normalize", "minimal-level representative");
  normalize->add_option("--morphism", morphism_json)->required();

  auto* k0 = app.add_subcommand("k0", "truncated presentation of the class group");
  k0->add_option("--bound", bound, "truncation level")->required();

  auto* act_cmd = app.add_subcommand("act", "torsion action on a point");
  act_cmd->add_option("--t", t_arg, "torsion element a/b")->required();
  act_cmd->add_option("--point", point_json)->required();

  auto* orbit = app.add_subcommand("orbit", "orbit witness for two points");
  orbit->add_option("--x", x_json)->required();
  orbit->add_option("--y", y_json)->required();

  auto* clopen = app.add_subcommand("clopen", "clopen algebra operations");
  std::string clop_op;
  clopen->add_option("op", clop_op, "union|intersect|complement|member|translate|mult_image")
      ->required();
  clopen->add_option("--a", a_json);
  clopen->add_option("--b", b_json);
  clopen->add_option("--t", t_arg);
  clopen->add_option("--m", m_arg);
  clopen->add_option("--point", point_json);

  auto* burn = app.add_subcommand("burnside", "span and simplex operations");
  burn->require_subcommand(1);
  auto* bpmap = burn->add_subcommand("pmap", "block quotient map");
  bpmap->add_option("--m", m_arg)->required();
  bpmap->add_option("--n", n_arg)->required();
  auto* bjmap = burn->add_subcommand("jmap", "residue map");
  bjmap->add_option("--m", m_arg)->required();
  bjmap->add_option("--n", n_arg)->required();
  auto* bcomp = burn->add_subcommand("compose", "compose spans by fiber product");
  bcomp->add_option("--f", f_json, "first span")->required();
  bcomp->add_option("--g", g_json, "second span")->required();
  auto* bsimp = burn->add_subcommand("simplex", "triangular diagram of a chain");
  bsimp->add_option("--chain", chain_json, "[[m,n],...]")->required();
  auto* bval = burn->add_subcommand("validate", "pullback check for a square");
  bval->add_option("--square", square_json)->required();

  auto* sheaf = app.add_subcommand("sheaf", "equivariant sheaf operations");
  sheaf->require_subcommand(1);
  auto* shom = sheaf->add_subcommand("hom", "stabilized hom dimension");
  shom->add_option("--source", source_json)->required();
  shom->add_option("--target", target_json)->required();
  shom->add_option("--depth", depth_arg);
  auto* sdim = sheaf->add_subcommand("dim", "class of a sheaf");
  sdim->add_option("--sheaf", sheaf_json)->required();
  auto* scomp = sheaf->add_subcommand("compare", "localized against sheaf hom counts");
  scomp->add_option("--x", x_json)->required();
  scomp->add_option("--y", y_json)->required();
  scomp->add_option("--depth", depth_arg);
  auto* ssec = sheaf->add_subcommand("sections", "truncated section space over a clopen");
  ssec->add_option("--sheaf", sheaf_json)->required();
  ssec->add_option("--clopen", a_json)->required();
  ssec->add_option("--cosets", coset_bound);
  ssec->add_option("--depth", depth_arg);

  auto* ver = app.add_subcommand("verify", "run a property suite");
  verify::Config vcfg;
  vcfg.seed = static_cast<std::uint64_t>(env_or("CATDIV_SEED", 0));
  vcfg.depth = static_cast<int>(env_or("CATDIV_DEPTH", vcfg.depth));
  vcfg.den_bound = env_or("CATDIV_DEN_BOUND", vcfg.den_bound);
  vcfg.level_bound = env_or("CATDIV_LEVEL_BOUND", vcfg.level_bound);
  vcfg.k0_bound = env_or("CATDIV_K0_BOUND", vcfg.k0_bound);
  std::string suite;
  ver->add_option("--suite", suite, "burnside|cantor|loccat|sheaf|cross")->required();
  ver->add_option("--seed", vcfg.seed);
  ver->add_option("--control", vcfg.control, "none|lsf|skyscraper")
      ->check(CLI::IsMember({"none", "lsf", "skyscraper"}));
  ver->add_option("--depth", vcfg.depth);
  ver->add_option("--clopen-depth", vcfg.clopen_depth);
  ver->add_option("--den-bound", vcfg.den_bound);
  ver->add_option("--level-bound", vcfg.level_bound);
  ver->add_option("--dim-bound", vcfg.dim_bound);
  ver->add_option("--chain-bound", vcfg.chain_bound);
  ver->add_option("--entry-bound", vcfg.entry_bound);
  ver->add_option("--k0-bound", vcfg.k0_bound);
  ver->add_option("--orbit-cases", vcfg.orbit_cases);
  ver->add_option("--boolean-cases", vcfg.boolean_cases);
  ver->add_option("--pair-cases", vcfg.pair_cases);
  ver->add_option("--psi-cases", vcfg.psi_cases);
  ver->add_option("--normalize-cases", vcfg.normalize_cases);
  ver->add_option("--cases", vcfg.random_cases);
  ver->add_option("--item", vcfg.only, "run only the named items");

  // global options may come after a subcommand
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  std::vector<const char*> argv;
  argv.push_back("catdiv");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", e.what()}, {"kind", "parse"}}.dump() << "\n";
    return 1;
  }

  try {
    PrimeSet S = opt.session();

    if (*dim) {
      auto x = jsonio::parse_locobject(S, json::parse(object_json));
      auto d = loc_dim(x);
      emit(opt, out, "dim", jsonio::encode(d),
           d.num().str() + (d.den().is_one() ? "" : "/" + d.den().value().str()));
    } else if (*iso) {
      auto x = jsonio::parse_locobject(S, json::parse(x_json));
      auto y = jsonio::parse_locobject(S, json::parse(y_json));
      SmoothNumber b =
          bound > 0 ? SmoothNumber::make(S, bound) : lcm(x.level, y.level);
      auto w = find_iso(x, y, b);
      json res{{"found", w.has_value()}};
      if (w) res["level"] = jsonio::encode(w->level);
      emit(opt, out, "iso", res,
           w ? "isomorphic at level " + w->level.value().str() : "not isomorphic");
    } else if (*normalize) {
      auto f = jsonio::parse_locmorphism(S, json::parse(morphism_json));
      auto n = mor_normalize(f);
      emit(opt, out, "normalize", jsonio::encode(n),
           "minimal level " + n.level.value().str());
    } else if (*k0) {
      auto p = k0_presentation(S, SmoothNumber::make(S, bound));
      std::string human = p.is_infinite_cyclic()
                              ? "free abelian of rank 1, generator class 1/" +
                                    p.bound.value().str()
                              : "unexpected presentation";
      emit(opt, out, "k0", jsonio::encode(p), human);
    } else if (*act_cmd) {
      auto t = parse_fraction(S, t_arg);
      auto x = jsonio::parse_point(S, json::parse(point_json));
      auto y = act(S, t, x);
      emit(opt, out, "act", jsonio::encode(S, y), jsonio::encode(S, y).dump());
    } else if (*orbit) {
      auto x = jsonio::parse_point(S, json::parse(x_json));
      auto y = jsonio::parse_point(S, json::parse(y_json));
      auto w = same_orbit(S, x, y);
      json res{{"same_orbit", w.has_value()}};
      if (w) res["witness"] = jsonio::encode(*w);
      emit(opt, out, "orbit", res,
           w ? "witness " + std::to_string(static_cast<long long>(w->t.num)) + "/" +
                   std::to_string(static_cast<long long>(w->t.den))
             : "distinct orbits");
    } else if (*clopen) {
      json res;
      std::string human;
      if (clop_op == "union" || clop_op == "intersect") {
        auto a = jsonio::parse_clopen(S, json::parse(a_json));
        auto b = jsonio::parse_clopen(S, json::parse(b_json));
        auto r = clop_op == "union" ? clopen_union(S, a, b) : clopen_intersect(S, a, b);
        res = jsonio::encode(S, r);
      } else if (clop_op == "complement") {
        auto a = jsonio::parse_clopen(S, json::parse(a_json));
        res = jsonio::encode(S, clopen_complement(S, a));
      } else if (clop_op == "member") {
        auto a = jsonio::parse_clopen(S, json::parse(a_json));
        auto x = jsonio::parse_point(S, json::parse(point_json));
        res = json{{"member", clopen_member(S, a, x)}};
      } else if (clop_op == "translate") {
        auto a = jsonio::parse_clopen(S, json::parse(a_json));
        auto t = parse_fraction(S, t_arg);
        res = jsonio::encode(S, clopen_translate(S, t, a));
      } else if (clop_op == "mult_image") {
        res = jsonio::encode(S, clopen_mult_image(S, SmoothNumber::make(S, m_arg)));
      } else {
        throw std::invalid_argument("clopen: unknown operation " + clop_op);
      }
      emit(opt, out, "clopen " + clop_op, res, res.dump());
    } else if (*burn) {
      if (*bpmap || *bjmap) {
        auto m = SmoothNumber::make(S, m_arg);
        auto n = SmoothNumber::make(S, n_arg);
        auto r = (*bpmap) ? pmap(m, n) : jmap(m, n);
        emit(opt, out, (*bpmap) ? "burnside pmap" : "burnside jmap",
             jsonio::encode(r), jsonio::encode(r).dump());
      } else if (*bcomp) {
        auto f = jsonio::parse_span(json::parse(f_json));
        auto g = jsonio::parse_span(json::parse(g_json));
        auto c = span_compose(g, f);
        emit(opt, out, "burnside compose", jsonio::encode(c), jsonio::encode(c).dump());
      } else if (*bsimp) {
        auto chain = jsonio::parse_chain(S, json::parse(chain_json));
        auto d = simplex_diagram(chain);
        emit(opt, out, "burnside simplex", jsonio::encode(d),
             "simplex of dimension " + std::to_string(d.p));
      } else if (*bval) {
        auto sq = jsonio::parse_square(json::parse(square_json));
        bool commutes = square_commutes(sq);
        json res{{"commutes", commutes},
                 {"pullback", commutes ? is_pullback(sq) : false}};
        emit(opt, out, "burnside validate", res, res.dump());
      }
    } else if (*sheaf) {
      if (*shom) {
        auto a = jsonio::parse_sheaf(S, json::parse(source_json));
        auto b = jsonio::parse_sheaf(S, json::parse(target_json));
        auto h = sheaf_hom(S, a, b, depth_arg);
        json res{{"dimension", jsonio::to_i64(h.dimension)},
                 {"stabilized", h.stabilized},
                 {"depth", h.depth}};
        emit(opt, out, "sheaf hom", res, res.dump());
      } else if (*sdim) {
        auto a = jsonio::parse_sheaf(S, json::parse(sheaf_json));
        auto d = sheaf_dim(a);
        emit(opt, out, "sheaf dim", jsonio::encode(d),
             d.num().str() + (d.den().is_one() ? "" : "/" + d.den().value().str()));
      } else if (*scomp) {
        auto x = jsonio::parse_locobject(S, json::parse(x_json));
        auto y = jsonio::parse_locobject(S, json::parse(y_json));
        auto loc = loc_hom_dim(x, y);
        auto h = sheaf_hom(S, to_sheaf(x), to_sheaf(y), depth_arg);
        json res{{"localized", jsonio::to_i64(loc)},
                 {"sheaf", jsonio::to_i64(h.dimension)},
                 {"stabilized", h.stabilized},
                 {"agree", h.stabilized && h.dimension == loc}};
        emit(opt, out, "sheaf compare", res, res.dump());
      } else if (*ssec) {
        auto a = jsonio::parse_sheaf(S, json::parse(sheaf_json));
        auto u = jsonio::parse_clopen(S, json::parse(a_json));
        auto sec = sections(S, a, u, coset_bound, depth_arg);
        json comps = json::array();
        for (const auto& c : sec.components)
          comps.push_back(json{{"generator", c.generator},
                               {"coset", jsonio::encode(c.coset)},
                               {"stalk_dim", c.stalk_dim}});
        json res{{"cells", jsonio::to_i64(sec.cells())},
                 {"components", comps},
                 {"dimension", jsonio::to_i64(sec.dimension())},
                 {"truncated", sec.truncated}};
        emit(opt, out, "sheaf sections", res, res.dump());
      }
    } else if (*ver) {
      vcfg.primes = S.primes();
      auto report = verify::run_suite(suite, vcfg);
      json res = report.to_json();
      res["command"] = "verify";
      if (opt.format == "human") {
        for (const auto& item : report.items)
          out << item.name << ": " << verify::status_name(item.status) << " ("
              << item.cases << " cases)"
              << (item.detail.empty() ? "" : " - " + item.detail) << "\n";
        out << "overall: " << verify::status_name(report.overall()) << "\n";
      } else {
        out << res.dump(2) << "\n";
      }
      switch (report.overall()) {
        case verify::Status::pass: return 0;
        case verify::Status::fail: return 3;
        case verify::Status::bound_exhausted: return 4;
      }
    }
    return 0;
  } catch (const json::exception& e) {
    err << json{{"error", e.what()}, {"kind", "parse"}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << json{{"error", e.what()}, {"kind", "domain"}}.dump() << "\n";
    return 2;
  }
}

}  // namespace catdiv::cli
