#pragma once

// JSON encodings of the public value types.  Every encoder here has a
// matching parser that accepts exactly what it emits; the CLI and the
// verify reports are built from these.  Integers are emitted as JSON
// numbers and must fit 64 bits, which desk-scale sessions never exceed.

#include <string>

#include <nlohmann/json.hpp>

#include "catdiv/burnside.hpp"
#include "catdiv/cantor.hpp"
#include "catdiv/clopen.hpp"
#include "catdiv/k0.hpp"
#include "catdiv/loccat.hpp"
#include "catdiv/sheaf.hpp"
#include "catdiv/smooth.hpp"
#include "catdiv/torsion.hpp"

namespace catdiv::jsonio {

using nlohmann::json;
using QField = RationalField;
using QObj = LocObject<QField>;
using QMor = LocMorphism<QField>;
using QSheaf = EqSheaf<QField>;
using QSheafGen = EqSheafGen<QField>;
using QSheafMap = EqSheafMap<QField>;

inline long long to_i64(const Int& n) {
  if (n > Int(9223372036854775807LL) || n < Int(-9223372036854775807LL - 1))
    throw std::overflow_error("json: integer too large for the wire format");
  return static_cast<long long>(n);
}

// ---- primes and smooth arithmetic ----

inline json encode(const PrimeSet& s) {
  json a = json::array();
  for (const auto& p : s.primes()) a.push_back(to_i64(p));
  return a;
}

inline PrimeSet parse_primes(const json& j) {
  std::vector<Int> ps;
  for (const auto& v : j) ps.push_back(Int(v.get<long long>()));
  return PrimeSet(std::move(ps));
}

inline json encode(const SmoothNumber& n) { return to_i64(n.value()); }

inline SmoothNumber parse_smooth(const PrimeSet& S, const json& j) {
  return SmoothNumber::make(S, Int(j.get<long long>()));
}

inline json encode(const SRational& r) {
  return json{{"num", to_i64(r.num())}, {"den", to_i64(r.den().value())}};
}

inline SRational parse_srational(const PrimeSet& S, const json& j) {
  return SRational::make(S, Int(j.at("num").get<long long>()),
                         Int(j.at("den").get<long long>()));
}

inline json encode(const Rat& r) {
  return json{{"num", to_i64(boost::multiprecision::numerator(r))},
              {"den", to_i64(boost::multiprecision::denominator(r))}};
}

inline Rat parse_rat(const json& j) {
  return Rat(Int(j.at("num").get<long long>()), Int(j.at("den").get<long long>()));
}

// ---- finite sets and spans ----

inline json encode(const FinMap& m) {
  return json{{"src", m.src}, {"dst", m.dst}, {"table", m.table}};
}

inline FinMap parse_finmap(const json& j) {
  FinMap m{j.at("src").get<int>(), j.at("dst").get<int>(),
           j.at("table").get<std::vector<int>>()};
  m.validate();
  return m;
}

inline json encode(const Span& s) {
  return json{{"left", encode(s.left)}, {"right", encode(s.right)}};
}

inline Span parse_span(const json& j) {
  Span s{parse_finmap(j.at("left")), parse_finmap(j.at("right"))};
  s.validate();
  return s;
}

inline json encode(const CommutingSquare& sq) {
  return json{{"to_left", encode(sq.to_left)},
              {"to_right", encode(sq.to_right)},
              {"left_down", encode(sq.left_down)},
              {"right_down", encode(sq.right_down)}};
}

inline CommutingSquare parse_square(const json& j) {
  return {parse_finmap(j.at("to_left")), parse_finmap(j.at("to_right")),
          parse_finmap(j.at("left_down")), parse_finmap(j.at("right_down"))};
}

inline json encode(const ArrowChain& c) {
  json a = json::array();
  for (const auto& [m, n] : c.entries) a.push_back(json::array({encode(m), encode(n)}));
  return a;
}

inline ArrowChain parse_chain(const PrimeSet& S, const json& j) {
  ArrowChain c;
  for (const auto& e : j)
    c.entries.emplace_back(parse_smooth(S, e.at(0)), parse_smooth(S, e.at(1)));
  c.validate();
  return c;
}

inline json encode(const SimplexDiagram& d) {
  json vertices = json::array();
  for (int s = 0; s <= d.p; ++s)
    for (int t = s; t <= d.p; ++t)
      vertices.push_back(json{{"s", s}, {"t", t}, {"size", encode(d.at(s, t))}});
  json p_edges = json::array(), j_edges = json::array();
  for (int s = 0; s <= d.p; ++s)
    for (int t = s; t <= d.p; ++t) {
      if (s < t) p_edges.push_back(json{{"s", s}, {"t", t}, {"map", encode(d.p_edge(s, t))}});
      if (s < t) j_edges.push_back(json{{"s", s}, {"t", t}, {"map", encode(d.j_edge(s, t))}});
    }
  json diamonds = json::array();
  for (const auto& sq : d.diamonds()) diamonds.push_back(encode(sq));
  return json{{"p", d.p},
              {"vertices", vertices},
              {"quotient_edges", p_edges},
              {"residue_edges", j_edges},
              {"diamonds", diamonds}};
}

// ---- localized category ----

inline json encode(const QObj& x) {
  return json{{"dim", x.dim}, {"level", encode(x.level)}, {"field", x.field.tag()}};
}

inline QObj parse_locobject(const PrimeSet& S, const json& j) {
  if (j.contains("field") && j.at("field").get<std::string>() != "Q")
    throw std::invalid_argument("locobject: only the rational field is wired to the CLI");
  return object_at_level(QField{}, j.at("dim").get<int>(), parse_smooth(S, j.at("level")));
}

inline json encode_matrix(const Matrix<QField>& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(encode(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix<QField> parse_matrix(const json& j, int rows, int cols) {
  Matrix<QField> m(QField{}, rows, cols);
  if (static_cast<int>(j.size()) != rows)
    throw std::invalid_argument("matrix: row count mismatch");
  for (int r = 0; r < rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("matrix: column count mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = parse_rat(row.at(static_cast<std::size_t>(c)));
  }
  return m;
}

inline json encode(const QMor& f) {
  return json{{"source", encode(f.source)},
              {"target", encode(f.target)},
              {"level", encode(f.level)},
              {"matrix", encode_matrix(f.matrix)}};
}

inline QMor parse_locmorphism(const PrimeSet& S, const json& j) {
  auto src = parse_locobject(S, j.at("source"));
  auto dst = parse_locobject(S, j.at("target"));
  auto level = parse_smooth(S, j.at("level"));
  auto cs = divides(src.level, level);
  auto ct = divides(dst.level, level);
  if (!cs || !ct)
    throw std::invalid_argument("locmorphism: object levels must divide the level");
  QMor f{src, dst, level,
         parse_matrix(j.at("matrix"), ct->to_int() * dst.dim, cs->to_int() * src.dim)};
  f.validate();
  return f;
}

// ---- cantor dynamics ----

inline json encode(const PrimeSet& S, const CantorPoint& x) {
  json o = json::object();
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (x.digits[i].empty()) continue;
    json a = json::array();
    for (auto d : x.digits[i]) a.push_back(static_cast<int>(d));
    o[S.at(i).str()] = std::move(a);
  }
  return o;
}

inline CantorPoint parse_point(const PrimeSet& S, const json& j) {
  std::vector<std::vector<int>> raw(S.size());
  for (const auto& [key, val] : j.items()) {
    Int p(key);
    raw[S.index_of(p)] = val.get<std::vector<int>>();
  }
  return make_point(S, std::move(raw));
}

inline json encode(const TorsionElement& t) {
  return json{{"num", to_i64(t.num)}, {"den", to_i64(t.den)}};
}

inline TorsionElement parse_torsion(const PrimeSet& S, const json& j) {
  return TorsionElement::make(S, Int(j.at("num").get<long long>()),
                              Int(j.at("den").get<long long>()));
}

inline json encode(const PrimeSet& S, const Clopen& u) {
  json depth = json::object();
  for (std::size_t i = 0; i < S.size(); ++i)
    if (u.depth[i] > 0) depth[S.at(i).str()] = u.depth[i];
  json prefixes = json::array();
  for (const auto& t : u.prefixes) {
    json row = json::array();
    for (auto d : t) row.push_back(static_cast<int>(d));
    prefixes.push_back(std::move(row));
  }
  return json{{"depth", depth}, {"prefixes", prefixes}};
}

inline Clopen parse_clopen(const PrimeSet& S, const json& j) {
  Clopen u{std::vector<int>(S.size(), 0), {}};
  for (const auto& [key, val] : j.at("depth").items())
    u.depth[S.index_of(Int(key))] = val.get<int>();
  int total = 0;
  for (int d : u.depth) total += d;
  for (const auto& row : j.at("prefixes")) {
    if (static_cast<int>(row.size()) != total)
      throw std::invalid_argument("clopen: prefix length mismatch");
    Prefix t;
    int pos = 0;
    for (std::size_t i = 0; i < S.size(); ++i)
      for (int k = 0; k < u.depth[i]; ++k) {
        int d = row.at(static_cast<std::size_t>(pos++)).get<int>();
        if (d < 0 || Int(d) >= S.at(i))
          throw std::invalid_argument("clopen: digit out of range");
        t.push_back(static_cast<std::uint8_t>(d));
      }
    u.prefixes.insert(std::move(t));
  }
  return clopen_canonicalize(S, std::move(u));
}

inline json encode(const OrbitWitness& w) {
  return json{{"t", encode(w.t)}, {"level", encode(w.level)}};
}

// ---- sheaves ----

inline json encode(const QSheafGen& g) {
  return json{{"stalk_dim", g.stalk_dim}, {"level", encode(g.level)},
              {"field", g.field.tag()}};
}

inline json encode(const QSheaf& f) {
  if (f.generators.size() == 1) return encode(f.generators[0]);
  json gens = json::array();
  for (const auto& g : f.generators) gens.push_back(encode(g));
  return json{{"generators", gens}};
}

inline QSheafGen parse_sheaf_gen(const PrimeSet& S, const json& j) {
  if (j.contains("field") && j.at("field").get<std::string>() != "Q")
    throw std::invalid_argument("sheaf: only the rational field is wired to the CLI");
  int d = j.at("stalk_dim").get<int>();
  if (d < 0) throw std::invalid_argument("sheaf: negative stalk dimension");
  return QSheafGen{QField{}, d, parse_smooth(S, j.at("level"))};
}

inline QSheaf parse_sheaf(const PrimeSet& S, const json& j) {
  QSheaf f;
  if (j.contains("generators"))
    for (const auto& g : j.at("generators")) f.generators.push_back(parse_sheaf_gen(S, g));
  else
    f.generators.push_back(parse_sheaf_gen(S, j));
  return f;
}

// Kernel maps are written with their transversal matrix plus the derived
// block listing per (cell, coset pair); parsing reads the matrix back.
inline json encode(const QSheafMap& f) {
  json blocks = json::array();
  int li = f.level.to_int();
  int cs = divides(f.source.level, f.level)->to_int();
  int ct = divides(f.target.level, f.level)->to_int();
  Matrix<QField> block(QField{}, f.target.stalk_dim, f.source.stalk_dim);
  for (int b = 0; b < li; ++b)
    for (int h = 0; h < ct; ++h)
      for (int g = 0; g < cs; ++g) {
        f.kernel_block(h, g, b, block);
        blocks.push_back(json{{"cell", b},
                              {"src_coset", g},
                              {"dst_coset", h},
                              {"matrix", encode_matrix(block)}});
      }
  return json{{"source", encode(f.source)},
              {"target", encode(f.target)},
              {"level", encode(f.level)},
              {"matrix", encode_matrix(f.mat)},
              {"blocks", blocks}};
}

inline QSheafMap parse_sheaf_map(const PrimeSet& S, const json& j) {
  auto src = parse_sheaf_gen(S, j.at("source"));
  auto dst = parse_sheaf_gen(S, j.at("target"));
  auto level = parse_smooth(S, j.at("level"));
  auto cs = divides(src.level, level);
  auto ct = divides(dst.level, level);
  if (!cs || !ct)
    throw std::invalid_argument("sheaf map: generator levels must divide the window");
  QSheafMap f{src, dst, level,
              parse_matrix(j.at("matrix"), ct->to_int() * dst.stalk_dim,
                           cs->to_int() * src.stalk_dim)};
  f.validate();
  return f;
}

// ---- presentations ----

inline json encode(const K0Presentation& p) {
  json gens = json::array();
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    gens.push_back(json{{"m", encode(p.generators[i])},
                        {"class", encode(p.class_map[i])}});
  json factors = json::array();
  for (const auto& d : p.invariant_factors) factors.push_back(to_i64(d));
  json img;
  if (auto f = p.free_generator_image()) img = encode(*f);
  return json{{"bound", encode(p.bound)},
              {"generators", gens},
              {"relations", p.relation_count},
              {"invariant_factors", factors},
              {"free_rank", p.free_rank},
              {"infinite_cyclic", p.is_infinite_cyclic()},
              {"free_generator_image", img}};
}

}  // namespace catdiv::jsonio
