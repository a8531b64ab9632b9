#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nilext/algebra.hpp"
#include "nilext/cyclotomic.hpp"
#include "nilext/error.hpp"
#include "nilext/expr.hpp"
#include "nilext/extensions.hpp"
#include "nilext/orbits.hpp"

namespace nilext {

/// Parameter values; catalog samples live in Q(z12) and are lowered to the
/// working field on instantiation.
using Sample = std::map<std::string, Cyclotomic12>;

struct ParamSpec {
  std::string name;
  std::vector<std::string> excluded;  // expressions the value must avoid

  std::string constraint_text() const {
    if (excluded.size() == 1) return name + " != " + excluded[0];
    std::string s = name + " not in {";
    for (std::size_t i = 0; i < excluded.size(); ++i) s += (i ? ", " : "") + excluded[i];
    return s + "}";
  }
};

struct ProductTerm {
  std::size_t i, j, k;  // zero-based
  std::string coeff;
};

struct BaseRef {
  std::string id;
  std::map<std::string, std::string> params;  // base parameter -> expression in entry parameters
};

struct Expected {
  bool nilpotent = true;
  std::size_t ann_dim = 1;
  bool cd = false;
};

struct CatalogEntry {
  std::string id;
  std::size_t dim = 0;
  std::string family;
  bool stub = false;
  std::vector<ParamSpec> params;
  std::vector<ProductTerm> products;
  std::optional<BaseRef> base;
  std::string cocycle;
  std::string provenance;
  Expected expected;

  std::vector<std::string> param_names() const {
    std::vector<std::string> out;
    for (const auto& p : params) out.push_back(p.name);
    return out;
  }
};

struct AutFamilyData {
  std::vector<std::string> params;
  std::vector<std::string> nonzero;
  std::vector<std::vector<std::string>> matrix;
};

/// Cohomology table, named H^2 representatives, displayed automorphisms and
/// transformation formulas of a base algebra.
struct BaseData {
  std::string base;
  std::size_t h2_dim = 0;
  std::vector<std::string> nablas;
  std::vector<std::string> cd_span;
  AutFamilyData aut;
  std::vector<std::string> transform;
};

struct RelationEntry {
  std::string kind;  // "isomorphism" or "equalOrbit"
  std::string lhs, rhs;
  std::map<std::string, std::string> map;  // rhs parameter -> expression in lhs parameters
  std::string base;
  bool verifiable = true;
  std::vector<std::string> ids;
  std::string text;
  std::string provenance;

  std::string str() const {
    if (!verifiable) return text;
    std::string s = lhs + " ~ " + rhs + "(";
    bool first = true;
    for (const auto& [k, v] : map) {
      s += (first ? "" : ", ") + k + " -> " + v;
      first = false;
    }
    return s + ")";
  }
};

struct AliaRow {
  std::string base;
  std::map<std::string, std::string> params;
  std::size_t dim = 0;
  std::string span;
};

struct AliaExclusion {
  std::string id;
  std::string condition;  // empty, or "lambda != 1"
};

inline std::string sample_str(const std::vector<std::string>& order, const Sample& s) {
  std::string out = "(";
  bool first = true;
  for (const auto& name : order) {
    auto it = s.find(name);
    if (it == s.end()) continue;
    out += (first ? "" : ", ") + name + "=" + it->second.str();
    first = false;
  }
  return out + ")";
}

namespace detail {

template <class F>
F lower(const Cyclotomic12& c) {
  if constexpr (std::is_same_v<F, Cyclotomic12>) {
    return c;
  } else {
    if (!c.is_rational()) throw FieldMismatch("value " + c.str() + " is not rational");
    return from_rational<F>(c.rational_part());
  }
}

template <class F>
std::map<std::string, F> lower_all(const Sample& s) {
  std::map<std::string, F> out;
  for (const auto& [k, v] : s) out[k] = lower<F>(v);
  return out;
}

}  // namespace detail

class Catalog {
 public:
  static constexpr const char* schema_name = "nilext-catalog/1";

  static Catalog parse(const std::string& text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("catalog: ") + e.what());
    }
    if (doc.value("schema", "") != schema_name) throw ParseError("catalog: expected schema " + std::string(schema_name));
    Catalog c;
    try {
      for (const auto& j : doc.at("entries")) c.entries_.push_back(read_entry(j));
      for (const auto& j : doc.at("bases")) {
        BaseData b;
        b.base = j.at("base");
        b.h2_dim = j.at("h2_dim");
        b.nablas = j.at("nablas").get<std::vector<std::string>>();
        b.cd_span = j.at("cd_span").get<std::vector<std::string>>();
        const auto& a = j.at("aut");
        b.aut.params = a.at("params").get<std::vector<std::string>>();
        b.aut.nonzero = a.at("nonzero").get<std::vector<std::string>>();
        b.aut.matrix = a.at("matrix").get<std::vector<std::vector<std::string>>>();
        b.transform = j.at("transform").get<std::vector<std::string>>();
        c.bases_.push_back(std::move(b));
      }
      for (const auto& j : doc.at("relations")) {
        RelationEntry r;
        r.kind = j.at("kind");
        r.verifiable = j.value("verifiable", true);
        r.provenance = j.value("provenance", "");
        if (r.verifiable) {
          r.lhs = j.at("lhs");
          r.rhs = j.at("rhs");
          r.map = j.at("map").get<std::map<std::string, std::string>>();
          r.base = j.value("base", "");
        } else {
          r.ids = j.at("ids").get<std::vector<std::string>>();
          r.text = j.at("text");
        }
        c.relations_.push_back(std::move(r));
      }
      for (const auto& j : doc.at("alia_cocycles"))
        c.alia_.push_back({j.at("base"), j.at("params").get<std::map<std::string, std::string>>(), j.at("dim"),
                           j.value("span", "")});
      for (const auto& j : doc.at("alia_exclusions")) c.exclusions_.push_back({j.at("id"), j.value("condition", "")});
      c.lambda_samples_ = doc.at("cohomology_lambda_samples").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("catalog: ") + e.what());
    }
    c.check_references();
    return c;
  }

  static Catalog load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UnknownName("cannot open catalog file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  /// The catalog compiled into the library.
  static const Catalog& builtin();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const std::vector<BaseData>& bases() const { return bases_; }
  const std::vector<RelationEntry>& relations() const { return relations_; }
  const std::vector<AliaRow>& alia_rows() const { return alia_; }
  const std::vector<AliaExclusion>& alia_exclusions() const { return exclusions_; }
  const std::vector<std::string>& cohomology_lambda_samples() const { return lambda_samples_; }

  bool contains(const std::string& id) const {
    for (const auto& e : entries_)
      if (e.id == id) return true;
    return false;
  }
  const CatalogEntry& entry(const std::string& id) const {
    for (const auto& e : entries_)
      if (e.id == id) return e;
    throw UnknownName("unknown catalog entry '" + id + "'");
  }
  const BaseData* base_data(const std::string& id) const {
    for (const auto& b : bases_)
      if (b.base == id) return &b;
    return nullptr;
  }

  /// The constraint a sample violates, if any. Missing or unknown parameters
  /// are errors rather than violations.
  std::optional<std::string> violated_constraint(const CatalogEntry& e, const Sample& s) const {
    check_sample_names(e, s);
    for (const auto& p : e.params)
      for (const auto& ex : p.excluded)
        if (evaluate_scalar<Cyclotomic12>(ex, s) == s.at(p.name)) return p.constraint_text();
    return std::nullopt;
  }

  template <class F>
  Algebra<F> instantiate(const CatalogEntry& e, const Sample& s) const {
    if (e.stub) throw PreconditionFailed(e.id + " has no multiplication table here");
    if (auto v = violated_constraint(e, s)) throw ConstraintViolation(e.id + ": constraint " + *v + " violated");
    auto values = detail::lower_all<F>(s);
    Algebra<F> a(e.dim, e.id + sample_str(e.param_names(), s));
    for (const auto& t : e.products) a.add_to(t.i, t.j, t.k, evaluate_scalar<F>(t.coeff, values));
    return a;
  }

  template <class F>
  Algebra<F> instantiate(const std::string& id, const Sample& s) const {
    return instantiate<F>(entry(id), s);
  }

  /// Sample of the base algebra induced by a sample of an entry with construction data.
  Sample base_sample(const CatalogEntry& e, const Sample& s) const {
    if (!e.base) throw PreconditionFailed(e.id + " has no construction data");
    Sample out;
    for (const auto& [k, expr] : e.base->params) out[k] = evaluate_scalar<Cyclotomic12>(expr, s);
    return out;
  }

  /// Named H^2 representatives of a base algebra at given parameter values.
  template <class F>
  std::vector<Form<F>> nablas(const std::string& base_id, const Sample& base_values) const {
    const BaseData* b = base_data(base_id);
    if (!b) throw UnknownName("no named cocycles for '" + base_id + "'");
    std::size_t n = entry(base_id).dim;
    auto values = detail::lower_all<F>(base_values);
    std::vector<Form<F>> out;
    for (const auto& t : b->nablas) out.push_back(parse_form<F>(t, n, {}, values));
    return out;
  }

  template <class F>
  NablaList<F> named_nablas(const std::string& base_id, const Sample& base_values) const {
    NablaList<F> out;
    auto forms = nablas<F>(base_id, base_values);
    for (std::size_t k = 0; k < forms.size(); ++k) out.emplace_back("N(" + std::to_string(k + 1) + ")", forms[k]);
    return out;
  }

  /// The entry's cocycle as a form on its base algebra.
  template <class F>
  Form<F> construction_cocycle(const CatalogEntry& e, const Sample& s) const {
    Sample bs = base_sample(e, s);
    const CatalogEntry& base = entry(e.base->id);
    std::vector<Form<F>> named;
    if (base_data(base.id)) named = nablas<F>(base.id, bs);
    auto values = detail::lower_all<F>(s);
    for (const auto& [k, v] : detail::lower_all<F>(bs)) values.emplace(k, v);
    return parse_form<F>(e.cocycle, base.dim, named, values);
  }

  /// central_extension(base, cocycle) for an entry with construction data.
  template <class F>
  Algebra<F> reconstruct(const CatalogEntry& e, const Sample& s) const {
    if (auto v = violated_constraint(e, s)) throw ConstraintViolation(e.id + ": constraint " + *v + " violated");
    Sample bs = base_sample(e, s);
    Algebra<F> base = instantiate<F>(entry(e.base->id), bs);
    Algebra<F> out = central_extension(base, construction_cocycle<F>(e, s));
    out.set_label(e.id + sample_str(e.param_names(), s) + " (reconstructed)");
    return out;
  }

  template <class F = Rational>
  AutFamily aut_family(const std::string& base_id) const {
    const BaseData* b = base_data(base_id);
    if (!b) throw UnknownName("no automorphism family for '" + base_id + "'");
    AutFamily f;
    f.base = base_id;
    f.params = b->aut.params;
    f.nonzero = b->aut.nonzero;
    std::size_t n = b->aut.matrix.size();
    f.matrix = PolyMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) f.matrix(i, j) = to_multipoly(b->aut.matrix.at(i).at(j));
    return f;
  }

  /// Deterministic admissible samples without relation images. The first
  /// rows are fixed so special values such as lambda in {1, -1, 0, -1/2} are
  /// always covered; later rows come from a seeded generator.
  std::vector<Sample> base_samples(const CatalogEntry& e, std::size_t count, std::uint64_t seed = default_seed) const {
    if (count == 0) throw PreconditionFailed("sample count must be at least 1");
    if (e.params.empty()) return {Sample{}};
    static const std::vector<std::vector<Rational>> fixed{
        {1, 2, 3, 4, 5},
        {2, -1, 3, -2, Rational(1, 2)},
        {-1, 3, -2, 5, 2},
        {0, -3, Rational(1, 2), 2, -1},
        {Rational(-1, 2), Rational(1, 2), 2, 3, -1},
    };
    static const std::vector<Rational> pool{-3, -2, -1, 0, 1, 2, 3, Rational(1, 2), Rational(-1, 2),
                                            Rational(1, 3), Rational(3, 2), Rational(-2, 3)};
    std::mt19937_64 rng(seed);
    std::vector<Sample> out;
    std::size_t attempts = 0;
    for (std::size_t row = 0; out.size() < count; ++row) {
      if (++attempts > 64 + 8 * count)
        throw ConstraintViolation(e.id + ": no admissible sample found within the search budget");
      Sample s;
      for (std::size_t k = 0; k < e.params.size(); ++k) {
        Rational v = row < fixed.size() ? fixed[row][k % fixed[row].size()] : pool[rng() % pool.size()];
        s[e.params[k].name] = Cyclotomic12(v);
      }
      if (!repair(e, s)) continue;
      bool dup = false;
      for (const auto& t : out) dup = dup || t == s;
      if (!dup) out.push_back(std::move(s));
    }
    return out;
  }

  /// Admissible samples plus, for each relation on the entry, the image of
  /// each sample under the relation's parameter map.
  std::vector<Sample> sample_parameters(const CatalogEntry& e, std::size_t count,
                                        std::uint64_t seed = default_seed) const {
    auto out = base_samples(e, count, seed);
    std::size_t base_count = out.size();
    for (const auto& r : relations_) {
      if (!r.verifiable || r.kind != "isomorphism" || r.lhs != e.id) continue;
      for (std::size_t k = 0; k < base_count; ++k) {
        Sample img = relation_image(r, out[k]);
        if (violated_constraint(entry(r.rhs), img)) continue;
        bool dup = false;
        for (const auto& t : out) dup = dup || t == img;
        if (!dup) out.push_back(std::move(img));
      }
    }
    return out;
  }

  Sample relation_image(const RelationEntry& r, const Sample& lhs) const {
    Sample out;
    for (const auto& [k, expr] : r.map) out[k] = evaluate_scalar<Cyclotomic12>(expr, lhs);
    return out;
  }

  static constexpr std::uint64_t default_seed = 20200101;

 private:
  static CatalogEntry read_entry(const nlohmann::json& j) {
    CatalogEntry e;
    e.id = j.at("id");
    e.dim = j.at("dim");
    e.family = j.value("family", "");
    e.stub = j.value("stub", false);
    e.provenance = j.value("provenance", "");
    if (e.stub) return e;
    for (const auto& p : j.at("params")) e.params.push_back({p.at("name"), p.at("excluded").get<std::vector<std::string>>()});
    for (const auto& t : j.at("products")) {
      int i = t.at(0), jj = t.at(1), k = t.at(3);
      auto bad = [&](int x) { return x < 1 || static_cast<std::size_t>(x) > e.dim; };
      if (bad(i) || bad(jj) || bad(k)) throw ParseError("catalog: product index out of range in " + e.id);
      ProductTerm pt{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1), static_cast<std::size_t>(k - 1),
                     t.at(2).get<std::string>()};
      auto names = Expr::parse(pt.coeff).names();
      for (const auto& nm : names) {
        bool known = false;
        for (const auto& p : e.params) known = known || p.name == nm;
        if (!known) throw ParseError("catalog: coefficient of " + e.id + " uses undeclared symbol '" + nm + "'");
      }
      e.products.push_back(std::move(pt));
    }
    if (j.contains("base")) {
      BaseRef b;
      b.id = j.at("base").at("id");
      b.params = j.at("base").at("params").get<std::map<std::string, std::string>>();
      e.base = b;
      e.cocycle = j.at("cocycle");
    }
    if (j.contains("expected")) {
      const auto& x = j.at("expected");
      e.expected = {x.value("nilpotent", true), x.value("ann_dim", std::size_t{1}), x.value("cd", false)};
    }
    return e;
  }

  void check_references() const {
    for (const auto& e : entries_)
      if (e.base && !contains(e.base->id)) throw ParseError("catalog: " + e.id + " refers to unknown base " + e.base->id);
    for (const auto& r : relations_) {
      if (r.verifiable) {
        entry(r.lhs);
        entry(r.rhs);
      } else {
        for (const auto& id : r.ids) entry(id);
      }
    }
  }

  void check_sample_names(const CatalogEntry& e, const Sample& s) const {
    for (const auto& p : e.params)
      if (!s.count(p.name)) throw PreconditionFailed(e.id + ": missing parameter " + p.name);
    for (const auto& [k, v] : s) {
      bool known = false;
      for (const auto& p : e.params) known = known || p.name == k;
      if (!known) throw UnknownName(e.id + " has no parameter '" + k + "'");
    }
  }

  /// Moves each parameter off its excluded values by unit steps.
  bool repair(const CatalogEntry& e, Sample& s) const {
    for (const auto& p : e.params) {
      for (int step = 0; step < 16; ++step) {
        bool bad = false;
        for (const auto& ex : p.excluded) bad = bad || evaluate_scalar<Cyclotomic12>(ex, s) == s.at(p.name);
        if (!bad) break;
        s[p.name] = s.at(p.name) + Cyclotomic12(1);
      }
    }
    return !violated_constraint(e, s);
  }

  std::vector<CatalogEntry> entries_;
  std::vector<BaseData> bases_;
  std::vector<RelationEntry> relations_;
  std::vector<AliaRow> alia_;
  std::vector<AliaExclusion> exclusions_;
  std::vector<std::string> lambda_samples_;
};

}  // namespace nilext

#include "nilext/catalog_data.hpp"

inline const nilext::Catalog& nilext::Catalog::builtin() {
  static const Catalog c = parse(nilext::embedded_catalog_json());
  return c;
}
