#pragma once

#include <cstdint>
#include <functional>
#include <regex>
#include <string>
#include <vector>

#include "nilext/catalog.hpp"
#include "nilext/identities.hpp"
#include "nilext/iso.hpp"
#include "nilext/orbits.hpp"
#include "nilext/prime_field.hpp"
#include "nilext/report.hpp"

namespace nilext {

/// A form given as text with symbolic coefficients, e.g. "(lambda-2)*D(1,3)".
inline PolyMatrix symbolic_form(const std::string& text, std::size_t n) {
  static const std::regex atom(R"(D\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::string renamed = std::regex_replace(text, atom, "dform_$1_$2");
  MultiPoly p = to_multipoly(renamed);
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = p.coefficient_of("dform_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  return m;
}

/// An entry's multiplication table with its parameters left as symbols.
inline Algebra<MultiPoly> symbolic_algebra(const CatalogEntry& e) {
  if (e.stub) throw PreconditionFailed(e.id + " has no multiplication table here");
  Algebra<MultiPoly> a(e.dim, e.id);
  for (const auto& t : e.products) a.add_to(t.i, t.j, t.k, to_multipoly(t.coeff));
  return a;
}

/// Symbolic check of a base algebra's stored transformation formulas.
inline TransformCheck verify_transform_table(const Catalog& cat, const std::string& base_id) {
  const BaseData* b = cat.base_data(base_id);
  if (!b) throw UnknownName("no transformation table for '" + base_id + "'");
  const CatalogEntry& e = cat.entry(base_id);
  std::vector<PolyMatrix> nablas;
  for (const auto& t : b->nablas) nablas.push_back(symbolic_form(t, e.dim));
  std::vector<MultiPoly> table;
  for (const auto& t : b->transform) table.push_back(to_multipoly(t));
  return verify_transform_table(cat.aut_family(base_id).matrix, nablas, symbolic_b2_generators(symbolic_algebra(e)),
                                table);
}

struct VerifyOptions {
  std::uint64_t seed = Catalog::default_seed;
  std::size_t samples = 3;
  std::uint64_t max_search = default_max_search;
};

inline std::vector<std::string> verify_scopes() {
  return {"cohomology", "reconstruction", "invariants", "transforms", "relations", "corollaries", "census", "all"};
}

namespace detail {

inline bool all_rational(const Sample& s) {
  for (const auto& [k, v] : s)
    if (!v.is_rational()) return false;
  return true;
}

/// Runs `fn` with Rational when every value is rational and Q(z12) otherwise.
template <class Fn>
auto with_field(const Sample& s, Fn&& fn) {
  if (all_rational(s)) return fn(Rational{});
  return fn(Cyclotomic12{});
}

template <class F>
std::string first_table_difference(const Algebra<F>& a, const Algebra<F>& b) {
  if (a.dim() != b.dim()) return "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!(a.coeff(i, j, k) == b.coeff(i, j, k)))
          return "e" + std::to_string(i + 1) + "e" + std::to_string(j + 1) + " at e" + std::to_string(k + 1) +
                 ": " + a.coeff(i, j, k).str() + " vs " + b.coeff(i, j, k).str();
  return {};
}

inline bool is_n4(const CatalogEntry& e) { return e.family == "N4" && !e.stub; }

inline Sample lambda_sample(const std::string& text) { return {{"lambda", evaluate_scalar<Cyclotomic12>(text, {})}}; }

/// Parses "lhs != rhs" and evaluates it on a sample; an empty condition holds.
inline bool condition_holds(const std::string& condition, const Sample& s) {
  if (condition.empty()) return true;
  auto pos = condition.find("!=");
  if (pos == std::string::npos) throw ParseError("unsupported condition '" + condition + "'");
  return !(evaluate_scalar<Cyclotomic12>(condition.substr(0, pos), s) ==
           evaluate_scalar<Cyclotomic12>(condition.substr(pos + 2), s));
}

}  // namespace detail

class Verifier {
 public:
  explicit Verifier(const Catalog& cat, VerifyOptions opts = {}) : cat_(cat), opts_(opts) {}

  Report run(const std::string& scope) const {
    Report r;
    r.scope = scope;
    if (scope == "all") {
      for (const auto& s : verify_scopes())
        if (s != "all") r.append(run(s));
      return r;
    }
    if (scope == "cohomology") cohomology(r);
    else if (scope == "reconstruction") reconstruction(r);
    else if (scope == "invariants") invariants(r);
    else if (scope == "transforms") transforms(r);
    else if (scope == "relations") relations(r);
    else if (scope == "corollaries") corollaries(r);
    else if (scope == "census") census(r);
    else throw UnknownName("unknown scope '" + scope + "'");
    return r;
  }

  void cohomology(Report& r) const {
    for (const auto& b : cat_.bases()) {
      const CatalogEntry& e = cat_.entry(b.base);
      std::vector<Sample> samples;
      if (e.params.empty()) samples.push_back({});
      else
        for (const auto& t : cat_.cohomology_lambda_samples()) samples.push_back(detail::lambda_sample(t));
      Record dims{"cohomology.h2_dim", b.base, "", Status::pass, ""};
      Record span{"cohomology.cd_span", b.base, "", Status::pass, ""};
      std::vector<std::string> dim_notes, span_notes, mismatches;
      for (const auto& s : samples) {
        std::string ps = sample_str(e.param_names(), s);
        auto a = cat_.instantiate<Rational>(e, s);
        std::size_t n = a.dim();
        auto b2 = b2_basis(a);
        auto values = detail::lower_all<Rational>(s);
        std::vector<Vec<Rational>> nablas;
        for (const auto& t : b.nablas) nablas.push_back(form_vec(parse_form<Rational>(t, n, {}, values)));
        std::size_t h2 = n * n - b2.dim();
        bool nabla_basis = nablas.size() == h2 && b2.sum(Subspace<Rational>(n * n, nablas)).dim() == n * n;
        dim_notes.push_back(ps + " dim H2 = " + std::to_string(h2));
        if (h2 != b.h2_dim || !nabla_basis) {
          dims.status = Status::fail;
          dim_notes.back() += nabla_basis ? " (table " + std::to_string(b.h2_dim) + ")" : " (nablas are not a basis mod B2)";
        }
        std::vector<Vec<Rational>> table;
        for (const auto& t : b.cd_span) table.push_back(form_vec(parse_form<Rational>(t, n, {}, values)));
        auto expected = b2.sum(Subspace<Rational>(n * n, table));
        auto computed = cd_cocycles(a);
        std::string note = ps + " dim H2_cd computed " + std::to_string(computed.dim() - b2.dim()) + ", table " +
                           std::to_string(expected.dim() - b2.dim());
        if (!(computed == expected)) mismatches.push_back(note + " (spans differ)");
        span_notes.push_back(note);
      }
      auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
        return s;
      };
      dims.detail = join(dim_notes);
      if (!mismatches.empty()) {
        // A parametric base is compared at sample points; mismatches there are
        // recorded for inspection, not asserted.
        span.status = e.params.empty() ? Status::fail : Status::reported;
        span.detail = join(mismatches);
      } else {
        span.detail = join(span_notes);
      }
      r.add(dims);
      r.add(span);
    }
  }

  void reconstruction(Report& r) const {
    for (const auto& e : cat_.entries()) {
      if (!detail::is_n4(e) || !e.base) continue;
      for (const auto& s : cat_.base_samples(e, opts_.samples, opts_.seed)) {
        Record rec{"reconstruction", e.id, sample_str(e.param_names(), s), Status::pass, ""};
        detail::with_field(s, [&](auto field) {
          using F = decltype(field);
          auto rebuilt = cat_.reconstruct<F>(e, s);
          auto table = cat_.instantiate<F>(e, s);
          auto base = cat_.instantiate<F>(cat_.entry(e.base->id), cat_.base_sample(e, s));
          LineClass cls = classify_line(base, cat_.construction_cocycle<F>(e, s));
          std::string diff = detail::first_table_difference(rebuilt, table);
          if (!diff.empty()) {
            rec.status = Status::fail;
            rec.detail = "table differs: " + diff;
          } else if (cls != LineClass::U1) {
            rec.status = Status::fail;
            rec.detail = "cocycle line is " + to_string(cls) + ", expected U1";
          } else {
            rec.detail = "matches table; line U1";
          }
          return 0;
        });
        r.add(rec);
      }
    }
  }

  void invariants(Report& r) const {
    for (const auto& e : cat_.entries()) {
      if (e.stub) continue;
      for (const auto& s : cat_.sample_parameters(e, opts_.samples, opts_.seed)) {
        Record rec{"invariants", e.id, sample_str(e.param_names(), s), Status::pass, ""};
        detail::with_field(s, [&](auto field) {
          using F = decltype(field);
          auto a = cat_.instantiate<F>(e, s);
          bool nil = is_nilpotent(a);
          auto ann = annihilator(a);
          bool cd_ids = is_cd(a);
          bool cd_der = is_cd_by_derivations(a);
          std::vector<std::string> bad;
          if (nil != e.expected.nilpotent) bad.push_back(std::string("nilpotent = ") + (nil ? "true" : "false"));
          if (ann.dim() != e.expected.ann_dim) bad.push_back("dim Ann = " + std::to_string(ann.dim()));
          if (e.family == "N4" && !ann.contains(unit_vec<F>(e.dim, e.dim - 1))) bad.push_back("e4 not in Ann");
          if (cd_ids != e.expected.cd) bad.push_back(std::string("cd = ") + (cd_ids ? "true" : "false"));
          if (cd_ids != cd_der) bad.push_back("cd tests disagree");
          if (!bad.empty()) {
            rec.status = Status::fail;
            for (const auto& x : bad) rec.detail += (rec.detail.empty() ? "" : "; ") + x;
          } else {
            rec.detail = std::string(nil ? "nilpotent" : "not nilpotent") + ", dim Ann = " + std::to_string(ann.dim()) +
                         (cd_ids ? ", cd" : ", non-cd");
          }
          return 0;
        });
        r.add(rec);
      }
    }
  }

  void transforms(Report& r) const {
    for (const auto& b : cat_.bases()) {
      auto check = verify_transform_table(cat_, b.base);
      r.add({"transforms.table", b.base, "", check.ok ? Status::pass : Status::fail,
             check.ok ? std::to_string(b.transform.size()) + " formulas agree" : check.detail});

      const CatalogEntry& e = cat_.entry(b.base);
      AutFamily fam = cat_.aut_family(b.base);
      std::vector<Sample> base_values;
      if (e.params.empty()) base_values.push_back({});
      else
        for (const auto& t : cat_.cohomology_lambda_samples()) base_values.push_back(detail::lambda_sample(t));
      static const std::vector<Rational> xs{1, -1, 2, Rational(1, 2)}, ys{0, 1, -1};
      std::size_t tried = 0;
      std::string failure;
      for (const auto& bv : base_values) {
        auto a = cat_.instantiate<Rational>(e, bv);
        for (const auto& x : xs)
          for (const auto& y : ys)
            for (const auto& z : ys) {
              auto values = detail::lower_all<Rational>(bv);
              values["x"] = x;
              values["y"] = y;
              values["z"] = z;
              ++tried;
              if (failure.empty() && !is_automorphism(a, fam.specialize(values)))
                failure = sample_str(e.param_names(), bv) + " x=" + x.str() + " y=" + y.str() + " z=" + z.str();
            }
      }
      r.add({"transforms.aut_family", b.base, "", failure.empty() ? Status::pass : Status::fail,
             failure.empty() ? std::to_string(tried) + " specializations are automorphisms"
                             : "not an automorphism at " + failure});
    }
  }

  void relations(Report& r) const {
    for (const auto& rel : cat_.relations()) {
      if (!rel.verifiable) {
        std::string ids;
        for (const auto& id : rel.ids) ids += (ids.empty() ? "" : ",") + id;
        r.add({"relations.unverifiable", ids, "", Status::skipped, "no table available: " + rel.text});
      } else if (rel.kind == "isomorphism") {
        r.add(isomorphism_record(rel));
      } else {
        r.add(equal_orbit_record(rel));
      }
    }
    distinctness(r);
  }

  void corollaries(Report& r) const {
    auto jacobi = builtin("jacobi_commutator");
    for (const auto& e : cat_.entries()) {
      if (e.stub) continue;
      auto samples = cat_.sample_parameters(e, opts_.samples, opts_.seed);
      std::string failure;
      for (const auto& s : samples)
        detail::with_field(s, [&](auto field) {
          using F = decltype(field);
          if (failure.empty() && !holds(cat_.instantiate<F>(e, s), jacobi)) failure = sample_str(e.param_names(), s);
          return 0;
        });
      r.add({"corollaries.lie_admissible", e.id, "", failure.empty() ? Status::pass : Status::fail,
             failure.empty() ? "Lie-admissible at " + std::to_string(samples.size()) + " samples"
                             : "Jacobi identity of the commutator fails at " + failure});
    }
    alia_table(r);
    alia_entries(r);
  }

  void census(Report& r) const {
    struct Case {
      std::string base;
      Sample values;
    };
    std::vector<Case> cases{{"CD3_01", {}}, {"CD3_02", {}}, {"CD3_03", {}}};
    cases.push_back({"CD3_04", detail::lambda_sample("0")});
    cases.push_back({"CD3_04", detail::lambda_sample("1")});
    for (const auto& c : cases) {
      const CatalogEntry& e = cat_.entry(c.base);
      Record rec{"census.consistency", c.base, sample_str(e.param_names(), c.values), Status::pass, ""};
      try {
        auto a = cat_.instantiate<PrimeField<2>>(e, c.values);
        auto cen = orbit_census_fp(a, opts_.max_search);
        auto cons = census_consistency(a, opts_.max_search);
        rec.detail = "F2: " + std::to_string(cen.total_lines) + " lines, |Aut| = " + std::to_string(cen.group_order) +
                     ", U1 lines " + std::to_string(cons.u1_lines) + ", U1 orbits " + std::to_string(cons.u1_orbits) +
                     ", isomorphism classes " + std::to_string(cons.iso_classes);
        if (!cons.ok() || !cen.class_stable) rec.status = Status::fail;
        if (!cen.class_stable) rec.detail += "; line class not stable under Aut";
      } catch (const ResourceBound& ex) {
        rec.status = Status::undecided;
        rec.detail = ex.what();
      }
      r.add(rec);
    }
  }

 private:
  /// Admissible lhs samples whose image under the relation is admissible too.
  std::vector<std::pair<Sample, Sample>> relation_samples(const RelationEntry& rel) const {
    const CatalogEntry& lhs = cat_.entry(rel.lhs);
    const CatalogEntry& rhs = cat_.entry(rel.rhs);
    std::vector<std::pair<Sample, Sample>> out;
    for (const auto& s : cat_.base_samples(lhs, opts_.samples + 3, opts_.seed)) {
      Sample img = cat_.relation_image(rel, s);
      if (cat_.violated_constraint(rhs, img)) continue;
      out.emplace_back(s, img);
      if (out.size() == opts_.samples) break;
    }
    return out;
  }

  Record isomorphism_record(const RelationEntry& rel) const {
    Record rec{"relations.isomorphism", rel.lhs, rel.str(), Status::pass, ""};
    const CatalogEntry& lhs = cat_.entry(rel.lhs);
    const CatalogEntry& rhs = cat_.entry(rel.rhs);
    std::size_t witnesses = 0;
    std::vector<std::string> notes;
    auto pairs = relation_samples(rel);
    for (const auto& [s, img] : pairs) {
      auto a = cat_.instantiate<Cyclotomic12>(lhs, s);
      auto b = cat_.instantiate<Cyclotomic12>(rhs, img);
      Verdict v = iso_search(a, b, opts_.max_search);
      std::string at = sample_str(lhs.param_names(), s) + " -> " + sample_str(rhs.param_names(), img);
      if (v.kind == Verdict::Kind::witness) {
        ++witnesses;
        notes.push_back(at + " witness " + v.witness->str());
      } else {
        notes.push_back(at + " " + v.str());
        if (v.kind == Verdict::Kind::distinct_by_invariant) rec.status = Status::fail;
      }
    }
    if (rec.status == Status::pass && witnesses < 2) rec.status = witnesses == pairs.size() ? Status::fail : Status::undecided;
    rec.detail = std::to_string(witnesses) + "/" + std::to_string(pairs.size()) + " samples with verified witness";
    for (const auto& x : notes) rec.detail += "; " + x;
    return rec;
  }

  /// Searches the base's automorphism family for phi mapping the lhs cocycle
  /// into the rhs line modulo B^2.
  Record equal_orbit_record(const RelationEntry& rel) const {
    Record rec{"relations.equal_orbit", rel.lhs, rel.str(), Status::pass, ""};
    const CatalogEntry& lhs = cat_.entry(rel.lhs);
    const CatalogEntry& rhs = cat_.entry(rel.rhs);
    AutFamily fam = cat_.aut_family(rel.base);
    std::vector<Cyclotomic12> xs, ys{Cyclotomic12(0), Cyclotomic12(1), Cyclotomic12(-1)};
    for (int k = 0; k < 12; ++k)
      for (const auto& m : {Rational(1), Rational(2), Rational(1, 2)})
        xs.push_back(Cyclotomic12::zeta_power(k) * Cyclotomic12(m));
    std::size_t found = 0;
    auto pairs = relation_samples(rel);
    std::vector<std::string> notes;
    for (const auto& [s, img] : pairs) {
      Sample bs = cat_.base_sample(lhs, s);
      auto base = cat_.instantiate<Cyclotomic12>(cat_.entry(rel.base), bs);
      std::size_t n = base.dim();
      auto theta_l = cat_.construction_cocycle<Cyclotomic12>(lhs, s);
      auto theta_r = cat_.construction_cocycle<Cyclotomic12>(rhs, img);
      auto b2 = b2_basis(base);
      auto target = b2.sum(Subspace<Cyclotomic12>(n * n, {form_vec(theta_r)}));
      std::optional<std::string> hit;
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          for (const auto& z : ys) {
            auto values = detail::lower_all<Cyclotomic12>(bs);
            values["x"] = x;
            values["y"] = y;
            values["z"] = z;
            auto moved = form_vec(act(fam.specialize(values), theta_l));
            if (target.contains(moved) && !b2.contains(moved)) {
              hit = "x=" + x.str() + " y=" + y.str() + " z=" + z.str();
              break;
            }
          }
          if (hit) break;
        }
        if (hit) break;
      }
      std::string at = sample_str(lhs.param_names(), s) + " -> " + sample_str(rhs.param_names(), img);
      if (hit) ++found;
      notes.push_back(at + (hit ? " via " + *hit : " no family element on grid"));
    }
    if (found < 2) rec.status = Status::undecided;
    rec.detail = std::to_string(found) + "/" + std::to_string(pairs.size()) + " samples mapped by the automorphism family";
    for (const auto& x : notes) rec.detail += "; " + x;
    return rec;
  }

  void distinctness(Report& r) const {
    std::size_t separated = 0, witnessed = 0;
    auto id = [](std::size_t k) { return std::string("N4_") + (k < 10 ? "0" : "") + std::to_string(k); };
    for (std::size_t i = 0; i < 20; ++i) {
      const CatalogEntry& a = cat_.entry(id(1 + 3 * i));
      const CatalogEntry& b = cat_.entry(id(1 + (3 * i + 23) % 66));
      Sample sa = cat_.base_samples(a, 1, opts_.seed)[0], sb = cat_.base_samples(b, 1, opts_.seed)[0];
      Verdict v = iso_search(cat_.instantiate<Cyclotomic12>(a, sa), cat_.instantiate<Cyclotomic12>(b, sb), opts_.max_search);
      Record rec{"relations.distinct", a.id + " vs " + b.id,
                 sample_str(a.param_names(), sa) + " " + sample_str(b.param_names(), sb), Status::pass, v.str()};
      if (v.kind == Verdict::Kind::distinct_by_invariant) ++separated;
      else if (v.kind == Verdict::Kind::undecided) rec.status = Status::undecided;
      else {
        ++witnessed;
        rec.status = Status::fail;
      }
      r.add(rec);
    }
    r.add({"relations.distinct_summary", "N4", "", separated >= 15 && witnessed == 0 ? Status::pass : Status::fail,
           std::to_string(separated) + "/20 pairs separated by fingerprint"});
  }

  void alia_table(Report& r) const {
    for (const auto& row : cat_.alia_rows()) {
      const CatalogEntry& e = cat_.entry(row.base);
      Sample s;
      for (const auto& [k, v] : row.params) s[k] = evaluate_scalar<Cyclotomic12>(v, {});
      auto a = cat_.instantiate<Rational>(e, s);
      std::size_t n = a.dim();
      auto z0 = induced_cocycle_constraints(a, builtin_set("alia0"));
      auto z1 = induced_cocycle_constraints(a, builtin_set("alia1"));
      auto z2 = induced_cocycle_constraints(a, builtin_set("two_sided_alia"));
      std::vector<Vec<Rational>> expected;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (row.dim == n * n || i + 1 != n || j + 1 != n) expected.push_back(form_vec(delta<Rational>(n, i, j)));
      Subspace<Rational> want(n * n, expected);
      Record rec{"corollaries.alia_cocycles", row.base, sample_str(e.param_names(), s), Status::pass, ""};
      rec.detail = "dims " + std::to_string(z0.dim()) + "/" + std::to_string(z1.dim()) + "/" + std::to_string(z2.dim()) +
                   " (0-, 1-, two-sided), table " + std::to_string(row.dim);
      if (!(z0 == z1) || !(z1 == z2)) {
        rec.status = Status::fail;
        rec.detail += "; spaces differ";
      } else if (!(z0 == want)) {
        rec.status = Status::fail;
        rec.detail += "; span differs from table";
      }
      r.add(rec);
    }
  }

  void alia_entries(Report& r) const {
    auto ids = std::vector<std::string>{"alia0", "alia1", "two_sided_alia"};
    for (const auto& e : cat_.entries()) {
      if (!detail::is_n4(e)) continue;
      const AliaExclusion* ex = nullptr;
      for (const auto& x : cat_.alia_exclusions())
        if (x.id == e.id) ex = &x;
      for (const auto& s : cat_.base_samples(e, opts_.samples, opts_.seed)) {
        bool excluded = ex && detail::condition_holds(ex->condition, s);
        std::vector<std::string> failing;
        detail::with_field(s, [&](auto field) {
          using F = decltype(field);
          auto a = cat_.instantiate<F>(e, s);
          for (const auto& name : ids)
            if (!holds(a, builtin_set(name))) failing.push_back(name);
          return 0;
        });
        Record rec{"corollaries.alia", e.id, sample_str(e.param_names(), s), Status::pass, ""};
        std::string list;
        for (const auto& f : failing) list += (list.empty() ? "" : ", ") + f;
        if (excluded) {
          rec.detail = "excluded; fails " + (list.empty() ? std::string("nothing") : list);
          if (failing.empty()) rec.status = Status::fail;
        } else {
          rec.detail = list.empty() ? "satisfies all three" : "not excluded but fails " + list;
          if (!failing.empty()) rec.status = Status::fail;
        }
        r.add(rec);
      }
    }
  }

  const Catalog& cat_;
  VerifyOptions opts_;
};

inline Report verify_catalog(const std::string& scope, const Catalog& cat = Catalog::builtin(), VerifyOptions opts = {}) {
  return Verifier(cat, opts).run(scope);
}

}  // namespace nilext
