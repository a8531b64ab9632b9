#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nilext/verify.hpp"

namespace nilext::cli {

/// Exit statuses of `run`.
enum Exit : int { ok = 0, check_failed = 1, usage = 2, resource = 3 };

struct Options {
  std::string command;
  std::vector<std::string> ids;
  std::string field;  // empty: Q unless a parameter value is irrational
  std::string params, params2;
  std::string cocycle;
  std::string scope = "all";
  std::string format = "text";
  std::string catalog_path;
  std::uint64_t seed = Catalog::default_seed;
  std::uint64_t max_search = default_max_search;
};

/// "lambda=2, alpha=1" (Greek letters allowed) to a sample.
inline Sample parse_params(const std::string& text) {
  Sample out;
  std::string ascii = ascii_expression(text);
  std::size_t start = 0;
  while (start <= ascii.size()) {
    std::size_t end = ascii.find(',', start);
    if (end == std::string::npos) end = ascii.size();
    std::string item = ascii.substr(start, end - start);
    start = end + 1;
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("parameter '" + item + "' needs the form name=value");
    std::string name = item.substr(0, eq);
    name.erase(std::remove_if(name.begin(), name.end(), [](char c) { return c == ' ' || c == '\t'; }), name.end());
    if (name.empty()) throw ParseError("parameter '" + item + "' has no name");
    if (out.count(name)) throw ParseError("parameter " + name + " given twice");
    out[name] = evaluate_scalar<Cyclotomic12>(item.substr(eq + 1), {});
  }
  return out;
}

/// Calls `fn` with a value of the scalar type named by `field`.
template <class Fn>
int with_field_name(const std::string& field, Fn&& fn) {
  if (field == "Q") return fn(Rational{});
  if (field == "QZ12") return fn(Cyclotomic12{});
  if (field == "F2") return fn(PrimeField<2>{});
  if (field == "F3") return fn(PrimeField<3>{});
  if (field == "F5") return fn(PrimeField<5>{});
  if (field == "F7") return fn(PrimeField<7>{});
  throw ParseError("unknown field '" + field + "' (expected Q, QZ12, F2, F3, F5 or F7)");
}

template <class F>
std::string element_str(const Vec<F>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string c = v[k].str();
    std::string term = c == "1" ? "" : c == "-1" ? "-" : (c.find_first_of("+-", 1) == std::string::npos ? c : "(" + c + ")") + "*";
    s += (s.empty() ? "" : " + ") + term + "e" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

template <class F>
std::string subspace_str(const Subspace<F>& w) {
  std::string s = "<";
  for (std::size_t i = 0; i < w.basis().size(); ++i) s += (i ? ", " : "") + element_str(w.basis()[i]);
  return s + ">";
}

class Runner {
 public:
  Runner(const Options& o, const Catalog& cat) : o_(o), cat_(cat) {}

  Report run() {
    Report r;
    r.scope = o_.command;
    for (const auto& id : o_.ids) cat_.entry(id);
    if (o_.command == "verify-catalog") {
      VerifyOptions vo;
      vo.seed = o_.seed;
      vo.max_search = o_.max_search;
      r = verify_catalog(o_.scope, cat_, vo);
      r.scope = o_.scope;
      return r;
    }
    const CatalogEntry& e = cat_.entry(o_.ids.at(0));
    if (e.stub) {
      r.add({"stub", e.id, "", Status::skipped, "table not reproduced here; " + e.provenance});
      if (o_.command == "info") return r;
      throw PreconditionFailed(e.id + " has no multiplication table here");
    }
    Sample s = sample_for(e, o_.params);
    std::string field = field_for(s);
    with_field_name(field, [&](auto scalar) {
      using F = decltype(scalar);
      if (o_.command == "info") info<F>(r, e, s);
      else if (o_.command == "cohomology") cohomology<F>(r, e, s);
      else if (o_.command == "extend") extend<F>(r, e, s, false);
      else if (o_.command == "classify-line") extend<F>(r, e, s, true);
      else if (o_.command == "iso") iso<F>(r, e, s);
      else if (o_.command == "orbits") orbits<F>(r, e, s);
      return 0;
    });
    return r;
  }

 private:
  Sample sample_for(const CatalogEntry& e, const std::string& text) const {
    if (!text.empty() || e.params.empty()) return parse_params(text);
    return cat_.base_samples(e, 1, o_.seed).front();
  }

  std::string field_for(const Sample& s) const {
    if (!o_.field.empty()) return o_.field;
    if (o_.command == "orbits") return "F2";
    if (o_.command == "iso") return "QZ12";
    return detail::all_rational(s) ? "Q" : "QZ12";
  }

  std::string params_str(const CatalogEntry& e, const Sample& s) const { return sample_str(e.param_names(), s); }

  template <class F>
  void info(Report& r, const CatalogEntry& e, const Sample& s) {
    auto a = cat_.instantiate<F>(e, s);
    std::string ps = params_str(e, s);
    r.add({"table", e.id, ps, Status::info, a.table_str()});
    r.add({"fingerprint", e.id, ps, Status::info, fingerprint(a).str()});
    r.add({"nilpotent", e.id, ps, Status::info, is_nilpotent(a) ? "yes" : "no"});
    r.add({"cd", e.id, ps, Status::info, is_cd(a) ? "cd" : "non-cd"});
    r.add({"annihilator", e.id, ps, Status::info, "Ann = " + subspace_str(annihilator(a))});
    if (!e.provenance.empty()) r.add({"provenance", e.id, "", Status::info, e.provenance});
  }

  template <class F>
  NablaList<F> named(const CatalogEntry& e, const Sample& s) const {
    if (!cat_.base_data(e.id)) return {};
    return cat_.named_nablas<F>(e.id, s);
  }

  template <class F>
  void cohomology(Report& r, const CatalogEntry& e, const Sample& s) {
    auto a = cat_.instantiate<F>(e, s);
    auto names = named<F>(e, s);
    auto cb = nilext::cohomology(a, names.empty() ? nullptr : &names);
    std::string ps = params_str(e, s);
    r.add({"b2_dim", e.id, ps, Status::info, std::to_string(cb.b2.dim())});
    r.add({"h2_dim", e.id, ps, Status::info, std::to_string(cb.h2_dim())});
    r.add({"h2_cd_dim", e.id, ps, Status::info, std::to_string(cb.h2_cd_dim())});
    for (std::size_t k = 0; k < cb.h2_dim(); ++k)
      r.add({"h2_rep", e.id, ps, Status::info,
             cb.labels[k] + " = " + form_str(cb.h2_reps[k]) + (cb.cd_flags[k] ? " (cd)" : "")});
  }

  template <class F>
  void extend(Report& r, const CatalogEntry& e, const Sample& s, bool classify_only) {
    if (o_.cocycle.empty()) throw ParseError(o_.command + " needs --cocycle");
    auto a = cat_.instantiate<F>(e, s);
    std::vector<Form<F>> forms;
    for (const auto& [label, f] : named<F>(e, s)) forms.push_back(f);
    auto theta = parse_form<F>(o_.cocycle, a.dim(), forms, detail::lower_all<F>(s));
    std::string ps = params_str(e, s);
    LineClass cls = classify_line(a, theta);
    r.add({"line_class", e.id, ps, Status::info, to_string(cls)});
    if (classify_only) return;
    auto ext = central_extension(a, theta);
    r.add({"extension", e.id, ps, Status::info, ext.table_str()});
    std::string split;
    try {
      split = is_split(a, {theta}) ? "split" : "not split";
    } catch (const PreconditionFailed& ex) {
      split = std::string("not decided: ") + ex.what();
    }
    r.add({"split", e.id, ps, Status::info, split});
  }

  template <class F>
  void iso(Report& r, const CatalogEntry& e, const Sample& s) {
    if (o_.ids.size() != 2) throw ParseError("iso needs two entry ids");
    const CatalogEntry& other = cat_.entry(o_.ids[1]);
    if (other.stub) throw PreconditionFailed(other.id + " has no multiplication table here");
    Sample s2 = sample_for(other, o_.params2);
    std::string ps = params_str(e, s) + " " + params_str(other, s2);
    std::string ids = e.id + " vs " + other.id;
    if constexpr (field_traits<F>::characteristic > 0) {
      auto a = cat_.instantiate<F>(e, s);
      auto b = cat_.instantiate<F>(other, s2);
      auto phi = iso_search_fp(a, b, o_.max_search);
      r.add({"iso", ids, ps, Status::info, phi ? "isomorphic, phi = " + phi->str() : "not isomorphic over this field"});
    } else {
      auto a = cat_.instantiate<Cyclotomic12>(e, s);
      auto b = cat_.instantiate<Cyclotomic12>(other, s2);
      r.add({"iso", ids, ps, Status::info, iso_search(a, b, o_.max_search).str()});
    }
  }

  template <class F>
  void orbits(Report& r, const CatalogEntry& e, const Sample& s) {
    if constexpr (field_traits<F>::characteristic != 2 && field_traits<F>::characteristic != 3) {
      throw PreconditionFailed("orbits needs --field F2 or F3");
    } else {
      auto a = cat_.instantiate<F>(e, s);
      auto census = orbit_census_fp(a, o_.max_search);
      std::string ps = params_str(e, s);
      for (const auto& orb : census.orbits)
        r.add({"orbit", e.id, ps, Status::info,
               to_string(orb.cls) + ", size " + std::to_string(orb.size) + ", " + form_str(orb.representative)});
      std::string counts;
      for (const auto& [cls, k] : census.orbits_by_class)
        counts += (counts.empty() ? "" : ", ") + to_string(cls) + " " + std::to_string(k);
      r.add({"census", e.id, ps, Status::info,
             std::to_string(census.total_lines) + " lines, |Aut| = " + std::to_string(census.group_order) +
                 ", orbits: " + counts});
      auto cons = census_consistency(a, o_.max_search);
      r.add({"consistency", e.id, ps, cons.ok() && census.class_stable ? Status::pass : Status::fail,
             "U1 orbits " + std::to_string(cons.u1_orbits) + ", isomorphism classes " +
                 std::to_string(cons.iso_classes)});
    }
  }

  const Options& o_;
  const Catalog& cat_;
};

inline void emit(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "structured") out << r.to_json().dump(2) << "\n";
  else out << r.to_text();
}

/// Parses `args` (without the program name), runs the command and writes the
/// report to `out`; diagnostics go to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app("Central extensions of nilpotent algebras over exact fields", "nilext");
  app.require_subcommand(1);
  app.add_option("--field", o.field, "Scalar field")->check(CLI::IsMember({"Q", "QZ12", "F2", "F3", "F5", "F7"}));
  app.add_option("--params", o.params, "Parameter values, e.g. \"lambda=2,alpha=1\"");
  app.add_option("--params2", o.params2, "Parameter values of the second algebra (iso)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", o.seed, "Seed for parameter sampling");
  app.add_option("--max-search", o.max_search, "Bound on exhaustive searches");
  app.add_option("--catalog", o.catalog_path, "Catalog file instead of the built-in one");

  struct Sub {
    const char* name;
    const char* help;
    int ids;
  };
  for (const Sub& sub : {Sub{"info", "Table, fingerprint and annihilator of an entry", 1},
                         Sub{"cohomology", "B^2, H^2 and the cd part of H^2", 1},
                         Sub{"extend", "Central extension by --cocycle", 1},
                         Sub{"classify-line", "Class of the line spanned by --cocycle", 1},
                         Sub{"iso", "Isomorphism search between two entries", 2},
                         Sub{"orbits", "Orbit census of H^2 lines over F2 or F3", 1},
                         Sub{"verify-catalog", "Run catalog checks", 0}}) {
    auto* c = app.add_subcommand(sub.name, sub.help);
    c->fallthrough();
    if (sub.ids > 0) c->add_option("ids", o.ids, "Catalog entry ids")->required()->expected(sub.ids);
    if (std::string(sub.name) == "extend" || std::string(sub.name) == "classify-line")
      c->add_option("--cocycle", o.cocycle, "Form such as \"D(1,3)+2*N(4)\"")->required();
    if (std::string(sub.name) == "verify-catalog")
      c->add_option("--scope", o.scope, "Scope")->check(CLI::IsMember(verify_scopes()));
    c->callback([&o, name = std::string(sub.name)] { o.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    const Catalog* cat = &Catalog::builtin();
    Catalog loaded;
    if (!o.catalog_path.empty()) {
      loaded = Catalog::load(o.catalog_path);
      cat = &loaded;
    }
    Report r = Runner(o, *cat).run();
    emit(r, o.format, out);
    return r.ok() ? ok : check_failed;
  } catch (const ResourceBound& e) {
    err << "resource bound: " << e.what() << "\n";
    return resource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
}

}  // namespace nilext::cli
