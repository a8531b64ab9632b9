// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "nilext.hpp"
#include "property_suites.hpp"

using namespace nilext;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string timing(double secs, double limit) {
  std::ostringstream s;
  s.precision(3);
  s << secs << " s (limit " << limit << " s)";
  return s.str();
}

std::string counts(const Report& r) {
  std::ostringstream s;
  s << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, " << r.count(Status::undecided)
    << " undecided, " << r.count(Status::reported) << " reported, " << r.count(Status::skipped) << " skipped";
  return s.str();
}

std::string first_failure(const Report& r) {
  for (const auto& rec : r.records)
    if (rec.status == Status::fail) return "; first failure " + rec.check_id + " " + rec.entry_id + ": " + rec.detail;
  return "";
}

std::set<std::string> entries_with(const Report& r, const std::string& check) {
  std::set<std::string> out;
  for (const auto& rec : r.records)
    if (rec.check_id == check) out.insert(rec.entry_id);
  return out;
}

/// Runs `scope`, requires no failures and a runtime below `limit` seconds.
Outcome scope_check(const std::string& scope, double limit, const std::function<void(const Report&, Outcome&)>& extra) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = verify_catalog(scope);
  double secs = seconds_since(t0);
  Outcome o;
  o.ok = r.ok() && secs < limit;
  o.detail = scope + ": " + counts(r) + ", " + timing(secs, limit) + first_failure(r);
  if (extra) extra(r, o);
  return o;
}

Outcome check_cohomology() {
  return scope_check("cohomology", 1.0, [](const Report& r, Outcome& o) {
    const auto& cat = Catalog::builtin();
    if (r.records.size() != 2 * cat.bases().size()) {
      o.ok = false;
      o.detail += "; expected two records per base";
    }
    if (cat.cohomology_lambda_samples().size() < 5) {
      o.ok = false;
      o.detail += "; fewer than 5 lambda samples";
    }
  });
}

Outcome check_reconstruction() {
  return scope_check("reconstruction", 10.0, [](const Report& r, Outcome& o) {
    auto seen = entries_with(r, "reconstruction");
    std::size_t expected = 0;
    for (const auto& e : Catalog::builtin().entries())
      if (e.base && !e.stub) {
        ++expected;
        if (!seen.count(e.id)) {
          o.ok = false;
          o.detail += "; " + e.id + " not checked";
        }
      }
    o.detail += "; " + std::to_string(seen.size()) + "/" + std::to_string(expected) + " entries";
  });
}

Outcome check_invariants() {
  return scope_check("invariants", 30.0, [](const Report& r, Outcome& o) {
    auto seen = entries_with(r, "invariants");
    std::size_t n4 = 0;
    for (const auto& e : Catalog::builtin().entries()) {
      if (e.stub) continue;
      if (e.family == "N4") ++n4;
      if (!seen.count(e.id)) {
        o.ok = false;
        o.detail += "; " + e.id + " not checked";
      }
    }
    o.detail += "; " + std::to_string(n4) + " N4 families";
    if (n4 != 66) o.ok = false;
  });
}

Outcome check_transforms() {
  Outcome o = scope_check("transforms", 5.0, nullptr);
  // Negative control: a corrupted exponent must be caught.
  const auto& cat = Catalog::builtin();
  const auto& e = cat.entry("CD3_01");
  std::vector<PolyMatrix> nablas;
  for (const auto& t : cat.base_data("CD3_01")->nablas) nablas.push_back(symbolic_form(t, e.dim));
  std::vector<MultiPoly> table;
  for (const auto& t : cat.base_data("CD3_01")->transform) table.push_back(to_multipoly(t));
  table.back() = to_multipoly("x^7*alpha7");
  auto check = verify_transform_table(cat.aut_family("CD3_01").matrix, nablas,
                                      symbolic_b2_generators(symbolic_algebra(e)), table);
  bool caught = !check.ok && check.first_difference == std::optional<std::size_t>(6);
  o.ok = o.ok && caught;
  o.detail += caught ? "; corrupted table rejected" : "; corrupted table NOT rejected";
  return o;
}

Outcome check_relations() {
  return scope_check("relations", 120.0, [](const Report& r, Outcome& o) {
    std::size_t iso = 0, orbit = 0, distinct = 0, summary = 0;
    for (const auto& rec : r.records) {
      if (rec.check_id == "relations.isomorphism" && rec.status == Status::pass) ++iso;
      if (rec.check_id == "relations.equal_orbit" && rec.status == Status::pass) ++orbit;
      if (rec.check_id == "relations.distinct") ++distinct;
      if (rec.check_id == "relations.distinct_summary" && rec.status == Status::pass) ++summary;
      if (rec.status == Status::undecided && rec.check_id != "relations.distinct") {
        o.ok = false;
        o.detail += "; undecided " + rec.check_id + " " + rec.entry_id;
      }
    }
    o.detail += "; " + std::to_string(iso) + " isomorphisms and " + std::to_string(orbit) +
                " orbit identities witnessed, " + std::to_string(distinct) + " distinct pairs";
    if (distinct != 20 || summary != 1) o.ok = false;
  });
}

Outcome check_corollaries() {
  return scope_check("corollaries", 60.0, [](const Report& r, Outcome& o) {
    const auto& cat = Catalog::builtin();
    std::size_t rows = 0;
    for (const auto& rec : r.records) rows += rec.check_id == "corollaries.alia_cocycles" ? 1 : 0;
    if (rows != cat.alia_rows().size()) {
      o.ok = false;
      o.detail += "; alia table rows missing";
    }
    if (entries_with(r, "corollaries.lie_admissible").empty() || entries_with(r, "corollaries.alia").empty()) {
      o.ok = false;
      o.detail += "; empty corollary checks";
    }
  });
}

Outcome check_census() {
  return scope_check("census", 300.0, [](const Report& r, Outcome& o) {
    for (const std::string id : {"CD3_01", "CD3_02", "CD3_03", "CD3_04"})
      if (!entries_with(r, "census.consistency").count(id)) {
        o.ok = false;
        o.detail += "; " + id + " missing";
      }
    if (r.count(Status::undecided) > 0) o.ok = false;
  });
}

Outcome check_properties() {
  Outcome o;
  std::size_t suites = 0, trials = 0;
  for (const auto& s : props::all_suites()) {
    ++suites;
    trials += s.trials;
    if (!s.ok() || s.trials < 200) {
      o.ok = false;
      o.detail += s.name + " (" + std::to_string(s.failures) + "/" + std::to_string(s.trials) + " failed: " +
                  s.first_failure + "); ";
    }
  }
  o.detail += std::to_string(suites) + " suites, " + std::to_string(trials) + " trials, seed " +
              std::to_string(props::seed);
  return o;
}

}  // namespace

int main() {
  std::vector<std::function<Outcome()>> criteria{check_cohomology,  check_reconstruction, check_invariants,
                                                 check_transforms,  check_relations,      check_corollaries,
                                                 check_census,      check_properties};
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.ok;
    std::cout << "criterion " << k + 1 << ": " << (o.ok ? "PASS" : "FAIL") << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
