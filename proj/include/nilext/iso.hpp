#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilext/algebra.hpp"
#include "nilext/cyclotomic.hpp"
#include "nilext/fingerprint.hpp"
#include "nilext/search.hpp"

namespace nilext {

/// Scalars tried for phi(e1) in the cyclotomic ansatz: the lead coordinate runs
/// over z^k * r for r in `lead`, later coordinates over `tail`.
struct AnsatzGrid {
  std::vector<Rational> lead{1, 2, Rational(1, 2), 3, Rational(1, 3)};
  std::vector<Rational> tail{0, 1, -1};
};

template <class F>
CandidateLists<F> ansatz_candidates(std::size_t n, std::size_t free_count, const AnsatzGrid& grid) {
  std::vector<Vec<F>> out;
  std::vector<F> leads;
  for (int k = 0; k < 12; ++k)
    for (const auto& r : grid.lead) leads.push_back(Cyclotomic12::zeta_power(k) * Cyclotomic12(r));
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t rest = n - 1 - j;
    std::size_t combos = 1;
    for (std::size_t t = 0; t < rest; ++t) combos *= grid.tail.size();
    for (const auto& lead : leads)
      for (std::size_t c = 0; c < combos; ++c) {
        Vec<F> v(n, F(0));
        v[j] = lead;
        std::size_t code = c;
        for (std::size_t t = 0; t < rest; ++t) {
          v[j + 1 + t] = F(grid.tail[code % grid.tail.size()]);
          code /= grid.tail.size();
        }
        out.push_back(std::move(v));
      }
  }
  return CandidateLists<F>(free_count, out);
}

/// Searches the ansatz grid for an isomorphism A -> B.
inline std::optional<Matrix<Cyclotomic12>> iso_search_ansatz(const Algebra<Cyclotomic12>& a,
                                                             const Algebra<Cyclotomic12>& b,
                                                             const AnsatzGrid& grid = {},
                                                             std::uint64_t max_search = default_max_search) {
  if (a.dim() != b.dim()) return std::nullopt;
  auto plan = generation_plan(a);
  auto cands = ansatz_candidates<Cyclotomic12>(a.dim(), plan.free_count, grid);
  std::optional<Matrix<Cyclotomic12>> found;
  search_homomorphisms<Cyclotomic12>(a, b, plan, cands, max_search, [&](const Matrix<Cyclotomic12>& phi) {
    found = phi;
    return false;
  });
  return found;
}

struct Verdict {
  enum class Kind { witness, distinct_by_invariant, undecided };
  Kind kind = Kind::undecided;
  std::optional<Matrix<Cyclotomic12>> witness;
  std::string component;              // for distinct_by_invariant
  std::vector<std::string> evidence;  // for undecided

  std::string str() const {
    switch (kind) {
      case Kind::witness: return "Witness(" + witness->str() + ")";
      case Kind::distinct_by_invariant: return "DistinctByInvariant(" + component + ")";
      case Kind::undecided: {
        std::string s;
        for (const auto& e : evidence) s += (s.empty() ? "" : "; ") + e;
        return "Undecided(" + s + ")";
      }
    }
    return {};
  }
};

namespace detail {

template <int P>
std::string fp_evidence(const Algebra<Cyclotomic12>& a, const Algebra<Cyclotomic12>& b, std::uint64_t max_search) {
  std::string tag = "F" + std::to_string(P) + ": ";
  for (const auto* alg : {&a, &b})
    for (const auto& c : alg->constants())
      if (!c.is_rational()) return tag + "skipped (irrational coefficients)";
  using G = PrimeField<P>;
  try {
    auto red = [](const Cyclotomic12& c) { return from_rational<G>(c.rational_part()); };
    auto ap = a.template map<G>(red), bp = b.template map<G>(red);
    auto iso = iso_search_fp(ap, bp, max_search);
    return tag + (iso ? "isomorphic" : "not isomorphic");
  } catch (const DivisionByZero&) {
    return tag + "skipped (denominator divisible by p)";
  } catch (const ResourceBound&) {
    return tag + "skipped (search bound)";
  }
}

}  // namespace detail

/// Fingerprint separation, then the cyclotomic ansatz, then exhaustive search
/// over F_2, F_3, F_5, F_7 as evidence only.
inline Verdict iso_search(const Algebra<Cyclotomic12>& a, const Algebra<Cyclotomic12>& b,
                          std::uint64_t max_search = default_max_search) {
  Verdict v;
  if (a.dim() != b.dim()) {
    v.kind = Verdict::Kind::distinct_by_invariant;
    v.component = "dim";
    return v;
  }
  if (auto diff = first_difference(fingerprint(a), fingerprint(b))) {
    v.kind = Verdict::Kind::distinct_by_invariant;
    v.component = *diff;
    return v;
  }
  AnsatzGrid narrow;
  AnsatzGrid wide;
  wide.tail = {0, 1, -1, 2, -2, Rational(1, 2), Rational(-1, 2)};
  for (const auto* grid : {&narrow, &wide}) {
    std::optional<Matrix<Cyclotomic12>> phi;
    try {
      phi = iso_search_ansatz(a, b, *grid, max_search);
    } catch (const ResourceBound&) {
      v.evidence.push_back("ansatz: skipped (search bound)");
      break;
    }
    if (phi && verify_isomorphism(a, b, *phi)) {
      v.kind = Verdict::Kind::witness;
      v.witness = phi;
      v.evidence.clear();
      return v;
    }
  }
  v.evidence.push_back("ansatz: no witness on grid");
  v.evidence.push_back(detail::fp_evidence<2>(a, b, max_search));
  v.evidence.push_back(detail::fp_evidence<3>(a, b, max_search));
  v.evidence.push_back(detail::fp_evidence<5>(a, b, max_search));
  v.evidence.push_back(detail::fp_evidence<7>(a, b, max_search));
  return v;
}

inline Verdict iso_search(const Algebra<Rational>& a, const Algebra<Rational>& b,
                          std::uint64_t max_search = default_max_search) {
  auto lift = [](const Rational& r) { return Cyclotomic12(r); };
  return iso_search(a.map<Cyclotomic12>(lift), b.map<Cyclotomic12>(lift), max_search);
}

}  // namespace nilext
