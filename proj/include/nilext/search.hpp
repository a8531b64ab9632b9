#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "nilext/algebra.hpp"
#include "nilext/error.hpp"
#include "nilext/linalg.hpp"

namespace nilext {

/// Order in which a map out of A is built: images of free generators are
/// chosen, images of products are forced, and products landing in the span of
/// earlier vectors become consistency checks.
template <class F>
struct GenerationPlan {
  enum class Kind { free_generator, product, check };
  struct Step {
    Kind kind;
    std::size_t a = 0, b = 0;  // operands (indices into known vectors) for product/check
    std::size_t basis_index = 0;  // for free_generator
    Vec<F> coords;  // for check: u_a u_b = sum coords[t] u_t
  };

  std::vector<Step> steps;
  std::vector<Vec<F>> known;  // preimage of each generated vector
  std::size_t free_count = 0;
};

template <class F>
GenerationPlan<F> generation_plan(const Algebra<F>& a) {
  std::size_t n = a.dim();
  GenerationPlan<F> plan;
  using Step = typename GenerationPlan<F>::Step;
  using Kind = typename GenerationPlan<F>::Kind;
  std::vector<std::vector<bool>> done;

  auto span_coords = [&](const Vec<F>& w) -> std::optional<Vec<F>> {
    if (plan.known.empty()) {
      if (is_zero_vec(w)) return Vec<F>{};
      return std::nullopt;
    }
    return solve_linear(Matrix<F>::from_columns(plan.known, n), w);
  };
  auto add_known = [&](Vec<F> v) {
    plan.known.push_back(std::move(v));
    for (auto& row : done) row.push_back(false);
    done.emplace_back(plan.known.size(), false);
  };

  while (plan.known.size() < n) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t p = 0; p < plan.known.size() && !grew; ++p)
        for (std::size_t q = 0; q < plan.known.size() && !grew; ++q) {
          if (done[p][q]) continue;
          done[p][q] = true;
          Vec<F> w = a.multiply(plan.known[p], plan.known[q]);
          auto c = span_coords(w);
          if (c) {
            plan.steps.push_back(Step{Kind::check, p, q, 0, *c});
          } else {
            plan.steps.push_back(Step{Kind::product, p, q, 0, {}});
            add_known(std::move(w));
            grew = true;
          }
        }
    }
    if (plan.known.size() == n) break;
    for (std::size_t i = 0; i < n; ++i) {
      Vec<F> e = unit_vec<F>(n, i);
      if (!span_coords(e)) {
        plan.steps.push_back(Step{Kind::free_generator, 0, 0, i, {}});
        ++plan.free_count;
        add_known(std::move(e));
        break;
      }
    }
  }
  // Remaining products among the final basis are all checks.
  for (std::size_t p = 0; p < plan.known.size(); ++p)
    for (std::size_t q = 0; q < plan.known.size(); ++q) {
      if (done[p][q]) continue;
      done[p][q] = true;
      auto c = span_coords(a.multiply(plan.known[p], plan.known[q]));
      plan.steps.push_back(Step{Kind::check, p, q, 0, *c});
    }
  return plan;
}

namespace detail {

/// Echelon set of vectors supporting an independence test on insertion.
template <class F>
struct IncrementalBasis {
  std::vector<Vec<F>> rows;
  std::vector<std::size_t> pivots;

  bool insert(Vec<F> v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const F& c = v[pivots[r]];
      if (!c.is_zero()) v = axpy(-c, rows[r], v);
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    F inv = v[p].inverse();
    for (auto& x : v) x = x * inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

}  // namespace detail

/// Candidate images for each free generator, in plan order.
template <class F>
using CandidateLists = std::vector<std::vector<Vec<F>>>;

/// Depth-first search over bijective homomorphisms A -> B following `plan`.
/// `visit` receives each solution (column i = image of e_i) and returns false
/// to stop. Throws ResourceBound when the product of candidate counts exceeds
/// `max_search`.
template <class F>
void search_homomorphisms(const Algebra<F>& a, const Algebra<F>& b, const GenerationPlan<F>& plan,
                          const CandidateLists<F>& candidates, std::uint64_t max_search,
                          const std::function<bool(const Matrix<F>&)>& visit) {
  if (a.dim() != b.dim()) throw DimensionMismatch("search_homomorphisms: dimensions differ");
  if (candidates.size() != plan.free_count) throw PreconditionFailed("one candidate list per free generator");
  long double total = 1;
  for (const auto& c : candidates) total *= static_cast<long double>(c.size());
  if (total > static_cast<long double>(max_search))
    throw ResourceBound("search space of " + std::to_string(static_cast<double>(total)) +
                        " candidates exceeds the bound " + std::to_string(max_search));

  std::size_t n = a.dim();
  Matrix<F> u_inv = *inverse(Matrix<F>::from_columns(plan.known, n));
  std::vector<Vec<F>> images;
  images.reserve(n);
  bool stop = false;

  std::function<void(std::size_t, std::size_t, detail::IncrementalBasis<F>)> rec =
      [&](std::size_t step, std::size_t free_idx, detail::IncrementalBasis<F> basis) {
        if (stop) return;
        if (step == plan.steps.size()) {
          Matrix<F> phi = Matrix<F>::from_columns(images, n) * u_inv;
          if (!visit(phi)) stop = true;
          return;
        }
        const auto& s = plan.steps[step];
        using Kind = typename GenerationPlan<F>::Kind;
        if (s.kind == Kind::check) {
          Vec<F> lhs = b.multiply(images[s.a], images[s.b]);
          Vec<F> rhs(n, F(0));
          for (std::size_t t = 0; t < s.coords.size(); ++t)
            if (!s.coords[t].is_zero()) rhs = axpy(s.coords[t], images[t], rhs);
          if (lhs == rhs) rec(step + 1, free_idx, std::move(basis));
          return;
        }
        if (s.kind == Kind::product) {
          Vec<F> img = b.multiply(images[s.a], images[s.b]);
          auto next = basis;
          if (!next.insert(img)) return;
          images.push_back(std::move(img));
          rec(step + 1, free_idx, std::move(next));
          images.pop_back();
          return;
        }
        for (const auto& cand : candidates[free_idx]) {
          if (stop) return;
          auto next = basis;
          if (!next.insert(cand)) continue;
          images.push_back(cand);
          rec(step + 1, free_idx + 1, std::move(next));
          images.pop_back();
        }
      };
  rec(0, 0, {});
}

/// All nonzero vectors of F_p^n in lexicographic order.
template <class F>
std::vector<Vec<F>> all_nonzero_vectors(std::size_t n) {
  constexpr int p = field_traits<F>::characteristic;
  static_assert(p > 0, "all_nonzero_vectors needs a finite field");
  std::vector<Vec<F>> out;
  std::vector<int> digits(n, 0);
  for (;;) {
    int k = static_cast<int>(n) - 1;
    while (k >= 0 && ++digits[k] == p) digits[k--] = 0;
    if (k < 0) break;
    Vec<F> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = F(digits[i]);
    out.push_back(std::move(v));
  }
  return out;
}

inline constexpr std::uint64_t default_max_search = 20'000'000;

/// Full automorphism group of an algebra over a small prime field.
template <class F>
std::vector<Matrix<F>> aut_group_fp(const Algebra<F>& a, std::uint64_t max_search = default_max_search) {
  constexpr int p = field_traits<F>::characteristic;
  static_assert(p > 0, "aut_group_fp needs a prime field");
  if (p != 2 && p != 3 && p != 5 && p != 7) throw PreconditionFailed("aut_group_fp: p must be 2, 3, 5 or 7");
  if (a.dim() > 4) throw PreconditionFailed("aut_group_fp: dimension above 4");
  auto plan = generation_plan(a);
  CandidateLists<F> cands(plan.free_count, all_nonzero_vectors<F>(a.dim()));
  std::vector<Matrix<F>> group;
  search_homomorphisms<F>(a, a, plan, cands, max_search, [&](const Matrix<F>& phi) {
    group.push_back(phi);
    return true;
  });
  return group;
}

/// An isomorphism A -> B over a small prime field, if one exists.
template <class F>
std::optional<Matrix<F>> iso_search_fp(const Algebra<F>& a, const Algebra<F>& b,
                                       std::uint64_t max_search = default_max_search) {
  constexpr int p = field_traits<F>::characteristic;
  static_assert(p > 0, "iso_search_fp needs a prime field");
  if (a.dim() != b.dim()) return std::nullopt;
  auto plan = generation_plan(a);
  CandidateLists<F> cands(plan.free_count, all_nonzero_vectors<F>(a.dim()));
  std::optional<Matrix<F>> found;
  search_homomorphisms<F>(a, b, plan, cands, max_search, [&](const Matrix<F>& phi) {
    found = phi;
    return false;
  });
  return found;
}

/// phi is invertible and a homomorphism A -> B.
template <class F>
bool verify_isomorphism(const Algebra<F>& a, const Algebra<F>& b, const Matrix<F>& phi) {
  if (a.dim() != b.dim() || phi.rows() != b.dim() || phi.cols() != a.dim()) return false;
  return is_invertible(phi) && is_homomorphism(a, b, phi);
}

}  // namespace nilext
