#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nilext/algebra.hpp"
#include "nilext/error.hpp"
#include "nilext/extensions.hpp"
#include "nilext/fingerprint.hpp"
#include "nilext/linalg.hpp"
#include "nilext/multipoly.hpp"
#include "nilext/search.hpp"

namespace nilext {

using PolyMatrix = Matrix<MultiPoly>;

/// A displayed family of automorphisms; entries are polynomials in `params`.
struct AutFamily {
  std::string base;
  std::vector<std::string> params;
  std::vector<std::string> nonzero;  // parameters that must not vanish
  PolyMatrix matrix;

  template <class F>
  Matrix<F> specialize(const std::map<std::string, F>& values) const {
    for (const auto& v : nonzero) {
      auto it = values.find(v);
      if (it != values.end() && it->second.is_zero())
        throw ConstraintViolation("automorphism family needs " + v + " != 0");
    }
    Matrix<F> m(matrix.rows(), matrix.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = matrix(i, j).evaluate(values);
    return m;
  }
};

/// Coordinate names "alpha1", "alpha2", ... used by transformation tables.
inline std::string alpha_name(std::size_t k) { return "alpha" + std::to_string(k + 1); }

struct TransformCheck {
  bool ok = false;
  std::optional<std::size_t> first_difference;  // zero-based nabla index
  std::vector<MultiPoly> computed;              // coefficient of each nabla in phi^T M phi
  std::string detail;
};

namespace detail {

inline PolyMatrix poly_transpose_product(const PolyMatrix& phi, const PolyMatrix& m) {
  return phi.transpose() * m * phi;
}

}  // namespace detail

/// Expands phi^T (sum alpha_k N_k) phi in the basis N_1..N_r, B^2 generators,
/// and compares the N-coefficients with `table`. Elimination only pivots on
/// nonzero constants so the result is valid for every value of the remaining
/// symbols (e.g. a base parameter).
inline TransformCheck verify_transform_table(const PolyMatrix& phi, const std::vector<PolyMatrix>& nablas,
                                             const std::vector<PolyMatrix>& b2_generators,
                                             const std::vector<MultiPoly>& table) {
  TransformCheck out;
  std::size_t n = phi.rows();
  if (phi.cols() != n) throw DimensionMismatch("automorphism matrix must be square");
  if (table.size() != nablas.size()) throw DimensionMismatch("one formula per nabla expected");

  PolyMatrix m(n, n);
  for (std::size_t k = 0; k < nablas.size(); ++k) {
    if (nablas[k].rows() != n || nablas[k].cols() != n) throw DimensionMismatch("nabla size differs");
    MultiPoly a = MultiPoly::variable(alpha_name(k));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!nablas[k](i, j).is_zero()) m(i, j) = m(i, j) + a * nablas[k](i, j);
  }
  Vec<MultiPoly> target = detail::poly_transpose_product(phi, m).entries();

  std::vector<Vec<MultiPoly>> rows;
  for (const auto& g : nablas) rows.push_back(g.entries());
  for (const auto& g : b2_generators) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("coboundary size differs");
    rows.push_back(g.entries());
  }
  std::size_t r_count = rows.size(), width = n * n;
  std::vector<Vec<MultiPoly>> track(r_count, Vec<MultiPoly>(r_count, MultiPoly(0)));
  for (std::size_t r = 0; r < r_count; ++r) track[r][r] = MultiPoly(1);

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
  std::vector<bool> used(r_count, false);
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t r = 0; r < r_count && !progress; ++r) {
      if (used[r]) continue;
      for (std::size_t c = 0; c < width; ++c) {
        const MultiPoly& e = rows[r][c];
        if (e.is_zero() || !e.is_constant()) continue;
        Rational inv = e.constant_term().inverse();
        for (auto& x : rows[r]) x = x * MultiPoly(inv);
        for (auto& x : track[r]) x = x * MultiPoly(inv);
        for (std::size_t s = 0; s < r_count; ++s) {
          if (s == r || rows[s][c].is_zero()) continue;
          MultiPoly f = rows[s][c];
          for (std::size_t k = 0; k < width; ++k) rows[s][k] = rows[s][k] - f * rows[r][k];
          for (std::size_t k = 0; k < r_count; ++k) track[s][k] = track[s][k] - f * track[r][k];
        }
        used[r] = true;
        pivots.emplace_back(r, c);
        progress = true;
        break;
      }
    }
  }
  for (std::size_t r = 0; r < r_count; ++r) {
    if (used[r]) continue;
    for (const auto& x : rows[r])
      if (!x.is_zero()) throw PreconditionFailed("basis elimination found no constant pivot");
  }

  std::vector<MultiPoly> by_row(r_count, MultiPoly(0));
  for (const auto& [r, c] : pivots) {
    MultiPoly cr = target[c];
    if (cr.is_zero()) continue;
    by_row[r] = cr;
    for (std::size_t k = 0; k < width; ++k) target[k] = target[k] - cr * rows[r][k];
  }
  for (std::size_t k = 0; k < width; ++k)
    if (!target[k].is_zero()) {
      out.detail = "phi^T M phi leaves the span of the nablas and B^2";
      return out;
    }

  out.computed.assign(nablas.size(), MultiPoly(0));
  for (std::size_t j = 0; j < nablas.size(); ++j)
    for (std::size_t r = 0; r < r_count; ++r)
      if (!by_row[r].is_zero() && !track[r][j].is_zero()) out.computed[j] = out.computed[j] + by_row[r] * track[r][j];

  for (std::size_t j = 0; j < nablas.size(); ++j)
    if (!(out.computed[j] == table[j])) {
      out.first_difference = j;
      out.detail = "coefficient " + std::to_string(j + 1) + ": computed " + out.computed[j].str() +
                   ", table " + table[j].str();
      return out;
    }
  out.ok = true;
  return out;
}

/// Coboundaries of the dual basis for an algebra with polynomial constants.
inline std::vector<PolyMatrix> symbolic_b2_generators(const Algebra<MultiPoly>& a) {
  std::size_t n = a.dim();
  std::vector<PolyMatrix> out;
  for (std::size_t k = 0; k < n; ++k) {
    PolyMatrix g(n, n);
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        g(i, j) = a.coeff(i, j, k);
        any = any || !g(i, j).is_zero();
      }
    if (any) out.push_back(std::move(g));
  }
  return out;
}

template <class F>
struct CensusOrbit {
  LineClass cls;
  Form<F> representative;
  std::size_t size = 0;
};

template <class F>
struct Census {
  std::size_t h2_dim = 0;
  std::size_t total_lines = 0;
  std::size_t group_order = 0;
  std::map<LineClass, std::size_t> lines_by_class;
  std::map<LineClass, std::size_t> orbits_by_class;
  std::vector<CensusOrbit<F>> orbits;
  bool class_stable = true;  // every orbit lies in a single class
};

/// Enumerates all lines of H^2(A) over F_p and splits them into Aut(A)-orbits.
template <class F>
Census<F> orbit_census_fp(const Algebra<F>& a, std::uint64_t max_search = default_max_search) {
  constexpr int p = field_traits<F>::characteristic;
  static_assert(p > 0, "orbit_census_fp needs a prime field");
  if (p != 2 && p != 3) throw PreconditionFailed("orbit census needs p in {2, 3}");
  if (a.dim() > 3) throw PreconditionFailed("orbit census needs dim A <= 3");
  std::size_t n = a.dim();
  auto cb = cohomology(a);
  std::size_t h = cb.h2_dim();

  std::uint64_t lines = 0;
  for (std::size_t k = 0, pk = 1; k < h; ++k, pk *= p) lines += pk;
  auto group = aut_group_fp(a, max_search);
  if (static_cast<long double>(lines) * group.size() > static_cast<long double>(max_search))
    throw ResourceBound("orbit census: " + std::to_string(lines) + " lines times " + std::to_string(group.size()) +
                        " automorphisms exceeds the bound");

  std::vector<Vec<F>> basis_cols = cb.b2.basis();
  std::size_t b2_dim = basis_cols.size();
  for (const auto& r : cb.h2_reps) basis_cols.push_back(form_vec(r));
  Matrix<F> coord_matrix = Matrix<F>::from_columns(basis_cols, n * n);
  auto h2_coords = [&](const Form<F>& g) {
    auto c = solve_linear(coord_matrix, form_vec(g));
    return Vec<F>(c->begin() + static_cast<std::ptrdiff_t>(b2_dim), c->end());
  };

  std::vector<Matrix<F>> actions;
  for (const auto& g : group) {
    Matrix<F> m(h, h);
    for (std::size_t k = 0; k < h; ++k) {
      auto col = h2_coords(act(g, cb.h2_reps[k]));
      for (std::size_t r = 0; r < h; ++r) m(r, k) = col[r];
    }
    actions.push_back(std::move(m));
  }

  auto encode = [&](Vec<F> v) -> std::uint64_t {
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    F inv = v[lead].inverse();
    std::uint64_t code = 0;
    for (auto& x : v) code = code * p + static_cast<std::uint64_t>((x * inv).residue());
    return code;
  };
  std::vector<Vec<F>> line_vecs;
  std::map<std::uint64_t, std::size_t> index;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < h; ++k) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec<F> v(h);
    std::uint64_t c = code;
    for (std::size_t k = h; k-- > 0;) {
      v[k] = F(static_cast<int>(c % p));
      c /= p;
    }
    if (encode(v) != code) continue;
    index[code] = line_vecs.size();
    line_vecs.push_back(std::move(v));
  }

  std::vector<std::size_t> parent(line_vecs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t l = 0; l < line_vecs.size(); ++l)
    for (const auto& m : actions) {
      std::size_t img = index.at(encode(m * line_vecs[l]));
      std::size_t ra = find(l), rb = find(img);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }

  auto ctx = detail::line_context(a);
  auto form_of = [&](const Vec<F>& v) {
    Form<F> g(n, n);
    for (std::size_t k = 0; k < h; ++k)
      if (!v[k].is_zero()) g = g + cb.h2_reps[k] * v[k];
    return g;
  };

  Census<F> out;
  out.h2_dim = h;
  out.total_lines = line_vecs.size();
  out.group_order = group.size();
  std::map<std::size_t, std::size_t> orbit_of_root;
  for (std::size_t l = 0; l < line_vecs.size(); ++l) {
    Form<F> theta = form_of(line_vecs[l]);
    LineClass cls = detail::classify_with(ctx, n, theta);
    ++out.lines_by_class[cls];
    std::size_t root = find(l);
    auto it = orbit_of_root.find(root);
    if (it == orbit_of_root.end()) {
      orbit_of_root[root] = out.orbits.size();
      out.orbits.push_back({cls, theta, 1});
      ++out.orbits_by_class[cls];
    } else {
      auto& orb = out.orbits[it->second];
      ++orb.size;
      if (orb.cls != cls) out.class_stable = false;
    }
  }
  return out;
}

struct CensusConsistency {
  std::size_t u1_lines = 0;
  std::size_t u1_orbits = 0;
  std::size_t iso_classes = 0;
  bool ok() const { return u1_orbits == iso_classes; }
};

/// Compares the U1 orbit count with the number of isomorphism classes among
/// the extensions by all U1 lines, found by exhaustive pairwise search.
template <class F>
CensusConsistency census_consistency(const Algebra<F>& a, std::uint64_t max_search = default_max_search) {
  auto census = orbit_census_fp(a, max_search);
  CensusConsistency out;
  out.u1_orbits = census.orbits_by_class[LineClass::U1];

  auto cb = cohomology(a);
  std::size_t h = cb.h2_dim();
  constexpr int p = field_traits<F>::characteristic;
  auto ctx = detail::line_context(a);
  std::vector<std::pair<Fingerprint, Algebra<F>>> classes;
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < h; ++k) total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec<F> v(h);
    std::uint64_t c = code;
    for (std::size_t k = h; k-- > 0;) {
      v[k] = F(static_cast<int>(c % p));
      c /= p;
    }
    std::size_t lead = 0;
    while (v[lead].is_zero()) ++lead;
    if (!(v[lead] == F(1))) continue;
    Form<F> theta(a.dim(), a.dim());
    for (std::size_t k = 0; k < h; ++k)
      if (!v[k].is_zero()) theta = theta + cb.h2_reps[k] * v[k];
    if (detail::classify_with(ctx, a.dim(), theta) != LineClass::U1) continue;
    ++out.u1_lines;
    Algebra<F> ext = central_extension(a, theta);
    Fingerprint fp = fingerprint(ext);
    bool found = false;
    for (const auto& [cfp, rep] : classes) {
      if (!(cfp == fp)) continue;
      if (iso_search_fp(ext, rep, max_search)) {
        found = true;
        break;
      }
    }
    if (!found) classes.emplace_back(fp, ext);
  }
  out.iso_classes = classes.size();
  return out;
}

}  // namespace nilext
