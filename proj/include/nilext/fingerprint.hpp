#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilext/algebra.hpp"
#include "nilext/identities.hpp"
#include "nilext/linalg.hpp"

namespace nilext {

/// Isomorphism invariants of an algebra. Equal algebras up to isomorphism have
/// equal fingerprints; the converse does not hold.
struct Fingerprint {
  std::vector<std::size_t> power_chain;
  std::vector<std::size_t> left_chain;   // A, A A, (A A) A, ...
  std::vector<std::size_t> right_chain;  // A, A A, A (A A), ...
  std::size_t ann = 0;
  std::size_t ann_left = 0;
  std::size_t ann_right = 0;
  std::size_t der = 0;
  std::size_t commutator_span = 0;      // dim span{xy - yx}
  std::size_t anticommutator_span = 0;  // dim span{xy + yx}
  bool commutative = false;
  bool anticommutative = false;
  bool cd = false;
  bool xy_z = false;
  bool x_yz = false;
  bool alia0 = false;
  bool alia1 = false;
  bool two_sided_alia = false;
  bool lie_admissible = false;

  std::vector<std::pair<std::string, std::string>> components() const {
    auto dims = [](const std::vector<std::size_t>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + "]";
    };
    auto b = [](bool x) { return std::string(x ? "true" : "false"); };
    return {{"power_chain", dims(power_chain)},
            {"left_chain", dims(left_chain)},
            {"right_chain", dims(right_chain)},
            {"ann", std::to_string(ann)},
            {"ann_left", std::to_string(ann_left)},
            {"ann_right", std::to_string(ann_right)},
            {"der", std::to_string(der)},
            {"commutator_span", std::to_string(commutator_span)},
            {"anticommutator_span", std::to_string(anticommutator_span)},
            {"commutative", b(commutative)},
            {"anticommutative", b(anticommutative)},
            {"cd", b(cd)},
            {"xy_z", b(xy_z)},
            {"x_yz", b(x_yz)},
            {"alia0", b(alia0)},
            {"alia1", b(alia1)},
            {"two_sided_alia", b(two_sided_alia)},
            {"lie_admissible", b(lie_admissible)}};
  }

  std::string str() const {
    std::string s;
    for (const auto& [k, v] : components()) s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
  }

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) { return a.components() == b.components(); }
};

/// Name of the first component on which the fingerprints differ.
inline std::optional<std::string> first_difference(const Fingerprint& a, const Fingerprint& b) {
  auto ca = a.components(), cb = b.components();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i].second != cb[i].second) return ca[i].first;
  return std::nullopt;
}

namespace detail {

template <class F>
std::vector<std::size_t> normed_chain(const Algebra<F>& a, bool left) {
  std::size_t n = a.dim();
  Subspace<F> full = Subspace<F>::full(n), cur = full;
  std::vector<std::size_t> dims{n};
  for (std::size_t k = 0; k < 4 * n + 4; ++k) {
    Subspace<F> next = left ? product_space(a, cur, full) : product_space(a, full, cur);
    if (next == cur) break;
    dims.push_back(next.dim());
    cur = next;
    if (cur.is_zero()) break;
  }
  return dims;
}

template <class F>
std::size_t symmetric_span(const Algebra<F>& a, int sign) {
  std::size_t n = a.dim();
  std::vector<Vec<F>> vs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vec<F> v = a.product(i, j);
      Vec<F> w = a.product(j, i);
      v = axpy(F(sign), w, v);
      if (!is_zero_vec(v)) vs.push_back(v);
    }
  return Subspace<F>(n, vs).dim();
}

}  // namespace detail

template <class F>
Fingerprint fingerprint(const Algebra<F>& a) {
  Fingerprint fp;
  for (const auto& s : power_chain(a)) fp.power_chain.push_back(s.dim());
  fp.left_chain = detail::normed_chain(a, true);
  fp.right_chain = detail::normed_chain(a, false);
  fp.ann = annihilator(a, Side::two_sided).dim();
  fp.ann_left = annihilator(a, Side::left).dim();
  fp.ann_right = annihilator(a, Side::right).dim();
  fp.der = derivations(a).size();
  fp.commutator_span = detail::symmetric_span(a, -1);
  fp.anticommutator_span = detail::symmetric_span(a, 1);
  fp.commutative = holds(a, builtin("commutative"));
  fp.anticommutative = holds(a, builtin("anticommutative"));
  fp.cd = holds(a, builtin_set("cd"));
  fp.xy_z = holds(a, builtin("xy_z"));
  fp.x_yz = holds(a, builtin("x_yz"));
  fp.alia0 = holds(a, builtin("alia0"));
  fp.alia1 = holds(a, builtin("alia1"));
  fp.two_sided_alia = holds(a, builtin_set("two_sided_alia"));
  fp.lie_admissible = holds(a, builtin("jacobi_commutator"));
  return fp;
}

}  // namespace nilext
