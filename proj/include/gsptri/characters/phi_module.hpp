#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gsptri/characters/character.hpp"
#include "gsptri/characters/dominance.hpp"
#include "gsptri/error.hpp"
#include "gsptri/weyl/permutation.hpp"

namespace gsptri {

// An ordering of the Frobenius eigenvalues plus, per embedding, which
// Hodge-Tate weight sits in each step of the flag.  Both 1-based.
struct Refinement {
  Perm eigenvalue_order;
  std::vector<Perm> weight_order;  // one per embedding

  friend bool operator==(const Refinement&, const Refinement&) = default;
};

struct PhiModuleData {
  PadicFieldShape shape;
  std::vector<Rational> eigenvalues;         // m nonzero values
  std::vector<std::vector<int>> ht_type;     // per embedding, weakly decreasing, length m
  std::vector<Refinement> refinements;       // optional explicit list

  std::size_t m() const { return eigenvalues.size(); }

  void validate() const {
    shape.validate();
    if (eigenvalues.empty()) throw ArgumentError("phi-module: no eigenvalues");
    for (const auto& a : eigenvalues)
      if (a.is_zero()) throw ArgumentError("phi-module: zero eigenvalue");
    if (ht_type.size() != shape.embeddings()) throw ArgumentError("phi-module: ht_type needs one list per embedding");
    for (const auto& k : ht_type) {
      if (k.size() != m()) throw ArgumentError("phi-module: ht_type length differs from eigenvalue count");
      if (!std::is_sorted(k.begin(), k.end(), std::greater<>()))
        throw ArgumentError("phi-module: ht_type must be weakly decreasing");
    }
    for (const auto& r : refinements) validate_refinement(r);
  }

  void validate_refinement(const Refinement& r) const {
    if (r.eigenvalue_order.size() != m() || !is_permutation(r.eigenvalue_order))
      throw ArgumentError("refinement: eigenvalue_order is not a permutation of 1..m");
    if (r.weight_order.size() != shape.embeddings())
      throw ArgumentError("refinement: need one weight_order per embedding");
    for (const auto& w : r.weight_order)
      if (w.size() != m() || !is_permutation(w)) throw ArgumentError("refinement: weight_order is not a permutation of 1..m");
  }

  Refinement identity_refinement(const Perm& eigen_order) const {
    return Refinement{eigen_order, std::vector<Perm>(shape.embeddings(), identity_perm(static_cast<int>(m())))};
  }
};

struct SymplecticPhiData {
  PhiModuleData base;
  Rational gamma{1};
  Perm pairing;  // fixed-point-free involution, 1-based

  int n() const { return static_cast<int>(base.m() / 2); }

  // Structural problems are argument errors; a pairing whose products miss
  // gamma contradicts the data itself and is a data-integrity error.
  void validate() const {
    base.validate();
    if (base.m() % 2 != 0) throw ArgumentError("symplectic data: eigenvalue count must be even");
    if (gamma.is_zero()) throw ArgumentError("symplectic data: gamma must be nonzero");
    if (pairing.size() != base.m() || !is_permutation(pairing))
      throw ArgumentError("symplectic data: pairing is not a permutation of 1..2n");
    for (int i = 1; i <= static_cast<int>(pairing.size()); ++i) {
      const int j = at(pairing, i);
      if (j == i || at(pairing, j) != i) throw ArgumentError("symplectic data: pairing is not a fixed-point-free involution");
      if (base.eigenvalues[static_cast<std::size_t>(i - 1)] * base.eigenvalues[static_cast<std::size_t>(j - 1)] != gamma)
        throw DataIntegrityError("symplectic data: phi_" + std::to_string(i) + " * phi_" + std::to_string(j) + " != gamma");
    }
  }
};

// delta_i = z^{k_i} unr(phi_i) with phi_i = eigenvalues[eigenvalue_order(i)]
// and k_{i,tau} = ht_type[tau][weight_order_tau(i)].
inline std::vector<Character> berger_parameter(const PhiModuleData& data, const Refinement& ref) {
  data.validate_refinement(ref);
  std::vector<Character> out;
  for (int i = 1; i <= static_cast<int>(data.m()); ++i) {
    std::vector<int> k;
    for (std::size_t t = 0; t < data.shape.embeddings(); ++t)
      k.push_back(data.ht_type[t][static_cast<std::size_t>(at(ref.weight_order[t], i) - 1)]);
    out.emplace_back(std::move(k), data.eigenvalues[static_cast<std::size_t>(at(ref.eigenvalue_order, i) - 1)]);
  }
  return out;
}

inline bool is_phi_generic(const PhiModuleData& data) {
  const Rational q = data.shape.q();
  for (std::size_t i = 0; i < data.m(); ++i)
    for (std::size_t j = 0; j < data.m(); ++j) {
      if (i == j) continue;
      if (data.eigenvalues[i] == data.eigenvalues[j]) return false;
      if (data.eigenvalues[i] / data.eigenvalues[j] == q) return false;
    }
  return true;
}

inline bool is_regular_ht(const PhiModuleData& data) {
  for (const auto& k : data.ht_type)
    for (std::size_t i = 0; i + 1 < k.size(); ++i)
      if (!(k[i] > k[i + 1])) return false;
  return true;
}

// Orderings sigma of 1..2n with sigma(2n+1-i) = pairing(sigma(i)), lex order,
// each with the identity weight assignment.
inline std::vector<Refinement> enumerate_symplectic_refinements(const SymplecticPhiData& data) {
  data.validate();
  const int n = data.n();
  for (std::size_t i = 0; i < data.base.m(); ++i)
    for (std::size_t j = i + 1; j < data.base.m(); ++j)
      if (data.base.eigenvalues[i] == data.base.eigenvalues[j])
        throw ArgumentError("symplectic refinements: eigenvalues must be distinct");
  std::vector<Refinement> out;
  // Choose sigma(1..n) injectively avoiding partners; the tail is forced.
  Perm head;
  std::vector<bool> used(static_cast<std::size_t>(2 * n + 1), false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(head.size()) == n) {
      Perm sigma(static_cast<std::size_t>(2 * n));
      for (int i = 1; i <= n; ++i) {
        sigma[static_cast<std::size_t>(i - 1)] = head[static_cast<std::size_t>(i - 1)];
        sigma[static_cast<std::size_t>(partner(n, i) - 1)] = at(data.pairing, head[static_cast<std::size_t>(i - 1)]);
      }
      out.push_back(data.base.identity_refinement(sigma));
      return;
    }
    for (int x = 1; x <= 2 * n; ++x) {
      const int y = at(data.pairing, x);
      if (used[static_cast<std::size_t>(x)] || used[static_cast<std::size_t>(y)]) continue;
      used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(y)] = true;
      head.push_back(x);
      self(self);
      head.pop_back();
      used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(y)] = false;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end(), [](const Refinement& a, const Refinement& b) { return a.eigenvalue_order < b.eigenvalue_order; });
  return out;
}

// All m! eigenvalue orderings with the identity (noncritical) weight order.
inline std::vector<Refinement> enumerate_gl_refinements(const PhiModuleData& data) {
  data.validate();
  std::vector<Refinement> out;
  for (const auto& p : symmetric_group(static_cast<int>(data.m()))) out.push_back(data.identity_refinement(p));
  return out;
}

// Degrees of the refinement's own parameter, per embedding.
inline std::vector<std::vector<int>> refinement_degrees(const PhiModuleData& data, const Refinement& ref) {
  const auto params = berger_parameter(data, ref);
  std::vector<std::vector<int>> degrees(data.shape.embeddings());
  for (std::size_t t = 0; t < degrees.size(); ++t)
    for (const auto& d : params) degrees[t].push_back(-d.weights[t]);
  return degrees;
}

// The algorithm's output for the refinement equals its own degree sequence.
inline bool is_noncritical(const PhiModuleData& data, const Refinement& ref, GroupKind group) {
  if (!is_regular_ht(data)) throw PreconditionError("noncritical: Hodge-Tate type is not regular");
  const auto degrees = refinement_degrees(data, ref);
  return strictly_dominant_weight(degrees, group) == degrees;
}

struct CheckResult {
  bool verdict = true;
  std::string violated;  // empty when verdict holds
  std::string detail;
};

// regular HT, then phi-generic, then every refinement noncritical.  The
// refinements are the explicit list when given, else all GL orderings.
inline CheckResult check_benign(const PhiModuleData& data, GroupKind group = GroupKind::GL,
                                const std::vector<Refinement>* refinements = nullptr) {
  if (!is_regular_ht(data)) return {false, "regular_ht", "Hodge-Tate type is not strictly decreasing"};
  if (!is_phi_generic(data)) return {false, "phi_generic", "eigenvalues repeat or a ratio equals p^f"};
  std::vector<Refinement> all;
  if (refinements) all = *refinements;
  else if (!data.refinements.empty()) all = data.refinements;
  else all = enumerate_gl_refinements(data);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!is_noncritical(data, all[i], group))
      return {false, "noncritical", "refinement " + std::to_string(i) + " is critical"};
  return {};
}

inline bool is_benign(const PhiModuleData& data, GroupKind group = GroupKind::GL) {
  return check_benign(data, group).verdict;
}

// k_{tau,i} - k_{tau,i+1} > e * val(delta_1(varpi) ... delta_i(varpi)) for
// i = 1..n, with k given as n+1 weights per embedding.  The right side is an
// integer since val(tau(varpi)) = 1/e.
inline CheckResult check_ext_saturated(const PadicFieldShape& shape, const std::vector<std::vector<int>>& k,
                                       const std::vector<Character>& params) {
  if (k.size() != shape.embeddings()) throw ArgumentError("ext_saturated: need one weight list per embedding");
  if (params.empty()) throw ArgumentError("ext_saturated: empty parameter");
  const std::size_t n = params.size() - 1;
  for (const auto& row : k)
    if (row.size() != n + 1) throw ArgumentError("ext_saturated: weight lists must have n+1 entries");
  for (const auto& d : params)
    if (d.weights.size() != shape.embeddings()) throw ArgumentError("ext_saturated: character weight count != |Sigma|");
  long acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += params[i].scaled_valuation(shape);
    for (std::size_t t = 0; t < k.size(); ++t) {
      if (!(k[t][i] - k[t][i + 1] > acc))
        return {false, "ext_saturated",
                "i=" + std::to_string(i + 1) + ", " + shape.sigma[t] + ": " + std::to_string(k[t][i] - k[t][i + 1]) +
                    " <= " + std::to_string(acc)};
    }
  }
  return {};
}

inline bool ext_saturated_check(const PadicFieldShape& shape, const std::vector<std::vector<int>>& k,
                                const std::vector<Character>& params) {
  return check_ext_saturated(shape, k, params).verdict;
}

// S = {i : delta_i != delta'_i}; each i in S needs phi_i not in {1, p^f} and
// max(k_{i,tau}, 1 - k'_{i,tau}) > 0 for every tau.
inline CheckResult check_h_surjectivity(const std::vector<Character>& d, const std::vector<Character>& dprime,
                                        const PadicFieldShape& shape) {
  if (d.size() != dprime.size()) throw ArgumentError("h_surjectivity: parameter lengths differ");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].value != dprime[i].value)
      throw ArgumentError("h_surjectivity: line " + std::to_string(i + 1) + " has mismatched unramified values");
    if (d[i].weights.size() != shape.embeddings() || dprime[i].weights.size() != shape.embeddings())
      throw ArgumentError("h_surjectivity: character weight count != |Sigma|");
  }
  const Rational q = shape.q();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == dprime[i]) continue;
    const std::string line = "line " + std::to_string(i + 1);
    if (d[i].value.is_one() || d[i].value == q) return {false, "excluded_value", line + ": phi = " + d[i].value.to_string()};
    for (std::size_t t = 0; t < shape.embeddings(); ++t)
      if (!(std::max(d[i].weights[t], 1 - dprime[i].weights[t]) > 0))
        return {false, "weight_condition", line + ", " + shape.sigma[t]};
  }
  return {};
}

inline bool h_surjectivity_check(const std::vector<Character>& d, const std::vector<Character>& dprime,
                                 const PadicFieldShape& shape) {
  return check_h_surjectivity(d, dprime, shape).verdict;
}

}  // namespace gsptri
