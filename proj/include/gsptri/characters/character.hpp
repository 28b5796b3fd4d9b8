#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsptri/error.hpp"
#include "gsptri/exact/rational.hpp"

namespace gsptri {

// K/Q_p with residue degree f and ramification index e; Sigma has e*f labels.
struct PadicFieldShape {
  std::int64_t p = 2;
  int f = 1;
  int e = 1;
  std::vector<std::string> sigma;

  static PadicFieldShape make(std::int64_t p, int f, int e) {
    PadicFieldShape s{p, f, e, {}};
    for (int i = 0; i < e * f; ++i) s.sigma.push_back("tau" + std::to_string(i));
    s.validate();
    return s;
  }

  void validate() const {
    if (!is_prime(p)) throw ArgumentError("shape: p = " + std::to_string(p) + " is not prime");
    if (f < 1 || e < 1) throw ArgumentError("shape: e and f must be positive");
    if (static_cast<int>(sigma.size()) != e * f)
      throw ArgumentError("shape: |Sigma| must equal e*f = " + std::to_string(e * f));
  }

  int degree() const { return e * f; }  // [K:Q_p]
  std::size_t embeddings() const { return sigma.size(); }
  Rational q() const { return Rational(p).pow(f); }  // p^{[K_0:Q_p]}
};

// z^k * unr(a): weights k in Z^Sigma and unramified value a != 0.
struct Character {
  std::vector<int> weights;
  Rational value{1};

  Character() = default;
  Character(std::vector<int> k, Rational a) : weights(std::move(k)), value(std::move(a)) {
    if (value.is_zero()) throw ArgumentError("character: unramified value must be nonzero");
  }

  static Character trivial(std::size_t embeddings) { return Character(std::vector<int>(embeddings, 0), Rational(1)); }

  Character inverse() const {
    std::vector<int> k(weights);
    for (auto& x : k) x = -x;
    return Character(std::move(k), value.inverse());
  }

  friend Character operator*(const Character& a, const Character& b) {
    if (a.weights.size() != b.weights.size()) throw ArgumentError("character: embedding count mismatch");
    std::vector<int> k(a.weights);
    for (std::size_t i = 0; i < k.size(); ++i) k[i] += b.weights[i];
    return Character(std::move(k), a.value * b.value);
  }
  friend Character operator/(const Character& a, const Character& b) { return a * b.inverse(); }
  friend bool operator==(const Character& a, const Character& b) = default;

  // p-adic valuation of delta(varpi_K) times e, an integer:
  // e*val(a) + sum_tau k_tau.
  long scaled_valuation(const PadicFieldShape& shape) const {
    long v = static_cast<long>(shape.e) * padic_valuation(value, shape.p);
    for (int k : weights) v += k;
    return v;
  }

  std::string to_string() const {
    std::string s = "z^(";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + std::to_string(weights[i]);
    return s + ")*unr(" + value.to_string() + ")";
  }
};

// epsilon = z^(1,...,1) * unr(1/q).
inline Character cyclotomic_character(const PadicFieldShape& shape) {
  return Character(std::vector<int>(shape.embeddings(), 1), shape.q().inverse());
}

struct CohomologyDims {
  int h0 = 0;
  int h1 = 0;
  int h2 = 0;
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

// Rank-one table: h0 = 1 iff a = 1 and all k <= 0; h2 = 1 iff a*q = 1 and all
// k >= 1; h1 from the Euler characteristic -chi = [K:Q_p].
inline CohomologyDims cohomology_dims(const Character& d, const PadicFieldShape& shape) {
  if (d.weights.size() != shape.embeddings()) throw ArgumentError("cohomology_dims: weight count != |Sigma|");
  bool all_nonpos = true;
  bool all_pos = true;
  for (int k : d.weights) {
    all_nonpos = all_nonpos && k <= 0;
    all_pos = all_pos && k >= 1;
  }
  CohomologyDims r;
  r.h0 = (d.value.is_one() && all_nonpos) ? 1 : 0;
  r.h2 = ((d.value * shape.q()).is_one() && all_pos) ? 1 : 0;
  r.h1 = shape.degree() + r.h0 + r.h2;
  return r;
}

inline bool is_regular(const Character& d, const PadicFieldShape& shape) {
  const auto h = cohomology_dims(d, shape);
  return h.h0 == 0 && h.h2 == 0;
}

// Every delta_i / delta_j with i < j is regular.
inline bool is_regular_parameter(const std::vector<Character>& params, const PadicFieldShape& shape) {
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (!is_regular(params[i] / params[j], shape)) return false;
  return true;
}

}  // namespace gsptri
