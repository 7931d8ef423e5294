/*
   Copyright 2026 The ultrainv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ULTRAINV_FIELD_HPP
#define ULTRAINV_FIELD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ultrainv/errors.hpp"

namespace ultrainv {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Exact arithmetic in GF(p^k). Elements are passed around as integer codes
/// enc(x) = sum digits[i] * p^i in [0, q), where digits are the coordinates of
/// x in the power basis of the canonical defining polynomial.
///
/// The defining polynomial is the lexicographically smallest monic irreducible
/// of degree k over GF(p), comparing coefficient vectors (c_0, ..., c_{k-1})
/// as base-p integers ascending. Two fields with the same (p, k) are the same
/// object: instances are interned and immutable, so `const FiniteField*` is a
/// stable identity and every operation is safe to call concurrently.
class FiniteField {
 public:
  /// Interned accessor; checks p prime (trial division) and p^k <= 2^48.
  static const FiniteField& get(u64 p, unsigned k);

  /// Parses "p^k" (or a bare prime "p", meaning k = 1).
  static const FiniteField& parse(const std::string& text);

  u64 p() const { return p_; }
  unsigned k() const { return k_; }
  u64 q() const { return q_; }
  /// Defining polynomial coefficients, constant first, length k+1, monic.
  const std::vector<u64>& defining() const { return defining_; }

  std::string name() const;  // canonical "p^k"

  // --- element arithmetic on enc codes ------------------------------------
  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;
  u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }
  u64 pow(u64 a, u64 e) const;
  /// a^e with possibly negative e (a != 0 when e < 0).
  u64 pow_signed(u64 a, i64 e) const;

  bool is_valid(u64 a) const { return a < q_; }
  u64 zero() const { return 0; }
  u64 one() const { return 1; }

  /// x^(p^j); frobenius(x, k) == x.
  u64 frobenius(u64 x, unsigned j) const;

  /// Norm and trace onto the subfield GF(p^s), s | k, as elements of this
  /// field (they are Frobenius^s-fixed). Errors with NotADivisor otherwise.
  std::pair<u64, u64> norm_trace(u64 x, unsigned subfield_degree) const;

  /// Smallest l >= 1 with x^l = 1; divides q-1. Errors on x = 0.
  u64 mult_order(u64 x) const;

  /// A fixed primitive element (smallest enc of multiplicative order q-1).
  u64 generator() const;

  /// Prime factorization of q-1, ascending, with multiplicity collapsed out.
  const std::vector<u64>& unit_group_prime_factors() const;

  std::vector<u64> digits(u64 enc) const;
  u64 from_digits(const std::vector<u64>& d) const;

  /// All q elements in enc order (budget-guarded: q <= 2^24).
  std::vector<u64> elements() const;

 private:
  FiniteField(u64 p, unsigned k);
  FiniteField(const FiniteField&) = delete;

  u64 mul_nontable(u64 a, u64 b) const;

  u64 p_, q_;
  unsigned k_;
  std::vector<u64> defining_;

  // log/exp tables for q <= table limit; empty otherwise
  std::vector<u64> exp_;    // exp_[i] = g^i, length q-1
  std::vector<u64> log_;    // log_[enc] for enc >= 1
  u64 generator_ = 0;
  std::vector<u64> q1_primes_;
};

/// Field homomorphism GF(p^s) -> GF(p^K), s | K, sending the canonical
/// generator of the subfield to its smallest-enc root in the big field.
class Embedding {
 public:
  Embedding(const FiniteField& sub, const FiniteField& big);

  const FiniteField& sub() const { return *sub_; }
  const FiniteField& big() const { return *big_; }
  u64 image_of_generator() const { return root_; }

  u64 apply(u64 sub_enc) const;

 private:
  const FiniteField* sub_;
  const FiniteField* big_;
  u64 root_;                   // smallest-enc root of sub.defining in big
  std::vector<u64> powers_;    // root_^i for i < sub.k
};

inline Embedding embed(const FiniteField& sub, const FiniteField& big) { return {sub, big}; }

// --- small integer number theory helpers used across modules --------------
bool is_prime_u64(u64 n);                     // deterministic trial division
std::vector<u64> prime_factors_u64(u64 n);    // distinct primes, ascending
u64 gcd_u64(u64 a, u64 b);
u64 pow_u64(u64 base, u64 exp);               // overflow-unchecked power
/// Multiplicative order of a modulo m, gcd(a, m) = 1.
u64 mult_order_mod(u64 a, u64 m);

}  // namespace ultrainv

#endif
