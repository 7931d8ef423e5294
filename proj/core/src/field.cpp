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

#include "ultrainv/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace ultrainv {

namespace {

constexpr u64 kMaxQ = u64(1) << 48;
constexpr u64 kMaxEnumerableQ = u64(1) << 24;
constexpr u64 kTableLimit = u64(1) << 16;

u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

// --- dense polynomials over the prime field GF(p), used only to find the
// --- canonical defining polynomial at field construction time.
using PPoly = std::vector<u64>;  // constant first, no trailing zeros

void ptrim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  ptrim(c);
  return c;
}

// a mod f, f monic
PPoly pmod(PPoly a, const PPoly& f, u64 p) {
  ptrim(a);
  const size_t df = f.size() - 1;
  while (a.size() > df) {
    u64 lead = a.back();
    size_t shift = a.size() - 1 - df;
    if (lead != 0)
      for (size_t i = 0; i < df; ++i) a[shift + i] = (a[shift + i] + (p - lead % p) * f[i] % p) % p;
    a.pop_back();
    ptrim(a);
  }
  return a;
}

PPoly ppowmod_x(u64 e_base, u64 e_exp_of_base, const PPoly& f, u64 p) {
  // X^(e_base^e_exp_of_base) mod f via iterated modexp
  PPoly x = pmod(PPoly{0, 1}, f, p);
  PPoly acc = x;
  for (u64 it = 0; it < e_exp_of_base; ++it) {
    // acc = acc^e_base mod f
    PPoly r{1};
    PPoly b = acc;
    u64 e = e_base;
    while (e) {
      if (e & 1) r = pmod(pmul(r, b, p), f, p);
      b = pmod(pmul(b, b, p), f, p);
      e >>= 1;
    }
    acc = r;
  }
  return acc;
}

PPoly pgcd(PPoly a, PPoly b, u64 p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // make b monic
    u64 lead = b.back();
    if (lead != 1) {
      // inverse mod p by Fermat
      u64 li = 1, base = lead, e = p - 2;
      while (e) {
        if (e & 1) li = li * base % p;
        base = base * base % p;
        e >>= 1;
      }
      for (auto& c : b) c = c * li % p;
    }
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool prime_field_irreducible(const PPoly& f, u64 p, const std::vector<u64>& k_primes) {
  const size_t k = f.size() - 1;
  if (k == 1) return true;
  // X^(p^k) == X mod f
  PPoly xk = ppowmod_x(p, k, f, p);
  PPoly x = pmod(PPoly{0, 1}, f, p);
  if (xk != x) return false;
  for (u64 r : k_primes) {
    PPoly xs = ppowmod_x(p, k / r, f, p);
    // gcd(xs - x, f) must be constant
    PPoly d = xs;
    d.resize(std::max(d.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) d[i] = (d[i] + p - x[i]) % p;
    ptrim(d);
    PPoly g = pgcd(f, d, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors_u64(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 pow_u64(u64 base, u64 exp) {
  u64 r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

u64 mult_order_mod(u64 a, u64 m) {
  require(m >= 1, Errc::InternalError, "modulus must be positive");
  if (m == 1) return 1;
  a %= m;
  require(gcd_u64(a, m) == 1, Errc::NotCoprime, "base not coprime to modulus");
  u64 acc = a % m, e = 1;
  while (acc != 1) {
    acc = mulmod_u64(acc, a, m);
    ++e;
    require(e <= m, Errc::InternalError, "order search overran modulus");
  }
  return e;
}

FiniteField::FiniteField(u64 p, unsigned k) : p_(p), k_(k) {
  require(k >= 1, Errc::DegreeTooLarge, "extension degree must be >= 1");
  require(is_prime_u64(p), Errc::NotPrime, std::to_string(p) + " is not prime");
  // q = p^k with overflow guard
  u64 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    require(q <= kMaxQ / p, Errc::DegreeTooLarge, "p^k exceeds 2^48");
    q *= p;
  }
  q_ = q;

  // Canonical defining polynomial: first irreducible in enc order of
  // (c_0, ..., c_{k-1}). For k = 1 this is X itself.
  auto k_primes = prime_factors_u64(k);
  for (u64 m = 0;; ++m) {
    require(m < q_, Errc::InternalError, "no irreducible polynomial found");
    PPoly f(k + 1, 0);
    u64 t = m;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = t % p;
      t /= p;
    }
    f[k] = 1;
    if (k > 1 && f[0] == 0) continue;  // X | f
    if (prime_field_irreducible(f, p, k_primes)) {
      defining_ = f;
      break;
    }
  }

  q1_primes_ = prime_factors_u64(q_ - 1);

  // Fixed primitive element: smallest enc of order q-1.
  if (q_ == 2) {
    generator_ = 1;
  } else {
    for (u64 a = 2;; ++a) {
      require(a < q_, Errc::InternalError, "no generator found");
      bool ok = true;
      for (u64 r : q1_primes_)
        if (pow(a, (q_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        generator_ = a;
        break;
      }
    }
  }

  if (q_ <= kTableLimit) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    u64 acc = 1;
    for (u64 i = 0; i + 1 < q_; ++i) {
      exp_[i] = acc;
      log_[acc] = i;
      acc = mul_nontable(acc, generator_);
    }
    require(acc == 1, Errc::InternalError, "generator order mismatch");
  }
}

const FiniteField& FiniteField::get(u64 p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<u64, unsigned>, std::unique_ptr<FiniteField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, k);
  auto it = registry.find(key);
  if (it == registry.end())
    it = registry.emplace(key, std::unique_ptr<FiniteField>(new FiniteField(p, k))).first;
  return *it->second;
}

const FiniteField& FiniteField::parse(const std::string& text) {
  auto caret = text.find('^');
  try {
    if (caret == std::string::npos) return get(std::stoull(text), 1);
    u64 p = std::stoull(text.substr(0, caret));
    unsigned k = static_cast<unsigned>(std::stoul(text.substr(caret + 1)));
    return get(p, k);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad field descriptor '" + text + "' (want p^k)");
  }
}

std::string FiniteField::name() const { return std::to_string(p_) + "^" + std::to_string(k_); }

std::vector<u64> FiniteField::digits(u64 enc) const {
  require(enc < q_, Errc::ParseError, "element code out of range");
  std::vector<u64> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = enc % p_;
    enc /= p_;
  }
  return d;
}

u64 FiniteField::from_digits(const std::vector<u64>& d) const {
  require(d.size() == k_, Errc::ParseError, "digit vector length != k");
  u64 enc = 0;
  for (unsigned i = k_; i-- > 0;) {
    require(d[i] < p_, Errc::ParseError, "digit out of range");
    enc = enc * p_ + d[i];
  }
  return enc;
}

u64 FiniteField::add(u64 a, u64 b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 enc = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    u64 da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    u64 s = da + db;
    if (s >= p_) s -= p_;
    enc += s * scale;
    scale *= p_;
  }
  return enc;
}

u64 FiniteField::neg(u64 a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  u64 enc = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    u64 d = a % p_;
    a /= p_;
    enc += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
  }
  return enc;
}

u64 FiniteField::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 FiniteField::mul_nontable(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return mulmod_u64(a, b, p_);
  std::vector<u64> da = digits(a), db = digits(b);
  std::vector<u64> c(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) c[i + j] = (c[i + j] + da[i] * db[j]) % p_;
  }
  // reduce modulo defining (monic)
  for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
    u64 lead = c[d];
    if (lead) {
      for (unsigned i = 0; i < k_; ++i)
        c[d - k_ + i] = (c[d - k_ + i] + (p_ - defining_[i] % p_) * lead) % p_;
      c[d] = 0;
    }
    if (d == 0) break;
  }
  u64 enc = 0;
  for (unsigned i = k_; i-- > 0;) enc = enc * p_ + c[i];
  return enc;
}

u64 FiniteField::mul(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    u64 s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  return mul_nontable(a, b);
}

u64 FiniteField::inv(u64 a) const {
  require(a != 0, Errc::ZeroElement, "inverse of zero");
  if (!exp_.empty()) {
    u64 l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
  }
  return pow(a, q_ - 2);
}

u64 FiniteField::pow(u64 a, u64 e) const {
  if (!exp_.empty() && a != 0) {
    u64 l = mulmod_u64(log_[a], e % (q_ - 1), q_ - 1);
    return exp_[l];
  }
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 FiniteField::pow_signed(u64 a, i64 e) const {
  if (e >= 0) return pow(a, static_cast<u64>(e));
  return pow(inv(a), static_cast<u64>(-e));
}

u64 FiniteField::frobenius(u64 x, unsigned j) const {
  j %= k_;
  if (j == 0 || x == 0 || x == 1) return x;
  if (!exp_.empty()) {
    u64 pj = 1;
    for (unsigned i = 0; i < j; ++i) pj = mulmod_u64(pj, p_ % (q_ - 1), q_ - 1);
    return exp_[mulmod_u64(log_[x], pj, q_ - 1)];
  }
  u64 r = x;
  for (unsigned i = 0; i < j; ++i) r = pow(r, p_);
  return r;
}

std::pair<u64, u64> FiniteField::norm_trace(u64 x, unsigned subfield_degree) const {
  require(subfield_degree >= 1 && k_ % subfield_degree == 0, Errc::NotADivisor,
          "subfield degree must divide k");
  u64 n = 1, t = 0, y = x;
  const unsigned steps = k_ / subfield_degree;
  for (unsigned j = 0; j < steps; ++j) {
    n = mul(n, y);
    t = add(t, y);
    y = frobenius(y, subfield_degree);
  }
  return {n, t};
}

u64 FiniteField::mult_order(u64 x) const {
  require(x != 0, Errc::ZeroElement, "order of zero");
  u64 order = q_ - 1;
  for (u64 r : q1_primes_)
    while (order % r == 0 && pow(x, order / r) == 1) order /= r;
  return order;
}

u64 FiniteField::generator() const { return generator_; }

const std::vector<u64>& FiniteField::unit_group_prime_factors() const { return q1_primes_; }

std::vector<u64> FiniteField::elements() const {
  require(q_ <= kMaxEnumerableQ, Errc::BudgetExceeded, "field too large to enumerate");
  std::vector<u64> v(q_);
  for (u64 i = 0; i < q_; ++i) v[i] = i;
  return v;
}

Embedding::Embedding(const FiniteField& sub, const FiniteField& big) : sub_(&sub), big_(&big) {
  require(sub.p() == big.p() && big.k() % sub.k() == 0, Errc::NotASubfield,
          sub.name() + " is not a subfield of " + big.name());
  if (sub.k() == 1) {
    root_ = 0;  // defining = X, root 0; prime field embeds as the constants
  } else {
    require(sub.q() <= kMaxEnumerableQ, Errc::BudgetExceeded, "subfield too large to embed");
    // The subfield copy inside `big` is {0} union the (sub.q()-1)-torsion of
    // the unit group; scan it for roots of sub.defining, keep the smallest enc.
    u64 step = (big.q() - 1) / (sub.q() - 1);
    u64 gen_pow = big.pow(big.generator(), step);
    u64 best = 0;
    bool found = false;
    u64 cand = 1;
    for (u64 j = 0; j + 1 < sub.q(); ++j, cand = big.mul(cand, gen_pow)) {
      u64 val = 0;
      for (unsigned i = sub.k() + 1; i-- > 0;)
        val = big.add(big.mul(val, cand), sub.defining()[i] % sub.p());
      if (val == 0 && (!found || cand < best)) {
        best = cand;
        found = true;
      }
    }
    require(found, Errc::InternalError, "defining polynomial had no root in extension");
    root_ = best;
  }
  powers_.resize(sub.k());
  u64 acc = 1;
  for (unsigned i = 0; i < sub.k(); ++i) {
    powers_[i] = acc;
    acc = big.mul(acc, root_);
  }
}

u64 Embedding::apply(u64 sub_enc) const {
  require(sub_enc < sub_->q(), Errc::ParseError, "element code out of range");
  u64 out = 0;
  for (unsigned i = 0; i < sub_->k(); ++i) {
    u64 d = sub_enc % sub_->p();
    sub_enc /= sub_->p();
    if (d) out = big_->add(out, big_->mul(d, powers_[i]));
  }
  return out;
}

}  // namespace ultrainv
