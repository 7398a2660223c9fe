// Dense univariate polynomials over an exact field type T. T must provide
// +, -, unary -, *, /, is_zero(), and ==. The zero polynomial is the empty
// coefficient vector; coefficients run low-to-high.
#pragma once

#include <stdexcept>
#include <vector>

namespace skolemlab::poly {

template <class T>
using Coeffs = std::vector<T>;

template <class T>
void trim(Coeffs<T>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class T>
bool is_zero(const Coeffs<T>& p) {
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

// Degree of a trimmed nonzero polynomial; -1 for zero.
template <class T>
long degree(const Coeffs<T>& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (!p[i].is_zero()) return static_cast<long>(i);
  return -1;
}

template <class T>
Coeffs<T> add(const Coeffs<T>& a, const Coeffs<T>& b) {
  Coeffs<T> r = a.size() >= b.size() ? a : b;
  const Coeffs<T>& s = a.size() >= b.size() ? b : a;
  for (size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
  trim(r);
  return r;
}

template <class T>
Coeffs<T> neg(Coeffs<T> a) {
  for (auto& c : a) c = -c;
  return a;
}

template <class T>
Coeffs<T> sub(const Coeffs<T>& a, const Coeffs<T>& b) {
  return add(a, neg(b));
}

template <class T>
Coeffs<T> mul(const Coeffs<T>& a, const Coeffs<T>& b) {
  if (is_zero(a) || is_zero(b)) return {};
  Coeffs<T> r(a.size() + b.size() - 1, a.front() - a.front());  // zeros
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  trim(r);
  return r;
}

template <class T>
Coeffs<T> scale(Coeffs<T> a, const T& s) {
  for (auto& c : a) c = c * s;
  trim(a);
  return a;
}

template <class T>
struct DivMod {
  Coeffs<T> quot, rem;
};

template <class T>
DivMod<T> divmod(const Coeffs<T>& a, const Coeffs<T>& b) {
  long db = degree(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  Coeffs<T> rem = a;
  trim(rem);
  Coeffs<T> quot;
  T lead_inv = b[db] / b[db] / b[db];  // 1/b[db]
  while (static_cast<long>(rem.size()) - 1 >= db && !rem.empty()) {
    size_t shift = rem.size() - 1 - db;
    T c = rem.back() * lead_inv;
    if (quot.size() < shift + 1) quot.resize(shift + 1, c - c);
    quot[shift] = quot[shift] + c;
    for (long i = 0; i <= db; ++i)
      rem[shift + i] = rem[shift + i] - c * b[i];
    trim(rem);
  }
  return {quot, rem};
}

// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0. Each remainder is
// made monic so coefficient height stays polynomial over infinite fields.
template <class T>
Coeffs<T> gcd(Coeffs<T> a, Coeffs<T> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).rem;
    if (!r.empty()) {
      T inv = r.back() / r.back() / r.back();
      r = scale(r, inv);
    }
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    T inv = a.back() / a.back() / a.back();
    a = scale(a, inv);
  }
  return a;
}

template <class T>
T eval(const Coeffs<T>& p, const T& at) {
  T acc = at - at;  // zero in at's field
  for (size_t i = p.size(); i-- > 0;) acc = acc * at + p[i];
  return acc;
}

// p(x) -> p(c + s*x) for s != 0; used for ball shifts in certification.
template <class T>
Coeffs<T> compose_affine(const Coeffs<T>& p, const T& c, const T& s) {
  Coeffs<T> result;
  Coeffs<T> power{s / s};  // one
  Coeffs<T> base{c, s};
  for (size_t i = 0; i < p.size(); ++i) {
    result = add(result, scale(power, p[i]));
    if (i + 1 < p.size()) power = mul(power, base);
  }
  trim(result);
  return result;
}

}  // namespace skolemlab::poly
