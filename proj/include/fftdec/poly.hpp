// Dense polynomial arithmetic over GF(2^m). Index i is the coefficient of x^i.
#pragma once

#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "fftdec/gf.hpp"

namespace fftdec {

// Normalized representation: the zero polynomial is the empty vector,
// anything else has a nonzero leading (back) coefficient.
using Poly = std::vector<gfe>;

// Degree of the zero polynomial; sentinel ordered below every real degree.
inline constexpr int kZeroDeg = std::numeric_limits<int>::min();

inline int poly_deg(const Poly& p) { return p.empty() ? kZeroDeg : int(p.size()) - 1; }

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_from(std::initializer_list<gfe> coeffs) {
  Poly p(coeffs);
  poly_trim(p);
  return p;
}

template <class F>
Poly poly_add(const F& f, const Poly& a, const Poly& b) {
  const Poly& small = a.size() <= b.size() ? a : b;
  Poly out = a.size() <= b.size() ? b : a;
  for (std::size_t i = 0; i < small.size(); ++i) out[i] = f.add(out[i], small[i]);
  poly_trim(out);
  return out;
}

template <class F>
Poly poly_scale(const F& f, const Poly& a, gfe c) {
  if (c == 0) return {};
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], c);
  return out;
}

template <class F>
Poly poly_mul(const F& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  return out;
}

template <class F>
gfe poly_eval(const F& f, const Poly& p, gfe x) {
  if (p.empty()) return 0;
  gfe acc = p.back();
  for (std::size_t i = p.size() - 1; i-- > 0;) acc = f.add(f.mul(acc, x), p[i]);
  return acc;
}

template <class F>
std::pair<Poly, Poly> poly_divmod(const F& f, const Poly& num, const Poly& den) {
  if (den.empty()) throw Error("polynomial division by zero");
  if (num.size() < den.size()) return {Poly{}, num};
  Poly rem = num;
  Poly quot(num.size() - den.size() + 1, 0);
  const std::size_t dd = den.size() - 1;
  const bool monic = den.back() == 1;
  const gfe lead_inv = monic ? gfe(1) : f.inv(den.back());
  for (std::size_t d = num.size(); d-- > dd;) {
    gfe c = rem[d];
    if (c == 0) continue;
    if (!monic) c = f.mul(c, lead_inv);
    quot[d - dd] = c;
    rem[d] = 0;
    for (std::size_t j = 0; j < dd; ++j)
      rem[d - dd + j] = f.add(rem[d - dd + j], f.mul(c, den[j]));
  }
  poly_trim(rem);
  poly_trim(quot);
  return {std::move(quot), std::move(rem)};
}

template <class F>
Poly poly_monic(const F& f, const Poly& p) {
  if (p.empty() || p.back() == 1) return p;
  return poly_scale(f, p, f.inv(p.back()));
}

template <class F>
Poly poly_gcd(const F& f, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

// Formal derivative in characteristic 2: coefficient i of p' is p[i+1] for even i.
inline Poly poly_derivative(const Poly& p) {
  if (p.size() < 2) return {};
  Poly out(p.size() - 1, 0);
  for (std::size_t i = 0; i < out.size(); i += 2) out[i] = p[i + 1];
  poly_trim(out);
  return out;
}

}  // namespace fftdec
