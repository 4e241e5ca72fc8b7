// Additive FFT machinery over GF(2^m): basis enumeration, subspace polynomials,
// the normalized product basis, forward/inverse transforms, basis conversions.
//
// Conventions: a basis (v_0, ..., v_{m-1}) enumerates the field as
// omega_j = sum of v_i over the set bits i of j (bit 0 least significant).
// s_tau is the subspace vanishing polynomial of V_tau = span(v_0..v_{tau-1});
// it is GF(2)-linearized, so its monomial form has nonzero coefficients only
// at degrees 2^0..2^tau. X_j = prod s_tau^{j_tau}, p_j = prod s_tau(v_tau)^{j_tau},
// and the normalized basis element is Xbar_j = X_j / p_j (degree exactly j).
#pragma once

#include <cassert>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "fftdec/gf.hpp"
#include "fftdec/poly.hpp"

namespace fftdec {

// Coordinates with respect to the normalized product basis Xbar_0..Xbar_{2^tau - 1}.
using XbarCoeffs = std::vector<gfe>;

class Basis {
 public:
  Basis(std::shared_ptr<const Field> field, std::vector<gfe> v)
      : field_(std::move(field)), v_(std::move(v)) {
    const Field& f = *field_;
    const int m = f.m();
    if (int(v_.size()) != m)
      throw Error("basis needs exactly m = " + std::to_string(m) + " vectors, got " +
                  std::to_string(v_.size()));
    const std::uint32_t n = f.order();
    omega_.assign(n, 0);
    omega_index_.assign(n, 0);
    std::vector<std::uint8_t> seen(n, 0);
    seen[0] = 1;
    for (std::uint32_t j = 1; j < n; ++j) {
      omega_[j] = f.add(omega_[j & (j - 1)], v_[std::countr_zero(j)]);
      if (seen[omega_[j]])
        throw Error("basis vectors are linearly dependent over GF(2)");
      seen[omega_[j]] = 1;
      omega_index_[omega_[j]] = j;
    }

    // s_tau(v_l) triangle via s_{t+1}(x) = s_t(x)^2 + s_t(v_t) s_t(x).
    s_at_v_.assign(m, std::vector<gfe>(m, 0));
    for (int l = 0; l < m; ++l) s_at_v_[0][l] = v_[l];
    for (int tau = 1; tau < m; ++tau)
      for (int l = tau; l < m; ++l)
        s_at_v_[tau][l] =
            f.mul(s_at_v_[tau - 1][l], f.add(s_at_v_[tau - 1][l], s_at_v_[tau - 1][tau - 1]));
    s_at_v_inv_.assign(m, 0);
    for (int tau = 0; tau < m; ++tau) s_at_v_inv_[tau] = f.inv(s_at_v_[tau][tau]);

    // Monomial subspace polynomials s_0..s_m (sparse: power-of-two degrees only).
    s_poly_.resize(m + 1);
    s_poly_[0] = Poly{0, 1};
    for (int tau = 0; tau < m; ++tau) {
      const Poly& s = s_poly_[tau];
      Poly next(2 * s.size() - 1, 0);
      for (std::size_t i = 0; i < s.size(); ++i) next[2 * i] = f.mul(s[i], s[i]);
      const gfe sv = s_at_v_[tau][tau];
      for (std::size_t i = 0; i < s.size(); ++i)
        next[i] = f.add(next[i], f.mul(sv, s[i]));
      s_poly_[tau + 1] = std::move(next);
    }
    s_terms_.resize(m + 1);
    for (int tau = 0; tau <= m; ++tau)
      for (std::size_t d = 0; d < s_poly_[tau].size(); ++d)
        if (s_poly_[tau][d] != 0) s_terms_[tau].push_back({std::uint32_t(d), s_poly_[tau][d]});
  }

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  int m() const { return field_->m(); }
  const std::vector<gfe>& vectors() const { return v_; }
  gfe omega(std::uint32_t j) const { return omega_[j]; }
  std::uint32_t omega_index(gfe x) const { return omega_index_[x]; }

  // s_tau(v_l); valid for tau <= l < m.
  gfe s_at_v(int tau, int l) const { return s_at_v_[tau][l]; }
  // 1 / s_tau(v_tau).
  gfe s_at_v_inv(int tau) const { return s_at_v_inv_[tau]; }
  const Poly& subspace_poly(int tau) const { return s_poly_[tau]; }
  // Nonzero (degree, coefficient) pairs of s_tau, ascending degree; last is the monic lead.
  const std::vector<std::pair<std::uint32_t, gfe>>& subspace_terms(int tau) const {
    return s_terms_[tau];
  }

  // Normalization constant p_j (uncounted helper; used by precomputation).
  gfe p_norm(std::uint32_t j) const {
    gfe acc = 1;
    for (int tau = 0; j; ++tau, j >>= 1)
      if (j & 1) acc = field_->mul(acc, s_at_v_[tau][tau]);
    return acc;
  }

  // s_tau evaluated at x through the linearized recurrence; tau in [0, m].
  template <class F>
  gfe subspace_eval(int tau, gfe x, const F& f) const {
    gfe s = x;
    for (int t = 0; t < tau; ++t) s = f.mul(s, f.add(s, s_at_v_[t][t]));
    return s;
  }

 private:
  std::shared_ptr<const Field> field_;
  std::vector<gfe> v_;
  std::vector<gfe> omega_;
  std::vector<std::uint32_t> omega_index_;
  std::vector<std::vector<gfe>> s_at_v_;
  std::vector<gfe> s_at_v_inv_;
  std::vector<Poly> s_poly_;
  std::vector<std::vector<std::pair<std::uint32_t, gfe>>> s_terms_;
};

inline std::shared_ptr<const Basis> make_basis(std::shared_ptr<const Field> f,
                                               std::vector<gfe> v) {
  return std::make_shared<const Basis>(std::move(f), std::move(v));
}

// Polynomial basis 1, x, x^2, ...: omega_j = j under the bit encoding.
inline std::shared_ptr<const Basis> make_standard_basis(std::shared_ptr<const Field> f) {
  std::vector<gfe> v(f->m());
  for (int i = 0; i < f->m(); ++i) v[i] = gfe(1u << i);
  return make_basis(std::move(f), std::move(v));
}

namespace detail {

// s_l(beta) for l = 0..count-1; one mul + add per level.
template <class F>
inline void subspace_chain(const Basis& B, gfe beta, int count, gfe* out, const F& f) {
  gfe s = beta;
  for (int l = 0; l < count; ++l) {
    out[l] = s;
    if (l + 1 < count) s = f.mul(s, f.add(s, B.s_at_v(l, l)));
  }
}

inline void check_transform_args(const Basis& B, std::size_t size, int tau) {
  if (tau < 0 || tau > B.m())
    throw Error("transform order tau out of range: " + std::to_string(tau));
  if (size != (std::size_t(1) << tau))
    throw Error("transform length must be 2^tau");
}

}  // namespace detail

// In-place forward transform: on input, data holds Xbar coordinates f_0..f_{2^tau-1};
// on output, data[j] = f(omega_j + beta).
template <class F>
void fft_inplace(const Basis& B, std::span<gfe> data, int tau, gfe beta, const F& f) {
  detail::check_transform_args(B, data.size(), tau);
  if (tau == 0) return;
  gfe sbeta[16];
  detail::subspace_chain(B, beta, tau, sbeta, f);
  for (int level = tau; level >= 1; --level) {
    const std::size_t half = std::size_t(1) << (level - 1);
    const std::uint32_t blocks = std::uint32_t(1) << (tau - level);
    const gfe inv_sv = B.s_at_v_inv(level - 1);
    for (std::uint32_t b = 0; b < blocks; ++b) {
      // Shift of this block is beta + omega_{b * 2^level}; adjust s_{level-1}(shift)
      // by linearity from the precomputed s_tau(v_l) table.
      gfe sb = sbeta[level - 1];
      for (std::uint32_t bits = b, i = 0; bits; bits >>= 1, ++i)
        if (bits & 1) sb = f.add(sb, B.s_at_v(level - 1, level + int(i)));
      const gfe c = f.mul(sb, inv_sv);
      gfe* blk = data.data() + (std::size_t(b) << level);
      for (std::size_t l = 0; l < half; ++l) {
        const gfe hi = blk[l + half];
        const gfe a0 = f.add(blk[l], f.mul(c, hi));
        blk[l] = a0;
        blk[l + half] = f.add(a0, hi);
      }
    }
  }
}

// In-place inverse transform: data[j] = f(omega_j + beta) -> Xbar coordinates of f.
template <class F>
void ifft_inplace(const Basis& B, std::span<gfe> data, int tau, gfe beta, const F& f) {
  detail::check_transform_args(B, data.size(), tau);
  if (tau == 0) return;
  gfe sbeta[16];
  detail::subspace_chain(B, beta, tau, sbeta, f);
  for (int level = 1; level <= tau; ++level) {
    const std::size_t half = std::size_t(1) << (level - 1);
    const std::uint32_t blocks = std::uint32_t(1) << (tau - level);
    const gfe inv_sv = B.s_at_v_inv(level - 1);
    for (std::uint32_t b = 0; b < blocks; ++b) {
      gfe sb = sbeta[level - 1];
      for (std::uint32_t bits = b, i = 0; bits; bits >>= 1, ++i)
        if (bits & 1) sb = f.add(sb, B.s_at_v(level - 1, level + int(i)));
      const gfe c = f.mul(sb, inv_sv);
      gfe* blk = data.data() + (std::size_t(b) << level);
      for (std::size_t l = 0; l < half; ++l) {
        const gfe hi = f.add(blk[l], blk[l + half]);
        blk[l + half] = hi;
        blk[l] = f.add(blk[l], f.mul(c, hi));
      }
    }
  }
}

template <class F>
std::vector<gfe> fft(const Basis& B, std::span<const gfe> fbar, int tau, gfe beta, const F& f) {
  std::vector<gfe> out(fbar.begin(), fbar.end());
  fft_inplace(B, std::span<gfe>(out), tau, beta, f);
  return out;
}

template <class F>
XbarCoeffs ifft(const Basis& B, std::span<const gfe> values, int tau, gfe beta, const F& f) {
  XbarCoeffs out(values.begin(), values.end());
  ifft_inplace(B, std::span<gfe>(out), tau, beta, f);
  return out;
}

namespace detail {

template <class F>
Poly from_xbar_impl(const Basis& B, std::span<const gfe> c, int tau, const F& f) {
  if (tau == 0) return c[0] ? Poly{c[0]} : Poly{};
  const std::size_t half = c.size() / 2;
  Poly lo = from_xbar_impl(B, c.first(half), tau - 1, f);
  Poly hi = from_xbar_impl(B, c.subspan(half), tau - 1, f);
  if (hi.empty()) return lo;
  // f = lo + s_{tau-1} * (hi / s_{tau-1}(v_{tau-1}))
  Poly hs = poly_scale(f, hi, B.s_at_v_inv(tau - 1));
  Poly out(std::max(lo.size(), hs.size() + half), 0);
  for (std::size_t i = 0; i < lo.size(); ++i) out[i] = lo[i];
  for (const auto& [e, a] : B.subspace_terms(tau - 1))
    for (std::size_t i = 0; i < hs.size(); ++i) {
      const gfe term = (a == 1) ? hs[i] : f.mul(a, hs[i]);
      out[e + i] = f.add(out[e + i], term);
    }
  poly_trim(out);
  return out;
}

template <class F>
void to_xbar_impl(const Basis& B, Poly p, int tau, gfe* out, const F& f) {
  if (tau == 0) {
    out[0] = p.empty() ? gfe(0) : p[0];
    return;
  }
  const std::size_t half = std::size_t(1) << (tau - 1);
  Poly q;
  if (p.size() > half) {
    // Divide by the monic sparse s_{tau-1}; remainder stays in p.
    q.assign(p.size() - half, 0);
    const auto& terms = B.subspace_terms(tau - 1);
    for (std::size_t d = p.size(); d-- > half;) {
      const gfe c = p[d];
      if (c == 0) continue;
      q[d - half] = c;
      p[d] = 0;
      for (std::size_t ti = 0; ti + 1 < terms.size(); ++ti) {
        const auto& [e, a] = terms[ti];
        const gfe term = (a == 1) ? c : f.mul(a, c);
        p[d - half + e] = f.add(p[d - half + e], term);
      }
    }
    poly_trim(p);
    // High coordinates describe q * s_{tau-1}(v_{tau-1}).
    const gfe sv = B.s_at_v(tau - 1, tau - 1);
    for (auto& qc : q)
      if (qc) qc = f.mul(qc, sv);
    poly_trim(q);
  }
  to_xbar_impl(B, std::move(p), tau - 1, out, f);
  to_xbar_impl(B, std::move(q), tau - 1, out + half, f);
}

}  // namespace detail

// Monomial form of sum c_j * Xbar_j; c must have power-of-two length 2^tau, tau <= m.
template <class F>
Poly xbar_to_monomial(const Basis& B, std::span<const gfe> c, const F& f) {
  if (c.empty() || (c.size() & (c.size() - 1)) != 0)
    throw Error("coordinate vector length must be a power of two");
  const int tau = std::countr_zero(c.size());
  if (tau > B.m()) throw Error("coordinate vector longer than the field");
  return detail::from_xbar_impl(B, c, tau, f);
}

// Xbar coordinates of p with respect to Xbar_0..Xbar_{2^tau - 1}; requires deg p < 2^tau.
template <class F>
XbarCoeffs monomial_to_xbar(const Basis& B, const Poly& p, int tau, const F& f) {
  if (tau < 0 || tau > B.m()) throw Error("conversion order tau out of range");
  if (poly_deg(p) >= (1 << tau))
    throw Error("polynomial degree too large for Xbar conversion");
  XbarCoeffs out(std::size_t(1) << tau, 0);
  detail::to_xbar_impl(B, p, tau, out.data(), f);
  return out;
}

namespace detail {

// prod_{j < count} (x - omega_j) assembled from subspace-polynomial cosets:
// each maximal aligned block [start, start + 2^tau) contributes
// s_tau(x - omega_start) = s_tau(x) + s_tau(omega_start).
inline Poly prefix_product(const Basis& B, std::uint32_t count) {
  const Field& f = B.field();
  Poly acc{1};
  std::uint32_t start = 0;
  while (start < count) {
    int tau = start == 0 ? B.m() : std::countr_zero(start);
    while (start + (1u << tau) > count) --tau;
    // Multiply by s_tau(x) + s_tau(omega_start): sparse terms plus a constant.
    const gfe c0 = B.subspace_eval(tau, B.omega(start), f);
    Poly next(acc.size() + (std::size_t(1) << tau), 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (const auto& [e, a] : B.subspace_terms(tau))
        next[i + e] = f.add(next[i + e], f.mul(acc[i], a));
      if (c0 != 0) next[i] = f.add(next[i], f.mul(acc[i], c0));
    }
    poly_trim(next);
    acc = std::move(next);
    start += 1u << tau;
  }
  return acc;
}

}  // namespace detail

}  // namespace fftdec
