// Independent reference decoder: dense power-sum syndromes, textbook
// Berlekamp-Massey, full-scan root search, and the classical reciprocal-form
// error-value formula. Serves as ground truth in tests and as the conventional
// baseline for the operation-count comparison.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fftdec/code.hpp"
#include "fftdec/decode.hpp"
#include "fftdec/opcount.hpp"
#include "fftdec/poly.hpp"

namespace fftdec {

// Generalized syndrome computed term by term: sum_i r_i y_i (T(x) - T(alpha_i)) / (x - alpha_i)
// with T(x) = prod_{j < n-k} (x - omega_j). Plain-field test oracle, O(n(n-k)).
inline Poly direct_generalized_syndrome(const CodeSpec& spec, std::span<const gfe> r) {
  if (r.size() != spec.n()) throw Error("vector length must equal n");
  const Field& f = spec.field();
  const std::size_t rows = spec.redundancy();
  const Poly T = detail::prefix_product(spec.basis(), std::uint32_t(rows));
  Poly acc(rows, 0);
  Poly quot(rows, 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    const gfe alpha = spec.support()[i];
    gfe carry = T[rows];  // T monic
    for (std::size_t d = rows; d-- > 0;) {
      quot[d] = carry;
      carry = f.add(T[d], f.mul(carry, alpha));
    }
    const gfe scale = f.mul(r[i], spec.col_mult()[i]);
    for (std::size_t d = 0; d < rows; ++d)
      acc[d] = f.add(acc[d], f.mul(scale, quot[d]));
  }
  poly_trim(acc);
  return acc;
}

// S_l = sum_i r_i y_i alpha_i^l for l < n-k, as a direct matrix-vector product
// against a precomputed parity-check matrix (every entry multiplied, no
// sparsity shortcuts: this fixes the baseline's accounting).
template <class F>
std::vector<gfe> power_sum_syndromes(const F& f, const std::vector<std::vector<gfe>>& h,
                                     std::span<const gfe> r) {
  std::vector<gfe> s(h.size(), 0);
  for (std::size_t l = 0; l < h.size(); ++l) {
    gfe acc = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      acc = f.add(acc, f.mul(h[l][i], r[i]));
    s[l] = acc;
  }
  return s;
}

inline std::vector<gfe> power_sum_syndromes(const CodeSpec& spec, std::span<const gfe> r) {
  if (r.size() != spec.n()) throw Error("vector length must equal n");
  return power_sum_syndromes(spec.field(), spec.parity_check_matrix(), r);
}

struct LfsrFit {
  Poly sigma;     // sigma(x) = prod over errors at nonzero alpha of (1 - alpha x)
  std::size_t l;  // LFSR length; l = deg(sigma) + 1 signals an error at alpha = 0
};

// Textbook Berlekamp-Massey LFSR synthesis over the syndrome sequence.
template <class F>
LfsrFit berlekamp_massey(const F& f, std::span<const gfe> s) {
  Poly sigma{1}, prev{1};
  std::size_t l = 0, shift = 1;
  gfe b = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    gfe d = s[n];
    for (std::size_t i = 1; i <= l && i < sigma.size(); ++i)
      if (sigma[i] && s[n - i]) d = f.add(d, f.mul(sigma[i], s[n - i]));
    if (d == 0) {
      ++shift;
      continue;
    }
    const gfe coef = f.mul(d, f.inv(b));
    Poly next = sigma;
    if (next.size() < prev.size() + shift) next.resize(prev.size() + shift, 0);
    for (std::size_t i = 0; i < prev.size(); ++i)
      if (prev[i]) next[i + shift] = f.add(next[i + shift], f.mul(coef, prev[i]));
    if (2 * l <= n) {
      prev = std::move(sigma);
      b = d;
      l = n + 1 - l;
      shift = 1;
    } else {
      ++shift;
    }
    sigma = std::move(next);
  }
  poly_trim(sigma);
  return {std::move(sigma), l};
}

// Conventional decode chain, instrumented with the same phase counters as the
// transform decoder. Holds the dense parity-check matrix as context.
class OracleDecoder {
 public:
  explicit OracleDecoder(CodeSpecPtr spec)
      : spec_(std::move(spec)), h_(spec_->parity_check_matrix()) {
    if (spec_->redundancy() == 0) throw Error("code has no redundancy, nothing to decode");
  }

  const CodeSpec& spec() const { return *spec_; }

  DecodeResult decode(std::span<const gfe> r) const {
    if (r.size() != spec_->n()) throw Error("received vector length must equal n");
    const Field& base = spec_->field();
    const std::vector<gfe>& sup = spec_->support();
    const std::vector<gfe>& y = spec_->col_mult();
    DecodeResult res;
    res.codeword.assign(r.begin(), r.end());

    std::vector<gfe> s;
    {
      CountingField f(base, res.phases.syndrome);
      s = power_sum_syndromes(f, h_, r);
    }
    bool all_zero = true;
    for (gfe v : s)
      if (v) {
        all_zero = false;
        break;
      }
    if (all_zero) {
      res.status = DecodeStatus::NoError;
      res.ops = res.phases.total();
      return res;
    }

    LfsrFit fit;
    {
      CountingField f(base, res.phases.key_eq);
      fit = berlekamp_massey(f, std::span<const gfe>(s));
    }
    if (fit.l > spec_->t()) return fail(res, FailureReason::TooManyErrors);
    // Root convention flip: Lambda(x) = x^L sigma(1/x); a degree drop in sigma
    // plants the required root at alpha = 0.
    Poly locator(fit.l + 1, 0);
    for (std::size_t i = 0; i < fit.sigma.size(); ++i) locator[fit.l - i] = fit.sigma[i];
    poly_trim(locator);

    {
      CountingField f(base, res.phases.chien);
      for (std::size_t i = 0; i < sup.size(); ++i)
        if (poly_eval(f, locator, sup[i]) == 0) res.error_locations.push_back(std::uint32_t(i));
    }
    if (res.error_locations.size() != fit.l)
      return fail(res, FailureReason::RootCountMismatch);

    {
      CountingField f(base, res.phases.forney);
      // omega(x) = S(x) sigma(x) mod x^L, with S(x) = S_0 + S_1 x + ...
      Poly omega(fit.l, 0);
      for (std::size_t i = 0; i < fit.sigma.size() && i < fit.l; ++i) {
        if (!fit.sigma[i]) continue;
        for (std::size_t j = 0; j + i < fit.l; ++j)
          if (s[j]) omega[i + j] = f.add(omega[i + j], f.mul(fit.sigma[i], s[j]));
      }
      poly_trim(omega);
      Poly dsigma = poly_derivative(fit.sigma);
      gfe zero_pos_sum = 0;  // accumulates c_i = e_i y_i over nonzero-alpha roots
      std::size_t zero_pos = sup.size();
      res.error_values.assign(res.error_locations.size(), 0);
      for (std::size_t k = 0; k < res.error_locations.size(); ++k) {
        const std::uint32_t i = res.error_locations[k];
        if (sup[i] == 0) {
          zero_pos = k;
          continue;
        }
        const gfe u = f.inv(sup[i]);  // evaluation point of the reciprocal forms
        const gfe den = poly_eval(f, dsigma, u);
        if (den == 0) return fail(res, FailureReason::RepeatedRoot);
        const gfe num = f.mul(sup[i], poly_eval(f, omega, u));
        const gfe c = f.mul(num, f.inv(den));  // c = e_i y_i
        if (c == 0) return fail(res, FailureReason::TooManyErrors);
        zero_pos_sum = f.add(zero_pos_sum, c);
        res.error_values[k] = f.mul(c, f.inv(y[i]));
      }
      if (zero_pos != sup.size()) {
        // S_0 = sum of all c_i; the alpha = 0 term is the leftover.
        const gfe c0 = f.add(s[0], zero_pos_sum);
        if (c0 == 0) return fail(res, FailureReason::TooManyErrors);
        res.error_values[zero_pos] =
            f.mul(c0, f.inv(y[res.error_locations[zero_pos]]));
      }
      if (spec_->binary())
        for (gfe v : res.error_values)
          if (v != 1) return fail(res, FailureReason::NonBinaryError);
      for (std::size_t k = 0; k < res.error_locations.size(); ++k) {
        const std::uint32_t i = res.error_locations[k];
        res.codeword[i] = f.add(res.codeword[i], res.error_values[k]);
      }
    }

    res.status = DecodeStatus::Corrected;
    res.ops = res.phases.total();
    return res;
  }

 private:
  static DecodeResult fail(DecodeResult& res, FailureReason why) {
    res.status = DecodeStatus::Failure;
    res.reason = why;
    res.error_locations.clear();
    res.error_values.clear();
    res.ops = res.phases.total();
    return std::move(res);
  }

  CodeSpecPtr spec_;
  std::vector<std::vector<gfe>> h_;
};

inline std::shared_ptr<const OracleDecoder> make_oracle(CodeSpecPtr spec) {
  return std::make_shared<const OracleDecoder>(std::move(spec));
}

}  // namespace fftdec
