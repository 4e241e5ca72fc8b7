// Transform-domain decoder: generalized-syndrome computation through blockwise
// inverse transforms, key-equation solving by the extended Euclidean algorithm,
// root finding by blockwise evaluation, and error values by the derivative formula.
#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fftdec/basis.hpp"
#include "fftdec/code.hpp"
#include "fftdec/opcount.hpp"
#include "fftdec/poly.hpp"

namespace fftdec {

enum class DecodeStatus { NoError, Corrected, Failure };
enum class FailureReason {
  None,
  TooManyErrors,
  RepeatedRoot,
  RootCountMismatch,
  NonBinaryError,
  ResidualSyndrome,
};

inline const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::NoError: return "no_error";
    case DecodeStatus::Corrected: return "corrected";
    case DecodeStatus::Failure: return "failure";
  }
  return "?";
}

inline const char* to_string(FailureReason r) {
  switch (r) {
    case FailureReason::None: return "none";
    case FailureReason::TooManyErrors: return "too_many_errors";
    case FailureReason::RepeatedRoot: return "repeated_root";
    case FailureReason::RootCountMismatch: return "root_count_mismatch";
    case FailureReason::NonBinaryError: return "non_binary_error";
    case FailureReason::ResidualSyndrome: return "residual_syndrome";
  }
  return "?";
}

// Intermediate syndrome-pipeline state, kept for inspection by tests.
struct SyndromeWork {
  XbarCoeffs s1_xbar;          // S1 coordinates, length epsilon
  std::vector<gfe> s1_evals;   // S1(omega_0..omega_{eps-1}), only when rows < eps
  Poly eta4;                   // interpolant of S1 on omega_rows..omega_{eps-1}
  std::vector<gfe> s_evals;    // S(omega_0..omega_{rows-1}), only when rows < eps
  Poly s_poly;                 // S(x) in monomial form, deg <= rows-1
};

struct KeySolution {
  Poly lambda;  // monic error locator
  Poly z;       // error evaluator, deg(z) < deg(lambda)
  Poly q;       // quotient with S*lambda = q*T + z
};

struct PhaseCounts {
  OpCounts syndrome, key_eq, chien, forney;
  OpCounts total() const { return syndrome + key_eq + chien + forney; }
};

struct DecodeResult {
  DecodeStatus status = DecodeStatus::Failure;
  FailureReason reason = FailureReason::None;
  std::vector<gfe> codeword;                   // corrected word (input echoed on failure)
  std::vector<std::uint32_t> error_locations;  // support indices, ascending
  std::vector<gfe> error_values;               // aligned with error_locations
  OpCounts ops;                                // total of all phases
  PhaseCounts phases;
};

class Decoder {
 public:
  explicit Decoder(CodeSpecPtr spec) : spec_(std::move(spec)) {
    const Basis& B = spec_->basis();
    const Field& f = spec_->field();
    rows_ = spec_->redundancy();
    if (rows_ == 0) throw Error("code has no redundancy, nothing to decode");
    mu_ = 0;
    while ((std::size_t(1) << mu_) < rows_) ++mu_;
    eps_ = std::uint32_t(1) << mu_;
    t_is_subspace_ = (rows_ == eps_);
    t_poly_ = t_is_subspace_ ? B.subspace_poly(mu_)
                             : detail::prefix_product(B, std::uint32_t(rows_));
    p_norm_ = B.p_norm(f.order() - eps_);
    p_norm_inv_ = f.inv(p_norm_);

    const std::uint32_t nblocks = f.order() >> mu_;
    for (std::uint32_t l = 0; l < nblocks; ++l)
      for (std::uint32_t j = l << mu_; j < ((l + 1) << mu_); ++j)
        if (spec_->layout().in_support[j]) {
          nonzero_blocks_.push_back(l);
          break;
        }

    if (!t_is_subspace_) {
      // tail(x) = prod_{l=rows}^{eps-1} (x - omega_l) = s_mu(x) / T(x).
      auto [tail, rem] = poly_divmod(f, B.subspace_poly(mu_), t_poly_);
      if (!rem.empty()) throw Error("internal: tail product division not exact");
      std::vector<gfe> tv = eval_omega_prefix(B, tail, std::uint32_t(rows_), f);
      tail_prod_inv_.resize(rows_);
      for (std::size_t j = 0; j < rows_; ++j) tail_prod_inv_[j] = f.inv(tv[j]);

      const std::uint32_t npts = eps_ - std::uint32_t(rows_);
      if ((npts & (npts - 1)) == 0 && rows_ % npts == 0)
        eta_coset_tau_ = std::countr_zero(npts);
      else if (npts <= kNewtonCap)
        eta_newton_inv_ = newton_triangle(std::uint32_t(rows_), npts);
      if (rows_ <= kNewtonCap)
        s_newton_inv_ = newton_triangle(0, std::uint32_t(rows_));
    }
  }

  const CodeSpec& spec() const { return *spec_; }
  int mu() const { return mu_; }
  std::uint32_t epsilon() const { return eps_; }
  std::size_t rows() const { return rows_; }
  const Poly& t_poly() const { return t_poly_; }
  gfe p_norm() const { return p_norm_; }
  const std::vector<gfe>& tail_prod_inv() const { return tail_prod_inv_; }
  const std::vector<std::uint32_t>& nonzero_blocks() const { return nonzero_blocks_; }

  struct Lifted {
    std::vector<gfe> rp;                 // full 2^m vector indexed by omega index
    std::vector<std::uint32_t> blocks;   // eps-blocks holding at least one nonzero entry
  };

  // r'_j = r_{pi(j)} * y_{pi(j)} at support positions, 0 elsewhere.
  template <class F>
  Lifted lift_received(const F& f, std::span<const gfe> r) const {
    if (r.size() != spec_->n()) throw Error("received vector length must equal n");
    const Layout& lay = spec_->layout();
    const std::vector<gfe>& y = spec_->col_mult();
    Lifted out;
    out.rp.assign(spec_->field().order(), 0);
    std::vector<std::uint8_t> dirty(spec_->field().order() >> mu_, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      const std::uint32_t j = lay.pi_inv[i];
      out.rp[j] = f.mul(r[i], y[i]);
      dirty[j >> mu_] = 1;
    }
    for (std::uint32_t l : nonzero_blocks_)
      if (dirty[l]) out.blocks.push_back(l);
    return out;
  }

  // S1 coordinates: sum over nonzero blocks of ifft(block_l, mu, omega_{eps*l}),
  // scaled by 1/p_{2^m - eps}.
  template <class F>
  XbarCoeffs syndrome_s1(const F& f, const Lifted& lifted) const {
    const Basis& B = spec_->basis();
    XbarCoeffs s1(eps_, 0);
    bool first = true;
    std::vector<gfe> blk(eps_);
    for (std::uint32_t l : lifted.blocks) {
      std::copy_n(lifted.rp.begin() + (std::size_t(l) << mu_), eps_, blk.begin());
      ifft_inplace(B, std::span<gfe>(blk), mu_, B.omega(l << mu_), f);
      if (first) {
        s1 = blk;
        first = false;
      } else {
        for (std::uint32_t j = 0; j < eps_; ++j) s1[j] = f.add(s1[j], blk[j]);
      }
    }
    if (p_norm_inv_ != 1)
      for (std::uint32_t j = 0; j < eps_; ++j)
        if (s1[j]) s1[j] = f.mul(s1[j], p_norm_inv_);
    return s1;
  }

  // From S1 to S(x): identity when rows == eps; otherwise peel off the tail
  // product through evaluations at omega_0..omega_{rows-1} and re-interpolate.
  template <class F>
  SyndromeWork syndrome_s(const F& f, XbarCoeffs s1) const {
    const Basis& B = spec_->basis();
    SyndromeWork w;
    w.s1_xbar = std::move(s1);
    if (t_is_subspace_) {
      w.s_poly = xbar_to_monomial(B, w.s1_xbar, f);
      poly_trim(w.s_poly);
      return w;
    }
    w.s1_evals = w.s1_xbar;
    fft_inplace(B, std::span<gfe>(w.s1_evals), mu_, 0, f);

    // eta4 interpolates S1 on the tail points omega_rows..omega_{eps-1}.
    const std::uint32_t npts = eps_ - std::uint32_t(rows_);
    std::vector<gfe> tail_vals(w.s1_evals.begin() + rows_, w.s1_evals.end());
    std::vector<gfe> eta_evals;  // eta4 at omega_0..omega_{rows-1}
    if (eta_coset_tau_ >= 0) {
      ifft_inplace(B, std::span<gfe>(tail_vals), eta_coset_tau_,
                   B.omega(std::uint32_t(rows_)), f);
      eta_evals = eval_omega_prefix_xbar(B, tail_vals, eta_coset_tau_,
                                         std::uint32_t(rows_), f);
      w.eta4 = xbar_to_monomial(B, tail_vals, f);
      poly_trim(w.eta4);
    } else {
      w.eta4 = newton_poly(f, std::uint32_t(rows_), std::move(tail_vals), eta_newton_inv_);
      eta_evals.resize(rows_);
      for (std::size_t j = 0; j < rows_; ++j)
        eta_evals[j] = poly_eval(f, w.eta4, B.omega(std::uint32_t(j)));
    }

    w.s_evals.resize(rows_);
    for (std::size_t j = 0; j < rows_; ++j)
      w.s_evals[j] = f.mul(f.add(w.s1_evals[j], eta_evals[j]), tail_prod_inv_[j]);
    w.s_poly = newton_poly(f, 0, w.s_evals, s_newton_inv_);
    return w;
  }

  // Extended Euclid on (T, S), stopping at the first remainder of degree
  // < ceil(rows/2); lambda is the S-multiplier made monic, z the remainder,
  // q recovered by exact division (which also verifies S*lambda = q*T + z).
  template <class F>
  std::optional<KeySolution> solve_key_equation(const F& f, const Poly& s) const {
    const int threshold = int((rows_ + 1) / 2);
    Poly r_prev = t_poly_, r_cur = s;
    Poly v_prev, v_cur{1};
    while (poly_deg(r_cur) >= threshold) {
      auto [quot, rem] = poly_divmod(f, r_prev, r_cur);
      r_prev = std::move(r_cur);
      r_cur = std::move(rem);
      Poly v_next = poly_add(f, v_prev, poly_mul(f, quot, v_cur));
      v_prev = std::move(v_cur);
      v_cur = std::move(v_next);
    }
    KeySolution sol;
    const gfe scale = f.inv(v_cur.back());
    sol.lambda = poly_scale(f, v_cur, scale);
    sol.z = poly_scale(f, r_cur, scale);
    if (poly_deg(sol.z) >= poly_deg(sol.lambda)) return std::nullopt;
    if (poly_deg(sol.lambda) > int(spec_->t())) return std::nullopt;
    Poly num = poly_add(f, poly_mul(f, s, sol.lambda), sol.z);
    auto [q, rem] = t_is_subspace_
                        ? divmod_subspace(f, std::move(num))
                        : poly_divmod(f, num, t_poly_);
    if (!rem.empty()) return std::nullopt;  // key equation does not balance
    sol.q = std::move(q);
    return sol;
  }

  // Roots of lambda among the support, by blockwise evaluation; returns
  // support indices in ascending order.
  template <class F>
  std::vector<std::uint32_t> find_roots(const F& f, const Poly& lambda) const {
    const Basis& B = spec_->basis();
    const Layout& lay = spec_->layout();
    XbarCoeffs lbar = monomial_to_xbar(B, lambda, mu_, f);
    std::vector<std::uint32_t> roots;
    std::vector<gfe> blk(eps_);
    for (std::uint32_t l : nonzero_blocks_) {
      blk = lbar;
      fft_inplace(B, std::span<gfe>(blk), mu_, B.omega(l << mu_), f);
      for (std::uint32_t j = 0; j < eps_; ++j) {
        const std::uint32_t g = (l << mu_) + j;
        if (blk[j] == 0 && lay.in_support[g]) roots.push_back(lay.pi[g]);
      }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  struct ValueOutcome {
    std::vector<gfe> values;
    FailureReason fail = FailureReason::None;
  };

  // e_i = q(alpha_i) / (y_i * lambda'(alpha_i)) at each located position.
  template <class F>
  ValueOutcome error_values(const F& f, const KeySolution& sol,
                            const std::vector<std::uint32_t>& locations) const {
    const std::vector<gfe>& y = spec_->col_mult();
    const std::vector<gfe>& sup = spec_->support();
    Poly dlambda = poly_derivative(sol.lambda);
    ValueOutcome out;
    out.values.reserve(locations.size());
    for (std::uint32_t i : locations) {
      const gfe x = sup[i];
      const gfe dv = poly_eval(f, dlambda, x);
      if (dv == 0) {
        out.fail = FailureReason::RepeatedRoot;
        return out;
      }
      const gfe qv = poly_eval(f, sol.q, x);
      const gfe e = f.mul(qv, f.inv(f.mul(y[i], dv)));
      if (e == 0) {
        out.fail = FailureReason::TooManyErrors;  // a located position must carry an error
        return out;
      }
      out.values.push_back(e);
    }
    return out;
  }

  DecodeResult decode(std::span<const gfe> r, bool recheck = false) const {
    const Field& base = spec_->field();
    DecodeResult res;
    res.codeword.assign(r.begin(), r.end());

    SyndromeWork work;
    {
      CountingField f(base, res.phases.syndrome);
      Lifted lifted = lift_received(f, r);
      XbarCoeffs s1 = syndrome_s1(f, lifted);
      work = syndrome_s(f, std::move(s1));
    }
    if (work.s_poly.empty()) {
      res.status = DecodeStatus::NoError;
      res.ops = res.phases.total();
      return res;
    }

    KeySolution sol;
    {
      CountingField f(base, res.phases.key_eq);
      auto maybe = solve_key_equation(f, work.s_poly);
      if (!maybe) return fail(res, FailureReason::TooManyErrors);
      sol = std::move(*maybe);
    }

    {
      CountingField f(base, res.phases.chien);
      res.error_locations = find_roots(f, sol.lambda);
    }
    if (int(res.error_locations.size()) != poly_deg(sol.lambda))
      return fail(res, FailureReason::RootCountMismatch);

    {
      CountingField f(base, res.phases.forney);
      ValueOutcome vo = error_values(f, sol, res.error_locations);
      if (vo.fail != FailureReason::None) return fail(res, vo.fail);
      if (spec_->binary())
        for (gfe v : vo.values)
          if (v != 1) return fail(res, FailureReason::NonBinaryError);
      res.error_values = std::move(vo.values);
      for (std::size_t idx = 0; idx < res.error_locations.size(); ++idx) {
        const std::uint32_t i = res.error_locations[idx];
        res.codeword[i] = f.add(res.codeword[i], res.error_values[idx]);
      }
    }

    if (recheck) {
      // Diagnostic residual test; deliberately uncounted.
      OpCounts scratch;
      CountingField f(base, scratch);
      Lifted lifted = lift_received(f, res.codeword);
      XbarCoeffs s1 = syndrome_s1(f, lifted);
      SyndromeWork verify = syndrome_s(f, std::move(s1));
      if (!verify.s_poly.empty()) {
        res.codeword.assign(r.begin(), r.end());
        return fail(res, FailureReason::ResidualSyndrome, /*keep_diagnosis=*/true);
      }
    }

    res.status = DecodeStatus::Corrected;
    res.ops = res.phases.total();
    return res;
  }

 private:
  static constexpr std::uint32_t kNewtonCap = 1024;

  static DecodeResult fail(DecodeResult& res, FailureReason why, bool keep_diagnosis = false) {
    res.status = DecodeStatus::Failure;
    res.reason = why;
    if (!keep_diagnosis) {
      res.error_locations.clear();
      res.error_values.clear();
    }
    res.ops = res.phases.total();
    return std::move(res);
  }

  // Evaluate p at omega_0..omega_{count-1} through aligned transform blocks.
  template <class F>
  static std::vector<gfe> eval_omega_prefix(const Basis& B, const Poly& p,
                                            std::uint32_t count, const F& f) {
    int tau = 0;
    while ((std::size_t(1) << tau) < p.size()) ++tau;
    XbarCoeffs xb = monomial_to_xbar(B, p, tau, f);
    return eval_omega_prefix_xbar(B, xb, tau, count, f);
  }

  template <class F>
  static std::vector<gfe> eval_omega_prefix_xbar(const Basis& B, const XbarCoeffs& xb,
                                                 int tau, std::uint32_t count, const F& f) {
    const std::uint32_t blk_len = std::uint32_t(1) << tau;
    std::vector<gfe> out(count);
    std::vector<gfe> blk;
    for (std::uint32_t start = 0; start < count; start += blk_len) {
      blk = xb;
      fft_inplace(B, std::span<gfe>(blk), tau, B.omega(start), f);
      const std::uint32_t take = std::min(blk_len, count - start);
      std::copy_n(blk.begin(), take, out.begin() + start);
    }
    return out;
  }

  // Inverse pairwise differences inv(omega_{base+i} - omega_{base+i-lvl}),
  // lvl = 1..npts-1, laid out as tri[lvl-1][i-lvl].
  std::vector<std::vector<gfe>> newton_triangle(std::uint32_t base, std::uint32_t npts) const {
    const Field& f = spec_->field();
    const Basis& B = spec_->basis();
    std::vector<std::vector<gfe>> tri(npts ? npts - 1 : 0);
    for (std::uint32_t lvl = 1; lvl < npts; ++lvl) {
      tri[lvl - 1].resize(npts - lvl);
      for (std::uint32_t i = lvl; i < npts; ++i)
        tri[lvl - 1][i - lvl] = f.inv(f.add(B.omega(base + i), B.omega(base + i - lvl)));
    }
    return tri;
  }

  // Newton interpolation on omega_{base}..omega_{base+npts-1}; divided
  // differences use the precomputed triangle when available.
  template <class F>
  Poly newton_poly(const F& f, std::uint32_t base, std::vector<gfe> vals,
                   const std::vector<std::vector<gfe>>& tri) const {
    const Basis& B = spec_->basis();
    const std::size_t npts = vals.size();
    for (std::size_t lvl = 1; lvl < npts; ++lvl)
      for (std::size_t i = npts - 1; i >= lvl; --i) {
        const gfe num = f.add(vals[i], vals[i - 1]);
        const gfe d = tri.empty()
                          ? f.inv(f.add(B.omega(std::uint32_t(base + i)),
                                        B.omega(std::uint32_t(base + i - lvl))))
                          : tri[lvl - 1][i - lvl];
        vals[i] = num ? f.mul(num, d) : 0;
      }
    Poly p;
    for (std::size_t i = npts; i-- > 0;) {
      // p = p*(x - omega_{base+i}) + d_i
      const gfe xi = B.omega(std::uint32_t(base + i));
      Poly next(p.size() + 1, 0);
      for (std::size_t j = 0; j < p.size(); ++j) {
        next[j + 1] = f.add(next[j + 1], p[j]);
        if (xi && p[j]) next[j] = f.add(next[j], f.mul(p[j], xi));
      }
      if (vals[i]) next[0] = f.add(next[0], vals[i]);
      p = std::move(next);
      poly_trim(p);
    }
    poly_trim(p);
    return p;
  }

  // Synthetic division by the sparse monic subspace polynomial s_mu.
  template <class F>
  std::pair<Poly, Poly> divmod_subspace(const F& f, Poly num) const {
    const auto& terms = spec_->basis().subspace_terms(mu_);
    const std::uint32_t d = terms.back().first;  // == eps_ == rows_
    if (num.size() <= d) return {Poly{}, std::move(num)};
    Poly quot(num.size() - d, 0);
    for (std::size_t i = num.size(); i-- > d;) {
      const gfe c = num[i];
      if (!c) continue;
      quot[i - d] = c;
      for (std::size_t ti = 0; ti + 1 < terms.size(); ++ti) {
        const auto& [td, tc] = terms[ti];
        gfe& slot = num[i - d + td];
        slot = f.add(slot, tc == 1 ? c : f.mul(c, tc));
      }
    }
    num.resize(d);
    poly_trim(num);
    poly_trim(quot);
    return {std::move(quot), std::move(num)};
  }

  CodeSpecPtr spec_;
  std::size_t rows_ = 0;
  int mu_ = 0;
  std::uint32_t eps_ = 0;
  bool t_is_subspace_ = false;
  Poly t_poly_;
  gfe p_norm_ = 1, p_norm_inv_ = 1;
  std::vector<gfe> tail_prod_inv_;
  std::vector<std::uint32_t> nonzero_blocks_;
  int eta_coset_tau_ = -1;
  std::vector<std::vector<gfe>> eta_newton_inv_, s_newton_inv_;
};

inline std::shared_ptr<const Decoder> make_decoder(CodeSpecPtr spec) {
  return std::make_shared<const Decoder>(std::move(spec));
}

}  // namespace fftdec
