// Code constructions over GF(2^m): generalized Reed-Solomon codes, their binary
// alternant subcodes, and separable Goppa codes, with encoders, parity checks,
// and the Goppa membership test.
#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "fftdec/basis.hpp"
#include "fftdec/bitmat.hpp"
#include "fftdec/gf.hpp"
#include "fftdec/poly.hpp"

namespace fftdec {

enum class CodeKind { Grs, Alternant, Goppa };

inline const char* to_string(CodeKind k) {
  switch (k) {
    case CodeKind::Grs: return "grs";
    case CodeKind::Alternant: return "alternant";
    case CodeKind::Goppa: return "goppa";
  }
  return "?";
}

// Support-to-enumeration bookkeeping. pi is a full permutation of [0, 2^m):
// pi(j) = i when omega_j is the i-th support element; the remaining omega
// indices receive n, n+1, ... in increasing omega-index order.
struct Layout {
  std::vector<std::uint32_t> pi;
  std::vector<std::uint32_t> pi_inv;
  std::vector<std::uint8_t> in_support;  // indexed by omega index
  bool prefix_support = false;           // support is exactly omega_0..omega_{n-1}
};

class CodeSpec {
 public:
  static std::shared_ptr<const CodeSpec> grs(std::shared_ptr<const Basis> basis,
                                             std::vector<gfe> support, std::vector<gfe> w,
                                             std::size_t k) {
    auto spec = std::shared_ptr<CodeSpec>(new CodeSpec(CodeKind::Grs, std::move(basis),
                                                       std::move(support)));
    if (k == 0 || k > spec->n())
      throw Error("dimension k must satisfy 0 < k <= n");
    if (w.size() != spec->n()) throw Error("column multiplier count must equal n");
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == 0) throw Error("column multiplier w[" + std::to_string(i) + "] is zero");
    spec->k_symbols_ = k;
    spec->rows_ = spec->n() - k;
    spec->t_ = spec->rows_ / 2;
    spec->w_ = std::move(w);
    spec->y_.resize(spec->n());
    const Field& f = spec->field();
    for (std::size_t i = 0; i < spec->n(); ++i)
      spec->y_[i] = f.inv(f.mul(spec->w_[i], spec->deriv_prod_[i]));
    return spec;
  }

  static std::shared_ptr<const CodeSpec> alternant(std::shared_ptr<const Basis> basis,
                                                   std::vector<gfe> support,
                                                   std::vector<gfe> y, std::size_t k) {
    auto spec = std::shared_ptr<CodeSpec>(new CodeSpec(CodeKind::Alternant, std::move(basis),
                                                       std::move(support)));
    if (k == 0 || k >= spec->n())
      throw Error("design dimension k must satisfy 0 < k < n");
    if (y.size() != spec->n()) throw Error("column multiplier count must equal n");
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i] == 0) throw Error("column multiplier y[" + std::to_string(i) + "] is zero");
    spec->k_symbols_ = k;
    spec->rows_ = spec->n() - k;
    spec->t_ = spec->rows_ / 2;
    spec->y_ = std::move(y);
    spec->derive_w();
    spec->build_binary_layer();
    return spec;
  }

  static std::shared_ptr<const CodeSpec> goppa(std::shared_ptr<const Basis> basis,
                                               std::vector<gfe> support, Poly g) {
    auto spec = std::shared_ptr<CodeSpec>(new CodeSpec(CodeKind::Goppa, std::move(basis),
                                                       std::move(support)));
    const Field& f = spec->field();
    poly_trim(g);
    if (poly_deg(g) < 1) throw Error("Goppa polynomial must have degree >= 1");
    if (poly_deg(poly_gcd(f, g, poly_derivative(g))) != 0)
      throw Error("Goppa polynomial is not separable (gcd with derivative is nontrivial)");
    const std::size_t rho = std::size_t(poly_deg(g));
    if (2 * rho >= spec->n())
      throw Error("Goppa polynomial degree too large: 2*deg(G) must be < n");
    spec->goppa_poly_ = std::move(g);
    spec->rows_ = 2 * rho;
    spec->t_ = rho;
    spec->k_symbols_ = spec->n() - spec->rows_;
    spec->gbar_ = poly_mul(f, spec->goppa_poly_, spec->goppa_poly_);
    spec->y_.resize(spec->n());
    for (std::size_t i = 0; i < spec->n(); ++i) {
      const gfe gv = poly_eval(f, spec->goppa_poly_, spec->support_[i]);
      if (gv == 0)
        throw Error("Goppa polynomial vanishes at support position " + std::to_string(i) +
                    " (element " + f.to_hex(spec->support_[i]) + ")");
      spec->y_[i] = f.inv(f.mul(gv, gv));
    }
    spec->derive_w();
    spec->build_binary_layer();
    return spec;
  }

  CodeKind kind() const { return kind_; }
  const Field& field() const { return basis_->field(); }
  const Basis& basis() const { return *basis_; }
  std::shared_ptr<const Basis> basis_ptr() const { return basis_; }
  std::size_t n() const { return support_.size(); }
  // Parity rows of the GRS layer (n - k for GRS/alternant, 2*deg(G) for Goppa).
  std::size_t redundancy() const { return rows_; }
  std::size_t k_symbols() const { return k_symbols_; }
  std::size_t t() const { return t_; }
  bool binary() const { return kind_ != CodeKind::Grs; }
  const std::vector<gfe>& support() const { return support_; }
  const std::vector<gfe>& col_mult() const { return y_; }   // y_i
  const std::vector<gfe>& eval_mult() const { return w_; }  // w_i (evaluation-encoder scaling)
  const Poly& goppa_poly() const { return goppa_poly_; }
  const Poly& gbar() const { return gbar_; }
  const Layout& layout() const { return layout_; }

  std::size_t binary_dim() const {
    if (!binary()) throw Error("binary dimension is only defined for alternant/Goppa codes");
    return binary_dim_;
  }
  const std::vector<std::size_t>& info_positions() const { return info_pos_; }
  const BitMatrix& generator() const { return gen_; }

  // Parity-check matrix of the GRS layer: row l has entries y_i * alpha_i^l.
  std::vector<std::vector<gfe>> parity_check_matrix() const {
    const Field& f = field();
    std::vector<std::vector<gfe>> h(rows_, std::vector<gfe>(n()));
    std::vector<gfe> cur = y_;
    for (std::size_t l = 0; l < rows_; ++l) {
      h[l] = cur;
      if (l + 1 < rows_)
        for (std::size_t i = 0; i < n(); ++i) cur[i] = f.mul(cur[i], support_[i]);
    }
    return h;
  }

  // Binary expansion of the parity-check matrix: m * redundancy rows, bit b of
  // entry (l, i) lands in row l*m + b.
  BitMatrix binary_parity_matrix() const {
    const Field& f = field();
    const int m = f.m();
    BitMatrix h(rows_ * m, n());
    std::vector<gfe> cur = y_;
    for (std::size_t l = 0; l < rows_; ++l) {
      for (std::size_t i = 0; i < n(); ++i) {
        for (int b = 0; b < m; ++b)
          if ((cur[i] >> b) & 1) h.set(l * m + b, i, true);
      }
      if (l + 1 < rows_)
        for (std::size_t i = 0; i < n(); ++i) cur[i] = f.mul(cur[i], support_[i]);
    }
    return h;
  }

  // Evaluation encoder: c_i = w_i * msg(alpha_i), msg of degree < k, evaluated
  // through layout-ordered transform blocks.
  std::vector<gfe> encode_grs(const Poly& msg) const {
    if (poly_deg(msg) >= int(k_symbols_))
      throw Error("message degree must be below k");
    std::vector<gfe> vals = eval_on_support(msg);
    const Field& f = field();
    std::vector<gfe> c(n());
    for (std::size_t i = 0; i < n(); ++i) c[i] = f.mul(w_[i], vals[i]);
    return c;
  }

  // Systematic evaluation encoder: the first k support positions (in omega order)
  // carry u verbatim. Requires power-of-two k with omega_0..omega_{k-1} in L.
  std::vector<gfe> encode_fft_systematic(std::span<const gfe> u) const {
    const std::size_t k = k_symbols_;
    if (u.size() != k) throw Error("information vector length must equal k");
    if (k == 0 || (k & (k - 1)) != 0)
      throw Error("systematic transform encoding needs power-of-two k; "
                  "use encode_grs or the binary encoder instead");
    for (std::size_t j = 0; j < k; ++j)
      if (!layout_.in_support[j])
        throw Error("systematic transform encoding needs omega_0..omega_{k-1} in the support");
    const Field& f = field();
    const Basis& B = *basis_;
    const int tau = std::countr_zero(k);
    // Unscale information symbols, then interpolate them on the first block.
    std::vector<gfe> ubar(k);
    for (std::size_t j = 0; j < k; ++j)
      ubar[j] = f.mul(u[j], f.inv(w_[layout_.pi[j]]));
    std::vector<gfe> c(n());
    for (std::size_t j = 0; j < k; ++j) c[layout_.pi[j]] = u[j];
    ifft_inplace(B, std::span<gfe>(ubar), tau, B.omega(0), f);
    // Evaluate the interpolant on every other block that meets the support.
    const std::uint32_t nblocks = std::uint32_t(field().order() >> tau);
    for (std::uint32_t b = 1; b < nblocks; ++b) {
      bool needed = false;
      for (std::uint32_t j = b << tau; j < ((b + 1) << tau); ++j)
        if (layout_.in_support[j]) {
          needed = true;
          break;
        }
      if (!needed) continue;
      std::vector<gfe> blk = ubar;
      fft_inplace(B, std::span<gfe>(blk), tau, B.omega(b << tau), f);
      for (std::uint32_t j = b << tau; j < ((b + 1) << tau); ++j)
        if (layout_.in_support[j])
          c[layout_.pi[j]] = f.mul(w_[layout_.pi[j]], blk[j - (b << tau)]);
    }
    return c;
  }

  // Systematic binary encoder from the cached generator (alternant/Goppa kinds).
  std::vector<std::uint8_t> encode_goppa(std::span<const std::uint8_t> info) const {
    if (!binary()) throw Error("binary encoding is only defined for alternant/Goppa codes");
    if (info.size() != binary_dim_)
      throw Error("information bit count must equal the binary dimension " +
                  std::to_string(binary_dim_));
    const std::size_t words = (n() + 63) / 64;
    std::vector<std::uint64_t> acc(words, 0);
    for (std::size_t j = 0; j < info.size(); ++j) {
      if (!(info[j] & 1)) continue;
      auto row = gen_.row_words(j);
      for (std::size_t i = 0; i < words; ++i) acc[i] ^= row[i];
    }
    std::vector<std::uint8_t> c(n());
    for (std::size_t i = 0; i < n(); ++i) c[i] = std::uint8_t((acc[i / 64] >> (i % 64)) & 1);
    return c;
  }

  // Goppa membership: sum_i a_i * (x - alpha_i)^{-1} mod G == 0, with
  // (x - alpha)^{-1} = G(alpha)^{-1} * (G(x) - G(alpha)) / (x - alpha).
  bool goppa_membership(std::span<const std::uint8_t> a) const {
    if (kind_ != CodeKind::Goppa) throw Error("membership test requires a Goppa code");
    if (a.size() != n()) throw Error("vector length must equal n");
    const Field& f = field();
    const std::size_t rho = std::size_t(poly_deg(goppa_poly_));
    Poly acc(rho, 0);
    Poly quot(rho, 0);
    for (std::size_t i = 0; i < n(); ++i) {
      if (!(a[i] & 1)) continue;
      // Synthetic division of G by (x - alpha_i): quotient plus remainder G(alpha_i).
      const gfe alpha = support_[i];
      gfe carry = goppa_poly_[rho];
      for (std::size_t d = rho; d-- > 0;) {
        quot[d] = carry;
        carry = f.add(goppa_poly_[d], f.mul(carry, alpha));
      }
      const gfe ginv = f.inv(carry);  // carry == G(alpha_i), nonzero by construction
      for (std::size_t d = 0; d < rho; ++d)
        acc[d] = f.add(acc[d], f.mul(ginv, quot[d]));
    }
    for (gfe v : acc)
      if (v) return false;
    return true;
  }

 private:
  CodeSpec(CodeKind kind, std::shared_ptr<const Basis> basis, std::vector<gfe> support)
      : kind_(kind), basis_(std::move(basis)), support_(std::move(support)) {
    const Field& f = basis_->field();
    const std::uint32_t order = f.order();
    if (support_.empty()) throw Error("support must be nonempty");
    if (support_.size() > order) throw Error("support larger than the field");
    layout_.pi.assign(order, 0);
    layout_.pi_inv.assign(order, 0);
    layout_.in_support.assign(order, 0);
    for (std::size_t i = 0; i < support_.size(); ++i) {
      const std::uint32_t j = basis_->omega_index(support_[i]);
      if (layout_.in_support[j])
        throw Error("support elements must be distinct (duplicate at position " +
                    std::to_string(i) + ")");
      layout_.in_support[j] = 1;
      layout_.pi[j] = std::uint32_t(i);
    }
    std::uint32_t next = std::uint32_t(support_.size());
    layout_.prefix_support = true;
    for (std::uint32_t j = 0; j < order; ++j) {
      if (!layout_.in_support[j]) {
        layout_.pi[j] = next++;
        if (j < support_.size()) layout_.prefix_support = false;
      }
      layout_.pi_inv[layout_.pi[j]] = j;
    }
    compute_deriv_prod();
  }

  // deriv_prod_[i] = prod_{j != i} (alpha_i - alpha_j) = l'(alpha_i), l = prod (x - alpha_j).
  void compute_deriv_prod() {
    const Field& f = basis_->field();
    deriv_prod_.assign(n(), 0);
    if (layout_.prefix_support) {
      Poly lp = poly_derivative(detail::prefix_product(*basis_, std::uint32_t(n())));
      deriv_prod_ = eval_on_support(lp);
    } else {
      Poly l{1};
      for (std::size_t j = 0; j < n(); ++j) l = poly_mul(f, l, Poly{support_[j], 1});
      Poly lp = poly_derivative(l);
      for (std::size_t i = 0; i < n(); ++i) deriv_prod_[i] = poly_eval(f, lp, support_[i]);
    }
    for (std::size_t i = 0; i < n(); ++i)
      if (deriv_prod_[i] == 0) throw Error("support elements must be distinct");
  }

  void derive_w() {
    const Field& f = basis_->field();
    w_.resize(n());
    for (std::size_t i = 0; i < n(); ++i) w_[i] = f.inv(f.mul(y_[i], deriv_prod_[i]));
  }

  // Evaluate p (deg < 2^m) at every support element through transform blocks.
  std::vector<gfe> eval_on_support(const Poly& p) const {
    std::vector<gfe> vals(n(), 0);
    if (p.empty()) return vals;
    const Field& f = basis_->field();
    const Basis& B = *basis_;
    int tau = 0;
    while ((std::size_t(1) << tau) < p.size()) ++tau;
    XbarCoeffs xb = monomial_to_xbar(B, p, tau, f);
    const std::uint32_t blk_len = 1u << tau;
    const std::uint32_t nblocks = f.order() >> tau;
    for (std::uint32_t b = 0; b < nblocks; ++b) {
      bool needed = false;
      for (std::uint32_t j = b * blk_len; j < (b + 1) * blk_len; ++j)
        if (layout_.in_support[j]) {
          needed = true;
          break;
        }
      if (!needed) continue;
      std::vector<gfe> blk = xb;
      fft_inplace(B, std::span<gfe>(blk), tau, B.omega(b * blk_len), f);
      for (std::uint32_t j = b * blk_len; j < (b + 1) * blk_len; ++j)
        if (layout_.in_support[j]) vals[layout_.pi[j]] = blk[j - b * blk_len];
    }
    return vals;
  }

  void build_binary_layer() {
    BitMatrix h = binary_parity_matrix();
    std::vector<std::size_t> pivots = h.rref();
    binary_dim_ = n() - pivots.size();
    info_pos_.clear();
    {
      std::vector<std::uint8_t> is_pivot(n(), 0);
      for (std::size_t c : pivots) is_pivot[c] = 1;
      for (std::size_t c = 0; c < n(); ++c)
        if (!is_pivot[c]) info_pos_.push_back(c);
    }
    gen_ = BitMatrix(binary_dim_, n());
    for (std::size_t j = 0; j < info_pos_.size(); ++j) {
      gen_.set(j, info_pos_[j], true);
      for (std::size_t rp = 0; rp < pivots.size(); ++rp)
        if (h.get(rp, info_pos_[j])) gen_.set(j, pivots[rp], true);
    }
  }

  CodeKind kind_;
  std::shared_ptr<const Basis> basis_;
  std::vector<gfe> support_;
  std::size_t rows_ = 0, k_symbols_ = 0, t_ = 0;
  std::vector<gfe> y_, w_, deriv_prod_;
  Poly goppa_poly_, gbar_;
  Layout layout_;
  std::size_t binary_dim_ = 0;
  std::vector<std::size_t> info_pos_;
  BitMatrix gen_;
};

using CodeSpecPtr = std::shared_ptr<const CodeSpec>;

inline CodeSpecPtr make_grs(std::shared_ptr<const Basis> basis, std::vector<gfe> support,
                            std::vector<gfe> w, std::size_t k) {
  return CodeSpec::grs(std::move(basis), std::move(support), std::move(w), k);
}
inline CodeSpecPtr make_alternant(std::shared_ptr<const Basis> basis, std::vector<gfe> support,
                                  std::vector<gfe> y, std::size_t k) {
  return CodeSpec::alternant(std::move(basis), std::move(support), std::move(y), k);
}
inline CodeSpecPtr make_goppa(std::shared_ptr<const Basis> basis, std::vector<gfe> support,
                              Poly g) {
  return CodeSpec::goppa(std::move(basis), std::move(support), std::move(g));
}

}  // namespace fftdec
