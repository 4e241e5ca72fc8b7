// GF(2^m) arithmetic for 2 <= m <= 16, table driven.
#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fftdec {

// Field element in polynomial-basis encoding: bit i holds the coefficient of x^i.
using gfe = std::uint16_t;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline int gf2_deg(std::uint64_t a) { return a ? 63 - std::countl_zero(a) : -1; }

// Carry-less product of binary polynomials given as bit patterns.
inline std::uint64_t gf2_mul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t acc = 0;
  for (int i = 0; i <= gf2_deg(b); ++i)
    if ((b >> i) & 1) acc ^= std::uint64_t(a) << i;
  return acc;
}

inline std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t mod) {
  const int dm = gf2_deg(mod);
  for (int d = gf2_deg(a); d >= dm; d = gf2_deg(a)) a ^= mod << (d - dm);
  return a;
}

inline std::string hex_str(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  do {
    s.insert(s.begin(), digits[v & 0xf]);
    v >>= 4;
  } while (v);
  return "0x" + s;
}

}  // namespace detail

class Field {
 public:
  Field(int m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
    if (m < 2 || m > 16)
      throw Error("field degree m must be in [2, 16], got " + std::to_string(m));
    if (detail::gf2_deg(modulus) != m)
      throw Error("modulus " + detail::hex_str(modulus) + " must have degree exactly m = " +
                  std::to_string(m));
    // Trial division over GF(2) against every polynomial of degree <= m/2.
    for (std::uint32_t cand = 2;; ++cand) {
      if (detail::gf2_deg(cand) > m / 2) break;
      if (detail::gf2_mod(modulus, cand) == 0)
        throw Error("modulus " + detail::hex_str(modulus) + " is reducible: divisible by " +
                    detail::hex_str(cand));
    }
    build_tables();
  }

  int m() const { return m_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return 1u << m_; }
  const Field& base() const { return *this; }

  gfe add(gfe a, gfe b) const { return gfe(a ^ b); }

  gfe mul(gfe a, gfe b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[std::uint32_t(log_[a]) + log_[b]];
  }

  gfe inv(gfe a) const {
    if (a == 0) throw Error("inverse of zero field element");
    return exp_[order() - 1 - log_[a]];
  }

  gfe pow(gfe a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? gfe(1) : gfe(0);
    const std::uint32_t q1 = order() - 1;
    return exp_[std::uint32_t((std::uint64_t(log_[a]) * (e % q1)) % q1)];
  }

  // Element text form: zero-padded lowercase hex, ceil(m/4) digits, no prefix.
  int hex_width() const { return (m_ + 3) / 4; }

  std::string to_hex(gfe a) const {
    static const char* digits = "0123456789abcdef";
    std::string s(hex_width(), '0');
    for (int i = hex_width() - 1; i >= 0; --i, a >>= 4) s[i] = digits[a & 0xf];
    return s;
  }

  gfe from_hex(std::string_view s) const {
    if (s.empty()) throw Error("empty field element text");
    std::uint32_t v = 0;
    for (char ch : s) {
      int d;
      if (ch >= '0' && ch <= '9') d = ch - '0';
      else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
      else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
      else throw Error(std::string("bad hex digit '") + ch + "' in field element");
      v = (v << 4) | std::uint32_t(d);
      if (v >= (std::uint32_t(order()) << 4))
        throw Error("field element value out of range: " + std::string(s));
    }
    if (v >= order()) throw Error("field element value out of range: " + std::string(s));
    return gfe(v);
  }

 private:
  void build_tables() {
    const std::uint32_t q1 = order() - 1;
    exp_.assign(2 * q1, 0);
    log_.assign(order(), 0);
    for (std::uint32_t g = 2; g < order(); ++g) {
      std::uint32_t x = 1;
      bool primitive = true;
      for (std::uint32_t i = 0; i < q1; ++i) {
        if (i > 0 && x == 1) {
          primitive = false;
          break;
        }
        exp_[i] = gfe(x);
        x = std::uint32_t(detail::gf2_mod(detail::gf2_mul(x, g), modulus_));
      }
      if (primitive) {
        for (std::uint32_t i = 0; i < q1; ++i) {
          exp_[i + q1] = exp_[i];
          log_[exp_[i]] = gfe(i);
        }
        return;
      }
    }
    throw Error("no primitive element found (modulus not irreducible?)");
  }

  int m_;
  std::uint32_t modulus_;
  std::vector<gfe> exp_;
  std::vector<gfe> log_;
};

inline std::shared_ptr<const Field> make_field(int m, std::uint32_t modulus) {
  return std::make_shared<const Field>(m, modulus);
}

}  // namespace fftdec
