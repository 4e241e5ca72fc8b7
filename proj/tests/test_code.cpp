#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fftdec/code.hpp"
#include "fftdec/oracle.hpp"

using namespace fftdec;

namespace {

std::vector<gfe> prefix_support(const Basis& B, std::size_t n) {
  std::vector<gfe> sup(n);
  for (std::size_t i = 0; i < n; ++i) sup[i] = B.omega(std::uint32_t(i));
  return sup;
}

// O(n*k) Lagrange reference: interpolate f with f(alpha_j) = u_j / w_j on the
// first k support points, then evaluate w_i * f(alpha_i) everywhere.
std::vector<gfe> interpolation_encode(const CodeSpec& spec, std::span<const gfe> u) {
  const Field& f = spec.field();
  const std::size_t k = u.size();
  Poly acc;
  for (std::size_t j = 0; j < k; ++j) {
    Poly lj{1};
    gfe den = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j) continue;
      lj = poly_mul(f, lj, Poly{spec.support()[i], 1});
      den = f.mul(den, f.add(spec.support()[j], spec.support()[i]));
    }
    const gfe target = f.mul(u[j], f.inv(spec.eval_mult()[j]));
    acc = poly_add(f, acc, poly_scale(f, lj, f.mul(target, f.inv(den))));
  }
  std::vector<gfe> c(spec.n());
  for (std::size_t i = 0; i < spec.n(); ++i)
    c[i] = f.mul(spec.eval_mult()[i], poly_eval(f, acc, spec.support()[i]));
  return c;
}

bool parity_checks_hold(const CodeSpec& spec, std::span<const gfe> c) {
  auto s = power_sum_syndromes(spec, c);
  for (gfe v : s)
    if (v) return false;
  return true;
}

}  // namespace

TEST_CASE("GRS construction", "[code]") {
  auto F = make_field(4, 0x13);
  auto B = make_standard_basis(F);
  std::mt19937_64 rng(21);

  SECTION("full support makes y the entrywise inverse of w") {
    std::vector<gfe> w(16);
    for (auto& x : w) x = gfe(1 + rng() % 15);
    auto C = make_grs(B, prefix_support(*B, 16), w, 10);
    for (std::size_t i = 0; i < 16; ++i) {
      // direct product oracle: y_i = 1 / (w_i * prod_{j != i} (alpha_i - alpha_j))
      gfe prod = w[i];
      for (std::size_t j = 0; j < 16; ++j)
        if (j != i) prod = F->mul(prod, F->add(C->support()[i], C->support()[j]));
      REQUIRE(C->col_mult()[i] == F->inv(prod));
      REQUIRE(C->col_mult()[i] == F->inv(w[i]));
    }
  }
  SECTION("the same holds at the benchmark field size") {
    auto F12 = make_field(12, 0x1009);
    auto B12 = make_standard_basis(F12);
    std::vector<gfe> w(4096);
    for (auto& x : w) x = gfe(1 + rng() % 4095);
    auto C = make_grs(B12, prefix_support(*B12, 4096), w, 4000);
    for (std::size_t i = 0; i < 4096; i += 97)
      REQUIRE(C->col_mult()[i] == F12->inv(w[i]));
  }
  SECTION("two-point code over GF(4) with unit multipliers") {
    auto F2 = make_field(2, 0x7);
    auto B2 = make_standard_basis(F2);
    auto C = make_grs(B2, {0, 1}, {1, 1}, 1);
    CHECK(C->col_mult()[0] == 1);
    CHECK(C->col_mult()[1] == 1);
  }
  SECTION("rejects bad inputs") {
    CHECK_THROWS_WITH(make_grs(B, {0, 1, 2, 1}, {1, 1, 1, 1}, 2),
                      Catch::Matchers::ContainsSubstring("duplicate"));
    CHECK_THROWS_AS(make_grs(B, {0, 1, 2, 3}, {1, 0, 1, 1}, 2), Error);  // zero w
    CHECK_THROWS_AS(make_grs(B, {0, 1, 2, 3}, {1, 1, 1, 1}, 5), Error);  // k > n
    CHECK_THROWS_AS(make_grs(B, {0, 1, 2, 3}, {1, 1, 1, 1}, 0), Error);
  }
}

TEST_CASE("alternant construction", "[code]") {
  auto F = make_field(3, 0xB);
  auto B = make_standard_basis(F);
  SECTION("H is the transposed Vandermonde when y is all ones") {
    auto C = make_alternant(B, prefix_support(*B, 8), std::vector<gfe>(8, 1), 4);
    auto H = C->parity_check_matrix();
    REQUIRE(H.size() == 4);
    for (std::size_t l = 0; l < 4; ++l)
      for (std::size_t i = 0; i < 8; ++i)
        REQUIRE(H[l][i] == F->pow(gfe(i), l));
  }
  SECTION("column multipliers round-trip through the w derivation") {
    std::mt19937_64 rng(4);
    std::vector<gfe> y(8);
    for (auto& x : y) x = gfe(1 + rng() % 7);
    auto A = make_alternant(B, prefix_support(*B, 8), y, 4);
    CHECK(A->col_mult() == y);
    auto G = make_grs(B, prefix_support(*B, 8), A->eval_mult(), 4);
    CHECK(G->col_mult() == y);
    CHECK(G->parity_check_matrix() == A->parity_check_matrix());
  }
  SECTION("binary layer dimensions") {
    auto C = make_alternant(B, prefix_support(*B, 8), std::vector<gfe>(8, 1), 4);
    auto Hb = C->binary_parity_matrix();
    CHECK(Hb.rows() == std::size_t(3 * 4));  // m * (n - k)
    CHECK(Hb.cols() == 8);
    auto pivots = Hb.rref();
    CHECK(C->binary_dim() == 8 - pivots.size());
    // every generator row satisfies the wide-field parity checks
    const BitMatrix& gen = C->generator();
    for (std::size_t r = 0; r < gen.rows(); ++r) {
      std::vector<gfe> c(gen.cols());
      for (std::size_t i = 0; i < gen.cols(); ++i) c[i] = gen.get(r, i) ? 1 : 0;
      REQUIRE(parity_checks_hold(*C, c));
    }
  }
  SECTION("rejects zero multipliers") {
    std::vector<gfe> y(8, 1);
    y[3] = 0;
    CHECK_THROWS_AS(make_alternant(B, prefix_support(*B, 8), y, 4), Error);
  }
}

TEST_CASE("Goppa construction", "[code]") {
  auto F = make_field(4, 0x13);
  auto B = make_standard_basis(F);
  SECTION("non-separable polynomial is rejected") {
    // (y + 3)^2 = y^2 + 9 over characteristic 2 with 3^2 = 5
    Poly g{F->mul(3, 3), 0, 1};
    CHECK_THROWS_WITH(make_goppa(B, prefix_support(*B, 16), g),
                      Catch::Matchers::ContainsSubstring("separable"));
  }
  SECTION("polynomial vanishing on the support is rejected and names the position") {
    Poly g{F->add(B->omega(5), 0), 1};  // root at omega_5
    CHECK_THROWS_WITH(make_goppa(B, prefix_support(*B, 16), g),
                      Catch::Matchers::ContainsSubstring("position 5"));
  }
  SECTION("parity row zero is the column multiplier vector") {
    Poly g{8, 1, 1};  // y^2 + y + x^3: no roots in GF(16) since Tr(x^3) = 1
    auto C = make_goppa(B, prefix_support(*B, 16), g);
    auto H = C->parity_check_matrix();
    REQUIRE(H.size() == C->redundancy());
    CHECK(H[0] == C->col_mult());
    for (std::size_t i = 0; i < 16; ++i) {
      const gfe ga = poly_eval(*F, g, B->omega(std::uint32_t(i)));
      CHECK(C->col_mult()[i] == F->inv(F->mul(ga, ga)));
    }
    CHECK(C->redundancy() == 4);  // 2 * deg G
    CHECK(C->t() == 2);
  }
}

TEST_CASE("GRS encoding", "[code]") {
  auto F = make_field(4, 0x13);
  auto B = make_standard_basis(F);
  std::mt19937_64 rng(31);
  std::vector<gfe> w(16);
  for (auto& x : w) x = gfe(1 + rng() % 15);
  auto C = make_grs(B, prefix_support(*B, 16), w, 6);

  SECTION("zero message gives the zero codeword") {
    auto c = C->encode_grs(Poly{});
    CHECK(c == std::vector<gfe>(16, 0));
  }
  SECTION("constant message with unit multipliers gives a constant word") {
    auto C1 = make_grs(B, prefix_support(*B, 16), std::vector<gfe>(16, 1), 6);
    auto c = C1->encode_grs(Poly{9});
    CHECK(c == std::vector<gfe>(16, 9));
  }
  SECTION("random messages satisfy every parity check") {
    for (int trial = 0; trial < 50; ++trial) {
      Poly msg(6);
      for (auto& x : msg) x = gfe(rng() % 16);
      poly_trim(msg);
      REQUIRE(parity_checks_hold(*C, C->encode_grs(msg)));
    }
  }
  SECTION("degree bound enforced") {
    CHECK_THROWS_AS(C->encode_grs(Poly(7, 1)), Error);
  }
}

TEST_CASE("systematic transform encoder", "[code]") {
  auto F = make_field(8, 0x11D);
  auto B = make_standard_basis(F);
  std::mt19937_64 rng(33);
  std::vector<gfe> w(200);
  for (auto& x : w) x = gfe(1 + rng() % 255);
  auto C = make_grs(B, prefix_support(*B, 200), w, 16);

  SECTION("zero in, zero out") {
    std::vector<gfe> u(16, 0);
    CHECK(C->encode_fft_systematic(u) == std::vector<gfe>(200, 0));
  }
  SECTION("output is systematic and matches the interpolation reference") {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<gfe> u(16);
      for (auto& x : u) x = gfe(rng() % 256);
      auto c = C->encode_fft_systematic(u);
      for (std::size_t j = 0; j < 16; ++j) REQUIRE(c[j] == u[j]);
      REQUIRE(c == interpolation_encode(*C, u));
    }
  }
  SECTION("non-power-of-two k is rejected") {
    auto C6 = make_grs(B, prefix_support(*B, 200), w, 6);
    CHECK_THROWS_AS(C6->encode_fft_systematic(std::vector<gfe>(6, 1)), Error);
  }
  SECTION("support missing a needed prefix point is rejected") {
    std::vector<gfe> sup = prefix_support(*B, 20);
    sup.erase(sup.begin());  // drop omega_0
    auto Cs = make_grs(B, sup, std::vector<gfe>(19, 1), 16);
    CHECK_THROWS_AS(Cs->encode_fft_systematic(std::vector<gfe>(16, 1)), Error);
  }
}

TEST_CASE("binary Goppa encoding and membership", "[code]") {
  auto F = make_field(6, 0x43);
  auto B = make_standard_basis(F);
  Poly g{1, 1, 0, 0, 1};  // y^4 + y + 1, no roots in GF(64), separable
  auto C = make_goppa(B, prefix_support(*B, 64), g);
  std::mt19937_64 rng(37);

  SECTION("all-zero info encodes to the zero codeword, which is a member") {
    auto c = C->encode_goppa(std::vector<std::uint8_t>(C->binary_dim(), 0));
    CHECK(c == std::vector<std::uint8_t>(64, 0));
    CHECK(C->goppa_membership(c));
  }
  SECTION("random info words encode to members that satisfy the binary parity matrix") {
    auto Hb = C->binary_parity_matrix();
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint8_t> info(C->binary_dim());
      for (auto& b : info) b = std::uint8_t(rng() & 1);
      auto c = C->encode_goppa(info);
      REQUIRE(C->goppa_membership(c));
      auto par = Hb.mul_vec(c);
      for (auto bit : par) REQUIRE(bit == 0);
      // systematic in the information positions
      for (std::size_t j = 0; j < info.size(); ++j)
        REQUIRE(c[C->info_positions()[j]] == info[j]);
    }
  }
  SECTION("a single flipped bit always breaks membership") {
    std::vector<std::uint8_t> info(C->binary_dim());
    for (auto& b : info) b = std::uint8_t(rng() & 1);
    auto c = C->encode_goppa(info);
    for (std::size_t i = 0; i < 64; ++i) {
      c[i] ^= 1;
      REQUIRE_FALSE(C->goppa_membership(c));
      c[i] ^= 1;
    }
  }
}

TEST_CASE("binary dimension at the benchmark parameters", "[code]") {
  auto F = make_field(12, 0x1009);
  auto B = make_standard_basis(F);
  Poly g(65, 0);
  g[0] = 0x2;  // y^64 + y^3 + y + x
  g[1] = 1;
  g[3] = 1;
  g[64] = 1;
  std::vector<gfe> sup;
  for (std::uint32_t j = 0; sup.size() < 3488; ++j) {
    const gfe a = B->omega(j);
    if (poly_eval(*F, g, a) != 0) sup.push_back(a);
  }
  auto C = make_goppa(B, sup, g);
  CHECK(C->n() == 3488);
  CHECK(C->t() == 64);
  CHECK(C->redundancy() == 128);
  CHECK(C->binary_dim() == 2720);  // 3488 - 12*64, the binary layer has full rank
}
