#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "fftdec/bench.hpp"
#include "fftdec/decode.hpp"
#include "fftdec/oracle.hpp"

using namespace fftdec;

namespace {

CodeSpecPtr full_support_grs(int m, std::uint32_t mod, std::size_t k, std::uint64_t seed) {
  auto F = make_field(m, mod);
  auto B = make_standard_basis(F);
  const std::size_t n = F->order();
  std::vector<gfe> sup(n);
  for (std::size_t i = 0; i < n; ++i) sup[i] = B->omega(std::uint32_t(i));
  std::mt19937_64 rng(seed);
  std::vector<gfe> w(n);
  for (auto& x : w) x = gfe(1 + rng() % (F->order() - 1));
  return make_grs(B, sup, w, k);
}

std::vector<gfe> as_vector(const CodeSpec& spec, const ErrorPattern& e) {
  std::vector<gfe> v(spec.n(), 0);
  for (std::size_t i = 0; i < e.locations.size(); ++i) v[e.locations[i]] = e.values[i];
  return v;
}

}  // namespace

TEST_CASE("decoder geometry from the redundancy", "[decode]") {
  SECTION("power-of-two redundancy: no tail product") {
    Decoder d(full_support_grs(8, 0x11D, 128, 1));
    CHECK(d.rows() == 128);
    CHECK(d.mu() == 7);
    CHECK(d.epsilon() == 128);
    CHECK(d.tail_prod_inv().empty());
    CHECK(d.t_poly() == d.spec().basis().subspace_poly(7));
  }
  SECTION("general redundancy: tail product of eps - rows factors") {
    Decoder d(full_support_grs(8, 0x11D, 156, 1));
    CHECK(d.rows() == 100);
    CHECK(d.mu() == 7);
    CHECK(d.epsilon() == 128);
    CHECK(d.epsilon() - d.rows() == 28);
    CHECK(d.tail_prod_inv().size() == 100);
    const Poly& T = d.t_poly();
    REQUIRE(poly_deg(T) == 100);
    CHECK(T.back() == 1);
    const Basis& B = d.spec().basis();
    const Field& f = d.spec().field();
    CHECK(poly_eval(f, T, B.omega(99)) == 0);
    CHECK(poly_eval(f, T, B.omega(100)) != 0);
  }
  SECTION("a code without redundancy cannot be decoded") {
    CHECK_THROWS_AS(Decoder(full_support_grs(4, 0x13, 16, 1)), Error);
  }
}

TEST_CASE("lifting the received word onto the field enumeration", "[decode]") {
  auto F = make_field(4, 0x13);
  auto B = make_standard_basis(F);
  // shuffled support so the permutation is nontrivial
  std::vector<gfe> sup(16);
  for (std::size_t i = 0; i < 16; ++i) sup[i] = gfe((i * 7 + 3) % 16);
  std::mt19937_64 rng(2);
  std::vector<gfe> w(16);
  for (auto& x : w) x = gfe(1 + rng() % 15);
  auto C = make_grs(B, sup, w, 10);
  Decoder dec(C);
  OpCounts ops;
  CountingField cf(*F, ops);

  SECTION("zero word lifts to nothing") {
    std::vector<gfe> r(16, 0);
    auto lifted = dec.lift_received(cf, std::span<const gfe>(r));
    CHECK(lifted.blocks.empty());
    CHECK(std::count(lifted.rp.begin(), lifted.rp.end(), 0) == 16);
  }
  SECTION("full-support lift is the multiplier-scaled permutation") {
    std::vector<gfe> r(16);
    for (auto& x : r) x = gfe(rng() % 16);
    auto lifted = dec.lift_received(cf, std::span<const gfe>(r));
    const auto& L = C->layout();
    for (std::size_t i = 0; i < 16; ++i)
      REQUIRE(lifted.rp[L.pi_inv[i]] == F->mul(r[i], C->col_mult()[i]));
  }
  SECTION("a single nonzero entry lands in exactly one block") {
    std::vector<gfe> r(16, 0);
    r[5] = 9;
    auto lifted = dec.lift_received(cf, std::span<const gfe>(r));
    const std::uint32_t j = C->layout().pi_inv[5];
    REQUIRE(lifted.blocks == std::vector<std::uint32_t>{j >> dec.mu()});
    for (std::uint32_t g = 0; g < 16; ++g)
      REQUIRE(lifted.rp[g] == (g == j ? F->mul(gfe(9), C->col_mult()[5]) : gfe(0)));
  }
}

TEST_CASE("partial syndrome against brute-force polynomial identities", "[decode]") {
  auto F = make_field(4, 0x13);
  auto B = make_standard_basis(F);
  std::mt19937_64 rng(3);

  for (std::size_t k : {12, 10, 6}) {  // rows 4 (== eps), 6, 10
    auto C = full_support_grs(4, 0x13, k, 40 + k);
    Decoder dec(C);
    const std::size_t rows = C->redundancy();
    const int mu = dec.mu();

    SECTION("single lifted entry gives the subspace difference quotient, rows=" +
            std::to_string(rows)) {
      for (std::uint32_t i : {0u, 5u, 15u}) {
        const gfe e = gfe(1 + rng() % 15);
        std::vector<gfe> r(16, 0);
        r[i] = e;
        OpCounts ops;
        CountingField cf(*F, ops);
        auto s1 = dec.syndrome_s1(cf, dec.lift_received(cf, std::span<const gfe>(r)));
        // expected: coordinates of e*y_i * (s_mu(x) - s_mu(alpha_i)) / (x - alpha_i)
        const gfe a = C->support()[i];
        Poly num = B->subspace_poly(mu);
        num[0] = F->add(num[0], poly_eval(*F, num, a));
        auto [quot, rem] = poly_divmod(*F, num, Poly{a, 1});
        REQUIRE(poly_deg(rem) < 0);
        Poly Q = poly_scale(*F, quot, F->mul(e, C->col_mult()[i]));
        REQUIRE(s1 == monomial_to_xbar(*B, Q, mu, *F));
      }
    }

    SECTION("S1 is the quotient of the lifted interpolant, rows=" + std::to_string(rows)) {
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<gfe> r(16);
        for (auto& x : r) x = gfe(rng() % 16);
        OpCounts ops;
        CountingField cf(*F, ops);
        auto s1 = dec.syndrome_s1(cf, dec.lift_received(cf, std::span<const gfe>(r)));

        std::vector<gfe> rp(16, 0);
        for (std::size_t i = 0; i < 16; ++i)
          rp[C->layout().pi_inv[i]] = F->mul(r[i], C->col_mult()[i]);
        Poly interp = xbar_to_monomial(
            *B, std::span<const gfe>(ifft(*B, std::span<const gfe>(rp), 4, 0, *F)), *F);
        Poly big{1};  // X_{2^m - 2^mu} = prod_{i=mu}^{m-1} s_i
        for (int i = mu; i < 4; ++i) big = poly_mul(*F, big, B->subspace_poly(i));
        auto [quot, rem] = poly_divmod(*F, interp, big);
        REQUIRE(quot == xbar_to_monomial(*B, std::span<const gfe>(s1), *F));
      }
    }

    SECTION("S is the quotient of S1 by the tail product, rows=" + std::to_string(rows)) {
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<gfe> r(16);
        for (auto& x : r) x = gfe(rng() % 16);
        OpCounts ops;
        CountingField cf(*F, ops);
        auto s1 = dec.syndrome_s1(cf, dec.lift_received(cf, std::span<const gfe>(r)));
        auto work = dec.syndrome_s(cf, s1);

        Poly tail{1};
        for (std::size_t l = rows; l < dec.epsilon(); ++l)
          tail = poly_mul(*F, tail, Poly{B->omega(std::uint32_t(l)), 1});
        auto [quot, rem] =
            poly_divmod(*F, xbar_to_monomial(*B, std::span<const gfe>(s1), *F), tail);
        REQUIRE(quot == work.s_poly);
      }
    }
  }
}

TEST_CASE("syndrome depends only on the error pattern", "[decode]") {
  auto C = full_support_grs(4, 0x13, 10, 5);
  Decoder dec(C);
  const Field& f = C->field();
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = random_codeword(rng, *C);
    auto e = random_error(rng, *C, rng() % 4);
    auto r = apply_error(c, e, f);

    OpCounts ops;
    CountingField cf(f, ops);
    auto work = dec.syndrome_s(cf, dec.syndrome_s1(cf, dec.lift_received(
                                        cf, std::span<const gfe>(r))));
    REQUIRE(work.s_poly == direct_generalized_syndrome(*C, r));
    REQUIRE(work.s_poly == direct_generalized_syndrome(*C, as_vector(*C, e)));
  }
}

TEST_CASE("key equation solutions", "[decode]") {
  auto C = full_support_grs(4, 0x13, 10, 7);  // rows = 6, t = 3
  Decoder dec(C);
  const Field& f = C->field();
  OpCounts ops;
  CountingField cf(f, ops);

  SECTION("zero syndrome: trivial locator") {
    auto sol = dec.solve_key_equation(cf, Poly{});
    REQUIRE(sol.has_value());
    CHECK(sol->lambda == Poly{1});
    CHECK(sol->z.empty());
    CHECK(sol->q.empty());
  }
  SECTION("single error: locator, evaluator, and quotient in closed form") {
    for (std::uint32_t i : {2u, 8u, 13u}) {
      const gfe e = 11, a = C->support()[i], ey = f.mul(e, C->col_mult()[i]);
      std::vector<gfe> r(16, 0);
      r[i] = e;
      auto sol = dec.solve_key_equation(cf, direct_generalized_syndrome(*C, r));
      REQUIRE(sol.has_value());
      CHECK(sol->lambda == Poly{a, 1});
      CHECK(sol->q == Poly{ey});
      const gfe ta = poly_eval(f, dec.t_poly(), a);
      Poly zexp = ta ? Poly{f.mul(ey, ta)} : Poly{};
      CHECK(sol->z == zexp);
    }
  }
  SECTION("weight-t errors: the locator vanishes exactly on the error locations") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      auto e = random_error(rng, *C, C->t());
      auto sol = dec.solve_key_equation(
          cf, direct_generalized_syndrome(*C, as_vector(*C, e)));
      REQUIRE(sol.has_value());
      for (std::size_t i = 0; i < C->n(); ++i) {
        const bool is_err = std::find(e.locations.begin(), e.locations.end(), i) !=
                            e.locations.end();
        REQUIRE((poly_eval(f, sol->lambda, C->support()[i]) == 0) == is_err);
      }
    }
  }
}

TEST_CASE("root collection over the support", "[decode]") {
  auto C = full_support_grs(6, 0x43, 44, 9);  // rows = 20, t = 10
  Decoder dec(C);
  const Field& f = C->field();
  OpCounts ops;
  CountingField cf(f, ops);

  CHECK(dec.find_roots(cf, Poly{1}).empty());
  CHECK(dec.find_roots(cf, Poly{C->support()[37], 1}) ==
        std::vector<std::uint32_t>{37});

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint32_t> locs(64);
    std::iota(locs.begin(), locs.end(), 0);
    std::shuffle(locs.begin(), locs.end(), rng);
    locs.resize(10);
    std::sort(locs.begin(), locs.end());
    Poly lambda{1};
    for (auto i : locs) lambda = poly_mul(f, lambda, Poly{C->support()[i], 1});
    REQUIRE(dec.find_roots(cf, lambda) == locs);
  }
}

TEST_CASE("error value extraction", "[decode]") {
  auto C = full_support_grs(4, 0x13, 10, 11);
  Decoder dec(C);
  const Field& f = C->field();
  OpCounts ops;
  CountingField cf(f, ops);

  SECTION("single error value is recovered exactly") {
    const std::uint32_t i = 6;
    const gfe e = 13;
    std::vector<gfe> r(16, 0);
    r[i] = e;
    auto sol = dec.solve_key_equation(cf, direct_generalized_syndrome(*C, r));
    REQUIRE(sol.has_value());
    auto vo = dec.error_values(cf, *sol, std::vector<std::uint32_t>{i});
    CHECK(vo.fail == FailureReason::None);
    REQUIRE(vo.values == std::vector<gfe>{e});
  }
  SECTION("zero quotient with claimed locations fails") {
    KeySolution sol{Poly{C->support()[3], 1}, Poly{}, Poly{}};
    auto vo = dec.error_values(cf, sol, std::vector<std::uint32_t>{3});
    CHECK(vo.fail == FailureReason::TooManyErrors);
  }
  SECTION("repeated locator root is reported") {
    const gfe a = C->support()[4];
    KeySolution sol{Poly{f.mul(a, a), 0, 1}, Poly{}, Poly{1}};  // (x + a)^2
    auto vo = dec.error_values(cf, sol, std::vector<std::uint32_t>{4});
    CHECK(vo.fail == FailureReason::RepeatedRoot);
  }
}

TEST_CASE("decoding round trips across all syndrome layouts", "[decode]") {
  std::mt19937_64 rng(12);
  // rows 16 (subspace), 24 (aligned-coset interpolation), 22 (Newton interpolation)
  for (std::size_t k : {16, 8, 10}) {
    auto C = full_support_grs(5, 0x25, k, 100 + k);
    Decoder dec(C);
    const Field& f = C->field();
    for (std::size_t weight = 0; weight <= C->t(); ++weight) {
      for (int trial = 0; trial < 8; ++trial) {
        auto c = random_codeword(rng, *C);
        auto e = random_error(rng, *C, weight);
        auto r = apply_error(c, e, f);
        auto res = dec.decode(r);
        REQUIRE(res.status ==
                (weight ? DecodeStatus::Corrected : DecodeStatus::NoError));
        REQUIRE(res.codeword == c);
        REQUIRE(res.error_locations == e.locations);
        REQUIRE(res.error_values == e.values);
      }
    }
  }
}

TEST_CASE("decoding a clean word spends only the syndrome phase", "[decode]") {
  auto C = full_support_grs(5, 0x25, 20, 13);
  Decoder dec(C);
  std::mt19937_64 rng(14);
  auto c = random_codeword(rng, *C);
  auto res = dec.decode(c);
  CHECK(res.status == DecodeStatus::NoError);
  CHECK(res.codeword == c);
  CHECK(res.error_locations.empty());
  CHECK(res.ops == res.phases.syndrome);
  CHECK(res.phases.key_eq == OpCounts{});
  CHECK(res.phases.chien == OpCounts{});
  CHECK(res.phases.forney == OpCounts{});
}

TEST_CASE("the residual re-check is free and preserves correct decodes", "[decode]") {
  auto C = full_support_grs(5, 0x25, 10, 15);
  Decoder dec(C);
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = random_codeword(rng, *C);
    auto e = random_error(rng, *C, C->t());
    auto r = apply_error(c, e, C->field());
    auto plain = dec.decode(r, false);
    auto checked = dec.decode(r, true);
    REQUIRE(checked.status == DecodeStatus::Corrected);
    REQUIRE(checked.codeword == plain.codeword);
    REQUIRE(checked.ops == plain.ops);  // re-verification is not counted
  }
}

TEST_CASE("overweight errors never yield a silent wrong answer under re-check",
          "[decode]") {
  auto C = full_support_grs(5, 0x25, 16, 17);  // t = 8
  Decoder dec(C);
  const Field& f = C->field();
  std::mt19937_64 rng(18);
  int failures = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto c = random_codeword(rng, *C);
    auto e = random_error(rng, *C, C->t() + 1 + rng() % 4);
    auto r = apply_error(c, e, f);
    auto res = dec.decode(r, true);
    if (res.status == DecodeStatus::Failure) {
      ++failures;
      REQUIRE(res.codeword == r);  // input echoed back
      REQUIRE((res.reason == FailureReason::TooManyErrors ||
               res.reason == FailureReason::RepeatedRoot ||
               res.reason == FailureReason::RootCountMismatch ||
               res.reason == FailureReason::ResidualSyndrome));
    } else {
      // A miscorrection within radius t of another codeword must still be a
      // genuine codeword; the re-check guarantees it.
      auto s = power_sum_syndromes(*C, res.codeword);
      for (gfe v : s) REQUIRE(v == 0);
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("binary codes reject non-binary error values", "[decode]") {
  auto F = make_field(6, 0x43);
  auto B = make_standard_basis(F);
  std::vector<gfe> sup(64);
  for (std::size_t i = 0; i < 64; ++i) sup[i] = B->omega(std::uint32_t(i));
  Poly g{1, 1, 0, 0, 1};  // y^4 + y + 1
  auto C = make_goppa(B, sup, g);
  Decoder dec(C);
  std::mt19937_64 rng(19);

  SECTION("correctable binary patterns come back with all-ones values") {
    for (int trial = 0; trial < 40; ++trial) {
      auto c = random_codeword(rng, *C);
      auto e = random_error(rng, *C, 1 + rng() % C->t());
      auto r = apply_error(c, e, *F);
      auto res = dec.decode(r, true);
      REQUIRE(res.status == DecodeStatus::Corrected);
      REQUIRE(res.codeword == c);
      for (gfe v : res.error_values) REQUIRE(v == 1);
    }
  }
  SECTION("a wide-field error value fails with the dedicated reason") {
    auto c = random_codeword(rng, *C);
    auto r = c;
    r[11] = C->field().add(r[11], 5);  // value 5 is outside GF(2)
    auto res = dec.decode(r);
    REQUIRE(res.status == DecodeStatus::Failure);
    CHECK(res.reason == FailureReason::NonBinaryError);
    CHECK(res.codeword == r);
  }
}
