// Command-line front end: code construction, encoding, corruption, decoding,
// self-test, and the operation-count benchmark.
#include <cctype>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "fftdec/fftdec.hpp"

using namespace fftdec;

namespace {

// Irreducible defaults for --m when --modulus is not given.
std::uint32_t default_modulus(int m) {
  static const std::uint32_t table[] = {0,      0,      0x7,    0xB,    0x13,   0x25,
                                        0x43,   0x89,   0x11D,  0x211,  0x409,  0x805,
                                        0x1009, 0x201B, 0x4443, 0x8003, 0x1100B};
  if (m < 2 || m > 16) throw Error("m must be in [2, 16]");
  return table[m];
}

// Accepts coefficients as separate arguments or one string split on
// whitespace/commas, low degree first.
Poly parse_poly(const Field& f, const std::vector<std::string>& coeffs) {
  Poly g;
  for (const auto& s : coeffs) {
    std::string tok;
    for (char ch : s + " ") {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        if (!tok.empty()) g.push_back(f.from_hex(tok));
        tok.clear();
      } else {
        tok += ch;
      }
    }
  }
  poly_trim(g);
  return g;
}

std::vector<gfe> build_support(const Basis& B, std::size_t n, const std::string& mode,
                               const Poly& g, std::mt19937_64& rng) {
  const Field& f = B.field();
  std::vector<gfe> all;
  all.reserve(f.order());
  for (std::uint32_t j = 0; j < f.order(); ++j) {
    const gfe a = B.omega(j);
    if (!g.empty() && poly_eval(f, g, a) == 0) continue;  // Goppa roots excluded
    all.push_back(a);
  }
  if (mode == "full") n = all.size();
  if (n > all.size())
    throw Error("support of size " + std::to_string(n) + " unavailable (only " +
                std::to_string(all.size()) + " usable elements)");
  if (mode == "random") {
    for (std::size_t i = 0; i < all.size(); ++i)
      std::swap(all[i], all[i + rng() % (all.size() - i)]);
  } else if (mode != "prefix" && mode != "full") {
    throw Error("unknown support mode '" + mode + "' (prefix|random|full)");
  }
  all.resize(n);
  return all;
}

std::vector<gfe> build_multipliers(const Field& f, std::size_t n, const std::string& mode,
                                   std::mt19937_64& rng) {
  std::vector<gfe> v(n, 1);
  if (mode == "random") {
    std::uniform_int_distribution<std::uint32_t> nz(1, f.order() - 1);
    for (auto& x : v) x = gfe(nz(rng));
  } else if (mode != "ones") {
    throw Error("unknown multiplier mode '" + mode + "' (ones|random)");
  }
  return v;
}

CodeSpecPtr preset_spec(const std::string& name) {
  if (name == "goppa3488") {
    auto F = make_field(12, 0x1009);
    auto B = make_standard_basis(F);
    Poly g(65, 0);
    g[0] = 0x2;  // G(y) = y^64 + y^3 + y + x
    g[1] = 1;
    g[3] = 1;
    g[64] = 1;
    std::vector<gfe> sup;
    for (std::uint32_t j = 0; sup.size() < 3488; ++j)
      if (poly_eval(*F, g, B->omega(j)) != 0) sup.push_back(B->omega(j));
    return make_goppa(B, sup, g);
  }
  if (name == "goppa8192") {
    auto F = make_field(13, 0x201B);
    auto B = make_standard_basis(F);
    Poly g(129, 0);
    g[0] = 1;  // G(y) = y^128 + y^7 + y^2 + y + 1
    g[1] = 1;
    g[2] = 1;
    g[7] = 1;
    g[128] = 1;
    std::vector<gfe> sup(8192);
    for (std::uint32_t j = 0; j < 8192; ++j) sup[j] = B->omega(j);
    return make_goppa(B, sup, g);
  }
  throw Error("unknown preset '" + name + "' (goppa3488|goppa8192)");
}

void check_format(const CodeSpec& spec, const std::string& format) {
  if (format == "bits" && !spec.binary())
    throw Error("--format bits requires a binary (alternant/goppa) code");
  if (format != "bits" && format != "hex")
    throw Error("unknown format '" + format + "' (hex|bits)");
}

std::vector<gfe> read_vector(const CodeSpec& spec, const std::string& path,
                             const std::string& format, std::size_t len) {
  if (format == "bits") {
    auto bits = read_bits_file(path, len);
    return {bits.begin(), bits.end()};
  }
  auto v = read_symbols_file(path, spec.field());
  if (v.size() != len)
    throw Error(path + ": expected " + std::to_string(len) + " symbols, got " +
                std::to_string(v.size()));
  return v;
}

void write_vector(const CodeSpec& spec, const std::string& path, const std::string& format,
                  std::span<const gfe> v) {
  if (format == "bits") {
    std::vector<std::uint8_t> bits(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] > 1) throw Error("vector is not binary, cannot write bits format");
      bits[i] = std::uint8_t(v[i]);
    }
    write_bits_file(path, bits);
  } else {
    write_symbols_file(path, spec.field(), v);
  }
}

nlohmann::json counts_json(const OpCounts& c) {
  return {{"additions", c.additions},
          {"multiplications", c.multiplications},
          {"inversions", c.inversions}};
}

int selftest() {
  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::printf("%s %s\n", ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
  };
  std::mt19937_64 rng(12345);

  // transform round trip, all tau and beta at m=4
  {
    auto F = make_field(4, 0x13);
    auto B = make_standard_basis(F);
    bool ok = true;
    for (int tau = 0; tau <= 4 && ok; ++tau)
      for (std::uint32_t b = 0; b < 16 && ok; ++b) {
        std::vector<gfe> data(std::size_t(1) << tau);
        for (auto& x : data) x = gfe(rng() % 16);
        auto evals = fft(*B, std::span<const gfe>(data), tau, B->omega(b), *F);
        auto back = ifft(*B, std::span<const gfe>(evals), tau, B->omega(b), *F);
        ok = back == data;
      }
    check(ok, "transform inverse identity (m=4, all tau, all beta)");
  }

  // GRS decode exactness across weights, both syndrome paths
  for (auto [red, label] : {std::pair<std::size_t, const char*>{8, "rows==eps"},
                            std::pair<std::size_t, const char*>{22, "rows<eps"}}) {
    auto F = make_field(5, 0x25);
    auto B = make_standard_basis(F);
    std::vector<gfe> sup(32);
    for (int i = 0; i < 32; ++i) sup[i] = B->omega(i);
    std::vector<gfe> w(32);
    std::uniform_int_distribution<std::uint32_t> nz(1, 31);
    for (auto& x : w) x = gfe(nz(rng));
    auto C = make_grs(B, sup, w, 32 - red);
    Decoder dec(C);
    OracleDecoder odec(C);
    bool ok = true;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      auto c = random_codeword(rng, *C);
      auto e = random_error(rng, *C, rng() % (C->t() + 1));
      auto r = apply_error(c, e, *F);
      auto res = dec.decode(r, true);
      auto ores = odec.decode(r);
      ok = (res.codeword == c) && (ores.codeword == c) &&
           res.error_locations == e.locations && res.status == ores.status;
    }
    check(ok, std::string("GRS decode + oracle agreement (") + label + ")");
  }

  // Goppa end to end
  {
    auto F = make_field(6, 0x43);
    auto B = make_standard_basis(F);
    std::vector<gfe> sup(64);
    for (int i = 0; i < 64; ++i) sup[i] = B->omega(i);
    Poly g;
    for (;;) {
      g = {gfe(rng() % 64), gfe(rng() % 64), gfe(rng() % 64), 1};
      if (poly_deg(poly_gcd(*F, g, poly_derivative(g))) != 0) continue;
      bool rootless = true;
      for (auto a : sup)
        if (poly_eval(*F, g, a) == 0) { rootless = false; break; }
      if (rootless) break;
    }
    auto C = make_goppa(B, sup, g);
    Decoder dec(C);
    bool ok = true;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      auto c = random_codeword(rng, *C);
      auto e = random_error(rng, *C, C->t());
      auto r = apply_error(c, e, *F);
      auto res = dec.decode(r, true);
      ok = res.status == DecodeStatus::Corrected && res.codeword == c &&
           C->goppa_membership(std::vector<std::uint8_t>(res.codeword.begin(),
                                                         res.codeword.end()));
    }
    check(ok, "Goppa construct/encode/corrupt/decode round trip (m=6)");
  }

  // syndrome pipeline vs direct generalized syndrome
  {
    auto F = make_field(4, 0x13);
    auto B = make_standard_basis(F);
    std::vector<gfe> sup(16);
    for (int i = 0; i < 16; ++i) sup[i] = B->omega(i);
    bool ok = true;
    for (std::size_t k = 2; k < 15 && ok; ++k) {
      std::vector<gfe> w(16, 1);
      auto C = make_grs(B, sup, w, k);
      Decoder dec(C);
      for (int trial = 0; trial < 20 && ok; ++trial) {
        std::vector<gfe> r(16);
        for (auto& x : r) x = gfe(rng() % 16);
        OpCounts ops;
        CountingField cf(*F, ops);
        auto lifted = dec.lift_received(cf, std::span<const gfe>(r));
        auto work = dec.syndrome_s(cf, dec.syndrome_s1(cf, lifted));
        ok = work.s_poly == direct_generalized_syndrome(*C, r);
      }
    }
    check(ok, "syndrome pipeline matches direct computation (m=4, all k)");
  }

  std::printf(failures ? "SELFTEST: %d FAILURE(S)\n" : "SELFTEST: all passed\n", failures);
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transform-domain decoder for GRS, alternant, and Goppa codes"};
  app.require_subcommand(1);

  // --- make-code ---
  auto* mk = app.add_subcommand("make-code", "Construct a code and write its spec JSON");
  std::string mk_kind = "grs", mk_support = "prefix", mk_mult = "random", mk_out,
              mk_preset;
  std::vector<std::string> mk_gpoly;
  int mk_m = 8;
  std::uint32_t mk_modulus = 0;
  std::size_t mk_n = 0, mk_k = 0;
  std::uint64_t mk_seed = 1;
  mk->add_option("--kind", mk_kind, "grs|alternant|goppa");
  mk->add_option("--preset", mk_preset, "goppa3488|goppa8192 (overrides other flags)");
  mk->add_option("--m", mk_m, "field extension degree (2..16)");
  mk->add_option("--modulus", mk_modulus, "field modulus bits (default: built-in table)");
  mk->add_option("--n", mk_n, "code length");
  mk->add_option("--k", mk_k, "dimension (GRS/alternant design k)");
  mk->add_option("--goppa-poly", mk_gpoly,
                 "Goppa polynomial coefficients, low degree first, hex");
  mk->add_option("--support", mk_support, "prefix|random|full (default prefix)");
  mk->add_option("--mult", mk_mult, "column multipliers w/y: ones|random (default random)");
  mk->add_option("--seed", mk_seed, "PRNG seed");
  mk->add_option("--out", mk_out, "output spec file")->required();

  // --- encode ---
  auto* en = app.add_subcommand("encode", "Encode a message file");
  std::string en_spec, en_in, en_out, en_format = "hex";
  bool en_systematic = false;
  en->add_option("--spec", en_spec)->required();
  en->add_option("--in", en_in, "message: k hex symbols, or binary-dimension bits")
      ->required();
  en->add_option("--out", en_out)->required();
  en->add_option("--format", en_format, "hex|bits (bits: binary codes only)");
  en->add_flag("--systematic", en_systematic,
               "GRS only: transform-domain systematic encoder (power-of-two k)");

  // --- corrupt ---
  auto* co = app.add_subcommand("corrupt", "Add a random error pattern to a codeword");
  std::string co_spec, co_in, co_out, co_format = "hex";
  std::size_t co_weight = 0;
  std::uint64_t co_seed = 1;
  co->add_option("--spec", co_spec)->required();
  co->add_option("--in", co_in)->required();
  co->add_option("--out", co_out)->required();
  co->add_option("--weight", co_weight, "error weight (default t)");
  co->add_option("--seed", co_seed);
  co->add_option("--format", co_format, "hex|bits");

  // --- decode ---
  auto* de = app.add_subcommand("decode", "Decode a received vector");
  std::string de_spec, de_in, de_out, de_format = "hex";
  bool de_recheck = true;
  de->add_option("--spec", de_spec)->required();
  de->add_option("--in", de_in)->required();
  de->add_option("--out", de_out, "corrected codeword output");
  de->add_option("--format", de_format, "hex|bits");
  de->add_option("--recheck", de_recheck, "re-verify the corrected word (default true)");

  // --- selftest ---
  app.add_subcommand("selftest", "Run small-field invariant suites");

  // --- bench ---
  auto* be = app.add_subcommand("bench", "Operation-count benchmark (both decoders)");
  std::string be_spec, be_preset;
  std::size_t be_trials = 5, be_weight = SIZE_MAX;
  std::uint64_t be_seed = 1;
  bool be_nobase = false;
  be->add_option("--spec", be_spec, "spec file (or use --preset)");
  be->add_option("--preset", be_preset, "goppa3488|goppa8192");
  be->add_option("--trials", be_trials);
  be->add_option("--weight", be_weight, "error weight (default t)");
  be->add_option("--seed", be_seed);
  be->add_flag("--no-baseline", be_nobase, "skip the conventional baseline decoder");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mk->parsed()) {
      CodeSpecPtr spec;
      if (!mk_preset.empty()) {
        spec = preset_spec(mk_preset);
      } else {
        auto F = make_field(mk_m, mk_modulus ? mk_modulus : default_modulus(mk_m));
        auto B = make_standard_basis(F);
        std::mt19937_64 rng(mk_seed);
        if (mk_kind == "goppa") {
          if (mk_gpoly.empty()) throw Error("--goppa-poly is required for kind goppa");
          Poly g = parse_poly(*F, mk_gpoly);
          auto sup = build_support(*B, mk_n, mk_support, g, rng);
          spec = make_goppa(B, sup, g);
        } else {
          if (mk_n == 0 || mk_k == 0) throw Error("--n and --k are required");
          auto sup = build_support(*B, mk_n, mk_support, {}, rng);
          auto mult = build_multipliers(*F, sup.size(), mk_mult, rng);
          spec = (mk_kind == "grs") ? make_grs(B, sup, mult, mk_k)
                                    : make_alternant(B, sup, mult, mk_k);
        }
      }
      save_spec(*spec, mk_out);
      std::fprintf(stderr, "wrote %s: %s n=%zu t=%zu\n", mk_out.c_str(),
                   to_string(spec->kind()), spec->n(), spec->t());
      return 0;
    }

    if (en->parsed()) {
      auto spec = load_spec(en_spec);
      check_format(*spec, en_format);
      std::vector<gfe> cw;
      if (spec->binary()) {
        auto info = read_bits_file(en_in, spec->binary_dim());
        auto bits = spec->encode_goppa(info);
        cw.assign(bits.begin(), bits.end());
      } else if (en_systematic) {
        auto u = read_vector(*spec, en_in, "hex", spec->k_symbols());
        cw = spec->encode_fft_systematic(u);
      } else {
        auto msg = read_vector(*spec, en_in, "hex", spec->k_symbols());
        Poly p(msg.begin(), msg.end());
        poly_trim(p);
        cw = spec->encode_grs(p);
      }
      write_vector(*spec, en_out, en_format, cw);
      return 0;
    }

    if (co->parsed()) {
      auto spec = load_spec(co_spec);
      check_format(*spec, co_format);
      auto c = read_vector(*spec, co_in, co_format, spec->n());
      std::mt19937_64 rng(co_seed);
      if (co_weight == 0) co_weight = spec->t();
      auto e = random_error(rng, *spec, co_weight);
      auto r = apply_error(std::move(c), e, spec->field());
      write_vector(*spec, co_out, co_format, r);
      nlohmann::json ej{{"weight", e.locations.size()},
                        {"locations", e.locations},
                        {"values", nlohmann::json::array()}};
      for (gfe v : e.values) ej["values"].push_back(spec->field().to_hex(v));
      std::fprintf(stderr, "%s\n", ej.dump().c_str());
      return 0;
    }

    if (de->parsed()) {
      auto spec = load_spec(de_spec);
      check_format(*spec, de_format);
      auto r = read_vector(*spec, de_in, de_format, spec->n());
      Decoder dec(spec);
      DecodeResult res = dec.decode(r, de_recheck);
      nlohmann::json rj{{"status", to_string(res.status)},
                        {"ops", counts_json(res.ops)},
                        {"phases",
                         {{"syndrome", counts_json(res.phases.syndrome)},
                          {"key_equation", counts_json(res.phases.key_eq)},
                          {"chien", counts_json(res.phases.chien)},
                          {"forney", counts_json(res.phases.forney)}}}};
      if (res.status == DecodeStatus::Failure) {
        rj["reason"] = to_string(res.reason);
      } else {
        rj["error_locations"] = res.error_locations;
        rj["error_values"] = nlohmann::json::array();
        for (gfe v : res.error_values)
          rj["error_values"].push_back(spec->field().to_hex(v));
      }
      std::printf("%s\n", rj.dump(2).c_str());
      if (res.status == DecodeStatus::Failure) {
        std::fprintf(stderr, "decode_failure reason=%s\n", to_string(res.reason));
        return 2;
      }
      if (!de_out.empty()) write_vector(*spec, de_out, de_format, res.codeword);
      return 0;
    }

    if (app.get_subcommand("selftest")->parsed()) return selftest();

    if (be->parsed()) {
      CodeSpecPtr spec;
      if (!be_preset.empty()) spec = preset_spec(be_preset);
      else if (!be_spec.empty()) spec = load_spec(be_spec);
      else throw Error("bench needs --spec or --preset");
      const std::size_t weight = (be_weight == SIZE_MAX) ? spec->t() : be_weight;
      BenchReport rep = run_bench(spec, be_trials, weight, be_seed, !be_nobase);
      std::fputs(rep.to_text().c_str(), stderr);
      std::printf("%s\n", rep.to_json().dump(2).c_str());
      return (rep.proposed.failures || rep.mismatches) ? 2 : 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
