// JSON (de)serialization of code specs and text I/O for symbol/bit vectors.
//
// Spec schema: {"kind": "grs"|"alternant"|"goppa", "field": {"m": int,
// "modulus": "0x..."}, "basis": [...], "support": [...], "w"|"y": [...],
// "k": int, "goppa_poly": [...]}. Field elements are lowercase zero-padded
// hex of width ceil(m/4); polynomial coefficients are listed low degree first.
// Symbol files hold whitespace-separated hex elements; bit files hold the
// vector packed LSB-first as hex byte pairs.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fftdec/code.hpp"

namespace fftdec {

namespace detail {

inline gfe parse_element(const Field& f, const nlohmann::json& j, const std::string& where) {
  if (!j.is_string())
    throw Error(where + ": expected a hex string element");
  try {
    return f.from_hex(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(where + ": " + e.what());
  }
}

inline std::vector<gfe> parse_elements(const Field& f, const nlohmann::json& j,
                                       const std::string& key) {
  if (!j.is_array()) throw Error(key + ": expected an array of hex strings");
  std::vector<gfe> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_element(f, j[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

inline nlohmann::json dump_elements(const Field& f, const std::vector<gfe>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (gfe x : v) arr.push_back(f.to_hex(x));
  return arr;
}

}  // namespace detail

inline std::shared_ptr<const Field> field_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("modulus"))
    throw Error("field: expected {\"m\": int, \"modulus\": \"0x...\"}");
  if (!j["m"].is_number_integer()) throw Error("field.m: expected an integer");
  const int m = j["m"].get<int>();
  if (!j["modulus"].is_string()) throw Error("field.modulus: expected a hex string");
  const std::string mod_str = j["modulus"].get<std::string>();
  std::uint32_t mod = 0;
  try {
    mod = std::stoul(mod_str, nullptr, 16);
  } catch (...) {
    throw Error("field.modulus: bad hex value '" + mod_str + "'");
  }
  return make_field(m, mod);
}

inline nlohmann::json field_to_json(const Field& f) {
  std::ostringstream mod;
  mod << "0x" << std::hex << f.modulus();
  return {{"m", f.m()}, {"modulus", mod.str()}};
}

inline CodeSpecPtr spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("spec: expected a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw Error("kind: expected \"grs\", \"alternant\", or \"goppa\"");
  const std::string kind = j["kind"].get<std::string>();
  if (!j.contains("field")) throw Error("field: missing");
  auto f = field_from_json(j["field"]);

  std::shared_ptr<const Basis> basis;
  if (j.contains("basis")) {
    std::vector<gfe> v = detail::parse_elements(*f, j["basis"], "basis");
    basis = make_basis(f, v);
  } else {
    basis = make_standard_basis(f);
  }

  if (!j.contains("support")) throw Error("support: missing");
  std::vector<gfe> support = detail::parse_elements(*f, j["support"], "support");

  auto get_k = [&](bool required) -> std::size_t {
    if (!j.contains("k")) {
      if (required) throw Error("k: missing");
      return 0;
    }
    if (!j["k"].is_number_unsigned()) throw Error("k: expected a non-negative integer");
    return j["k"].get<std::size_t>();
  };

  if (kind == "grs") {
    if (!j.contains("w")) throw Error("w: missing (required for kind \"grs\")");
    return make_grs(basis, std::move(support),
                    detail::parse_elements(*f, j["w"], "w"), get_k(true));
  }
  if (kind == "alternant") {
    if (!j.contains("y")) throw Error("y: missing (required for kind \"alternant\")");
    return make_alternant(basis, std::move(support),
                          detail::parse_elements(*f, j["y"], "y"), get_k(true));
  }
  if (kind == "goppa") {
    if (!j.contains("goppa_poly"))
      throw Error("goppa_poly: missing (required for kind \"goppa\")");
    Poly g = detail::parse_elements(*f, j["goppa_poly"], "goppa_poly");
    auto spec = make_goppa(basis, std::move(support), std::move(g));
    if (j.contains("y")) {
      std::vector<gfe> y = detail::parse_elements(*f, j["y"], "y");
      if (y != spec->col_mult())
        throw Error("y: inconsistent with the Goppa polynomial (y_i must equal G(alpha_i)^-2)");
    }
    if (j.contains("k")) {
      const std::size_t k = get_k(true);
      if (k != spec->binary_dim())
        throw Error("k: expected the binary dimension " + std::to_string(spec->binary_dim()) +
                    ", got " + std::to_string(k));
    }
    return spec;
  }
  throw Error("kind: unknown value '" + kind + "'");
}

inline nlohmann::json spec_to_json(const CodeSpec& spec) {
  const Field& f = spec.field();
  nlohmann::json j;
  j["kind"] = to_string(spec.kind());
  j["field"] = field_to_json(f);
  j["basis"] = detail::dump_elements(f, spec.basis().vectors());
  j["support"] = detail::dump_elements(f, spec.support());
  switch (spec.kind()) {
    case CodeKind::Grs:
      j["w"] = detail::dump_elements(f, spec.eval_mult());
      j["k"] = spec.k_symbols();
      break;
    case CodeKind::Alternant:
      j["y"] = detail::dump_elements(f, spec.col_mult());
      j["k"] = spec.k_symbols();
      break;
    case CodeKind::Goppa:
      j["goppa_poly"] = detail::dump_elements(f, spec.goppa_poly());
      j["k"] = spec.binary_dim();
      break;
  }
  return j;
}

inline CodeSpecPtr load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open spec file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("spec file '" + path + "': " + e.what());
  }
  return spec_from_json(j);
}

inline void save_spec(const CodeSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write spec file '" + path + "'");
  out << spec_to_json(spec).dump(2) << '\n';
}

// Whitespace-separated hex field elements.
inline std::vector<gfe> read_symbols(std::istream& in, const Field& f) {
  std::vector<gfe> out;
  std::string tok;
  while (in >> tok) {
    try {
      out.push_back(f.from_hex(tok));
    } catch (const Error& e) {
      throw Error("symbol " + std::to_string(out.size()) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<gfe> read_symbols_file(const std::string& path, const Field& f) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_symbols(in, f);
}

inline void write_symbols(std::ostream& out, const Field& f, std::span<const gfe> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    out << f.to_hex(v[i]) << ((i + 1) % 16 == 0 || i + 1 == v.size() ? '\n' : ' ');
}

inline void write_symbols_file(const std::string& path, const Field& f,
                               std::span<const gfe> v) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_symbols(out, f, v);
}

// Bit vectors packed LSB-first: bit i lives in byte i/8, bit position i%8;
// bytes rendered as two lowercase hex digits each.
inline std::vector<std::uint8_t> read_bits(std::istream& in, std::size_t n) {
  std::string hex, tok;
  while (in >> tok) hex += tok;
  const std::size_t nbytes = (n + 7) / 8;
  if (hex.size() != 2 * nbytes)
    throw Error("bit vector: expected " + std::to_string(2 * nbytes) + " hex digits for " +
                std::to_string(n) + " bits, got " + std::to_string(hex.size()));
  std::vector<std::uint8_t> bits(n);
  for (std::size_t b = 0; b < nbytes; ++b) {
    const std::string byte_str = hex.substr(2 * b, 2);
    std::size_t used = 0;
    unsigned byte = 0;
    try {
      byte = std::stoul(byte_str, &used, 16);
    } catch (...) {
      used = 0;
    }
    if (used != 2) throw Error("bit vector: bad hex byte '" + byte_str + "' at offset " +
                               std::to_string(2 * b));
    for (std::size_t i = 0; i < 8 && b * 8 + i < n; ++i)
      bits[b * 8 + i] = std::uint8_t((byte >> i) & 1);
  }
  return bits;
}

inline std::vector<std::uint8_t> read_bits_file(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_bits(in, n);
}

inline void write_bits(std::ostream& out, std::span<const std::uint8_t> bits) {
  static const char* digits = "0123456789abcdef";
  const std::size_t nbytes = (bits.size() + 7) / 8;
  for (std::size_t b = 0; b < nbytes; ++b) {
    unsigned byte = 0;
    for (std::size_t i = 0; i < 8 && b * 8 + i < bits.size(); ++i)
      byte |= unsigned(bits[b * 8 + i] & 1) << i;
    out << digits[byte >> 4] << digits[byte & 15];
    if ((b + 1) % 32 == 0 || b + 1 == nbytes) out << '\n';
  }
}

inline void write_bits_file(const std::string& path, std::span<const std::uint8_t> bits) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  write_bits(out, bits);
}

}  // namespace fftdec
