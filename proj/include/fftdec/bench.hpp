// Benchmark harness: repeated instrumented decodes of randomly corrupted
// random codewords, with both the transform decoder and the conventional
// baseline, and side-by-side reference rows for the two published parameter
// sets. Counting covers per-decode work only; context precomputation
// (tables, T(x), tail products, parity matrices) is excluded.
#pragma once

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include <json.hpp>

#include "fftdec/decode.hpp"
#include "fftdec/oracle.hpp"

namespace fftdec {

struct ErrorPattern {
  std::vector<std::uint32_t> locations;  // ascending support indices
  std::vector<gfe> values;               // aligned, nonzero (all 1 for binary codes)
};

inline ErrorPattern random_error(std::mt19937_64& rng, const CodeSpec& spec,
                                 std::size_t weight) {
  if (weight > spec.n()) throw Error("error weight exceeds the code length");
  std::set<std::uint32_t> pos;
  std::uniform_int_distribution<std::uint32_t> pick(0, std::uint32_t(spec.n()) - 1);
  while (pos.size() < weight) pos.insert(pick(rng));
  ErrorPattern e;
  std::uniform_int_distribution<std::uint32_t> val(1, spec.field().order() - 1);
  for (std::uint32_t i : pos) {
    e.locations.push_back(i);
    e.values.push_back(spec.binary() ? gfe(1) : gfe(val(rng)));
  }
  return e;
}

inline std::vector<gfe> random_codeword(std::mt19937_64& rng, const CodeSpec& spec) {
  if (spec.binary()) {
    std::vector<std::uint8_t> info(spec.binary_dim());
    for (auto& b : info) b = std::uint8_t(rng() & 1);
    std::vector<std::uint8_t> cw = spec.encode_goppa(info);
    return {cw.begin(), cw.end()};
  }
  Poly msg(spec.k_symbols());
  std::uniform_int_distribution<std::uint32_t> val(0, spec.field().order() - 1);
  for (auto& x : msg) x = gfe(val(rng));
  poly_trim(msg);
  return spec.encode_grs(msg);
}

inline std::vector<gfe> apply_error(std::vector<gfe> c, const ErrorPattern& e,
                                    const Field& f) {
  for (std::size_t k = 0; k < e.locations.size(); ++k)
    c[e.locations[k]] = f.add(c[e.locations[k]], e.values[k]);
  return c;
}

struct MethodStats {
  OpCounts mean;          // per-decode averages over all trials
  PhaseCounts phase_mean;
  double wall_ms_mean = 0;
  double wall_ms_max = 0;
  std::size_t failures = 0;  // decodes not ending in Corrected/NoError
};

struct PaperRow {
  std::uint64_t additions = 0, multiplications = 0, inversions = 0;
};

struct BenchReport {
  std::string descriptor;
  std::size_t trials = 0, weight = 0;
  std::uint64_t seed = 0;
  std::string rng_name = "mt19937_64";
  MethodStats proposed, baseline;
  std::size_t mismatches = 0;  // trials where the two decoders disagreed
  bool has_reference = false;
  PaperRow ref_proposed, ref_baseline;

  std::string to_text() const;
  nlohmann::json to_json() const;
};

namespace detail {

inline void accumulate(MethodStats& st, const DecodeResult& res, double ms) {
  st.mean += res.ops;
  st.phase_mean.syndrome += res.phases.syndrome;
  st.phase_mean.key_eq += res.phases.key_eq;
  st.phase_mean.chien += res.phases.chien;
  st.phase_mean.forney += res.phases.forney;
  st.wall_ms_mean += ms;
  st.wall_ms_max = std::max(st.wall_ms_max, ms);
  if (res.status == DecodeStatus::Failure) ++st.failures;
}

inline OpCounts divide(OpCounts c, std::size_t n) {
  c.additions /= n;
  c.multiplications /= n;
  c.inversions /= n;
  return c;
}

inline void finalize(MethodStats& st, std::size_t trials) {
  st.mean = divide(st.mean, trials);
  st.phase_mean.syndrome = divide(st.phase_mean.syndrome, trials);
  st.phase_mean.key_eq = divide(st.phase_mean.key_eq, trials);
  st.phase_mean.chien = divide(st.phase_mean.chien, trials);
  st.phase_mean.forney = divide(st.phase_mean.forney, trials);
  st.wall_ms_mean /= double(trials);
}

}  // namespace detail

// Published reference rows, matched on (kind, m, n, t).
inline bool lookup_reference(const CodeSpec& spec, PaperRow& proposed, PaperRow& baseline) {
  if (spec.kind() != CodeKind::Goppa) return false;
  if (spec.field().m() == 12 && spec.n() == 3488 && spec.t() == 64) {
    proposed = {103720, 63568, 128};
    baseline = {693857, 689889, 3617};
    return true;
  }
  if (spec.field().m() == 13 && spec.n() == 8192 && spec.t() == 128) {
    proposed = {243176, 148976, 256};
    baseline = {3235840, 3219712, 8448};
    return true;
  }
  return false;
}

inline BenchReport run_bench(CodeSpecPtr spec, std::size_t trials, std::size_t weight,
                             std::uint64_t seed, bool run_baseline = true) {
  if (trials == 0) throw Error("trial count must be at least 1");
  if (weight > spec->t()) throw Error("bench weight must not exceed t");
  Decoder dec(spec);
  std::shared_ptr<OracleDecoder> odec;
  if (run_baseline) odec = std::make_shared<OracleDecoder>(spec);

  BenchReport rep;
  {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s n=%zu k=%zu t=%zu over GF(2^%d)",
                  to_string(spec->kind()), spec->n(),
                  spec->binary() ? spec->binary_dim() : spec->k_symbols(), spec->t(),
                  spec->field().m());
    rep.descriptor = buf;
  }
  rep.trials = trials;
  rep.weight = weight;
  rep.seed = seed;
  rep.has_reference = lookup_reference(*spec, rep.ref_proposed, rep.ref_baseline);

  std::mt19937_64 rng(seed);
  using clock = std::chrono::steady_clock;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::vector<gfe> c = random_codeword(rng, *spec);
    const ErrorPattern e = random_error(rng, *spec, weight);
    const std::vector<gfe> r = apply_error(c, e, spec->field());

    auto t0 = clock::now();
    DecodeResult res = dec.decode(r);
    auto t1 = clock::now();
    detail::accumulate(rep.proposed, res,
                       std::chrono::duration<double, std::milli>(t1 - t0).count());

    if (odec) {
      t0 = clock::now();
      DecodeResult ores = odec->decode(r);
      t1 = clock::now();
      detail::accumulate(rep.baseline, ores,
                         std::chrono::duration<double, std::milli>(t1 - t0).count());
      if (ores.codeword != res.codeword) ++rep.mismatches;
    }
  }
  detail::finalize(rep.proposed, trials);
  if (odec) detail::finalize(rep.baseline, trials);
  return rep;
}

inline std::string BenchReport::to_text() const {
  std::string out;
  char line[192];
  auto row = [&](const char* name, const OpCounts& c, double ms_mean, double ms_max) {
    std::snprintf(line, sizeof line, "  %-22s %14llu %14llu %12llu %10.3f %10.3f\n", name,
                  (unsigned long long)c.additions, (unsigned long long)c.multiplications,
                  (unsigned long long)c.inversions, ms_mean, ms_max);
    out += line;
  };
  auto ref_row = [&](const char* name, const PaperRow& r) {
    std::snprintf(line, sizeof line, "  %-22s %14llu %14llu %12llu\n", name,
                  (unsigned long long)r.additions, (unsigned long long)r.multiplications,
                  (unsigned long long)r.inversions);
    out += line;
  };
  std::snprintf(line, sizeof line, "%s | weight %zu | %zu trial(s) | %s seed %llu\n",
                descriptor.c_str(), weight, trials, rng_name.c_str(),
                (unsigned long long)seed);
  out += line;
  out += "  (per-decode means; context precomputation excluded from counts)\n";
  std::snprintf(line, sizeof line, "  %-22s %14s %14s %12s %10s %10s\n", "method", "additions",
                "multiplications", "inversions", "ms(mean)", "ms(max)");
  out += line;
  row("transform decoder", proposed.mean, proposed.wall_ms_mean, proposed.wall_ms_max);
  if (baseline.wall_ms_max > 0 || baseline.mean.total())
    row("conventional baseline", baseline.mean, baseline.wall_ms_mean, baseline.wall_ms_max);
  if (has_reference) {
    ref_row("reference (proposed)", ref_proposed);
    ref_row("reference (baseline)", ref_baseline);
  }
  if (proposed.failures || baseline.failures || mismatches) {
    std::snprintf(line, sizeof line, "  FAILURES: transform %zu, baseline %zu, disagreements %zu\n",
                  proposed.failures, baseline.failures, mismatches);
    out += line;
  }
  return out;
}

inline nlohmann::json BenchReport::to_json() const {
  auto counts = [](const OpCounts& c) {
    return nlohmann::json{{"additions", c.additions},
                          {"multiplications", c.multiplications},
                          {"inversions", c.inversions}};
  };
  auto method = [&](const MethodStats& st) {
    return nlohmann::json{{"mean", counts(st.mean)},
                          {"phases",
                           {{"syndrome", counts(st.phase_mean.syndrome)},
                            {"key_equation", counts(st.phase_mean.key_eq)},
                            {"chien", counts(st.phase_mean.chien)},
                            {"forney", counts(st.phase_mean.forney)}}},
                          {"wall_ms_mean", st.wall_ms_mean},
                          {"wall_ms_max", st.wall_ms_max},
                          {"failures", st.failures}};
  };
  nlohmann::json j{{"code", descriptor},      {"trials", trials}, {"weight", weight},
                   {"rng", rng_name},         {"seed", seed},     {"counting",
                   "per-decode only; context precomputation excluded"},
                   {"proposed", method(proposed)}};
  if (baseline.mean.total() || baseline.wall_ms_max > 0) {
    j["baseline"] = method(baseline);
    j["disagreements"] = mismatches;
  }
  if (has_reference) {
    auto ref = [](const PaperRow& r) {
      return nlohmann::json{{"additions", r.additions},
                            {"multiplications", r.multiplications},
                            {"inversions", r.inversions}};
    };
    j["reference"] = {{"proposed", ref(ref_proposed)}, {"baseline", ref(ref_baseline)}};
  }
  return j;
}

}  // namespace fftdec
