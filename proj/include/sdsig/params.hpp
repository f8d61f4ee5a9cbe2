#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdsig {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class Scheme : uint8_t { kSig1_3r = 1, kSig1_5r = 2, kSig2 = 3, kSig3 = 4 };
enum class Variant : uint8_t { kSD = 1, kQCSD = 2, kGSD = 3, kQCGSD = 4 };

const char* scheme_name(Scheme s);  // "sig1-3r", "sig1-5r", "sig2", "sig3"
std::optional<Scheme> scheme_from_name(const std::string& s);
const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& s);
inline bool scheme_uses_gsd(Scheme s) { return s == Scheme::kSig2 || s == Scheme::kSig3; }
inline bool variant_is_qc(Variant v) { return v == Variant::kQCSD || v == Variant::kQCGSD; }

struct ParamSet {
  uint8_t id = 0;
  std::string name;
  unsigned lambda = 128;
  uint32_t n = 0, k = 0, w = 0;
  uint32_t M = 0, N = 0, tau = 0;
  Variant variant = Variant::kQCSD;
  // Empty for presets usable with any scheme (toy).
  std::optional<Scheme> scheme;
  bool insecure = false;

  void validate() const;  // ParamError on violated invariants
  // Variant used for `s`; a scheme-agnostic preset switches between the SD
  // and GSD flavour of its variant.
  Variant variant_for(Scheme s) const;
  bool supports(Scheme s) const { return !scheme || *scheme == s; }
};

const std::vector<ParamSet>& builtin_paramsets();
// Built-ins plus every *.json under $SDSIG_PARAM_DIR.
std::vector<ParamSet> all_paramsets();
// By exact name, or "<scheme>-<name>" when a scheme is given.
const ParamSet& find_paramset(const std::string& name, std::optional<Scheme> scheme = std::nullopt);
const ParamSet& find_paramset(uint8_t id);

std::vector<ParamSet> load_paramsets_json(const std::string& text);
std::string paramsets_to_json(const std::vector<ParamSet>& sets);

struct SoundnessResult {
  BigRational error;
  double log2 = 0;
  uint32_t worst_e = 0;
  // tau = M: every setup is executed and nothing is audited.
  bool degenerate = false;
};

BigInt binomial(uint64_t n, uint64_t k);
double log2_of(const BigRational& q);

// max over e in [0, tau] of C(M-e, tau-e) / C(M, tau) / N^(tau-e).
SoundnessResult soundness_error(uint32_t M, uint32_t N, uint32_t tau);
bool meets_security(const SoundnessResult& s, unsigned lambda);
uint32_t min_tau(uint32_t M, uint32_t N, unsigned lambda);
// Smallest tau with max(1/M, 1/N)^tau <= 2^-lambda (plain parallel repetition).
uint32_t parallel_repetition_tau(uint32_t M, uint32_t N, unsigned lambda);

struct KzResult {
  double log2_cost = 0;
  uint32_t tau_star = 0;
};
// log2 of min over tau* in [0, tau] of |C1|^tau* + |C2|^(tau - tau*).
KzResult kz_cost(double c1_log2, double c2_log2, uint32_t tau);
// For 5-round Sig1: |C1| = M per repetition, |C2| = N.
KzResult kz_cost_for(const ParamSet& p);

double size_estimate_bits(Scheme s, const ParamSet& p);
inline double size_estimate_kb(Scheme s, const ParamSet& p) { return size_estimate_bits(s, p) / 8000.0; }

}  // namespace sdsig
