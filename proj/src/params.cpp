#include "sdsig/params.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sdsig/errors.hpp"

namespace sdsig {

const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::kSig1_3r: return "sig1-3r";
    case Scheme::kSig1_5r: return "sig1-5r";
    case Scheme::kSig2: return "sig2";
    case Scheme::kSig3: return "sig3";
  }
  return "?";
}

std::optional<Scheme> scheme_from_name(const std::string& s) {
  for (Scheme c : {Scheme::kSig1_3r, Scheme::kSig1_5r, Scheme::kSig2, Scheme::kSig3})
    if (s == scheme_name(c)) return c;
  return std::nullopt;
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::kSD: return "SD";
    case Variant::kQCSD: return "QCSD";
    case Variant::kGSD: return "GSD";
    case Variant::kQCGSD: return "QCGSD";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& s) {
  for (Variant v : {Variant::kSD, Variant::kQCSD, Variant::kGSD, Variant::kQCGSD})
    if (s == variant_name(v)) return v;
  return std::nullopt;
}

void ParamSet::validate() const {
  if (n == 0 || k == 0 || k >= n) throw ParamError(name + ": need 0 < k < n");
  if (w > n) throw ParamError(name + ": w > n");
  if (tau == 0 || tau > M) throw ParamError(name + ": need 1 <= tau <= M");
  if (N < 2) throw ParamError(name + ": N must be at least 2");
  if (variant_is_qc(variant) && n != 2 * k) throw ParamError(name + ": QC variants need n = 2k");
  if (scheme) {
    const bool gsd = variant == Variant::kGSD || variant == Variant::kQCGSD;
    if (gsd != scheme_uses_gsd(*scheme)) throw ParamError(name + ": variant does not match scheme");
  }
}

Variant ParamSet::variant_for(Scheme s) const {
  if (!supports(s)) throw ParamError(name + " is not a " + scheme_name(s) + " parameter set");
  const bool qc = variant_is_qc(variant);
  if (scheme_uses_gsd(s)) return qc ? Variant::kQCGSD : Variant::kGSD;
  return qc ? Variant::kQCSD : Variant::kSD;
}

namespace {

ParamSet preset(uint8_t id, const char* name, uint32_t n, uint32_t k, uint32_t w, uint32_t M, uint32_t N,
                uint32_t tau, Variant v, std::optional<Scheme> s, bool insecure = false) {
  ParamSet p;
  p.id = id;
  p.name = name;
  p.n = n, p.k = k, p.w = w, p.M = M, p.N = N, p.tau = tau;
  p.variant = v;
  p.scheme = s;
  p.insecure = insecure;
  return p;
}

}  // namespace

const std::vector<ParamSet>& builtin_paramsets() {
  static const std::vector<ParamSet> sets = [] {
    using S = Scheme;
    using V = Variant;
    std::vector<ParamSet> v = {
        preset(1, "sig1-3r-qcsd", 1238, 619, 137, 256, 2, 128, V::kQCSD, S::kSig1_3r),
        preset(2, "sig1-3r-sd", 1190, 595, 132, 256, 2, 128, V::kSD, S::kSig1_3r),
        preset(3, "sig1-5r-qcsd", 1238, 619, 137, 256, 2, 143, V::kQCSD, S::kSig1_5r),
        preset(4, "sig1-5r-sd", 1190, 595, 132, 256, 2, 143, V::kSD, S::kSig1_5r),
        preset(5, "sig2-n16", 1238, 619, 137, 272, 16, 35, V::kQCGSD, S::kSig2),
        preset(6, "sig2-n32", 1238, 619, 137, 389, 32, 28, V::kQCGSD, S::kSig2),
        preset(7, "sig2-n64", 1238, 619, 137, 631, 64, 23, V::kQCGSD, S::kSig2),
        preset(8, "sig3-n16", 1238, 619, 137, 272, 16, 35, V::kQCGSD, S::kSig3),
        preset(9, "sig3-n32", 1238, 619, 137, 389, 32, 28, V::kQCGSD, S::kSig3),
        preset(10, "sig3-n64", 1238, 619, 137, 631, 64, 23, V::kQCGSD, S::kSig3),
        preset(11, "toy", 64, 32, 8, 16, 4, 8, V::kQCSD, std::nullopt, true),
    };
    for (const auto& p : v) p.validate();
    return v;
  }();
  return sets;
}

std::vector<ParamSet> load_paramsets_json(const std::string& text) {
  std::vector<ParamSet> out;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParamError(std::string("preset file: ") + e.what());
  }
  if (!j.is_array()) j = nlohmann::json::array({j});
  for (const auto& r : j) {
    try {
      ParamSet p;
      p.id = r.at("id").get<uint8_t>();
      p.name = r.at("name").get<std::string>();
      p.lambda = r.value("lambda", 128u);
      p.n = r.at("n"), p.k = r.at("k"), p.w = r.at("w");
      p.M = r.at("M"), p.N = r.at("N"), p.tau = r.at("tau");
      auto v = variant_from_name(r.at("variant").get<std::string>());
      if (!v) throw ParamError("unknown variant in preset " + p.name);
      p.variant = *v;
      if (r.contains("scheme") && !r["scheme"].is_null()) {
        auto s = scheme_from_name(r["scheme"].get<std::string>());
        if (!s) throw ParamError("unknown scheme in preset " + p.name);
        p.scheme = s;
      }
      p.insecure = r.value("insecure", false);
      p.validate();
      out.push_back(std::move(p));
    } catch (const nlohmann::json::exception& e) {
      throw ParamError(std::string("preset record: ") + e.what());
    }
  }
  return out;
}

std::string paramsets_to_json(const std::vector<ParamSet>& sets) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& p : sets) {
    nlohmann::json r = {{"id", p.id}, {"name", p.name}, {"lambda", p.lambda}, {"n", p.n}, {"k", p.k},
                        {"w", p.w}, {"M", p.M}, {"N", p.N}, {"tau", p.tau},
                        {"variant", variant_name(p.variant)}, {"insecure", p.insecure}};
    r["scheme"] = p.scheme ? nlohmann::json(scheme_name(*p.scheme)) : nlohmann::json(nullptr);
    j.push_back(r);
  }
  return j.dump(2);
}

std::vector<ParamSet> all_paramsets() {
  std::vector<ParamSet> sets = builtin_paramsets();
  const char* dir = std::getenv("SDSIG_PARAM_DIR");
  if (!dir || !*dir) return sets;
  std::error_code ec;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream ss;
    ss << in.rdbuf();
    for (auto& p : load_paramsets_json(ss.str())) {
      if (p.id < 128) throw ParamError(f.string() + ": external preset ids must be >= 128");
      for (const auto& q : sets)
        if (q.id == p.id || q.name == p.name) throw ParamError(f.string() + ": duplicate preset " + p.name);
      sets.push_back(std::move(p));
    }
  }
  return sets;
}

namespace {

const ParamSet* lookup(const std::vector<ParamSet>& sets, const std::string& name) {
  for (const auto& p : sets)
    if (p.name == name) return &p;
  return nullptr;
}

// Keeps external presets alive for the references handed out below.
const std::vector<ParamSet>& cached_all() {
  static const std::vector<ParamSet> sets = all_paramsets();
  return sets;
}

}  // namespace

const ParamSet& find_paramset(const std::string& name, std::optional<Scheme> scheme) {
  const auto& sets = cached_all();
  const ParamSet* p = nullptr;
  if (scheme) p = lookup(sets, std::string(scheme_name(*scheme)) + "-" + name);
  if (!p) p = lookup(sets, name);
  if (!p) throw ParamError("unknown parameter set: " + name);
  if (scheme && !p->supports(*scheme))
    throw ParamError(p->name + " is not a " + scheme_name(*scheme) + " parameter set");
  return *p;
}

const ParamSet& find_paramset(uint8_t id) {
  for (const auto& p : cached_all())
    if (p.id == id) return p;
  throw ParamError("unknown parameter set id " + std::to_string(id));
}

BigInt binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

double log2_int(const BigInt& v) {
  if (v <= 0) return -INFINITY;
  const unsigned msb = boost::multiprecision::msb(v);
  if (msb < 60) return std::log2(v.convert_to<double>());
  BigInt top = v >> (msb - 60);
  return std::log2(top.convert_to<double>()) + static_cast<double>(msb - 60);
}

}  // namespace

double log2_of(const BigRational& q) {
  return log2_int(boost::multiprecision::numerator(q)) - log2_int(boost::multiprecision::denominator(q));
}

SoundnessResult soundness_error(uint32_t M, uint32_t N, uint32_t tau) {
  if (tau < 1 || tau > M) throw ParamError("soundness_error: need 1 <= tau <= M");
  if (N < 2) throw ParamError("soundness_error: need N >= 2");
  const BigInt total = binomial(M, tau);
  SoundnessResult best;
  best.error = -1;
  for (uint32_t e = 0; e <= tau; ++e) {
    BigInt den = total * boost::multiprecision::pow(BigInt(N), tau - e);
    BigRational term(binomial(M - e, tau - e), den);
    if (term > best.error) {
      best.error = term;
      best.worst_e = e;
    }
  }
  best.log2 = log2_of(best.error);
  best.degenerate = tau == M;
  return best;
}

bool meets_security(const SoundnessResult& s, unsigned lambda) {
  BigInt num = boost::multiprecision::numerator(s.error);
  BigInt den = boost::multiprecision::denominator(s.error);
  return (num << lambda) <= den;
}

uint32_t min_tau(uint32_t M, uint32_t N, unsigned lambda) {
  for (uint32_t tau = 1; tau <= M; ++tau)
    if (meets_security(soundness_error(M, N, tau), lambda)) return tau;
  throw ParamError("min_tau: no tau <= M reaches 2^-" + std::to_string(lambda));
}

uint32_t parallel_repetition_tau(uint32_t M, uint32_t N, unsigned lambda) {
  if (M < 2 || N < 2) throw ParamError("parallel_repetition_tau: need M, N >= 2");
  const BigInt c = std::min(M, N);
  const BigInt bound = BigInt(1) << lambda;
  BigInt acc = 1;
  uint32_t tau = 0;
  while (acc < bound) {
    acc *= c;
    ++tau;
  }
  return tau;
}

KzResult kz_cost(double c1_log2, double c2_log2, uint32_t tau) {
  if (tau < 1) throw ParamError("kz_cost: tau must be positive");
  KzResult best{INFINITY, 0};
  for (uint32_t t = 0; t <= tau; ++t) {
    const double a = c1_log2 * t, b = c2_log2 * (tau - t);
    const double hi = std::max(a, b), lo = std::min(a, b);
    const double cost = hi + std::log2(1.0 + std::exp2(lo - hi));
    if (cost < best.log2_cost) best = {cost, t};
  }
  return best;
}

KzResult kz_cost_for(const ParamSet& p) { return kz_cost(std::log2(p.M), std::log2(p.N), p.tau); }

double size_estimate_bits(Scheme s, const ParamSet& p) {
  const double lam = p.lambda, com = 2.0 * p.lambda, n = p.n, M = p.M, tau = p.tau, N = p.N;
  const double rsp1 = tau / 2 * (1.5 * n + 2 * lam + 7.0 / 8.0 * 2 * com);
  switch (s) {
    case Scheme::kSig1_3r:
      return (1 + 0.75 * (M - tau)) * (lam + com) + rsp1;
    case Scheme::kSig1_5r:
      return (2 * com + lam) + 0.75 * (M - tau) * lam + rsp1;
    case Scheme::kSig2:
      return (com + lam) * (1 + tau * std::log2(M / tau)) + tau * (2 * n + (lam + com) * std::log2(N));
    case Scheme::kSig3:
      return (com + lam) * (1 + tau * std::log2(M / tau)) + tau * (2 * n + lam * std::log2(N) + com);
  }
  return 0;
}

}  // namespace sdsig
