// sdsig: key generation, signing, verification and parameter tooling.
// Exit codes: 0 success/accept, 1 reject, 2 parse, parameter or usage error.

#include <openssl/rand.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sdsig/container.hpp"
#include "sdsig/params.hpp"
#include "sdsig/sig.hpp"

using namespace sdsig;

namespace {

constexpr int kExitReject = 1;
constexpr int kExitError = 2;

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return Bytes(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, ByteSpan b) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out.write(reinterpret_cast<const char*>(b.data()), static_cast<std::streamsize>(b.size()));
  if (!out) throw IoError("short write to " + path);
}

Seed seed_from_hex(const std::string& hex) {
  const Bytes b = from_hex(hex);
  if (b.size() != kSeedBytes) throw ParseError("--seed must be " + std::to_string(2 * kSeedBytes) + " hex digits");
  Seed s;
  std::copy(b.begin(), b.end(), s.begin());
  return s;
}

Seed os_seed() {
  Seed s;
  if (RAND_bytes(s.data(), static_cast<int>(s.size())) != 1) throw IoError("no entropy available");
  return s;
}

Seed seed_or_entropy(const std::string& hex) { return hex.empty() ? os_seed() : seed_from_hex(hex); }

Scheme parse_scheme(const std::string& s) {
  const auto v = scheme_from_name(s);
  if (!v) throw ParamError("unknown scheme: " + s + " (sig1-3r, sig1-5r, sig2, sig3)");
  return *v;
}

struct Common {
  std::string scheme, params, seed, in, out, msg, key, format = "bin";
};

TextFormat format_of(const Common& c) {
  const auto f = text_format_from_name(c.format);
  if (!f) throw ParseError("--format must be bin, hex or b64");
  return *f;
}

void emit(const Common& c, const std::string& path, ByteSpan container) {
  write_file(path, encode_text(container, format_of(c)));
}

int cmd_keygen(const Common& c) {
  const Scheme s = parse_scheme(c.scheme);
  const ParamSet& p = find_paramset(c.params, s);
  if (c.out.empty()) throw ParseError("keygen needs --out <prefix>");
  const KeyPair kp = keygen(s, p, seed_or_entropy(c.seed));
  emit(c, c.out + ".pk", wrap(kp.pk));
  emit(c, c.out + ".sk", wrap(kp.sk));
  std::printf("preset %s\nscheme %s\npublic_key_bytes %zu\nsecret_key_bytes %zu\n", p.name.c_str(), scheme_name(s),
              public_key_bytes(s, p), secret_key_bytes(s, p));
  return 0;
}

int cmd_sign(const Common& c) {
  if (c.key.empty() || c.msg.empty() || c.out.empty()) throw ParseError("sign needs --key, --msg and --out");
  const SecretKey sk = unwrap_secret_key(decode_container_text(read_file(c.key)));
  const Bytes sig = sign(sk, read_file(c.msg), seed_or_entropy(c.seed));
  emit(c, c.out, wrap(sk.pk.scheme, sk.pk.params, sig));
  std::printf("signature_bytes %zu\n", sig.size());
  return 0;
}

int cmd_verify(const Common& c) {
  if (c.key.empty() || c.msg.empty() || c.in.empty()) throw ParseError("verify needs --key, --msg and --in");
  const PublicKey pk = unwrap_public_key(decode_container_text(read_file(c.key)));
  const Container sig = unwrap(decode_container_text(read_file(c.in)));
  if (sig.scheme != pk.scheme || sig.param_id != pk.params.id)
    throw ParseError("signature and public key use different schemes or parameter sets");
  const Verdict v = verify(pk, read_file(c.msg), sig.payload);
  std::printf("%s\nsignature_bytes %zu\n", verdict_name(v), sig.payload.size());
  if (v == Verdict::kAccept) return 0;
  return v == Verdict::kReject ? kExitReject : kExitError;
}

void print_paramset(const ParamSet& p) {
  std::printf("name %s\nid %u\nlambda %u\nn %u\nk %u\nw %u\nM %u\nN %u\ntau %u\nvariant %s\nscheme %s\ninsecure %s\n",
              p.name.c_str(), p.id, p.lambda, p.n, p.k, p.w, p.M, p.N, p.tau, variant_name(p.variant),
              p.scheme ? scheme_name(*p.scheme) : "any", p.insecure ? "yes" : "no");
}

int cmd_params_list() {
  std::printf("%-14s %3s %5s %5s %4s %4s %3s %4s %-6s %s\n", "name", "id", "n", "k", "w", "M", "N", "tau", "variant",
              "scheme");
  for (const auto& p : all_paramsets())
    std::printf("%-14s %3u %5u %5u %4u %4u %3u %4u %-7s %s\n", p.name.c_str(), p.id, p.n, p.k, p.w, p.M, p.N, p.tau,
                variant_name(p.variant), p.scheme ? scheme_name(*p.scheme) : "any");
  return 0;
}

std::vector<Scheme> schemes_for(const ParamSet& p) {
  if (p.scheme) return {*p.scheme};
  return {Scheme::kSig1_3r, Scheme::kSig1_5r, Scheme::kSig2, Scheme::kSig3};
}

int cmd_sizes(const std::string& name) {
  std::vector<ParamSet> sets;
  if (name.empty() || name == "all") {
    for (const auto& p : all_paramsets())
      if (p.scheme) sets.push_back(p);
  } else {
    sets.push_back(find_paramset(name));
  }
  for (const auto& p : sets)
    for (Scheme s : schemes_for(p)) {
      const double bits = size_estimate_bits(s, p);
      std::printf("%s %s signature %.2f kB (%.0f bits) public_key %zu B secret_key %zu B\n", p.name.c_str(),
                  scheme_name(s), bits / 8000, bits, public_key_bytes(s, p), secret_key_bytes(s, p));
    }
  return 0;
}

int cmd_soundness(uint32_t M, uint32_t N, uint32_t tau, unsigned lambda) {
  const auto r = soundness_error(M, N, tau);
  std::printf("M %u\nN %u\ntau %u\nlog2_error %.3f\nworst_e %u\n", M, N, tau, r.log2, r.worst_e);
  std::printf("bound %s 2^-%u\n", meets_security(r, lambda) ? "<=" : ">", lambda);
  try {
    std::printf("min_tau %u\n", min_tau(M, N, lambda));
  } catch (const ParamError&) {
    std::printf("min_tau none\n");
  }
  return 0;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

int cmd_bench(const Common& c, unsigned iterations) {
  const Scheme s = parse_scheme(c.scheme);
  const ParamSet& p = find_paramset(c.params, s);
  if (iterations == 0) throw ParseError("--iterations must be positive");
  const KeyPair kp = keygen(s, p, seed_or_entropy(c.seed));
  const Bytes msg(32, 0x61);
  std::vector<double> ts, tv;
  size_t bytes = 0;
  using clock = std::chrono::steady_clock;
  for (unsigned i = 0; i < iterations; ++i) {
    auto t0 = clock::now();
    const Bytes sig = sign(kp.sk, msg, os_seed());
    auto t1 = clock::now();
    if (verify(kp.pk, msg, sig) != Verdict::kAccept) throw Error("bench: signature did not verify");
    auto t2 = clock::now();
    ts.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    tv.push_back(std::chrono::duration<double, std::milli>(t2 - t1).count());
    bytes += sig.size();
  }
  std::printf("preset %s\nscheme %s\niterations %u\nsign_median_ms %.3f\nverify_median_ms %.3f\nsignature_bytes_mean %.1f\n",
              p.name.c_str(), scheme_name(s), iterations, median(ts), median(tv), double(bytes) / iterations);
  return 0;
}

// Deterministic keys and signatures, one directory entry per scheme.
int cmd_vectors(const Common& c) {
  if (c.out.empty()) throw ParseError("vectors needs --out <dir>");
  const Seed master = c.seed.empty() ? Seed{} : seed_from_hex(c.seed);
  std::filesystem::create_directories(c.out);
  const std::string preset = c.params.empty() ? "toy" : c.params;
  std::vector<Scheme> schemes;
  if (c.scheme.empty()) schemes = {Scheme::kSig1_3r, Scheme::kSig1_5r, Scheme::kSig2, Scheme::kSig3};
  else schemes = {parse_scheme(c.scheme)};
  const Bytes msg = {'a', 'b', 'c'};
  Seed rand_seed;
  rand_seed.fill(0x5a);
  write_file(c.out + "/msg.bin", msg);
  for (Scheme s : schemes) {
    const ParamSet& p = find_paramset(preset, s);
    const KeyPair kp = keygen(s, p, master);
    const Bytes sig = sign(kp.sk, msg, rand_seed);
    const std::string base = c.out + "/" + scheme_name(s) + "-" + p.name;
    emit(c, base + ".pk", wrap(kp.pk));
    emit(c, base + ".sk", wrap(kp.sk));
    emit(c, base + ".sig", wrap(s, p, sig));
    std::printf("%s %s pk %zu sk %zu sig %zu\n", scheme_name(s), p.name.c_str(), public_key_bytes(s, p),
                secret_key_bytes(s, p), sig.size());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Code-based signatures from syndrome decoding"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub, bool scheme, bool params) {
    if (scheme) sub->add_option("--scheme", c.scheme, "sig1-3r, sig1-5r, sig2 or sig3");
    if (params) sub->add_option("--params", c.params, "Parameter set name (e.g. qcsd, n16, toy)");
  };

  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a key pair");
  add_common(keygen_cmd, true, true);
  keygen_cmd->add_option("--seed", c.seed, "32 hex digits; OS entropy when absent");
  keygen_cmd->add_option("--out", c.out, "Output prefix for <prefix>.pk and <prefix>.sk");
  keygen_cmd->add_option("--format", c.format, "bin, hex or b64");

  auto* sign_cmd = app.add_subcommand("sign", "Sign a message");
  sign_cmd->add_option("--key", c.key, "Secret key file")->required();
  sign_cmd->add_option("--msg", c.msg, "Message file")->required();
  sign_cmd->add_option("--out", c.out, "Signature file")->required();
  sign_cmd->add_option("--seed", c.seed, "32 hex digits of signing randomness");
  sign_cmd->add_option("--format", c.format, "bin, hex or b64");

  auto* verify_cmd = app.add_subcommand("verify", "Verify a signature");
  verify_cmd->add_option("--key", c.key, "Public key file")->required();
  verify_cmd->add_option("--msg", c.msg, "Message file")->required();
  verify_cmd->add_option("--in", c.in, "Signature file")->required();

  auto* params_cmd = app.add_subcommand("params", "List or show parameter sets");
  params_cmd->require_subcommand(1);
  params_cmd->add_subcommand("list", "List all parameter sets");
  std::string show_name;
  auto* show_cmd = params_cmd->add_subcommand("show", "Show one parameter set");
  show_cmd->add_option("name", show_name)->required();

  std::string sizes_name;
  auto* sizes_cmd = app.add_subcommand("sizes", "Estimated key and signature sizes");
  sizes_cmd->add_option("name", sizes_name, "Parameter set name, or all");

  uint32_t sM = 0, sN = 0, stau = 0;
  unsigned lambda = 128;
  auto* sound_cmd = app.add_subcommand("soundness", "Exact soundness error of (M, N, tau)");
  sound_cmd->add_option("M", sM)->required();
  sound_cmd->add_option("N", sN)->required();
  sound_cmd->add_option("tau", stau)->required();
  sound_cmd->add_option("--lambda", lambda);

  unsigned iterations = 10;
  auto* bench_cmd = app.add_subcommand("bench", "Median sign and verify time");
  add_common(bench_cmd, true, true);
  bench_cmd->add_option("--iterations", iterations);
  bench_cmd->add_option("--seed", c.seed);

  auto* vectors_cmd = app.add_subcommand("vectors", "Write deterministic test vectors");
  add_common(vectors_cmd, true, true);
  vectors_cmd->add_option("--seed", c.seed, "Master seed, all zero when absent");
  vectors_cmd->add_option("--out", c.out, "Output directory")->required();
  vectors_cmd->add_option("--format", c.format, "bin, hex or b64");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (keygen_cmd->parsed()) return cmd_keygen(c);
    if (sign_cmd->parsed()) return cmd_sign(c);
    if (verify_cmd->parsed()) return cmd_verify(c);
    if (params_cmd->parsed()) {
      if (show_cmd->parsed()) {
        print_paramset(find_paramset(show_name));
        return 0;
      }
      return cmd_params_list();
    }
    if (sizes_cmd->parsed()) return cmd_sizes(sizes_name);
    if (sound_cmd->parsed()) return cmd_soundness(sM, sN, stau, lambda);
    if (bench_cmd->parsed()) return cmd_bench(c, iterations);
    if (vectors_cmd->parsed()) return cmd_vectors(c);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "ParseError: %s\n", e.what());
  } catch (const ParamError& e) {
    std::fprintf(stderr, "ParamError: %s\n", e.what());
  } catch (const IoError& e) {
    std::fprintf(stderr, "IoError: %s\n", e.what());
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
  }
  return kExitError;
}
