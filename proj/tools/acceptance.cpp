// Checks the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failing criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "sdsig/fixed_weight.hpp"
#include "sdsig/params.hpp"
#include "sdsig/pok.hpp"
#include "sdsig/sig.hpp"
#include "sdsig/trees.hpp"

using namespace sdsig;

namespace {

Seed seed_of(uint64_t i, uint8_t salt = 0) {
  Seed s{};
  for (int j = 0; j < 8; ++j) s[j] = static_cast<uint8_t>(i >> (8 * j));
  s[15] = salt;
  return s;
}

Bytes msg_of(uint64_t i) {
  Bytes m(16 + i % 48);
  for (size_t j = 0; j < m.size(); ++j) m[j] = static_cast<uint8_t>(i * 131 + j * 7);
  return m;
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

const Scheme kSchemes[] = {Scheme::kSig1_3r, Scheme::kSig1_5r, Scheme::kSig2, Scheme::kSig3};

const struct {
  const char* name;
  double kb;
} kReferenceSizes[] = {
    {"sig1-3r-qcsd", 25.2}, {"sig1-3r-sd", 24.6}, {"sig1-5r-qcsd", 24.3}, {"sig1-5r-sd", 23.7},
    {"sig2-n16", 22.6},     {"sig2-n32", 20.6},    {"sig2-n64", 19.3},     {"sig3-n16", 19.3},
    {"sig3-n32", 17.0},     {"sig3-n64", 15.6},
};

Outcome c1_reference_estimates() {
  bool ok = true;
  std::string misses;
  for (const auto& row : kReferenceSizes) {
    const auto& p = find_paramset(row.name);
    const double kb = size_estimate_kb(*p.scheme, p);
    if (std::abs(kb - row.kb) > 0.2) {
      ok = false;
      misses += fmt(" %s=%.3f(reference %.1f)", row.name, kb, row.kb);
    }
  }
  return {ok, ok ? " all ten rows within 0.2 kB" : " outside 0.2 kB:" + misses};
}

// Criterion 2 signs 20 messages per preset; the first few signatures also
// feed criterion 4's full-parameter round trips.
struct FullRun {
  std::string detail2, detail4;
  bool pass2 = true, pass4 = true;
};

FullRun full_parameter_runs() {
  FullRun out;
  std::array<int, 5> verified{};
  std::array<int, 5> presets_of{};
  for (const auto& row : kReferenceSizes) presets_of[static_cast<int>(*find_paramset(row.name).scheme)]++;
  for (const auto& row : kReferenceSizes) {
    const auto& p = find_paramset(row.name);
    const Scheme s = *p.scheme;
    const auto kp = keygen(s, p, seed_of(1, 7));
    const int to_verify = (10 + presets_of[static_cast<int>(s)] - 1) / presets_of[static_cast<int>(s)];
    double total = 0;
    for (uint64_t i = 0; i < 20; ++i) {
      const Bytes m = msg_of(i);
      const Bytes sig = sign(kp.sk, m, seed_of(i, 8));
      total += static_cast<double>(sig.size());
      if (static_cast<int>(i) < to_verify) {
        if (verify(kp.pk, m, sig) == Verdict::kAccept) verified[static_cast<int>(s)]++;
        else out.pass4 = false;
      }
    }
    const double avg = total / 20, est = size_estimate_bits(s, p) / 8;
    const double dev = avg / est - 1;
    if (std::abs(dev) > 0.05) out.pass2 = false;
    out.detail2 += fmt(" %s=%.0fB(%+.1f%%)", row.name, avg, 100 * dev);
  }
  for (Scheme s : kSchemes) {
    if (verified[static_cast<int>(s)] < 10) out.pass4 = false;
    out.detail4 += fmt(" %s:%d", scheme_name(s), verified[static_cast<int>(s)]);
  }
  return out;
}

Outcome c3_soundness() {
  const struct {
    uint32_t M, N, tau;
  } rows[] = {{272, 16, 35}, {389, 32, 28}, {631, 64, 23}};
  bool ok = true;
  std::string d;
  for (const auto& r : rows) {
    const auto e = soundness_error(r.M, r.N, r.tau);
    const uint32_t t = min_tau(r.M, r.N, 128);
    ok = ok && meets_security(e, 128) && t == r.tau;
    d += fmt(" (%u,%u,%u): log2=%.3f min_tau=%u", r.M, r.N, r.tau, e.log2, t);
  }
  return {ok, d};
}

Outcome c4_toy_round_trips(const FullRun& full) {
  const auto& toy = find_paramset("toy");
  bool ok = full.pass4;
  std::string d = " toy:";
  for (Scheme s : kSchemes) {
    int acc = 0;
    for (uint64_t i = 0; i < 1000; ++i) {
      const auto kp = keygen(s, toy, seed_of(i / 100, 9));
      const Bytes m = msg_of(i);
      acc += verify(kp.pk, m, sign(kp.sk, m, seed_of(i, 10))) == Verdict::kAccept;
    }
    ok = ok && acc == 1000;
    d += fmt(" %s=%d/1000", scheme_name(s), acc);
  }
  return {ok, d + " full:" + full.detail4};
}

// Toy instances: n = 64, k = 32, w = 8.
SdInstance toy_sd(uint64_t i, SdWitness& wit) {
  const auto& toy = find_paramset("toy");
  const auto kp = keygen(Scheme::kSig1_3r, toy, seed_of(i, 11));
  wit = sd_witness(kp.sk);
  return sd_instance(kp.pk);
}

GsdInstance toy_gsd(uint64_t i, GsdWitness& wit) {
  const auto& toy = find_paramset("toy");
  const auto kp = keygen(Scheme::kSig2, toy, seed_of(i, 12));
  wit = gsd_witness(kp.sk);
  return gsd_instance(kp.pk);
}

Outcome c5_extraction() {
  const uint32_t N = find_paramset("toy").N;
  int ok1 = 0, ok2 = 0, ok3 = 0;
  for (uint64_t i = 0; i < 100; ++i) {
    SdWitness sw;
    const auto sd = toy_sd(i, sw);
    const Seed th = seed_of(i, 13), coins = seed_of(i, 14);
    auto [com, st] = pok1_p1(sw, sd, th, coins);
    const auto aux = pok1_setup(th, sd).aux;
    try {
      const auto x = pok1_extract(sd, {aux, com, 0, pok1_p2(st, 0)}, {aux, com, 1, pok1_p2(st, 1)});
      ok1 += sd.H.mul_vec(x.x) == sd.y && x.x.weight() == sd.w;
    } catch (const Error&) {
    }

    GsdWitness gw;
    const auto gsd = toy_gsd(i, gw);
    const uint32_t a = 1 + i % N, b = 1 + (i + 1) % N;
    for (int v : {2, 3}) {
      auto [c, s] = v == 2 ? pok2_p1(gw, gsd, th, N, coins) : pok3_p1(gw, gsd, th, N, coins);
      const auto ax = v == 2 ? pok2_setup(th, gsd, N).aux : pok3_setup(th, gsd, N).aux;
      const TranscriptN ta{ax, c, a, v == 2 ? pok2_p2(s, a) : pok3_p2(s, a)};
      const TranscriptN tb{ax, c, b, v == 2 ? pok2_p2(s, b) : pok3_p2(s, b)};
      try {
        const auto w = v == 2 ? pok2_extract(gsd, ta, tb, N) : pok3_extract(gsd, ta, tb, N);
        const bool good = gsd.G.vec_mul(w.x) + w.e == gsd.y && w.e.weight() == gsd.w;
        (v == 2 ? ok2 : ok3) += good;
      } catch (const Error&) {
      }
    }
  }
  return {ok1 == 100 && ok2 == 100 && ok3 == 100, fmt(" PoK1 %d/100, PoK2 %d/100, PoK3 %d/100", ok1, ok2, ok3)};
}

Outcome c6_simulators() {
  const uint32_t N = find_paramset("toy").N;
  int runs = 0, bad = 0;
  for (uint64_t i = 0; i < 20; ++i) {
    SdWitness sw;
    const auto sd = toy_sd(i, sw);
    const Seed th = seed_of(i, 15);
    for (uint32_t a = 0; a < 2; ++a, ++runs) {
      const auto sim = pok1_simulate(sd, th, a, seed_of(i, 16));
      auto [com, st] = pok1_p1(sw, sd, th, seed_of(i, 17));
      const auto hon = pok1_p2(st, a);
      const bool good = pok1_verify(sd, sim.aux, sim.com, a, sim.rsp) &&
                        serialize(sim.rsp).size() == serialize(hon).size() &&
                        sim.rsp.z2.size() == hon.z2.size() && sim.rsp.z3.size() == hon.z3.size() &&
                        sim.rsp.z4.size() == hon.z4.size() && sim.rsp.z4.weight() == hon.z4.weight();
      bad += !good;
    }
    GsdWitness gw;
    const auto gsd = toy_gsd(i, gw);
    for (int v : {2, 3}) {
      for (uint32_t a = 1; a <= N; ++a, ++runs) {
        const auto sim = v == 2 ? pok2_simulate(gsd, th, a, N, seed_of(i, 18)) : pok3_simulate(gsd, th, a, N, seed_of(i, 18));
        auto [com, st] = v == 2 ? pok2_p1(gw, gsd, th, N, seed_of(i, 19)) : pok3_p1(gw, gsd, th, N, seed_of(i, 19));
        const auto hon = v == 2 ? pok2_p2(st, a) : pok3_p2(st, a);
        const bool ver = v == 2 ? pok2_verify(gsd, sim.aux, sim.com, a, sim.rsp, N)
                                : pok3_verify(gsd, sim.aux, sim.com, a, sim.rsp, N);
        const bool good = ver && serialize(sim.rsp).size() == serialize(hon).size() &&
                          sim.rsp.z1.size() == hon.z1.size() && sim.rsp.z2.size() == hon.z2.size() &&
                          sim.rsp.z2.weight() == hon.z2.weight() && sim.rsp.z3.size() == hon.z3.size() &&
                          sim.rsp.z4.size() == hon.z4.size();
        bad += !good;
      }
    }
  }
  return {bad == 0, fmt(" %d simulated transcripts over all challenges, %d mismatches", runs, bad)};
}

Outcome c7_tamper() {
  const auto& toy = find_paramset("toy");
  std::mt19937_64 rng(2024);
  std::string d;
  bool ok = true;
  for (Scheme s : kSchemes) {
    const auto kp = keygen(s, toy, seed_of(1, 20));
    const Bytes m = msg_of(1), sig = sign(kp.sk, m, seed_of(1, 21));
    int rej = 0, mal = 0, acc = 0;
    for (int t = 0; t < 500; ++t) {
      Bytes bad = sig;
      const size_t bit = rng() % (bad.size() * 8);
      bad[bit / 8] ^= static_cast<uint8_t>(1u << (bit % 8));
      switch (verify(kp.pk, m, bad)) {
        case Verdict::kAccept: ++acc; break;
        case Verdict::kReject: ++rej; break;
        case Verdict::kMalformed: ++mal; break;
      }
    }
    ok = ok && acc == 0;
    d += fmt(" %s: %d reject/%d parse/%d accept", scheme_name(s), rej, mal, acc);
  }
  return {ok, d};
}

Outcome c8_qc() {
  std::mt19937_64 rng(8);
  auto rv = [&](size_t n) {
    BitVec v(n);
    for (size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
  };
  int same = 0, total = 0;
  for (; total < 1000; ++total) {
    const size_t k = 1 + rng() % 64;
    const CirculantBlock a{rv(k)};
    QcMat g{QcMat::Form::kGenerator, k, {a}}, h{QcMat::Form::kParity, k, {a}};
    const BitVec x = rv(k), z = rv(2 * k);
    const bool ok = qc_mul(a, x) == mat_vec_mul(a.densify(), x) &&
                    qc_vec_mat_mul(x, g) == vec_mat_mul(x, g.densify()) &&
                    qc_mat_vec_mul(h, z) == mat_vec_mul(h.densify(), z);
    same += ok;
  }
  return {same == total, fmt(" %d/%d products equal dense results", same, total)};
}

Outcome c9_trees() {
  std::mt19937_64 rng(9);
  const size_t M = 272, tau = 35;
  const SeedTree t(seed_of(1, 22), M);
  const size_t bound = tau * static_cast<size_t>(std::ceil(std::log2(double(M) / tau))) + tau;
  size_t worst = 0;
  bool ok = true;
  std::vector<uint32_t> all(M);
  for (uint32_t i = 0; i < M; ++i) all[i] = i;
  for (int trial = 0; trial < 10000; ++trial) {
    std::shuffle(all.begin(), all.end(), rng);
    IndexSet hidden(all.begin(), all.begin() + tau);
    std::sort(hidden.begin(), hidden.end());
    const auto proof = t.open(hidden);
    worst = std::max(worst, proof.nodes.size());
    for (const auto& n : proof.nodes) {
      const size_t span = size_t{1} << (t.depth() - n.pos.level);
      for (uint32_t h : hidden) ok = ok && !(h >= n.pos.index * span && h < (n.pos.index + 1) * span);
    }
  }
  ok = ok && worst <= bound;

  const size_t pm = 256, ptau = 128;
  const PairTrees p(seed_of(2, 22), pm);
  std::vector<uint32_t> pa(pm);
  for (uint32_t i = 0; i < pm; ++i) pa[i] = i;
  double sum = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::shuffle(pa.begin(), pa.end(), rng);
    IndexSet hidden(pa.begin(), pa.begin() + ptau);
    std::sort(hidden.begin(), hidden.end());
    sum += static_cast<double>(p.open(hidden).nodes.size());
  }
  const double avg = sum / 10000, target = 0.75 * (pm - ptau);
  ok = ok && std::abs(avg - target) <= 0.02 * target;
  return {ok, fmt(" seed tree: no hidden ancestor revealed, max reveal %zu <= %zu; pair trees: mean %.2f vs %.0f", worst,
                  bound, avg, target)};
}

Outcome c10_codec() {
  bool ok = true;
  size_t checked = 0;
  for (size_t n = 1; n <= 12; ++n) {
    for (size_t w = 0; w <= n; ++w) {
      std::set<Bytes> codes;
      for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<size_t>(__builtin_popcount(mask)) != w) continue;
        BitVec v(n);
        for (size_t i = 0; i < n; ++i) v.set(i, (mask >> i) & 1);
        const Bytes c = encode_fixed_weight(v, w);
        ok = ok && decode_fixed_weight(c, n, w) == v;
        codes.insert(c);
        ++checked;
      }
      ok = ok && codes.size() == binomial(n, w);
    }
  }
  const size_t bits = fixed_weight_code_bits(1238, 137);
  const size_t bound = static_cast<size_t>(std::ceil(log2_of(BigRational(binomial(1238, 137)))));
  ok = ok && bits <= bound;
  std::mt19937_64 rng(10);
  int rt = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<uint32_t> idx(1238);
    for (uint32_t i = 0; i < 1238; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    BitVec v(1238);
    for (int i = 0; i < 137; ++i) v.set(idx[i]);
    rt += decode_fixed_weight(encode_fixed_weight(v, 137), 1238, 137) == v;
  }
  ok = ok && rt == 1000;
  return {ok, fmt(" exhaustive n<=12: %zu vectors; (1238,137): %zu bits <= %zu, %d/1000 round trips", checked, bits,
                  bound, rt)};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const Outcome& o, double secs) {
    std::printf("criterion %d: %s%s [%.1fs]\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  };
  // Criteria with a runtime budget fail when it is exceeded.
  auto timed = [&](int id, const std::function<Outcome()>& f, double budget = 0) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = f();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget > 0 && secs >= budget) {
      o.pass = false;
      o.detail += fmt(" (over the %.0fs budget)", budget);
    }
    report(id, o, secs);
  };

  timed(1, c1_reference_estimates, 1);
  const auto t0 = std::chrono::steady_clock::now();
  const FullRun full = full_parameter_runs();
  const double full_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome c2{full.pass2 && full_secs < 300, full.detail2};
  if (full_secs >= 300) c2.detail += " (over the 300s budget)";
  report(2, c2, full_secs);
  timed(3, c3_soundness, 1);
  timed(4, [&] { return c4_toy_round_trips(full); });
  timed(5, c5_extraction);
  timed(6, c6_simulators);
  timed(7, c7_tamper);
  timed(8, c8_qc);
  timed(9, c9_trees);
  timed(10, c10_codec);
  return failed;
}
