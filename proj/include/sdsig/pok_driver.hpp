#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdsig/pok.hpp"

namespace sdsig {

// Uniform view of a with-helper protocol for the helper-removal drivers.
struct Pok1Traits {
  using Instance = SdInstance;
  using Witness = SdWitness;
  using State = Pok1State;
  using Response = Pok1Response;

  uint32_t alpha_lo() const { return 0; }
  uint32_t alpha_hi() const { return 1; }
  HelperOutput setup(const Seed& t, const Instance& x) const { return pok1_setup(t, x); }
  std::pair<Commitment, State> p1(const Witness& w, const Instance& x, const Seed& t, const Seed& c) const {
    return pok1_p1(w, x, t, c);
  }
  Response p2(const State& s, uint32_t a) const { return pok1_p2(s, a); }
  bool verify(const Instance& x, const std::vector<Commitment>& aux, const Commitment& com, uint32_t a,
              const Response& r) const {
    return pok1_verify(x, aux, com, a, r);
  }
  Bytes encode(const Response& r) const { return serialize(r); }
  Response decode(ByteSpan b, const Instance& x) const { return parse_pok1_response(b, x.H.cols()); }
};

template <int Variant>
struct PokNTraits {
  static_assert(Variant == 2 || Variant == 3);
  using Instance = GsdInstance;
  using Witness = GsdWitness;
  using State = PokNState;
  using Response = PokNResponse;

  uint32_t N = 2;

  uint32_t alpha_lo() const { return 1; }
  uint32_t alpha_hi() const { return N; }
  HelperOutput setup(const Seed& t, const Instance& x) const {
    return Variant == 2 ? pok2_setup(t, x, N) : pok3_setup(t, x, N);
  }
  std::pair<Commitment, State> p1(const Witness& w, const Instance& x, const Seed& t, const Seed& c) const {
    return Variant == 2 ? pok2_p1(w, x, t, N, c) : pok3_p1(w, x, t, N, c);
  }
  Response p2(const State& s, uint32_t a) const { return Variant == 2 ? pok2_p2(s, a) : pok3_p2(s, a); }
  bool verify(const Instance& x, const std::vector<Commitment>& aux, const Commitment& com, uint32_t a,
              const Response& r) const {
    return Variant == 2 ? pok2_verify(x, aux, com, a, r, N) : pok3_verify(x, aux, com, a, r, N);
  }
  Bytes encode(const Response& r) const { return serialize(r); }
  Response decode(ByteSpan b, const Instance& x) const { return parse_pokn_response(b, x.G.cols(), x.G.rows()); }
};

using Pok2Traits = PokNTraits<2>;
using Pok3Traits = PokNTraits<3>;

// Dishonest setups for soundness tests. kAltSeed: aux^(j) and the protocol run
// at j use another seed, while the original theta^(j) is revealed. kGarbageAux:
// aux^(j) is replaced by unrelated commitments.
enum class Tamper { kNone, kAltSeed, kGarbageAux };

namespace driver_detail {

inline Seed setup_seed(const Seed& coins, uint32_t k) { return derive_seed(coins, {Ctx::kSetupSeed, k}); }
inline Seed run_coins(const Seed& coins, uint32_t k) { return derive_seed(coins, {Ctx::kProverRand, k}); }

inline void write_seed_list(ByteWriter& w, const std::vector<Seed>& seeds, uint32_t skip) {
  for (uint32_t k = 0; k < seeds.size(); ++k)
    if (k != skip) w.raw(seeds[k]);
}

inline std::vector<std::optional<Seed>> read_seed_list(ByteReader& r, uint32_t M, uint32_t skip) {
  std::vector<std::optional<Seed>> out(M);
  for (uint32_t k = 0; k < M; ++k) {
    if (k == skip) continue;
    Seed s;
    auto b = r.raw(kSeedBytes);
    std::copy(b.begin(), b.end(), s.begin());
    out[k] = s;
  }
  return out;
}

template <class P>
struct ProverSetups {
  std::vector<Seed> theta;  // revealed seeds
  std::vector<std::vector<Commitment>> aux;
  std::vector<Seed> run_theta;  // seeds actually used for P1

  ProverSetups(const P& proto, const typename P::Instance& inst, uint32_t M, const Seed& coins, Tamper tamper,
               uint32_t j) {
    if (M < 2) throw ParamError("M must be at least 2");
    for (uint32_t k = 0; k < M; ++k) {
      theta.push_back(setup_seed(coins, k));
      run_theta.push_back(theta.back());
      if (tamper != Tamper::kNone && k == j) {
        const Seed alt = derive_seed(theta.back(), {Ctx::kSimRand, 7});
        if (tamper == Tamper::kAltSeed) run_theta.back() = alt;
        auto a = proto.setup(alt, inst).aux;
        if (tamper == Tamper::kGarbageAux)
          for (auto& c : a) c = commit(alt, c);
        aux.push_back(std::move(a));
      } else {
        aux.push_back(proto.setup(theta.back(), inst).aux);
      }
    }
  }
};

// Returns false when some audited aux^(k) differs from Setup(theta^(k)).
template <class P>
bool audit(const P& proto, const typename P::Instance& inst, const std::vector<std::vector<Commitment>>& aux,
           const std::vector<std::optional<Seed>>& seeds) {
  for (size_t k = 0; k < aux.size(); ++k)
    if (seeds[k] && proto.setup(*seeds[k], inst).aux != aux[k]) return false;
  return true;
}

}  // namespace driver_detail

// Interactive 3-round prover: msg1 = (aux^(k), com^(k))_k, receives (kappa, alpha),
// msg3 = (theta^(k))_{k != kappa} || rsp. kappa is 0-based on the wire.
template <class P>
class Prover3R {
 public:
  using Instance = typename P::Instance;
  using Witness = typename P::Witness;

  Prover3R(P proto, Instance inst, Witness wit, uint32_t M, const Seed& coins, Tamper tamper = Tamper::kNone,
           uint32_t tamper_index = 0)
      : proto_(std::move(proto)), inst_(std::move(inst)), wit_(std::move(wit)), M_(M),
        setups_(proto_, inst_, M, coins, tamper, tamper_index) {
    for (uint32_t k = 0; k < M; ++k) {
      auto [com, st] = proto_.p1(wit_, inst_, setups_.run_theta[k], driver_detail::run_coins(coins, k));
      coms_.push_back(com);
      states_.push_back(std::move(st));
    }
  }

  Bytes msg1() const {
    ByteWriter w;
    w.u32(M_);
    for (uint32_t k = 0; k < M_; ++k) {
      write_commitments(w, setups_.aux[k]);
      w.raw(coms_[k]);
    }
    return w.take();
  }

  Bytes msg3(ByteSpan challenge) const {
    ByteReader r(challenge);
    const uint32_t kappa = r.u32(), alpha = r.u32();
    r.expect_end();
    if (kappa >= M_) throw ParamError("kappa out of range");
    ByteWriter w;
    driver_detail::write_seed_list(w, setups_.theta, kappa);
    w.field(proto_.encode(proto_.p2(states_[kappa], alpha)));
    return w.take();
  }

 private:
  P proto_;
  Instance inst_;
  Witness wit_;
  uint32_t M_;
  driver_detail::ProverSetups<P> setups_;
  std::vector<Commitment> coms_;
  std::vector<typename P::State> states_;
};

template <class P>
class Verifier3R {
 public:
  using Instance = typename P::Instance;

  Verifier3R(P proto, Instance inst, uint32_t M, const Seed& coins)
      : proto_(std::move(proto)), inst_(std::move(inst)), M_(M), rng_(DomainTag{Ctx::kSimRand, 3}, coins, 16) {}

  // Fixes the next challenge instead of sampling it.
  void force_challenge(uint32_t kappa, uint32_t alpha) { forced_ = {kappa, alpha}; }

  Bytes challenge(ByteSpan msg1) {
    ByteReader r(msg1);
    if (r.u32() != M_) throw ParseError("unexpected number of setups");
    aux_.clear();
    coms_.clear();
    for (uint32_t k = 0; k < M_; ++k) {
      aux_.push_back(read_commitments(r));
      Commitment c;
      auto b = r.raw(kComBytes);
      std::copy(b.begin(), b.end(), c.begin());
      coms_.push_back(c);
    }
    r.expect_end();
    if (forced_) {
      kappa_ = forced_->first;
      alpha_ = forced_->second;
    } else {
      kappa_ = static_cast<uint32_t>(rng_.uniform(M_));
      alpha_ = proto_.alpha_lo() + static_cast<uint32_t>(rng_.uniform(proto_.alpha_hi() - proto_.alpha_lo() + 1));
    }
    ByteWriter w;
    w.u32(kappa_);
    w.u32(alpha_);
    return w.take();
  }

  bool finish(ByteSpan msg3) {
    try {
      ByteReader r(msg3);
      const auto seeds = driver_detail::read_seed_list(r, M_, kappa_);
      const auto rsp = proto_.decode(r.field(), inst_);
      r.expect_end();
      audit_passed_ = driver_detail::audit(proto_, inst_, aux_, seeds);
      if (!audit_passed_) return false;
      return proto_.verify(inst_, aux_[kappa_], coms_[kappa_], alpha_, rsp);
    } catch (const ParseError&) {
      return false;
    }
  }

  uint32_t kappa() const { return kappa_; }
  uint32_t alpha() const { return alpha_; }
  bool audit_passed() const { return audit_passed_; }

 private:
  P proto_;
  Instance inst_;
  uint32_t M_;
  XofStream rng_;
  std::optional<std::pair<uint32_t, uint32_t>> forced_;
  std::vector<std::vector<Commitment>> aux_;
  std::vector<Commitment> coms_;
  uint32_t kappa_ = 0, alpha_ = 0;
  bool audit_passed_ = false;
};

// Interactive 5-round prover: msg1 = (aux^(k))_k; receives kappa;
// msg3 = (theta^(k))_{k != kappa} || com^(kappa); receives alpha; msg5 = rsp.
template <class P>
class Prover5R {
 public:
  using Instance = typename P::Instance;
  using Witness = typename P::Witness;

  Prover5R(P proto, Instance inst, Witness wit, uint32_t M, const Seed& coins, Tamper tamper = Tamper::kNone,
           uint32_t tamper_index = 0)
      : proto_(std::move(proto)), inst_(std::move(inst)), wit_(std::move(wit)), M_(M), coins_(coins),
        setups_(proto_, inst_, M, coins, tamper, tamper_index) {}

  Bytes msg1() const {
    ByteWriter w;
    w.u32(M_);
    for (const auto& a : setups_.aux) write_commitments(w, a);
    return w.take();
  }

  Bytes msg3(ByteSpan kappa_msg) {
    ByteReader r(kappa_msg);
    kappa_ = r.u32();
    r.expect_end();
    if (kappa_ >= M_) throw ParamError("kappa out of range");
    auto [com, st] = proto_.p1(wit_, inst_, setups_.run_theta[kappa_], driver_detail::run_coins(coins_, kappa_));
    state_ = std::move(st);
    ByteWriter w;
    driver_detail::write_seed_list(w, setups_.theta, kappa_);
    w.raw(com);
    return w.take();
  }

  Bytes msg5(ByteSpan alpha_msg) const {
    if (!state_) throw ParamError("msg5 before msg3");
    ByteReader r(alpha_msg);
    const uint32_t alpha = r.u32();
    r.expect_end();
    return proto_.encode(proto_.p2(*state_, alpha));
  }

 private:
  P proto_;
  Instance inst_;
  Witness wit_;
  uint32_t M_;
  Seed coins_;
  driver_detail::ProverSetups<P> setups_;
  uint32_t kappa_ = 0;
  std::optional<typename P::State> state_;
};

template <class P>
class Verifier5R {
 public:
  using Instance = typename P::Instance;

  Verifier5R(P proto, Instance inst, uint32_t M, const Seed& coins)
      : proto_(std::move(proto)), inst_(std::move(inst)), M_(M), rng_(DomainTag{Ctx::kSimRand, 5}, coins, 16) {}

  void force_kappa(uint32_t k) { forced_kappa_ = k; }
  void force_alpha(uint32_t a) { forced_alpha_ = a; }

  Bytes msg2(ByteSpan msg1) {
    ByteReader r(msg1);
    if (r.u32() != M_) throw ParseError("unexpected number of setups");
    aux_.clear();
    for (uint32_t k = 0; k < M_; ++k) aux_.push_back(read_commitments(r));
    r.expect_end();
    kappa_ = forced_kappa_ ? *forced_kappa_ : static_cast<uint32_t>(rng_.uniform(M_));
    ByteWriter w;
    w.u32(kappa_);
    return w.take();
  }

  // nullopt when the seed audit fails (the verifier stops and rejects).
  std::optional<Bytes> msg4(ByteSpan msg3) {
    ByteReader r(msg3);
    const auto seeds = driver_detail::read_seed_list(r, M_, kappa_);
    auto b = r.raw(kComBytes);
    std::copy(b.begin(), b.end(), com_.begin());
    r.expect_end();
    audit_passed_ = driver_detail::audit(proto_, inst_, aux_, seeds);
    if (!audit_passed_) return std::nullopt;
    alpha_ = forced_alpha_ ? *forced_alpha_
                           : proto_.alpha_lo() +
                                 static_cast<uint32_t>(rng_.uniform(proto_.alpha_hi() - proto_.alpha_lo() + 1));
    ByteWriter w;
    w.u32(alpha_);
    return w.take();
  }

  bool finish(ByteSpan msg5) {
    if (!audit_passed_) return false;
    try {
      return proto_.verify(inst_, aux_[kappa_], com_, alpha_, proto_.decode(msg5, inst_));
    } catch (const ParseError&) {
      return false;
    }
  }

  uint32_t kappa() const { return kappa_; }
  uint32_t alpha() const { return alpha_; }
  bool audit_passed() const { return audit_passed_; }

 private:
  P proto_;
  Instance inst_;
  uint32_t M_;
  XofStream rng_;
  std::optional<uint32_t> forced_kappa_, forced_alpha_;
  std::vector<std::vector<Commitment>> aux_;
  Commitment com_{};
  uint32_t kappa_ = 0, alpha_ = 0;
  bool audit_passed_ = false;
};

struct DriverRun {
  bool accepted = false;
  bool audit_passed = false;
  uint32_t kappa = 0, alpha = 0;
  std::vector<Bytes> messages;  // in protocol order
};

template <class P>
DriverRun run_3r(Prover3R<P>& prover, Verifier3R<P>& verifier) {
  DriverRun run;
  run.messages.push_back(prover.msg1());
  run.messages.push_back(verifier.challenge(run.messages[0]));
  run.messages.push_back(prover.msg3(run.messages[1]));
  run.accepted = verifier.finish(run.messages[2]);
  run.audit_passed = verifier.audit_passed();
  run.kappa = verifier.kappa();
  run.alpha = verifier.alpha();
  return run;
}

template <class P>
DriverRun run_5r(Prover5R<P>& prover, Verifier5R<P>& verifier) {
  DriverRun run;
  run.messages.push_back(prover.msg1());
  run.messages.push_back(verifier.msg2(run.messages[0]));
  run.messages.push_back(prover.msg3(run.messages[1]));
  run.kappa = verifier.kappa();
  auto m4 = verifier.msg4(run.messages[2]);
  run.audit_passed = verifier.audit_passed();
  if (!m4) return run;
  run.messages.push_back(*m4);
  run.messages.push_back(prover.msg5(*m4));
  run.accepted = verifier.finish(run.messages[4]);
  run.alpha = verifier.alpha();
  return run;
}

// One honest in-process run with prover and verifier coins derived from `coins`.
DriverRun remove_helper_3r(const SdInstance& inst, const SdWitness& wit, uint32_t M, const Seed& coins);
DriverRun remove_helper_3r(int protocol, const GsdInstance& inst, const GsdWitness& wit, uint32_t M, uint32_t N,
                           const Seed& coins);
DriverRun remove_helper_5r(const SdInstance& inst, const SdWitness& wit, uint32_t M, const Seed& coins);

}  // namespace sdsig
