#include "sdsig/pok_driver.hpp"

namespace sdsig {

namespace {

Seed prover_coins(const Seed& c) { return derive_seed(c, {Ctx::kProverRand, 0xffffffffu}); }
Seed verifier_coins(const Seed& c) { return derive_seed(c, {Ctx::kSimRand, 0xffffffffu}); }

template <class P>
DriverRun honest_3r(P proto, const typename P::Instance& inst, const typename P::Witness& wit, uint32_t M,
                    const Seed& coins) {
  Prover3R<P> p(proto, inst, wit, M, prover_coins(coins));
  Verifier3R<P> v(proto, inst, M, verifier_coins(coins));
  return run_3r(p, v);
}

}  // namespace

DriverRun remove_helper_3r(const SdInstance& inst, const SdWitness& wit, uint32_t M, const Seed& coins) {
  return honest_3r(Pok1Traits{}, inst, wit, M, coins);
}

DriverRun remove_helper_3r(int protocol, const GsdInstance& inst, const GsdWitness& wit, uint32_t M, uint32_t N,
                           const Seed& coins) {
  if (protocol == 2) return honest_3r(Pok2Traits{N}, inst, wit, M, coins);
  if (protocol == 3) return honest_3r(Pok3Traits{N}, inst, wit, M, coins);
  throw ParamError("GSD protocols are 2 and 3");
}

DriverRun remove_helper_5r(const SdInstance& inst, const SdWitness& wit, uint32_t M, const Seed& coins) {
  Prover5R<Pok1Traits> p({}, inst, wit, M, prover_coins(coins));
  Verifier5R<Pok1Traits> v({}, inst, M, verifier_coins(coins));
  return run_5r(p, v);
}

}  // namespace sdsig
