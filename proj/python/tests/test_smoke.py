import math

import pytest

import sdsig
from sdsig import Scheme, Verdict

SCHEMES = [Scheme.SIG1_3R, Scheme.SIG1_5R, Scheme.SIG2, Scheme.SIG3]
SEED = bytes(range(16))


@pytest.mark.parametrize("scheme", SCHEMES)
def test_round_trip_toy(scheme):
    pk, sk = sdsig.keygen(scheme, "toy", SEED)
    sig = sdsig.sign(sk, b"hello", bytes(16))
    assert sdsig.verify(pk, b"hello", sig) == Verdict.ACCEPT
    assert sdsig.verify(pk, b"hellp", sig) == Verdict.REJECT
    bad = bytearray(sig)
    bad[len(bad) // 2] ^= 1
    assert sdsig.verify(pk, b"hello", bytes(bad)) != Verdict.ACCEPT
    assert sdsig.verify(pk, b"hello", sig[:5]) == Verdict.MALFORMED


@pytest.mark.parametrize("scheme", SCHEMES)
def test_keys_are_deterministic_and_round_trip_containers(scheme):
    pk, sk = sdsig.keygen(scheme, "toy", SEED)
    pk2, _ = sdsig.keygen(scheme, "toy", SEED)
    assert pk == pk2
    assert sdsig.PublicKey.from_container(pk.to_container()) == pk
    assert sdsig.SecretKey.from_container(sk.to_container()).to_bytes() == sk.to_bytes()
    assert sk.public_key == pk
    kind = sdsig.unwrap(pk.to_container())[2]
    assert kind == "public-key"


def test_golden_vector_signature_matches():
    pk, sk = sdsig.keygen(Scheme.SIG3, "toy", bytes(16))
    sig = sdsig.sign(sk, b"abc", b"\x5a" * 16)
    container = sdsig.wrap_signature(pk, sig)
    scheme, params, kind, payload = sdsig.unwrap(container)
    assert (scheme, params.name, kind, payload) == (Scheme.SIG3, "toy", "signature", sig)
    assert container[:4] == b"SDS1"
    assert container[4:7] == bytes([1, 4, 11])
    assert int.from_bytes(container[7:11], "big") == len(sig)


def test_sign_without_seed_uses_fresh_randomness():
    pk, sk = sdsig.keygen(Scheme.SIG2, "toy")
    a, b = sdsig.sign(sk, b"m"), sdsig.sign(sk, b"m")
    assert a != b
    assert sdsig.verify(pk, b"m", a) == Verdict.ACCEPT


def test_full_parameter_sig3_n64():
    pk, sk = sdsig.keygen(Scheme.SIG3, "n64", SEED)
    assert len(pk.to_bytes()) == 171
    sig = sdsig.sign(sk, b"x" * 1000, SEED)
    assert sdsig.verify(pk, b"x" * 1000, sig) == Verdict.ACCEPT
    est = sdsig.size_estimate_bits(Scheme.SIG3, pk.params) / 8
    assert abs(len(sig) / est - 1) < 0.08


def test_params_and_estimates():
    names = [p.name for p in sdsig.paramsets()]
    assert len(names) == 11 and "toy" in names
    p = sdsig.find_paramset("n32", Scheme.SIG2)
    assert (p.n, p.k, p.w, p.M, p.N, p.tau) == (1238, 619, 137, 389, 32, 28)
    assert abs(sdsig.size_estimate_kb(Scheme.SIG2, p) - 20.6) <= 0.2
    with pytest.raises(sdsig.ParamError):
        sdsig.find_paramset("nope")
    with pytest.raises(sdsig.ParamError):
        sdsig.keygen(Scheme.SIG2, "sig1-3r-qcsd")


def test_soundness_is_exact():
    r = sdsig.soundness_error(272, 16, 35)
    assert r["log2"] <= -128
    ratio = math.log2(int(r["numerator"])) - math.log2(int(r["denominator"]))
    assert abs(ratio - r["log2"]) < 1e-6
    assert [sdsig.min_tau(272, 16), sdsig.min_tau(389, 32), sdsig.min_tau(631, 64)] == [35, 28, 23]


def test_fixed_weight_codec():
    support = [0, 5, 9, 100, 1237]
    code = sdsig.encode_fixed_weight(support, 1238)
    assert sdsig.decode_fixed_weight(code, 1238, 5) == support


def test_errors_are_typed():
    pk, _ = sdsig.keygen(Scheme.SIG1_3R, "toy", SEED)
    with pytest.raises(sdsig.ParseError):
        sdsig.PublicKey.from_container(b"SDS1\x02")
    with pytest.raises(ValueError):
        sdsig.keygen(Scheme.SIG1_3R, "toy", b"short")
    assert issubclass(sdsig.ParseError, sdsig.Error)
