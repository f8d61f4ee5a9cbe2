#include <openssl/rand.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdsig/container.hpp"
#include "sdsig/fixed_weight.hpp"
#include "sdsig/params.hpp"
#include "sdsig/sig.hpp"

namespace py = pybind11;
using namespace sdsig;

namespace {

ByteSpan span_of(const py::bytes& b) {
  const std::string_view v = b;
  return {reinterpret_cast<const uint8_t*>(v.data()), v.size()};
}

py::bytes to_py(ByteSpan b) { return py::bytes(reinterpret_cast<const char*>(b.data()), b.size()); }

Seed seed_arg(const std::optional<py::bytes>& b) {
  Seed s;
  if (!b) {
    if (RAND_bytes(s.data(), static_cast<int>(s.size())) != 1) throw IoError("no entropy available");
    return s;
  }
  const ByteSpan v = span_of(*b);
  if (v.size() != kSeedBytes) throw py::value_error("seed must be " + std::to_string(kSeedBytes) + " bytes");
  std::copy(v.begin(), v.end(), s.begin());
  return s;
}

const ParamSet& params_arg(const py::object& p, std::optional<Scheme> s) {
  if (py::isinstance<ParamSet>(p)) return find_paramset(p.cast<ParamSet>().id);
  return find_paramset(p.cast<std::string>(), s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Code-based signatures from syndrome decoding";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ParamError>(m, "ParamError", base.ptr());
  py::register_exception<WeightError>(m, "WeightError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<ProofError>(m, "ProofError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  py::enum_<Scheme>(m, "Scheme")
      .value("SIG1_3R", Scheme::kSig1_3r)
      .value("SIG1_5R", Scheme::kSig1_5r)
      .value("SIG2", Scheme::kSig2)
      .value("SIG3", Scheme::kSig3);
  py::enum_<Variant>(m, "Variant")
      .value("SD", Variant::kSD)
      .value("QCSD", Variant::kQCSD)
      .value("GSD", Variant::kGSD)
      .value("QCGSD", Variant::kQCGSD);
  py::enum_<Verdict>(m, "Verdict")
      .value("ACCEPT", Verdict::kAccept)
      .value("REJECT", Verdict::kReject)
      .value("MALFORMED", Verdict::kMalformed);

  m.def("scheme_name", &scheme_name);
  m.def("scheme_from_name", [](const std::string& s) {
    const auto v = scheme_from_name(s);
    if (!v) throw ParamError("unknown scheme: " + s);
    return *v;
  });

  py::class_<ParamSet>(m, "ParamSet")
      .def_readonly("id", &ParamSet::id)
      .def_readonly("name", &ParamSet::name)
      .def_readonly("lam", &ParamSet::lambda)
      .def_readonly("n", &ParamSet::n)
      .def_readonly("k", &ParamSet::k)
      .def_readonly("w", &ParamSet::w)
      .def_readonly("M", &ParamSet::M)
      .def_readonly("N", &ParamSet::N)
      .def_readonly("tau", &ParamSet::tau)
      .def_readonly("variant", &ParamSet::variant)
      .def_readonly("scheme", &ParamSet::scheme)
      .def_readonly("insecure", &ParamSet::insecure)
      .def("__repr__", [](const ParamSet& p) { return "<ParamSet " + p.name + ">"; });

  m.def("paramsets", &all_paramsets, "Built-in presets plus those under $SDSIG_PARAM_DIR");
  m.def(
      "find_paramset", [](const std::string& name, std::optional<Scheme> s) { return find_paramset(name, s); },
      py::arg("name"), py::arg("scheme") = py::none());

  m.def("size_estimate_bits", &size_estimate_bits, py::arg("scheme"), py::arg("params"));
  m.def("size_estimate_kb", &size_estimate_kb, py::arg("scheme"), py::arg("params"));
  m.def(
      "soundness_error",
      [](uint32_t M, uint32_t N, uint32_t tau) {
        const auto r = soundness_error(M, N, tau);
        py::dict d;
        d["log2"] = r.log2;
        d["worst_e"] = r.worst_e;
        d["degenerate"] = r.degenerate;
        d["numerator"] = boost::multiprecision::numerator(r.error).str();
        d["denominator"] = boost::multiprecision::denominator(r.error).str();
        return d;
      },
      py::arg("M"), py::arg("N"), py::arg("tau"));
  m.def("min_tau", &min_tau, py::arg("M"), py::arg("N"), py::arg("lam") = 128);
  m.def(
      "kz_cost",
      [](const ParamSet& p) {
        const auto r = kz_cost_for(p);
        return py::make_tuple(r.log2_cost, r.tau_star);
      },
      py::arg("params"));

  py::class_<PublicKey>(m, "PublicKey")
      .def_readonly("scheme", &PublicKey::scheme)
      .def_readonly("params", &PublicKey::params)
      .def("to_bytes", [](const PublicKey& k) { return to_py(k.to_bytes()); })
      .def("to_container", [](const PublicKey& k) { return to_py(wrap(k)); })
      .def_static("from_container", [](const py::bytes& b) { return unwrap_public_key(decode_container_text(span_of(b))); })
      .def("__eq__", [](const PublicKey& a, const PublicKey& b) { return a == b; });
  py::class_<SecretKey>(m, "SecretKey")
      .def_readonly("public_key", &SecretKey::pk)
      .def("to_bytes", [](const SecretKey& k) { return to_py(k.to_bytes()); })
      .def("to_container", [](const SecretKey& k) { return to_py(wrap(k)); })
      .def_static("from_container", [](const py::bytes& b) { return unwrap_secret_key(decode_container_text(span_of(b))); });

  m.def(
      "keygen",
      [](Scheme s, const py::object& p, const std::optional<py::bytes>& seed) {
        const KeyPair kp = keygen(s, params_arg(p, s), seed_arg(seed));
        return py::make_tuple(kp.pk, kp.sk);
      },
      py::arg("scheme"), py::arg("params"), py::arg("seed") = py::none(),
      "Returns (public_key, secret_key). Deterministic when a 16-byte seed is given.");
  m.def(
      "sign",
      [](const SecretKey& sk, const py::bytes& msg, const std::optional<py::bytes>& rand_seed) {
        const Seed r = seed_arg(rand_seed);
        Bytes sig;
        {
          const ByteSpan mv = span_of(msg);
          py::gil_scoped_release release;
          sig = sign(sk, mv, r);
        }
        return to_py(sig);
      },
      py::arg("secret_key"), py::arg("msg"), py::arg("rand_seed") = py::none());
  m.def(
      "verify",
      [](const PublicKey& pk, const py::bytes& msg, const py::bytes& sig) {
        const ByteSpan mv = span_of(msg), sv = span_of(sig);
        py::gil_scoped_release release;
        return verify(pk, mv, sv);
      },
      py::arg("public_key"), py::arg("msg"), py::arg("sig"));

  m.def(
      "wrap_signature",
      [](const PublicKey& pk, const py::bytes& sig) { return to_py(wrap(pk.scheme, pk.params, span_of(sig))); },
      py::arg("public_key"), py::arg("sig"));
  m.def(
      "unwrap",
      [](const py::bytes& file) {
        const Container c = unwrap(decode_container_text(span_of(file)));
        return py::make_tuple(c.scheme, c.params(), kind_name(c.kind()), to_py(c.payload));
      },
      py::arg("file"), "Returns (scheme, params, kind, payload) for an SDS1 container.");

  m.def(
      "encode_fixed_weight",
      [](const std::vector<uint32_t>& support, size_t n) {
        BitVec v(n);
        for (uint32_t i : support) {
          if (i >= n) throw DimensionError("support index out of range");
          v.set(i);
        }
        return to_py(encode_fixed_weight(v, support.size()));
      },
      py::arg("support"), py::arg("n"));
  m.def(
      "decode_fixed_weight",
      [](const py::bytes& code, size_t n, size_t w) {
        const BitVec v = decode_fixed_weight(span_of(code), n, w);
        std::vector<uint32_t> out;
        for (size_t i = 0; i < n; ++i)
          if (v.get(i)) out.push_back(static_cast<uint32_t>(i));
        return out;
      },
      py::arg("code"), py::arg("n"), py::arg("w"));
}
