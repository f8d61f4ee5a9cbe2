#include "sdsig/container.hpp"

#include <algorithm>
#include <cctype>

namespace sdsig {

namespace {

constexpr uint8_t kMagic[4] = {'S', 'D', 'S', '1'};

Scheme scheme_from_id(uint8_t id) {
  if (id < 1 || id > 4) throw ParseError("container: unknown scheme id " + std::to_string(id));
  return static_cast<Scheme>(id);
}

}  // namespace

const char* kind_name(ObjectKind k) {
  switch (k) {
    case ObjectKind::kPublicKey: return "public-key";
    case ObjectKind::kSecretKey: return "secret-key";
    case ObjectKind::kSignature: return "signature";
  }
  return "?";
}

ObjectKind Container::kind() const {
  const auto& p = params();
  if (payload.size() == public_key_bytes(scheme, p)) return ObjectKind::kPublicKey;
  if (payload.size() == secret_key_bytes(scheme, p)) return ObjectKind::kSecretKey;
  return ObjectKind::kSignature;
}

Bytes wrap(Scheme s, const ParamSet& p, ByteSpan payload) {
  ByteWriter w;
  w.raw(kMagic);
  w.u8(kContainerVersion);
  w.u8(static_cast<uint8_t>(s));
  w.u8(p.id);
  w.field(payload);
  return w.take();
}

Container unwrap(ByteSpan file) {
  ByteReader r(file);
  const auto magic = r.raw(4);
  if (!std::equal(magic.begin(), magic.end(), kMagic)) throw ParseError("container: bad magic");
  if (r.u8() != kContainerVersion) throw ParseError("container: unsupported version");
  Container c;
  c.scheme = scheme_from_id(r.u8());
  c.param_id = r.u8();
  const auto payload = r.field();
  r.expect_end();
  c.payload.assign(payload.begin(), payload.end());
  if (!c.params().supports(c.scheme)) throw ParseError("container: parameter set does not match the scheme");
  return c;
}

Bytes wrap(const PublicKey& pk) { return wrap(pk.scheme, pk.params, pk.to_bytes()); }
Bytes wrap(const SecretKey& sk) { return wrap(sk.pk.scheme, sk.pk.params, sk.to_bytes()); }

PublicKey unwrap_public_key(ByteSpan file) {
  const Container c = unwrap(file);
  if (c.kind() != ObjectKind::kPublicKey) throw ParseError(std::string("expected a public key, got a ") + kind_name(c.kind()));
  return PublicKey::from_bytes(c.scheme, c.params(), c.payload);
}

SecretKey unwrap_secret_key(ByteSpan file) {
  const Container c = unwrap(file);
  if (c.kind() != ObjectKind::kSecretKey) throw ParseError(std::string("expected a secret key, got a ") + kind_name(c.kind()));
  return SecretKey::from_bytes(c.scheme, c.params(), c.payload);
}

std::optional<TextFormat> text_format_from_name(std::string_view s) {
  if (s == "bin") return TextFormat::kBinary;
  if (s == "hex") return TextFormat::kHex;
  if (s == "b64") return TextFormat::kBase64;
  return std::nullopt;
}

Bytes encode_text(ByteSpan b, TextFormat f) {
  std::string s;
  switch (f) {
    case TextFormat::kBinary: return Bytes(b.begin(), b.end());
    case TextFormat::kHex: s = to_hex(b); break;
    case TextFormat::kBase64: s = to_base64(b); break;
  }
  s.push_back('\n');
  return Bytes(s.begin(), s.end());
}

Bytes decode_container_text(ByteSpan file) {
  if (file.size() >= 4 && std::equal(file.begin(), file.begin() + 4, kMagic)) return Bytes(file.begin(), file.end());
  std::string text;
  for (uint8_t c : file)
    if (!std::isspace(c)) text.push_back(static_cast<char>(c));
  // "SDS1" is 53445331 in hex and U0RTM in base64.
  if (text.rfind("53445331", 0) == 0) return from_hex(text);
  if (text.rfind("U0RTM", 0) == 0) return from_base64(text);
  throw ParseError("not an SDS1 container (binary, hex or base64)");
}

}  // namespace sdsig
