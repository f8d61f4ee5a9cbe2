#pragma once

#include <string>
#include <string_view>

#include "sdsig/bytes.hpp"
#include "sdsig/params.hpp"
#include "sdsig/sig.hpp"

namespace sdsig {

// File layout: "SDS1" || version || scheme id || param-set id || u32be len || payload.
inline constexpr uint8_t kContainerVersion = 1;
inline constexpr size_t kContainerHeaderBytes = 11;

enum class ObjectKind { kPublicKey, kSecretKey, kSignature };
const char* kind_name(ObjectKind k);

struct Container {
  Scheme scheme{};
  uint8_t param_id = 0;
  Bytes payload;

  const ParamSet& params() const { return find_paramset(param_id); }
  // Keys have fixed lengths; everything else is a signature.
  ObjectKind kind() const;
};

Bytes wrap(Scheme s, const ParamSet& p, ByteSpan payload);
Container unwrap(ByteSpan file);  // ParseError on a bad header, ParamError on an unknown preset

Bytes wrap(const PublicKey& pk);
Bytes wrap(const SecretKey& sk);
PublicKey unwrap_public_key(ByteSpan file);
SecretKey unwrap_secret_key(ByteSpan file);

enum class TextFormat { kBinary, kHex, kBase64 };
std::optional<TextFormat> text_format_from_name(std::string_view s);

Bytes encode_text(ByteSpan b, TextFormat f);
// Recognises binary, hex and base64 containers by their leading bytes.
Bytes decode_container_text(ByteSpan file);

}  // namespace sdsig
