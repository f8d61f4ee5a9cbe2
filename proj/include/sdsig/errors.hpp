#pragma once

#include <stdexcept>
#include <string>

namespace sdsig {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct ParamError : Error { using Error::Error; };
struct WeightError : Error { using Error::Error; };
struct ProofError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ExtractError : Error { using Error::Error; };
struct SimError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace sdsig
