#pragma once

#include <stdexcept>
#include <string>

namespace isobgg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// argument outside the supported domain (rank, k, sign, crossed nodes)
struct InvalidArgument : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

// self-check failed inside a construction
struct InternalError : Error {
  using Error::Error;
};

// PBW degree exceeded the configured cap
struct CapError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

} // namespace isobgg
