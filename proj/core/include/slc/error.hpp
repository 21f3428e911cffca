#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slc {

enum class Errc {
  invalid_size,
  parse,
  size_mismatch,
  resource_limit,
  shape,
  embedding,
  domain,
  unknown_edge,
  no_representative,
  no_witness,
  schema,
  version,
  invariant,
  cannot_certify,
};

const char* to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parse failures remember where in the input things went wrong (byte offset
// for JSON, character index for cycle notation).
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(Errc::parse, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace slc
