#include "slc/error.hpp"

namespace slc {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_size: return "invalid-size";
    case Errc::parse: return "parse";
    case Errc::size_mismatch: return "size-mismatch";
    case Errc::resource_limit: return "resource-limit";
    case Errc::shape: return "shape";
    case Errc::embedding: return "embedding";
    case Errc::domain: return "domain";
    case Errc::unknown_edge: return "unknown-edge";
    case Errc::no_representative: return "no-representative";
    case Errc::no_witness: return "no-witness";
    case Errc::schema: return "schema";
    case Errc::version: return "version";
    case Errc::invariant: return "invariant";
    case Errc::cannot_certify: return "cannot-certify";
  }
  return "unknown";
}

}  // namespace slc
