#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slc/construct.hpp"
#include "slc/slabel.hpp"

namespace slc {

/// One combination of gadget colours and an arc it violates:
/// label(f(tail)) == lhs == rhs == f(head).
struct RefutationRow {
  int a = 0;
  int b = 0;
  int c = 0;
  int violated_arc = 0;
  int lhs = 0;
  int rhs = 0;

  friend bool operator==(const RefutationRow&, const RefutationRow&) = default;
};

struct FaceRefutation {
  FaceId face;
  int a = 0;
  int b = 0;
  int c = 0;
  /// Colours left for a, b, c by their arcs to the frame.
  std::array<std::vector<int>, 3> domains;
  std::vector<RefutationRow> rows;

  friend bool operator==(const FaceRefutation&, const FaceRefutation&) = default;
};

struct BaseColouring {
  FaceId face;
  Colouring colouring;

  friend bool operator==(const BaseColouring&, const BaseColouring&) = default;
};

/// Proof that an instance has no proper colouring: every proper colouring
/// of the frame (vertices 0..frame_vertices-1) is listed, and the gadget of
/// its face cannot be completed.
struct Certificate {
  std::string digest;
  int frame_vertices = 0;
  std::vector<BaseColouring> base_colourings;
  std::vector<FaceRefutation> faces;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Throws Errc::cannot_certify without provenance, or when some frame
/// colouring is not refuted by its gadget.
Certificate make_certificate(const SLabeledGraph& graph, const std::optional<Provenance>& provenance);

struct CheckResult {
  bool valid = false;
  std::string reason;  // empty when valid

  explicit operator bool() const noexcept { return valid; }
};

/// Re-derives the frame colourings by its own enumeration and re-checks
/// every domain and row against `graph`. Uses nothing from the solver.
CheckResult verify_certificate(const Certificate& cert, const SLabeledGraph& graph);

}  // namespace slc
