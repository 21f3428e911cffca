#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "slc/certify.hpp"
#include "slc/construct.hpp"
#include "slc/graph.hpp"
#include "slc/slabel.hpp"
#include "slc/solver.hpp"

namespace slc {

// Every document is {"kind": ..., "payload": ..., "schema_version": ...}
// with keys sorted and two-space indentation, so equal values encode to
// identical bytes. Decoding re-validates all invariants.

inline constexpr std::string_view kSchemaVersion = "1";

std::string encode(const PlaneGraph& graph);
std::string encode(const SLabeledGraph& graph);
std::string encode(const Construction& construction);
std::string encode(const Certificate& cert);
std::string encode(const Colouring& colouring);

/// An S-labelled graph as read from disk, with provenance when the file
/// came from a construction.
struct Instance {
  SLabeledGraph graph;
  std::optional<Provenance> provenance;
};

PlaneGraph decode_plane_graph(std::string_view bytes);
/// Accepts both "slabeled_graph" and "instance" documents.
Instance decode_instance(std::string_view bytes);
SLabeledGraph decode_slabeled_graph(std::string_view bytes);
Certificate decode_certificate(std::string_view bytes);
Colouring decode_colouring(std::string_view bytes);

/// Permutation given either as cycle notation or as an images array.
Permutation decode_permutation(std::string_view json_value, int k);

/// SHA-256 (hex) of the compact canonical encoding of the labelled graph.
std::string instance_digest(const SLabeledGraph& graph);

/// Identity arcs as undirected unlabelled edges; other arcs directed and
/// labelled in cycle notation.
std::string to_dot(const SLabeledGraph& graph);

/// {"status", "witness", "stats"}; wall time only when requested.
std::string encode_solve_result(const SolveResult& result, bool with_timing);
std::string encode_stats(const SolveStats& stats, bool with_timing);

// Adapter inputs. Edge lists are JSON objects with "vertices" (a count or an
// id list 0..n-1) and either "edges" [{"u","v","sign"}] (signed) or "arcs"
// [{"tail","head","weight"}] (Z_k) / [{"tail","head","gain"}] (gain, plus
// "group": {"cyclic": n} | {"table": [[...]]} | {"symmetric": m}).
SLabeledGraph decode_signed_input(std::string_view bytes, int k, SignedMode mode);
SLabeledGraph decode_zk_input(std::string_view bytes, int k);
SLabeledGraph decode_gain_input(std::string_view bytes, int k);

}  // namespace slc
