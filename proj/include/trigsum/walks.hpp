// Closed walks of even length on paths and odd cycles.

#ifndef TRIGSUM_WALKS_HPP_
#define TRIGSUM_WALKS_HPP_

#include <cstdint>

#include "trigsum/exact.hpp"

namespace trigsum {

enum class GraphKind { Path, Cycle };

/// Path: the path on n - 1 vertices (n >= 2), spectrum 2cos(l pi / n).
/// Cycle: the cycle on n vertices (n odd, n >= 3), spectrum 2cos(2 l pi / n).
struct GraphSpec {
  GraphKind kind = GraphKind::Path;
  std::uint32_t n = 2;

  std::uint32_t vertex_count() const { return kind == GraphKind::Path ? n - 1 : n; }
};

/// Throws DomainError if the graph violates its invariants.
void validate(const GraphSpec& graph);

/// Closed walks of length 2m on the path with n - 1 vertices:
/// 2n (C(2m-1, m-1) + sum_{k=1}^{floor(m/n)} C(2m, m - kn)) - 2^{2m}, and
/// n - 1 for m = 0.
Integer path_closed_walks(std::uint32_t n, std::uint32_t m);

/// Closed walks of length 2m on the odd cycle C_n:
/// 2n (C(2m-1, m-1) + sum_{r=1}^{floor(m/n)} C(2m, m - rn)), and n for m = 0.
Integer cycle_closed_walks(std::uint32_t n, std::uint32_t m);

/// trace(A^length) for the graph's 0/1 adjacency matrix, by exact repeated
/// squaring. Any length is accepted.
Integer trace_oracle(const GraphSpec& graph, std::uint32_t length);

}  // namespace trigsum

#endif  // TRIGSUM_WALKS_HPP_
