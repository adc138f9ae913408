#include "trigsum/walks.hpp"

#include <vector>

namespace trigsum {
namespace {

Integer theorem_bracket(std::int64_t m, std::int64_t n) {
  Integer bracket = binom(2 * m - 1, m - 1);
  for (std::int64_t k = 1; k <= m / n; ++k) bracket += binom(2 * m, m - k * n);
  return bracket;
}

class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t size) : size_(size), cells_(size * size) {}

  static SquareMatrix identity(std::size_t size) {
    SquareMatrix id(size);
    for (std::size_t i = 0; i < size; ++i) id(i, i) = 1;
    return id;
  }

  Integer& operator()(std::size_t i, std::size_t j) { return cells_[i * size_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return cells_[i * size_ + j]; }

  SquareMatrix operator*(const SquareMatrix& rhs) const {
    SquareMatrix out(size_);
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t k = 0; k < size_; ++k) {
        const Integer& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < size_; ++j) out(i, j) += a * rhs(k, j);
      }
    }
    return out;
  }

  Integer trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < size_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  std::size_t size_;
  std::vector<Integer> cells_;
};

SquareMatrix adjacency(const GraphSpec& graph) {
  const std::size_t v = graph.vertex_count();
  SquareMatrix a(v);
  for (std::size_t i = 0; i + 1 < v; ++i) {
    a(i, i + 1) = 1;
    a(i + 1, i) = 1;
  }
  if (graph.kind == GraphKind::Cycle) {
    a(0, v - 1) = 1;
    a(v - 1, 0) = 1;
  }
  return a;
}

}  // namespace

void validate(const GraphSpec& graph) {
  if (graph.kind == GraphKind::Path) {
    if (graph.n < 2) throw DomainError("path: n must be >= 2 (n - 1 vertices)");
  } else {
    if (graph.n < 3 || graph.n % 2 == 0) throw DomainError("cycle: n must be odd and >= 3");
  }
}

Integer path_closed_walks(std::uint32_t n, std::uint32_t m) {
  validate(GraphSpec{GraphKind::Path, n});
  if (m == 0) return n - 1;
  const std::int64_t mm = m;
  return 2 * Integer(n) * theorem_bracket(mm, n) - pow2(2 * mm);
}

Integer cycle_closed_walks(std::uint32_t n, std::uint32_t m) {
  validate(GraphSpec{GraphKind::Cycle, n});
  if (m == 0) return n;
  return 2 * Integer(n) * theorem_bracket(m, n);
}

Integer trace_oracle(const GraphSpec& graph, std::uint32_t length) {
  validate(graph);
  SquareMatrix result = SquareMatrix::identity(graph.vertex_count());
  SquareMatrix base = adjacency(graph);
  for (std::uint32_t e = length; e != 0; e >>= 1) {
    if (e & 1u) result = result * base;
    if (e > 1) base = base * base;
  }
  return result.trace();
}

}  // namespace trigsum
