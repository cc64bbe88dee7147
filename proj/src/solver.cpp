#include "cpell/solver.hpp"

#include "cpell/quadring.hpp"

namespace cpell {

namespace {

SolutionPair make_term(std::uint64_t index, BigInt x, BigInt y) {
  return {index, strand_of(index), std::move(x), std::move(y)};
}

} // namespace

bool satisfies_invariants(const SolutionPair &p) {
  if (p.index == 0 || p.strand != strand_of(p.index))
    return false;
  if (!(p.x > p.y && p.y >= 1))
    return false;
  if (p.x * (p.x + 1) != 10 * p.y * (p.y + 1))
    return false;
  const BigInt a = p.a(), b = p.b();
  return a * a - 10 * b * b == -9;
}

const std::array<SolutionPair, 3> &initial_terms() {
  static const std::array<SolutionPair, 3> seeds = {
      make_term(1, 4, 1), make_term(2, 20, 6), make_term(3, 39, 12)};
  return seeds;
}

SolutionPair next_triple(std::span<const SolutionPair, 3> window) {
  const auto &first = window[0];
  const auto &mid = window[1];
  const auto &last = window[2];
  if (first.index == 0 || mid.index != first.index + 1 ||
      last.index != mid.index + 1)
    throw UsageError("next_triple: window is not three consecutive terms");
  return make_term(last.index + 1, 19 * first.x + 60 * first.y + 39,
                   6 * first.x + 19 * first.y + 12);
}

SolutionPair term_closed_form(std::uint64_t n) {
  if (n == 0)
    throw DomainError("term_closed_form: index must be positive");
  if (n <= 3)
    return initial_terms()[n - 1];

  const std::uint64_t m = (n - 1) / 3;
  const auto &seed = initial_terms()[(n - 1) % 3];
  // 40 A_k = (20 y_k + 10) + (2 x_k + 1) sqrt(10)
  const QuadInt scaled_a{20 * seed.y + 10, seed.a()};
  const QuadInt y_part = quad_mul(scaled_a, quad_pow(phi(), m));
  const QuadInt x_part = quad_mul(y_part, root10());
  return make_term(n, floor_value(ScaledQuad(x_part)),
                   floor_value(ScaledQuad(y_part)));
}

SolutionStream::SolutionStream() : window_(initial_terms()) {}

const SolutionPair &SolutionStream::next() {
  if (produced_ >= 3) {
    SolutionPair nxt = next_triple(window_);
    window_[0] = std::move(window_[1]);
    window_[1] = std::move(window_[2]);
    window_[2] = std::move(nxt);
    ++produced_;
    return window_[2];
  }
  return window_[produced_++];
}

std::vector<SolutionPair> stream(std::uint64_t count) {
  std::vector<SolutionPair> out;
  out.reserve(count);
  SolutionStream gen;
  for (std::uint64_t i = 0; i < count; ++i)
    out.push_back(gen.next());
  return out;
}

std::vector<std::pair<BigInt, BigInt>> ab_stream(std::uint64_t count) {
  std::vector<std::pair<BigInt, BigInt>> out;
  out.reserve(count);
  const std::pair<BigInt, BigInt> seeds[3] = {{9, 3}, {41, 13}, {79, 25}};
  for (std::uint64_t i = 0; i < count; ++i) {
    if (i < 3) {
      out.push_back(seeds[i]);
      continue;
    }
    const auto &[a, b] = out[i - 3];
    out.emplace_back(19 * a + 60 * b, 6 * a + 19 * b);
  }
  return out;
}

} // namespace cpell
