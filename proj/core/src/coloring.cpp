#include "gaifman/coloring.hpp"

#include <limits>

#include "gaifman/errors.hpp"

namespace gaifman {

namespace {

constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

/// Smallest i with lower*base^i >= bound, treating overflow as infinity.
std::uint64_t exponential_steps(std::uint64_t lower, std::uint64_t base,
                                std::uint64_t bound) {
  std::uint64_t boundary = lower;
  std::uint64_t steps = 0;
  while (boundary < bound) {
    if (boundary > kNoLimit / base) {
      return steps + 1;  // next boundary would overflow, so it exceeds bound
    }
    boundary *= base;
    ++steps;
  }
  return steps;
}

}  // namespace

color_scheme color_scheme::plain() {
  color_scheme s;
  s.kind_ = scheme_kind::plain;
  return s;
}

color_scheme color_scheme::threshold(std::uint64_t k) {
  if (k < 1) {
    throw config_error("threshold: k must be a positive integer");
  }
  color_scheme s;
  s.kind_ = scheme_kind::threshold;
  s.k_ = k;
  return s;
}

color_scheme color_scheme::linear(std::uint64_t width, std::optional<std::uint64_t> lower,
                                  std::optional<std::uint64_t> upper) {
  if (width < 1) {
    throw config_error("linear: width must be >= 1");
  }
  std::uint64_t lo = lower.value_or(width);
  if (lo < 1) {
    throw config_error("linear: lower threshold must be >= 1");
  }
  if (upper.has_value() && *upper <= lo) {
    throw config_error("linear: upper threshold must exceed the lower one");
  }
  color_scheme s;
  s.kind_ = scheme_kind::linear;
  s.width_ = width;
  s.lower_ = lo;
  s.upper_ = upper;
  return s;
}

color_scheme color_scheme::exponential(std::uint64_t base, std::uint64_t lower,
                                       std::optional<std::uint64_t> upper) {
  if (base < 2) {
    throw config_error("exponential: base must be >= 2");
  }
  if (lower < 1) {
    throw config_error("exponential: lower threshold must be >= 1");
  }
  if (upper.has_value() && *upper <= lower) {
    throw config_error("exponential: upper threshold must exceed the lower one");
  }
  color_scheme s;
  s.kind_ = scheme_kind::exponential;
  s.base_ = base;
  s.lower_ = lower;
  s.upper_ = upper;
  return s;
}

class_ordinal color_scheme::top_ordinal() const {
  switch (kind_) {
    case scheme_kind::linear:
      return static_cast<class_ordinal>(1 + ceil_div(*upper_ - lower_, width_));
    case scheme_kind::exponential:
      return static_cast<class_ordinal>(1 + exponential_steps(lower_, base_, *upper_));
    default:
      throw internal_error("top_ordinal: scheme has no upper threshold");
  }
}

class_ordinal color_scheme::color_of(std::uint64_t m) const {
  switch (kind_) {
    case scheme_kind::plain:
      return m == 0 ? 0 : 1;
    case scheme_kind::threshold:
      return m <= k_ ? 0 : 1;
    case scheme_kind::linear:
      if (m < lower_) {
        return 0;
      }
      if (upper_.has_value() && m >= *upper_) {
        return top_ordinal();
      }
      return static_cast<class_ordinal>(1 + (m - lower_) / width_);
    case scheme_kind::exponential: {
      if (m < lower_) {
        return 0;
      }
      if (upper_.has_value() && m >= *upper_) {
        return top_ordinal();
      }
      // Maximal i with lower*base^i <= m; the boundary comparison is phrased
      // via division so it cannot overflow.
      class_ordinal ordinal = 1;
      std::uint64_t boundary = lower_;
      while (boundary <= m / base_) {
        boundary *= base_;
        ++ordinal;
      }
      return ordinal;
    }
  }
  throw internal_error("color_of: unknown scheme kind");
}

edge_class color_scheme::descriptor(class_ordinal ordinal) const {
  switch (kind_) {
    case scheme_kind::plain:
      if (ordinal == 0) return {0, 0, 1};
      if (ordinal == 1) return {1, 1, std::nullopt};
      break;
    case scheme_kind::threshold:
      if (ordinal == 0) return {0, 0, k_ + 1};
      if (ordinal == 1) return {1, k_ + 1, std::nullopt};
      break;
    case scheme_kind::linear: {
      if (ordinal == 0) return {0, 0, lower_};
      if (upper_.has_value()) {
        class_ordinal top = top_ordinal();
        if (ordinal == top) return {ordinal, *upper_, std::nullopt};
        if (ordinal > top) break;
        std::uint64_t lo = lower_ + static_cast<std::uint64_t>(ordinal - 1) * width_;
        return {ordinal, lo, std::min(lo + width_, *upper_)};
      }
      std::uint64_t lo = lower_ + static_cast<std::uint64_t>(ordinal - 1) * width_;
      return {ordinal, lo, lo + width_};
    }
    case scheme_kind::exponential: {
      if (ordinal == 0) return {0, 0, lower_};
      std::optional<class_ordinal> top;
      if (upper_.has_value()) {
        top = top_ordinal();
        if (ordinal == *top) return {ordinal, *upper_, std::nullopt};
        if (ordinal > *top) break;
      }
      std::uint64_t lo = lower_;
      for (class_ordinal i = 1; i < ordinal; ++i) {
        if (lo > kNoLimit / base_) {
          throw std::invalid_argument("descriptor: interval exceeds 64-bit range");
        }
        lo *= base_;
      }
      std::uint64_t hi = lo > kNoLimit / base_ ? kNoLimit : lo * base_;
      if (upper_.has_value()) {
        hi = std::min(hi, *upper_);
      }
      return {ordinal, lo, hi};
    }
  }
  throw std::invalid_argument("descriptor: ordinal " + std::to_string(ordinal) +
                              " is not produced by this scheme");
}

two_structure build_two_structure(const multiplicity_map& m, const color_scheme& scheme) {
  const universe& u = m.vertices();
  const std::size_t n = u.size();
  if (n < 2) {
    throw data_error("build_two_structure: need at least 2 items, got " +
                     std::to_string(n));
  }
  std::vector<class_ordinal> colors(n * (n - 1) / 2);
  std::vector<edge_class> table;
  auto note_class = [&](class_ordinal ordinal) {
    for (const edge_class& c : table) {
      if (c.ordinal == ordinal) return;
    }
    table.push_back(scheme.descriptor(ordinal));
  };
  for (vertex_id b = 1; b < n; ++b) {
    for (vertex_id a = 0; a < b; ++a) {
      class_ordinal ordinal = scheme.color_of(m.count(a, b));
      colors[two_structure::pair_index(a, b)] = ordinal;
      note_class(ordinal);
    }
  }
  return two_structure(u, std::move(colors), std::move(table));
}

}  // namespace gaifman
