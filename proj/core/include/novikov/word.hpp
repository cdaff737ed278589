#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace novikov {

/// A generator or its inverse. Ordered a < a^-1 < b < b^-1 < ...
struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;

  Letter inverted() const { return {generator, !inverse}; }
  int sign() const { return inverse ? -1 : 1; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Word inverse(const Word& word);
Word concat(const Word& lhs, const Word& rhs);
Word power(const Word& word, long exponent);

/// Cancels adjacent x x^-1 pairs.
Word free_reduce(const Word& word);

/// Shortlex: shorter first, then lexicographic in letter order.
bool shortlex_less(const Word& lhs, const Word& rhs);

struct ShortLex {
  bool operator()(const Word& lhs, const Word& rhs) const { return shortlex_less(lhs, rhs); }
};

/// Exponent sum of each generator.
std::vector<std::int64_t> exponent_sums(const Word& word, std::size_t generator_count);

/// "a^2 b^-1 a"; the empty word is printed as "1".
std::string format_word(const Word& word, std::span<const std::string> names);

/// Parses juxtaposed tokens `x`, `x^k`, `x^-k`, optionally separated by
/// whitespace, `*` or `.`; "1" denotes the empty word. A token that is not a
/// generator name but consists solely of one-character generator names is
/// split into letters ("za" -> z a).
Word parse_word(std::string_view text, std::span<const std::string> names);

}  // namespace novikov
