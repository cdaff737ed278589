#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "novikov/word.hpp"

namespace novikov {

/// Commutation graph of a right-angled Artin group.
struct RaagGraph {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j
};

enum class RewriteOrder {
  ShortLex,
  /// Wreath-product order; generators declared later are heavier.
  Wreath,
};

struct RewriteRule {
  Word lhs;
  Word rhs;
};

struct RewritingSpec {
  RewriteOrder order = RewriteOrder::ShortLex;
  std::vector<RewriteRule> rules;
};

using EngineSpec = std::variant<RaagGraph, RewritingSpec>;

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  /// Absent for presentations whose word problem is inherited from an
  /// ambient group (subgroup presentations).
  std::optional<EngineSpec> engine;

  std::size_t generator_count() const { return generators.size(); }
  std::optional<std::uint32_t> index_of(std::string_view name) const;
  bool is_raag() const { return engine && std::holds_alternative<RaagGraph>(*engine); }
};

/// Grammar:
///   raag { v1, v2, ...; vi-vj, ... }
///   pres { g1, g2, ... | r1, r2, ... } [rewriting [shortlex|wreath] { lhs -> rhs; ... }]
/// Relators may be written as equations `u = v`. `#` starts a comment.
/// A `pres` block without relators needs no rewriting block (free group).
/// Throws ParseError carrying the line and column of the offending token.
GroupPresentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation for presentations with an engine.
std::string format_presentation(const GroupPresentation& presentation);

/// Convenience constructors used by fixtures and the catalog.
GroupPresentation raag_presentation(std::vector<std::string> names,
                                    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

}  // namespace novikov
