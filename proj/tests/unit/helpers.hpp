#pragma once

#include <string>

#include "novikov/group.hpp"
#include "novikov/group_ring.hpp"
#include "novikov/presentation.hpp"

namespace test {

inline novikov::GroupPtr group(const std::string& text) {
  return novikov::make_group(novikov::parse_presentation(text));
}

inline novikov::Word word(const novikov::GroupPtr& g, const std::string& text) {
  return novikov::parse_word(text, g->presentation().generators);
}

/// Normal form of a word over the generators.
inline novikov::Word key(const novikov::GroupPtr& g, const std::string& text) {
  return g->embed(word(g, text));
}

inline std::string nf(const novikov::GroupPtr& g, const std::string& text) {
  return g->format(key(g, text));
}

inline novikov::RingElement element(const novikov::GroupPtr& g,
                                    std::initializer_list<std::pair<std::string, long>> terms) {
  novikov::RingElement x(g);
  for (const auto& [w, c] : terms) x.add_term(key(g, w), c);
  return x;
}

inline const char* kZ = "raag { t; }";
inline const char* kZ2 = "raag { a, b; a-b }";
inline const char* kZ3 = "raag { a, b, c; a-b, a-c, b-c }";
inline const char* kF2 = "pres { a, b | }";
inline const char* kF2xZ = "raag { a, b, z; a-z, b-z }";
inline const char* kBS12 =
    "pres { a, t | t a t^-1 a^-2 } rewriting wreath { t a -> a^2 t; t a^-1 -> a^-2 t; "
    "t^-1 a^2 -> a t^-1; t^-1 a^-1 -> a^-1 t^-1 a }";

}  // namespace test
