#include "novikov/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "novikov/error.hpp"

namespace novikov {

std::optional<std::uint32_t> GroupPresentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {
    // Blank out comments so offsets stay aligned with the original text.
    bool comment = false;
    for (char& c : text_) {
      if (c == '#') comment = true;
      if (c == '\n') comment = false;
      if (comment) c = ' ';
    }
  }

  GroupPresentation parse() {
    skip_space();
    std::string keyword = identifier("'raag' or 'pres'");
    GroupPresentation result;
    if (keyword == "raag") {
      result = parse_raag();
    } else if (keyword == "pres") {
      result = parse_pres();
    } else {
      fail("expected 'raag' or 'pres', found '" + keyword + "'", pos_ - keyword.size());
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input", pos_);
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::string identifier(const std::string& what) {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected " + what, pos_);
    return text_.substr(start, pos_ - start);
  }

  std::vector<std::string> generator_list(char terminator_a, char terminator_b) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    if (peek(terminator_a) || peek(terminator_b)) return names;
    while (true) {
      skip_space();
      std::size_t at = pos_;
      std::string name = identifier("generator name");
      if (!seen.insert(name).second) fail("duplicate generator '" + name + "'", at);
      names.push_back(std::move(name));
      if (peek(',')) {
        ++pos_;
        continue;
      }
      break;
    }
    return names;
  }

  // Reads raw text up to (not including) any of the stop characters.
  std::pair<std::size_t, std::string> segment(std::string_view stops) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && stops.find(text_[pos_]) == std::string_view::npos) ++pos_;
    return {start, text_.substr(start, pos_ - start)};
  }

  Word word_at(std::size_t offset, std::string_view raw, const std::vector<std::string>& names) {
    std::string_view trimmed = raw;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
      trimmed.remove_suffix(1);
    }
    if (trimmed.empty()) fail("expected a word", offset);
    try {
      return parse_word(trimmed, names);
    } catch (const ParseError& e) {
      fail(strip_location(e.what()), offset + (e.column() == 0 ? 0 : e.column() - 1));
    }
  }

  static std::string strip_location(const std::string& message) {
    auto colon = message.find(": ");
    return colon == std::string::npos ? message : message.substr(colon + 2);
  }

  GroupPresentation parse_raag() {
    expect('{');
    GroupPresentation p;
    p.generators = generator_list(';', '}');
    if (p.generators.empty()) fail("a RAAG needs at least one vertex", pos_);
    RaagGraph graph;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    if (peek(';')) {
      ++pos_;
      while (!peek('}')) {
        skip_space();
        std::size_t at = pos_;
        std::string a = identifier("vertex name");
        expect('-');
        std::string b = identifier("vertex name");
        auto ia = p.index_of(a);
        auto ib = p.index_of(b);
        if (!ia) fail("undeclared generator '" + a + "'", at);
        if (!ib) fail("undeclared generator '" + b + "'", at);
        if (*ia == *ib) fail("malformed graph: loop at '" + a + "'", at);
        auto edge = std::minmax(*ia, *ib);
        if (!seen.insert(edge).second) fail("malformed graph: repeated edge " + a + "-" + b, at);
        graph.edges.emplace_back(edge.first, edge.second);
        if (peek(',')) ++pos_;
        else break;
      }
    }
    expect('}');
    std::sort(graph.edges.begin(), graph.edges.end());
    return raag_presentation(p.generators, graph.edges);
  }

  GroupPresentation parse_pres() {
    expect('{');
    GroupPresentation p;
    p.generators = generator_list('|', '}');
    if (peek('|')) {
      ++pos_;
      while (!peek('}')) {
        auto [start, raw] = segment(",}");
        auto eq = raw.find('=');
        if (eq == std::string::npos) {
          p.relators.push_back(word_at(start, raw, p.generators));
        } else {
          Word lhs = word_at(start, std::string_view(raw).substr(0, eq), p.generators);
          std::size_t rstart = start + eq + 1;
          std::string_view rhs_raw = std::string_view(raw).substr(eq + 1);
          while (!rhs_raw.empty() && std::isspace(static_cast<unsigned char>(rhs_raw.front()))) {
            rhs_raw.remove_prefix(1);
            ++rstart;
          }
          Word rhs = word_at(rstart, rhs_raw, p.generators);
          p.relators.push_back(concat(lhs, inverse(rhs)));
        }
        if (peek(',')) ++pos_;
        else break;
      }
    }
    expect('}');
    skip_space();
    if (pos_ < text_.size()) {
      std::size_t at = pos_;
      std::string keyword = identifier("'rewriting'");
      if (keyword != "rewriting") fail("expected 'rewriting', found '" + keyword + "'", at);
      RewritingSpec spec;
      if (!peek('{')) {
        at = pos_;
        std::string order = identifier("'shortlex', 'wreath' or '{'");
        if (order == "shortlex") spec.order = RewriteOrder::ShortLex;
        else if (order == "wreath") spec.order = RewriteOrder::Wreath;
        else fail("unknown rewriting order '" + order + "'", at);
      }
      expect('{');
      while (!peek('}')) {
        skip_space();
        std::size_t lstart = pos_;
        while (pos_ < text_.size() && text_[pos_] != ';' && text_[pos_] != '}' &&
               text_.compare(pos_, 2, "->") != 0) {
          ++pos_;
        }
        if (text_.compare(pos_, 2, "->") != 0) fail("expected '->' in rewriting rule", pos_);
        std::size_t lhs_end = pos_;
        pos_ += 2;
        Word lhs = word_at(lstart, std::string_view(text_).substr(lstart, lhs_end - lstart),
                           p.generators);
        auto [rstart, rraw] = segment(";}");
        Word rhs = word_at(rstart, rraw, p.generators);
        spec.rules.push_back({std::move(lhs), std::move(rhs)});
        if (peek(';')) ++pos_;
        else break;
      }
      expect('}');
      p.engine = std::move(spec);
    } else if (p.relators.empty()) {
      p.engine = RewritingSpec{};
    } else {
      fail("a presentation with relators needs a rewriting block", pos_);
    }
    return p;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupPresentation parse_presentation(std::string_view text) { return Parser(text).parse(); }

std::string format_presentation(const GroupPresentation& presentation) {
  const auto& names = presentation.generators;
  std::string out;
  auto join_names = [&] {
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  };
  if (presentation.is_raag()) {
    const auto& graph = std::get<RaagGraph>(*presentation.engine);
    out = "raag { ";
    join_names();
    if (!graph.edges.empty()) {
      out += ";";
      for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        out += (i ? ", " : " ") + names[graph.edges[i].first] + "-" + names[graph.edges[i].second];
      }
    }
    out += " }";
    return out;
  }
  out = "pres { ";
  join_names();
  out += " |";
  for (std::size_t i = 0; i < presentation.relators.size(); ++i) {
    out += (i ? ", " : " ") + format_word(presentation.relators[i], names);
  }
  out += " }";
  if (presentation.engine) {
    const auto& spec = std::get<RewritingSpec>(*presentation.engine);
    if (!spec.rules.empty() || !presentation.relators.empty()) {
      out += spec.order == RewriteOrder::Wreath ? " rewriting wreath {" : " rewriting {";
      for (std::size_t i = 0; i < spec.rules.size(); ++i) {
        out += (i ? "; " : " ") + format_word(spec.rules[i].lhs, names) + " -> " +
               format_word(spec.rules[i].rhs, names);
      }
      out += " }";
    }
  }
  return out;
}

GroupPresentation raag_presentation(std::vector<std::string> names,
                                    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  GroupPresentation p;
  p.generators = std::move(names);
  RaagGraph graph;
  for (auto [i, j] : edges) {
    if (i == j || i >= p.generators.size() || j >= p.generators.size()) {
      throw ParseError("malformed graph", 0, 0);
    }
    auto [a, b] = std::minmax(i, j);
    Word commutator{{a, false}, {b, false}, {a, true}, {b, true}};
    p.relators.push_back(commutator);
    graph.edges.emplace_back(a, b);
  }
  p.engine = std::move(graph);
  return p;
}

}  // namespace novikov
