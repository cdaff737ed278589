#include "novikov/word.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>

#include "novikov/error.hpp"

namespace novikov {

Word inverse(const Word& word) {
  Word result;
  result.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) result.push_back(it->inverted());
  return result;
}

Word concat(const Word& lhs, const Word& rhs) {
  Word result;
  result.reserve(lhs.size() + rhs.size());
  result.insert(result.end(), lhs.begin(), lhs.end());
  result.insert(result.end(), rhs.begin(), rhs.end());
  return result;
}

Word power(const Word& word, long exponent) {
  Word base = exponent < 0 ? inverse(word) : word;
  Word result;
  for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) {
    result.insert(result.end(), base.begin(), base.end());
  }
  return result;
}

Word free_reduce(const Word& word) {
  Word result;
  result.reserve(word.size());
  for (const Letter& letter : word) {
    if (!result.empty() && result.back() == letter.inverted()) {
      result.pop_back();
    } else {
      result.push_back(letter);
    }
  }
  return result;
}

bool shortlex_less(const Word& lhs, const Word& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs < rhs;
}

std::vector<std::int64_t> exponent_sums(const Word& word, std::size_t generator_count) {
  std::vector<std::int64_t> sums(generator_count, 0);
  for (const Letter& letter : word) {
    if (letter.generator >= generator_count) throw std::out_of_range("letter outside alphabet");
    sums[letter.generator] += letter.sign();
  }
  return sums;
}

std::string format_word(const Word& word, std::span<const std::string> names) {
  if (word.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += ' ';
    const Letter& letter = word[i];
    out += letter.generator < names.size() ? names[letter.generator]
                                           : "x" + std::to_string(letter.generator);
    long exponent = static_cast<long>(j - i) * letter.sign();
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

namespace {

std::optional<std::uint32_t> find_name(std::string_view name, std::span<const std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

Word parse_word(std::string_view text, std::span<const std::string> names) {
  Word word;
  std::size_t i = 0;
  auto fail = [&](const std::string& message) { throw ParseError(message, 1, i + 1); };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c == '1' && (i + 1 == text.size() || !is_ident_char(text[i + 1]))) {
      ++i;
      continue;
    }
    if (!is_ident_start(c)) fail(std::string("unexpected character '") + c + "' in word");
    std::size_t start = i;
    while (i < text.size() && is_ident_char(text[i])) ++i;
    std::string_view token = text.substr(start, i - start);
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t estart = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string digits(text.substr(estart, i - estart));
      if (digits.empty() || digits == "-" || digits == "+") fail("missing exponent");
      exponent = std::stol(digits);
    }
    std::vector<std::uint32_t> letters;
    if (auto index = find_name(token, names)) {
      letters.push_back(*index);
    } else {
      for (char ch : token) {
        auto single = find_name(std::string_view(&ch, 1), names);
        if (!single) {
          i = start;
          fail("undeclared generator '" + std::string(token) + "'");
        }
        letters.push_back(*single);
      }
    }
    // The exponent binds to the last letter of a split token.
    for (std::size_t k = 0; k + 1 < letters.size(); ++k) word.push_back(Letter{letters[k], false});
    Letter last{letters.back(), exponent < 0};
    for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) word.push_back(last);
  }
  return word;
}

}  // namespace novikov
