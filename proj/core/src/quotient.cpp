#include "novikov/quotient.hpp"

#include <deque>

#include "novikov/error.hpp"

namespace novikov {

void validate_group_table(const FiniteQuotient::Table& table) {
  const std::size_t n = table.size();
  if (n == 0) throw QuotientError("empty multiplication table");
  for (std::size_t p = 0; p < n; ++p) {
    if (table[p].size() != n) throw QuotientError("multiplication table is not square");
    for (std::size_t q = 0; q < n; ++q) {
      if (table[p][q] >= n) {
        throw QuotientError("table entry (" + std::to_string(p) + "," + std::to_string(q) +
                            ") out of range");
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (table[0][p] != p || table[p][0] != p) {
      throw QuotientError("element 0 is not the identity (fails at " + std::to_string(p) + ")");
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    bool has_inverse = false;
    for (std::size_t q = 0; q < n && !has_inverse; ++q) {
      has_inverse = table[p][q] == 0 && table[q][p] == 0;
    }
    if (!has_inverse) throw QuotientError("element " + std::to_string(p) + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw QuotientError("table is not associative at (" + std::to_string(a) + "," +
                              std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
}

namespace {

std::vector<std::size_t> inverses_of(const FiniteQuotient::Table& table) {
  std::vector<std::size_t> inv(table.size(), 0);
  for (std::size_t p = 0; p < table.size(); ++p) {
    for (std::size_t q = 0; q < table.size(); ++q) {
      if (table[p][q] == 0) {
        inv[p] = q;
        break;
      }
    }
  }
  return inv;
}

}  // namespace

std::size_t FiniteQuotient::image_of_word(const Word& generator_word) const {
  std::size_t q = 0;
  for (const Letter& x : generator_word) {
    if (x.generator >= images_.size()) throw QuotientError("letter outside the quotient's alphabet");
    std::size_t g = images_[x.generator];
    q = table_[q][x.inverse ? inverses_[g] : g];
  }
  return q;
}

FiniteQuotient FiniteQuotient::unchecked(const Group& group, Table table,
                                         std::vector<std::size_t> images, std::vector<Word> section,
                                         std::string kernel_name) {
  FiniteQuotient f;
  f.table_ = std::move(table);
  f.inverses_ = inverses_of(f.table_);
  f.images_ = std::move(images);
  f.section_words_ = std::move(section);
  for (const Word& w : f.section_words_) f.section_keys_.push_back(group.embed(w));
  f.kernel_name_ = std::move(kernel_name);
  return f;
}

FiniteQuotient FiniteQuotient::create(const Group& group, Table table,
                                      std::vector<std::size_t> images,
                                      std::optional<std::vector<Word>> section,
                                      std::string kernel_name) {
  validate_group_table(table);
  const std::size_t n = table.size();
  const std::size_t gens = group.generator_count();
  if (images.size() != gens) {
    throw QuotientError("expected " + std::to_string(gens) + " generator images, got " +
                        std::to_string(images.size()));
  }
  for (std::size_t i = 0; i < gens; ++i) {
    if (images[i] >= n) throw QuotientError("image of generator " + std::to_string(i) + " out of range");
  }
  FiniteQuotient f;
  f.table_ = std::move(table);
  f.inverses_ = inverses_of(f.table_);
  f.images_ = std::move(images);
  f.kernel_name_ = std::move(kernel_name);

  const auto& relators = group.presentation().relators;
  for (std::size_t r = 0; r < relators.size(); ++r) {
    if (f.image_of_word(relators[r]) != 0) {
      throw QuotientError("generator images do not define a homomorphism: relator " +
                          std::to_string(r + 1) + " maps to " +
                          std::to_string(f.image_of_word(relators[r])));
    }
  }

  // Breadth-first search in letter order yields shortlex-minimal preimages.
  std::vector<std::optional<Word>> reached(n);
  reached[0] = Word{};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t q = frontier.front();
    frontier.pop_front();
    for (std::uint32_t g = 0; g < gens; ++g) {
      for (bool inv : {false, true}) {
        Letter x{g, inv};
        std::size_t next = f.image_of_word(Word{x});
        next = f.table_[q][next];
        if (reached[next]) continue;
        Word w = *reached[q];
        w.push_back(x);
        reached[next] = std::move(w);
        frontier.push_back(next);
      }
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (!reached[q]) throw QuotientError("generator images are not surjective: " +
                                         std::to_string(q) + " is not hit");
  }

  if (section) {
    if (section->size() != n) {
      throw QuotientError("section has " + std::to_string(section->size()) + " entries, expected " +
                          std::to_string(n));
    }
    f.section_words_ = std::move(*section);
  } else {
    for (auto& w : reached) f.section_words_.push_back(std::move(*w));
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (f.image_of_word(f.section_words_[q]) != q) {
      throw QuotientError("section is not a section: s(" + std::to_string(q) + ") maps to " +
                          std::to_string(f.image_of_word(f.section_words_[q])));
    }
    f.section_keys_.push_back(group.embed(f.section_words_[q]));
  }
  if (!f.section_keys_[0].empty()) throw QuotientError("section must send the identity to 1");
  return f;
}

CosetDecomposition coset_decompose(const Group& group, const Word& key,
                                   const FiniteQuotient& quotient) {
  CosetDecomposition d;
  d.cls = quotient.image_of(group, key);
  d.h = group.multiply(key, group.invert(quotient.section(d.cls)));
  return d;
}

}  // namespace novikov
