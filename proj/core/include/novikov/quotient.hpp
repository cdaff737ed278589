#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novikov/group.hpp"

namespace novikov {

/// Default cap on |Q|; the CLI reads NOVIKOV_MAX_Q.
inline constexpr std::size_t kDefaultMaxQuotientOrder = 64;

/// An epimorphism beta: G -> Q onto a finite group given by its
/// multiplication table (element 0 is the identity), together with a
/// set-theoretic section s: Q -> G with s(1) = 1.
class FiniteQuotient {
 public:
  using Table = std::vector<std::vector<std::size_t>>;

  /// Validates the table, the homomorphism, surjectivity and the section.
  /// A missing section defaults to shortlex-minimal preimages.
  static FiniteQuotient create(const Group& group, Table table, std::vector<std::size_t> images,
                               std::optional<std::vector<Word>> section = std::nullopt,
                               std::string kernel_name = "H");

  /// No validation at all; for negative controls only.
  static FiniteQuotient unchecked(const Group& group, Table table, std::vector<std::size_t> images,
                                  std::vector<Word> section, std::string kernel_name = "H");

  std::size_t order() const { return table_.size(); }
  std::size_t multiply(std::size_t p, std::size_t q) const { return table_[p][q]; }
  std::size_t inverse(std::size_t q) const { return inverses_[q]; }
  const Table& table() const { return table_; }
  const std::vector<std::size_t>& images() const { return images_; }
  const std::string& kernel_name() const { return kernel_name_; }

  /// beta on a word over the group's generators.
  std::size_t image_of_word(const Word& generator_word) const;
  /// beta on an element key of `group`.
  std::size_t image_of(const Group& group, const Word& key) const {
    return image_of_word(group.generator_word(key));
  }

  /// s(q) as a word over the generators, and as an element key.
  const Word& section_word(std::size_t q) const { return section_words_[q]; }
  const Word& section(std::size_t q) const { return section_keys_[q]; }

 private:
  FiniteQuotient() = default;

  Table table_;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> images_;
  std::vector<Word> section_words_;
  std::vector<Word> section_keys_;
  std::string kernel_name_;
};

/// Checks that `table` is a group table with identity 0. Throws QuotientError.
void validate_group_table(const FiniteQuotient::Table& table);

/// g = h * s(cls) with beta(h) = 1.
struct CosetDecomposition {
  Word h;
  std::size_t cls = 0;
};

CosetDecomposition coset_decompose(const Group& group, const Word& key,
                                   const FiniteQuotient& quotient);

}  // namespace novikov
