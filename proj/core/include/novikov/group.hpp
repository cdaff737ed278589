#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "novikov/abelianization.hpp"
#include "novikov/normal_form.hpp"
#include "novikov/presentation.hpp"

namespace novikov {

/// A finitely presented group with solvable word problem.
///
/// Elements are identified by canonical "keys": normal-form words over the
/// element alphabet. For a group given by its own engine the element
/// alphabet is the generating set; for a finite-index subgroup it is the
/// alphabet of the ambient group. Instances are immutable and shared.
class Group {
 public:
  virtual ~Group() = default;

  const GroupPresentation& presentation() const { return presentation_; }
  std::size_t generator_count() const { return presentation_.generator_count(); }
  const Abelianization& abelianization() const { return abelianization_; }

  /// Names used when printing element keys.
  virtual const std::vector<std::string>& element_alphabet() const = 0;

  /// Canonical key for a word over the element alphabet.
  virtual Word normal_form(const Word& element_word) const = 0;

  /// Key of the element represented by a word over the generators.
  virtual Word embed(const Word& generator_word) const = 0;

  /// Some word over the generators representing the element `key`.
  virtual Word generator_word(const Word& key) const = 0;

  /// Image under the free abelianisation map.
  AbelianVector abelian_image(const Word& key) const;

  Word multiply(const Word& lhs, const Word& rhs) const { return normal_form(concat(lhs, rhs)); }
  Word invert(const Word& key) const { return normal_form(inverse(key)); }
  Word conjugate(const Word& by, const Word& key) const {
    return normal_form(concat(concat(by, key), inverse(by)));
  }
  Word generator(std::uint32_t index) const { return embed(Word{Letter{index, false}}); }

  std::string format(const Word& key) const { return format_word(key, element_alphabet()); }

 protected:
  Group(GroupPresentation presentation, Abelianization abelianization)
      : presentation_(std::move(presentation)), abelianization_(std::move(abelianization)) {}

 private:
  GroupPresentation presentation_;
  Abelianization abelianization_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Group with its own normal-form engine. Throws EngineRejection.
GroupPtr make_group(GroupPresentation presentation);

/// An element together with the group it lives in.
class GroupElement {
 public:
  GroupElement(GroupPtr group, Word key) : group_(std::move(group)), key_(std::move(key)) {}

  const Word& word() const { return key_; }
  const GroupPtr& group() const { return group_; }

  GroupElement operator*(const GroupElement& other) const {
    return {group_, group_->multiply(key_, other.key_)};
  }
  GroupElement inverse() const { return {group_, group_->invert(key_)}; }
  bool is_identity() const { return key_.empty(); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.key_ == b.key_; }

 private:
  GroupPtr group_;
  Word key_;
};

/// Normal form of a word over the element alphabet.
GroupElement normal_form(const Word& word, const GroupPtr& group);

}  // namespace novikov
