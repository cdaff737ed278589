#include "novikov/group_ring.hpp"

#include <stdexcept>

namespace novikov {

RingElement::RingElement(GroupPtr group, Terms terms) : group_(std::move(group)) {
  for (auto& [key, c] : terms) {
    if (c != 0) terms_.emplace(key, c);
  }
}

RingElement RingElement::monomial(GroupPtr group, Word key, const Rational& coefficient) {
  RingElement x(std::move(group));
  x.add_term(key, coefficient);
  return x;
}

RingElement RingElement::from_generator_word(GroupPtr group, const Word& word,
                                             const Rational& coefficient) {
  Word key = group->embed(word);
  return monomial(std::move(group), std::move(key), coefficient);
}

Rational RingElement::coefficient(const Word& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::add_term(const Word& key, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, -c);
  return *this;
}

RingElement& RingElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [key, c] : terms_) c *= scalar;
  }
  return *this;
}

RingElement RingElement::operator-() const {
  RingElement x = *this;
  for (auto& [key, c] : x.terms_) c = -c;
  return x;
}

RingElement multiply(const RingElement& x, const RingElement& y) {
  RingElement out(x.group_);
  for (const auto& [g, a] : x.terms_) {
    for (const auto& [h, b] : y.terms_) out.add_term(x.group_->multiply(g, h), a * b);
  }
  return out;
}

RingElement RingElement::left_translate(const Word& key) const {
  RingElement out(group_);
  for (const auto& [g, c] : terms_) out.add_term(group_->multiply(key, g), c);
  return out;
}

RingElement RingElement::right_translate(const Word& key) const {
  RingElement out(group_);
  for (const auto& [g, c] : terms_) out.add_term(group_->multiply(g, key), c);
  return out;
}

RingElement RingElement::conjugate(const Word& by) const {
  RingElement out(group_);
  for (const auto& [g, c] : terms_) out.add_term(group_->conjugate(by, g), c);
  return out;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (key.empty()) {
      out += novikov::to_string(magnitude);
    } else {
      if (magnitude != 1) out += novikov::to_string(magnitude) + "*";
      out += group_->format(key);
    }
  }
  return out;
}

ExtendedValue valuation(const RingElement& x, const Character& character) {
  ExtendedValue best;
  for (const auto& [key, c] : x.terms()) {
    ExtendedValue v(evaluate(character, *x.group(), key));
    if (v < best) best = std::move(v);
  }
  return best;
}

LeadingTerm leading_term(const RingElement& x, const CompatibleOrder& order) {
  if (x.is_zero()) throw std::invalid_argument("leading term of zero");
  const Group& group = *x.group();
  const Character& phi = order.character();
  const Word* best = nullptr;
  AbelianVector best_image;
  for (const auto& [key, c] : x.terms()) {
    AbelianVector image = group.abelian_image(key);
    // Keys iterate in shortlex order, so the first of equal images wins.
    if (best == nullptr || order.compare_abelian(image, best_image) < 0) {
      best = &key;
      best_image = std::move(image);
    }
  }
  LeadingTerm lead;
  lead.key = *best;
  lead.coefficient = x.coefficient(*best);
  lead.value = phi.evaluate(best_image);
  lead.strict = true;
  for (const auto& [key, c] : x.terms()) {
    if (key == *best) continue;
    if (!(lead.value < evaluate(phi, group, key))) {
      lead.strict = false;
      break;
    }
  }
  return lead;
}

}  // namespace novikov
