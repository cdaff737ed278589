#include "novikov/group.hpp"

namespace novikov {

AbelianVector Group::abelian_image(const Word& key) const {
  return abelianization().project(exponent_sums(generator_word(key), generator_count()));
}

namespace {

class PresentedGroup final : public Group {
 public:
  PresentedGroup(GroupPresentation presentation, std::unique_ptr<NormalFormEngine> engine)
      : Group(presentation, free_abelianization(presentation)), engine_(std::move(engine)) {}

  const std::vector<std::string>& element_alphabet() const override {
    return presentation().generators;
  }
  Word normal_form(const Word& element_word) const override {
    return engine_->normal_form(element_word);
  }
  Word embed(const Word& generator_word) const override {
    return engine_->normal_form(generator_word);
  }
  Word generator_word(const Word& key) const override { return key; }

 private:
  std::unique_ptr<NormalFormEngine> engine_;
};

}  // namespace

GroupPtr make_group(GroupPresentation presentation) {
  auto engine = make_engine(presentation);
  return std::make_shared<PresentedGroup>(std::move(presentation), std::move(engine));
}

GroupElement normal_form(const Word& word, const GroupPtr& group) {
  return GroupElement(group, group->normal_form(word));
}

}  // namespace novikov
