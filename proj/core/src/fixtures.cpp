#include "novikov/fixtures.hpp"

#include <deque>
#include <map>

namespace novikov::fixtures {

FiniteGroup permutation_group(std::string name, const std::vector<Permutation>& generators) {
  const std::size_t degree = generators.empty() ? 0 : generators[0].size();
  Permutation identity(degree);
  for (std::size_t i = 0; i < degree; ++i) identity[i] = i;
  auto compose = [](const Permutation& a, const Permutation& b) {
    Permutation c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  std::vector<Permutation> elements{identity};
  std::map<Permutation, std::size_t> index{{identity, 0}};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : generators) {
      Permutation p = compose(elements[k], g);
      if (index.emplace(p, elements.size()).second) elements.push_back(p);
    }
  }
  FiniteGroup group{std::move(name), {}};
  group.table.assign(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      group.table[a][b] = index.at(compose(elements[a], elements[b]));
    }
  }
  return group;
}

FiniteGroup cyclic_group(std::size_t n) {
  FiniteGroup group{"Z/" + std::to_string(n), {}};
  group.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) group.table[a][b] = (a + b) % n;
  }
  return group;
}

namespace {

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t m = a.table.size();
  const std::size_t n = b.table.size();
  FiniteGroup group{a.name + "x" + b.name, {}};
  group.table.assign(m * n, std::vector<std::size_t>(m * n));
  for (std::size_t x = 0; x < m * n; ++x) {
    for (std::size_t y = 0; y < m * n; ++y) {
      group.table[x][y] = a.table[x / n][y / n] * n + b.table[x % n][y % n];
    }
  }
  return group;
}

FiniteGroup dihedral(std::size_t n) {
  Permutation r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return permutation_group("D" + std::to_string(n), {r, s});
}

}  // namespace

std::vector<FiniteGroup> small_groups(std::size_t max_order) {
  std::vector<FiniteGroup> all;
  all.push_back(cyclic_group(2));
  all.push_back(cyclic_group(3));
  all.push_back(cyclic_group(4));
  all.push_back(direct_product(cyclic_group(2), cyclic_group(2)));
  all.push_back(cyclic_group(5));
  all.push_back(cyclic_group(6));
  all.push_back(permutation_group("S3", {{1, 0, 2}, {1, 2, 0}}));
  all.push_back(cyclic_group(7));
  all.push_back(cyclic_group(8));
  all.push_back(dihedral(4));
  // Left multiplication on {1, -1, i, -i, j, -j, k, -k}.
  all.push_back(permutation_group("Q8", {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}));
  all.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
  all.push_back(cyclic_group(9));
  all.push_back(direct_product(cyclic_group(3), cyclic_group(3)));
  all.push_back(cyclic_group(10));
  all.push_back(dihedral(5));
  all.push_back(cyclic_group(12));
  all.push_back(permutation_group("A4", {{1, 2, 0, 3}, {1, 0, 3, 2}}));
  all.push_back(dihedral(6));
  std::vector<FiniteGroup> out;
  for (auto& g : all) {
    if (g.table.size() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::size_t evaluate_word(const Word& w, const FiniteGroup& target,
                          const std::vector<std::size_t>& images) {
  const auto& t = target.table;
  std::size_t q = 0;
  for (const Letter& x : w) {
    std::size_t g = images[x.generator];
    if (x.inverse) {
      for (std::size_t h = 0; h < t.size(); ++h) {
        if (t[g][h] == 0) {
          g = h;
          break;
        }
      }
    }
    q = t[q][g];
  }
  return q;
}

// Shortlex-minimal preimages by breadth-first search.
std::vector<Word> minimal_preimages(std::size_t generator_count, const FiniteGroup& target,
                                    const std::vector<std::size_t>& images) {
  const std::size_t n = target.table.size();
  std::vector<std::optional<Word>> reached(n);
  reached[0] = Word{};
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t q = frontier.front();
    frontier.pop_front();
    for (std::uint32_t g = 0; g < generator_count; ++g) {
      for (bool inv : {false, true}) {
        Word w = *reached[q];
        w.push_back(Letter{g, inv});
        std::size_t next = evaluate_word(w, target, images);
        if (reached[next]) continue;
        reached[next] = std::move(w);
        frontier.push_back(next);
      }
    }
  }
  std::vector<Word> out;
  for (auto& w : reached) out.push_back(w ? std::move(*w) : Word{});
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> random_epimorphism(const Group& group,
                                                           const FiniteGroup& target, Rng& rng,
                                                           std::size_t attempts) {
  const std::size_t n = target.table.size();
  const std::size_t gens = group.generator_count();
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::vector<std::size_t> images(gens);
    for (auto& image : images) image = rng() % n;
    bool ok = true;
    for (const Word& r : group.presentation().relators) {
      if (evaluate_word(r, target, images) != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<bool> hit(n, false);
    hit[0] = true;
    std::vector<std::size_t> stack{0};
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t q = stack.back();
      stack.pop_back();
      for (std::size_t g : images) {
        std::size_t next = target.table[q][g];
        if (!hit[next]) {
          hit[next] = true;
          ++count;
          stack.push_back(next);
        }
      }
    }
    if (count == n) return images;
  }
  return std::nullopt;
}

Word random_word(std::size_t generator_count, std::size_t max_length, Rng& rng) {
  std::size_t length = rng() % (max_length + 1);
  Word w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back(Letter{static_cast<std::uint32_t>(rng() % generator_count), rng() % 2 == 1});
  }
  return w;
}

std::vector<Word> random_section(const Group& group, const FiniteGroup& target,
                                 const std::vector<std::size_t>& images, Rng& rng,
                                 std::size_t padding) {
  std::vector<Word> minimal = minimal_preimages(group.generator_count(), target, images);
  std::vector<Word> section(minimal.size());
  for (std::size_t q = 1; q < minimal.size(); ++q) {
    // k = v m(beta(v))^-1 lies in the kernel, so k m(q) maps to q.
    Word v = random_word(group.generator_count(), padding, rng);
    Word k = concat(v, inverse(minimal[evaluate_word(v, target, images)]));
    section[q] = free_reduce(concat(k, minimal[q]));
  }
  return section;
}

namespace {

Rational fraction(long num, long den) {
  Rational c(num, den);
  c.canonicalize();
  return c;
}

Rational random_coefficient(Rng& rng, int range) {
  long num = 0;
  while (num == 0) num = static_cast<long>(rng() % (2 * range + 1)) - range;
  long den = rng() % 4 == 0 ? 2 : 1;
  return fraction(num, den);
}

}  // namespace

RingElement random_ring_element(const GroupPtr& group, std::size_t terms, std::size_t length,
                                Rng& rng, int coefficient_range) {
  RingElement x(group);
  std::size_t count = 1 + rng() % terms;
  for (std::size_t i = 0; i < count; ++i) {
    Word w = random_word(group->generator_count(), length, rng);
    x.add_term(group->embed(w), random_coefficient(rng, coefficient_range));
  }
  return x;
}

RingElement random_subgroup_element(const GroupPtr& subgroup, std::size_t terms,
                                    std::size_t length, Rng& rng, int coefficient_range) {
  return random_ring_element(subgroup, terms, length, rng, coefficient_range);
}

Character random_character(std::size_t rank, Rng& rng, bool irrational) {
  static constexpr std::uint32_t kPrimes[] = {2, 3, 5};
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<RealValue> columns;
    for (std::size_t i = 0; i < rank; ++i) {
      RealValue v(fraction(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 2)));
      if (irrational) {
        for (auto p : kPrimes) {
          long num = static_cast<long>(rng() % 7) - 3;
          v += RealValue::sqrt_term(p, fraction(num, 1 + static_cast<long>(rng() % 2)));
        }
      }
      columns.push_back(v);
    }
    Character c(std::move(columns));
    if (c.is_zero()) continue;
    if (irrational && !is_irrational(c, rank)) continue;
    return c;
  }
  std::vector<Rational> ones(rank, 1);
  return Character::rational(ones);
}

std::optional<QuotientFixture> random_quotient(const std::vector<GroupPtr>& groups,
                                               std::size_t max_order, Rng& rng) {
  std::vector<FiniteGroup> targets = small_groups(max_order);
  if (targets.empty() || groups.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 100; ++attempt) {
    const GroupPtr& group = groups[rng() % groups.size()];
    const FiniteGroup& target = targets[rng() % targets.size()];
    auto images = random_epimorphism(*group, target, rng, 20);
    if (!images) continue;
    auto section = random_section(*group, target, *images, rng);
    return QuotientFixture{group, target,
                           FiniteQuotient::create(*group, target.table, *images, section)};
  }
  return std::nullopt;
}

std::vector<GroupPtr> raag_catalog() {
  return {
      make_group(raag_presentation({"a", "b"}, {})),
      make_group(raag_presentation({"a", "b"}, {{0, 1}})),
      make_group(raag_presentation({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}})),
      make_group(raag_presentation({"a", "b", "z"}, {{0, 2}, {1, 2}})),
      make_group(raag_presentation({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}})),
  };
}

}  // namespace novikov::fixtures
