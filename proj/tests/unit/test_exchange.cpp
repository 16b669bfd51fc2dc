#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "wmi/exchange.hpp"
#include "wmi/ordered_pool.hpp"

using namespace wmi;
using namespace wmi::testing;

namespace {

OrderedPool pool_of(std::size_t n, std::vector<std::pair<Element, Integer>> entries,
                    Objective objective = Objective::kMin) {
  OrderedPool pool(n);
  for (const auto& [e, f] : entries) pool.insert(e, priority_key(f, objective));
  return pool;
}

}  // namespace

TEST_CASE("ordered pool keeps (key, id) order") {
  OrderedPool pool(5);
  pool.insert(3, 2);
  pool.insert(1, 2);
  pool.insert(4, -1);
  CHECK(pool.elements() == std::vector<Element>{4, 1, 3});
  pool.rekey(4, 7);
  CHECK(pool.elements() == std::vector<Element>{1, 3, 4});
  CHECK(pool.nth(1) == 3);
  pool.erase(1);
  CHECK(pool.size() == 2);
  CHECK_FALSE(pool.contains(1));
}

TEST_CASE("removal exchange examples") {
  const std::vector<Element> s{a, c};
  const auto part = partition({{a, b}, {c, d}}, {1, 1});
  CHECK(find_removal_exchange(*part, s, b, pool_of(4, {{a, 1}, {c, 0}})) == a);

  const std::vector<Element> ab{a, b};
  CHECK(find_removal_exchange(*uniform(4, 2), ab, c, pool_of(4, {{a, 1}, {b, 5}})) == a);

  const std::vector<Element> e12{0, 1};
  CHECK(find_removal_exchange(*triangle(), e12, 2, pool_of(3, {{0, 9}, {1, 4}})) == 1);

  // A pool missing the circuit yields nothing.
  CHECK_FALSE(find_removal_exchange(*part, s, b, pool_of(4, {{c, 0}})).has_value());
  CHECK_FALSE(find_removal_exchange(*part, s, b, OrderedPool(4)).has_value());
}

TEST_CASE("removal exchange when S + x stays independent returns the first pool element") {
  const std::vector<Element> s{a};
  CHECK(find_removal_exchange(*uniform(3, 2), s, b, pool_of(3, {{a, 0}})) == a);
}

TEST_CASE("insertion exchange examples") {
  const std::vector<Element> ab{a, b};
  CHECK(find_insertion_exchange(*uniform(4, 2), ab, a, pool_of(4, {{c, 2}, {d, 7}}, Objective::kMax)) == d);

  const std::vector<Element> ac{a, c};
  const auto part = partition({{a, b}, {c, d}}, {1, 1});
  CHECK_FALSE(find_insertion_exchange(*part, ac, a, pool_of(4, {{d, 0}})).has_value());

  // Path a-b-c: edges ab = 0, bc = 1; the closing edge ac = 2.
  const auto path = graphic(3, {{0, 1}, {1, 2}, {0, 2}});
  const std::vector<Element> tree{0, 1};
  CHECK(find_insertion_exchange(*path, tree, 0, pool_of(3, {{2, 0}})) == 2);
}

TEST_CASE("greedy maximum basis") {
  const auto top = greedy_max_basis(*uniform(4, 2), wide({5, 3, 9, 1}));
  CHECK(top == std::vector<Element>{c, a});
  CHECK(total_weight(wide({5, 3, 9, 1}), top) == 14);
  CHECK(greedy_max_basis(*triangle(), wide({2, 2, 2})) == std::vector<Element>{0, 1});
  auto part = greedy_max_basis(*partition({{a, b}, {c, d}}, {1, 1}), wide({1, 9, 4, 4}));
  std::sort(part.begin(), part.end());
  CHECK(part == std::vector<Element>{b, c});
}

TEST_CASE("finders agree with a linear scan and respect the query bound") {
  std::mt19937_64 rng(5);
  const auto m = graphic(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 2}, {1, 3}, {2, 4},
                             {3, 5}, {0, 5}, {1, 4}, {0, 3}});
  const std::size_t n = m->ground_size();
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Element> s;
    for (Element e : order) {
      s.push_back(e);
      if (!m->is_independent(s)) s.pop_back();
    }
    std::vector<char> in_s(n, 0);
    for (Element e : s) in_s[e] = 1;
    std::vector<Element> outside;
    for (std::size_t i = 0; i < n; ++i)
      if (!in_s[i]) outside.push_back(static_cast<Element>(i));

    const Element x = outside[rng() % outside.size()];
    OrderedPool removal(n);
    for (Element e : s)
      if (rng() % 3 != 0) removal.insert(e, static_cast<Integer>(rng() % 5));
    std::optional<Element> expected;
    for (Element e : removal.elements()) {
      std::vector<Element> swapped;
      for (Element f : s)
        if (f != e) swapped.push_back(f);
      swapped.push_back(x);
      if (m->is_independent(swapped)) {
        expected = e;
        break;
      }
    }
    const auto before = m->queries();
    const auto got = find_removal_exchange(*m, s, x, removal);
    const auto used = m->queries() - before;
    CHECK(got == expected);
    const auto bound = removal.empty() ? 0u : static_cast<unsigned>(std::ceil(std::log2(removal.size()))) + 2u;
    CHECK(used <= bound);

    const Element y = s[rng() % s.size()];
    OrderedPool insertion(n);
    for (Element e : outside)
      if (rng() % 3 != 0) insertion.insert(e, static_cast<Integer>(rng() % 5));
    expected.reset();
    for (Element e : insertion.elements()) {
      std::vector<Element> swapped;
      for (Element f : s)
        if (f != y) swapped.push_back(f);
      swapped.push_back(e);
      if (m->is_independent(swapped)) {
        expected = e;
        break;
      }
    }
    CHECK(find_insertion_exchange(*m, s, y, insertion) == expected);
  }
}
