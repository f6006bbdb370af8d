#include <algorithm>

#include "doctest.h"
#include "test_support.hpp"

using namespace ratkey;
using testsupport::P;
using testsupport::figure_tree;
using testsupport::random_tree;
using testsupport::throws_errc;

namespace {

Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("constrained continued fractions") {
  CHECK(eval_cf(P({2, 4, 3})) == rat(65, 23));
  CHECK(eval_cf(P({1})) == rat(1));
  CHECK(eval_cf(P({2, 4, 4})) == rat(82, 29));
  CHECK(eval_cf(P({2, 4, 1})) == rat(31, 11));
  CHECK(eval_cf(P({3, 1, 1})) == rat(18, 5));
  CHECK(eval_cf(P({3, 1, 3})) == rat(40, 11));
  CHECK(eval_cf(P({2, 5, 3})) == rat(77, 27));
  CHECK(throws_errc(errc::no_value, [] { eval_cf(P({})); }));
  CHECK(throws_errc(errc::invalid_ordinal, [] { eval_cf(P({2, 0, 3})); }));
}

TEST_CASE("rational-term evaluation matches the recursion identity") {
  // folding the tail [4, 3] into the single term 4 + 1/(1 + 1/3)
  Rational folded = rat(4) + (rat(1) + rat(3).reciprocal()).reciprocal();
  CHECK(folded == rat(19, 4));
  CHECK(eval_cf_terms({rat(2), folded}) == rat(65, 23));
  CHECK(eval_cf_terms({rat(65, 23)}) == rat(65, 23));
  CHECK(throws_errc(errc::no_value, [] { eval_cf_terms({}); }));
  CHECK(throws_errc(errc::invalid_ordinal,
                    [] { eval_cf_terms({rat(2), rat(0)}); }));

  std::mt19937_64 rng(20260816);
  for (int i = 0; i < 200; ++i) {
    TreePath prefix = testsupport::random_path(rng, 6);
    std::vector<Rational> head;
    for (const BigInt& term : prefix) head.emplace_back(term);

    // integer d, e first; then rational d, e on the same identity
    Rational d = rat(1 + static_cast<long long>(rng() % 9));
    Rational e = rat(1 + static_cast<long long>(rng() % 9));
    TreePath two = prefix;
    two.push_back(d.num());
    two.push_back(e.num());
    std::vector<Rational> one = head;
    one.push_back(d + (rat(1) + e.reciprocal()).reciprocal());
    CHECK(eval_cf(two) == eval_cf_terms(one));

    d = Rational(BigInt(1 + rng() % 50), BigInt(1 + rng() % 7));
    e = Rational(BigInt(1 + rng() % 50), BigInt(1 + rng() % 7));
    std::vector<Rational> longer = head;
    longer.push_back(d);
    longer.push_back(e);
    std::vector<Rational> shorter = head;
    shorter.push_back(d + (rat(1) + e.reciprocal()).reciprocal());
    CHECK(eval_cf_terms(longer) == eval_cf_terms(shorter));
  }
}

TEST_CASE("simple continued fractions collide and flip order") {
  CHECK(trop_eval(P({2, 4, 3})) == rat(29, 13));
  CHECK(trop_eval(P({2, 4, 3, 1})) == rat(38, 17));
  CHECK(trop_eval(P({2, 4, 3, 3})) == rat(96, 43));
  CHECK(trop_eval(P({1})) == rat(1));
  CHECK(throws_errc(errc::no_value, [] { trop_eval(P({})); }));
  CHECK(throws_errc(errc::invalid_ordinal, [] { trop_eval(P({1, 0})); }));

  // appending a first child is indistinguishable from bumping the
  // last ordinal
  CHECK(trop_eval(P({2, 4, 3, 1})) == trop_eval(P({2, 4, 4})));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    TreePath path = testsupport::random_path(rng, 8);
    TreePath child = path;
    child.push_back(1);
    TreePath bumped = path;
    bumped.back() += 1;
    CHECK(trop_eval(child) == trop_eval(bumped));
  }

  // value order ascends on one level and descends on the next
  CHECK(trop_eval(P({2, 4, 3})) < trop_eval(P({2, 4, 4})));
  CHECK(trop_eval(P({2, 4, 4})) < trop_eval(P({2, 4, 5})));
  CHECK(trop_eval(P({2, 4, 3, 3})) > trop_eval(P({2, 4, 3, 4})));
  CHECK(trop_eval(P({2, 4, 3, 4})) > trop_eval(P({2, 4, 3, 5})));
  CHECK(trop_eval(P({2, 4, 5})) == rat(47, 21));
  CHECK(trop_eval(P({2, 4, 3, 4})) == rat(125, 56));
  CHECK(trop_eval(P({2, 4, 3, 5})) == rat(154, 69));
}

TEST_CASE("naive tree construction validates the table") {
  NaiveTree empty;
  CHECK(empty.size() == 0);
  CHECK(empty.child_count(P({})) == 0);

  NaiveTree figure = figure_tree();
  CHECK(figure.size() == 11);
  CHECK(figure.child_count(P({2})) == 5);
  CHECK(figure.contains(P({2, 4, 3})));
  CHECK_FALSE(figure.contains(P({2, 6})));
  CHECK(throws_errc(errc::missing_parent,
                    [&] { figure.child_count(P({2, 6})); }));

  std::map<TreePath, BigInt> bad;
  bad[P({1})] = 0;
  CHECK(throws_errc(errc::parse, [&] { NaiveTree{bad}; }));  // no root

  bad.clear();
  bad[P({})] = 2;
  bad[P({1})] = 0;
  CHECK(throws_errc(errc::parse, [&] { NaiveTree{bad}; }));  // missing [2]

  bad[P({2})] = 0;
  bad[P({4})] = 0;
  CHECK(throws_errc(errc::parse, [&] { NaiveTree{bad}; }));  // stray [4]
}

TEST_CASE("naive tree insertion shifts later siblings") {
  std::map<TreePath, BigInt> nodes;
  nodes[P({})] = 2;
  nodes[P({1})] = 0;
  nodes[P({2})] = 1;
  nodes[P({2, 1})] = 0;
  NaiveTree tree(nodes);

  CHECK(tree.append_child(P({2})) == P({2, 2}));
  CHECK(tree.child_count(P({2})) == 2);

  CHECK(tree.insert_child_at(P({}), 1) == P({1}));
  CHECK(tree.size() == 5);
  CHECK(tree.contains(P({3, 2})));       // old [2,2]
  CHECK(tree.child_count(P({2})) == 0);  // old [1]
  CHECK(tree.child_count(P({3})) == 2);  // old [2]

  CHECK(throws_errc(errc::invalid_ordinal,
                    [&] { tree.insert_child_at(P({}), 5); }));
  CHECK(throws_errc(errc::missing_parent,
                    [&] { tree.insert_child_at(P({9}), 1); }));
}

TEST_CASE("preorder enumeration") {
  std::map<TreePath, BigInt> nodes;
  nodes[P({})] = 2;
  nodes[P({1})] = 0;
  nodes[P({2})] = 1;
  nodes[P({2, 1})] = 0;
  CHECK(naive_preorder(NaiveTree(nodes)) ==
        std::vector<TreePath>{P({1}), P({2}), P({2, 1})});

  nodes.clear();
  nodes[P({})] = 1;
  nodes[P({1})] = 0;
  CHECK(naive_preorder(NaiveTree(nodes)) == std::vector<TreePath>{P({1})});

  std::vector<TreePath> figure = naive_preorder(figure_tree());
  REQUIRE(figure.size() == 11);
  CHECK(figure.front() == P({1}));
  CHECK(figure[1] == P({2}));
  CHECK(figure[2] == P({2, 1}));
  CHECK(figure[6] == P({2, 4, 1}));
  CHECK(figure[9] == P({2, 5}));
  CHECK(figure.back() == P({3}));
}

TEST_CASE("key values ascend exactly in preorder") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 5; ++t) {
    NaiveTree tree = random_tree(rng, 200);
    std::vector<TreePath> order = naive_preorder(tree);
    for (std::size_t i = 1; i < order.size(); ++i) {
      CHECK(eval_cf(order[i - 1]) < eval_cf(order[i]));
    }
  }
}

}  // TEST_SUITE("oracle")
