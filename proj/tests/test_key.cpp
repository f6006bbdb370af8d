#include "doctest.h"
#include "test_support.hpp"

using namespace ratkey;
using testsupport::K;
using testsupport::P;
using testsupport::throws_errc;

TEST_SUITE("key") {

TEST_CASE("root key and recognition") {
  CHECK(root_key() == K(0, 1, 1, 0));
  CHECK(is_root(root_key()));
  CHECK_FALSE(is_root(K(1, 1, 2, 1)));
  CHECK(key_determinant(root_key()) == -1);
}

TEST_CASE("child keys by mediant steps") {
  CHECK(child_key(root_key(), 1) == K(1, 1, 2, 1));
  CHECK(child_key(root_key(), 2) == K(2, 1, 3, 1));
  CHECK(child_key(K(2, 1, 3, 1), 4) == K(14, 5, 17, 6));
  CHECK(child_key(K(14, 5, 17, 6), 3) == K(65, 23, 82, 29));
  CHECK(child_key(K(2, 1, 3, 1), 1) == K(5, 2, 8, 3));
  CHECK(throws_errc(errc::invalid_ordinal, [] { child_key(root_key(), 0); }));
  CHECK(throws_errc(errc::invalid_ordinal, [] { child_key(root_key(), -3); }));
}

TEST_CASE("next sibling") {
  CHECK(next_sibling_key(K(2, 1, 3, 1)) == K(3, 1, 4, 1));
  CHECK(next_sibling_key(K(65, 23, 82, 29)) == K(82, 29, 99, 35));
  CHECK(next_sibling_key(child_key(K(2, 1, 3, 1), 4)) ==
        child_key(K(2, 1, 3, 1), 5));
  CHECK(throws_errc(errc::no_sibling, [] { next_sibling_key(root_key()); }));
}

TEST_CASE("path encoding") {
  CHECK(encode_path(P({})) == root_key());
  CHECK(encode_path(P({1})) == K(1, 1, 2, 1));
  CHECK(encode_path(P({2, 4, 3})) == K(65, 23, 82, 29));
  CHECK(encode_path(P({2, 4, 1})) == K(31, 11, 48, 17));
  CHECK(encode_path(P({3, 1, 1})) == K(18, 5, 29, 8));
  CHECK(encode_path(P({3, 1, 3})) == K(40, 11, 51, 14));
  CHECK(encode_path(P({2, 5, 3})) == K(77, 27, 97, 34));
}

TEST_CASE("decoding recovers the path and the ancestor chain") {
  DecodedKey decoded = decode_key(65, 23);
  CHECK(decoded.path == P({2, 4, 3}));
  REQUIRE(decoded.chain.size() == 3);
  CHECK(decoded.chain[0] == K(2, 1, 3, 1));
  CHECK(decoded.chain[1] == K(14, 5, 17, 6));
  CHECK(decoded.chain[2] == K(65, 23, 82, 29));

  decoded = decode_key(40, 11);
  CHECK(decoded.path == P({3, 1, 3}));
  CHECK(decoded.chain.back() == K(40, 11, 51, 14));

  decoded = decode_key(1, 1);
  CHECK(decoded.path == P({1}));
  REQUIRE(decoded.chain.size() == 1);
  CHECK(decoded.chain[0] == K(1, 1, 2, 1));
}

TEST_CASE("decoding rejects values outside the encoding's image") {
  CHECK(throws_errc(errc::not_canonical, [] { decode_key(4, 2); }));
  CHECK(throws_errc(errc::not_canonical, [] { decode_key(130, 46); }));
  CHECK(throws_errc(errc::not_a_node, [] { decode_key(7, 5); }));
  CHECK(throws_errc(errc::not_a_node, [] { decode_key(29, 18); }));
  CHECK(throws_errc(errc::not_a_node, [] { decode_key(1, 2); }));
  CHECK(throws_errc(errc::not_a_node, [] { decode_key(0, 1); }));
  CHECK(throws_errc(errc::not_a_node, [] { decode_key(3, 0); }));
}

TEST_CASE("value comparison is preorder") {
  CHECK(compare_keys(K(2, 1, 3, 1), K(3, 1, 4, 1)) ==
        std::strong_ordering::less);
  CHECK(compare_keys(K(2, 1, 3, 1), K(5, 2, 8, 3)) ==
        std::strong_ordering::less);  // parent before first child
  CHECK(compare_keys(K(65, 23, 82, 29), K(17, 6, 20, 7)) ==
        std::strong_ordering::less);  // whole subtree before next sibling
  CHECK(compare_keys(K(2, 1, 3, 1), K(2, 1, 3, 1)) ==
        std::strong_ordering::equal);
  CHECK(throws_errc(errc::not_a_node,
                    [] { compare_keys(root_key(), K(1, 1, 2, 1)); }));
}

TEST_CASE("interval predicates are strict") {
  CHECK(is_descendant(K(2, 1, 3, 1), K(65, 23, 82, 29)));
  CHECK_FALSE(is_descendant(K(2, 1, 3, 1), K(2, 1, 3, 1)));
  CHECK_FALSE(is_descendant(K(3, 1, 4, 1), K(65, 23, 82, 29)));
  CHECK(is_ancestor(K(65, 23, 82, 29), K(14, 5, 17, 6)));
  CHECK(is_ancestor(K(31, 11, 48, 17), K(2, 1, 3, 1)));
  CHECK_FALSE(is_ancestor(K(31, 11, 48, 17), K(31, 11, 48, 17)));
  CHECK(throws_errc(errc::not_a_node,
                    [] { is_descendant(root_key(), K(1, 1, 2, 1)); }));
  CHECK(throws_errc(errc::not_a_node,
                    [] { is_ancestor(K(1, 1, 2, 1), root_key()); }));
}

TEST_CASE("matrix form and exact inverse") {
  CHECK(as_matrix(K(2, 1, 3, 1)) == RelocationMap{2, 3, 1, 1});
  CHECK(invert_key(K(2, 1, 3, 1)) == RelocationMap{-1, 3, 1, -2});
  CHECK(invert_key(root_key()) == RelocationMap{0, 1, 1, 0});
  CHECK(invert_key(K(14, 5, 17, 6)) == RelocationMap{-6, 17, 5, -14});
  CHECK(multiply(as_matrix(K(14, 5, 17, 6)), invert_key(K(14, 5, 17, 6))) ==
        identity_map());
  CHECK(map_determinant(identity_map()) == 1);
  CHECK(throws_errc(errc::corrupt_key, [] { invert_key(K(2, 1, 3, 2)); }));
}

TEST_CASE("relocation maps") {
  RelocationMap map = relocation_map(K(2, 1, 3, 1), 4, K(3, 1, 4, 1), 1);
  CHECK(map == RelocationMap{13, -35, 3, -8});
  CHECK(map_determinant(map) == 1);
  CHECK(relocation_map(K(2, 1, 3, 1), 4, K(2, 1, 3, 1), 4) == identity_map());

  RelocationMap shift = relocation_map(K(2, 1, 3, 1), 4, K(2, 1, 3, 1), 5);
  CHECK(shift == multiply(multiply(as_matrix(K(2, 1, 3, 1)),
                                   RelocationMap{1, 0, 1, 1}),
                          invert_key(K(2, 1, 3, 1))));
  CHECK(map_determinant(shift) == 1);

  CHECK(throws_errc(errc::invalid_ordinal, [] {
    relocation_map(K(2, 1, 3, 1), 0, K(3, 1, 4, 1), 1);
  }));
  CHECK(throws_errc(errc::corrupt_key, [] {
    relocation_map(K(2, 1, 3, 2), 1, K(3, 1, 4, 1), 1);
  }));
}

TEST_CASE("applying a relocation rewrites subtree keys") {
  RelocationMap map = relocation_map(K(2, 1, 3, 1), 4, K(3, 1, 4, 1), 1);
  CHECK(apply_relocation(map, K(65, 23, 82, 29)) == K(40, 11, 51, 14));
  CHECK(apply_relocation(map, K(31, 11, 48, 17)) == encode_path(P({3, 1, 1})));
  CHECK(apply_relocation(map, K(14, 5, 17, 6)) == K(7, 2, 11, 3));
  CHECK(apply_relocation(identity_map(), K(65, 23, 82, 29)) ==
        K(65, 23, 82, 29));

  RelocationMap shift = relocation_map(K(2, 1, 3, 1), 4, K(2, 1, 3, 1), 5);
  CHECK(apply_relocation(shift, K(65, 23, 82, 29)) == K(77, 27, 97, 34));

  // keys outside the moved subtree land outside the encoding's image
  CHECK(throws_errc(errc::relocation_domain,
                    [&] { apply_relocation(map, K(2, 1, 3, 1)); }));
  CHECK(throws_errc(errc::relocation_domain,
                    [&] { apply_relocation(map, K(3, 1, 4, 1)); }));
}

TEST_CASE("parent and ordinal recovery without decoding") {
  CHECK(parent_key(K(65, 23, 82, 29)) == K(14, 5, 17, 6));
  CHECK(parent_key(K(2, 1, 3, 1)) == root_key());
  CHECK(parent_key(K(1, 1, 2, 1)) == root_key());
  CHECK(child_ordinal(K(65, 23, 82, 29)) == 3);
  CHECK(child_ordinal(K(2, 1, 3, 1)) == 2);
  CHECK(throws_errc(errc::not_a_node, [] { parent_key(root_key()); }));
  CHECK(throws_errc(errc::not_a_node, [] { child_ordinal(root_key()); }));
  CHECK(throws_errc(errc::not_canonical, [] { parent_key(K(2, 1, 5, 2)); }));
  CHECK(throws_errc(errc::not_canonical, [] { parent_key(K(7, 5, 3, 2)); }));
}

TEST_CASE("structural validation versus canonical form") {
  CHECK_NOTHROW(validate_key(root_key()));
  CHECK_NOTHROW(validate_key(K(65, 23, 82, 29)));
  CHECK(throws_errc(errc::corrupt_key, [] { validate_key(K(2, 1, 3, 2)); }));
  CHECK(throws_errc(errc::corrupt_key, [] { validate_key(K(-2, -1, 3, 1)); }));
  CHECK(throws_errc(errc::corrupt_key, [] { validate_key(K(1, 2, 1, 1)); }));

  CHECK(is_canonical(root_key()));
  CHECK(is_canonical(K(65, 23, 82, 29)));
  // passes every structural check, yet no path encodes to it
  CHECK_NOTHROW(validate_key(K(7, 5, 3, 2)));
  CHECK_FALSE(is_canonical(K(7, 5, 3, 2)));
  CHECK_FALSE(is_canonical(K(2, 1, 5, 2)));
  CHECK_FALSE(is_canonical(K(2, 1, 3, 2)));
}

TEST_CASE("rational views of a key") {
  CHECK(key_value(K(65, 23, 82, 29)) == Rational(65, 23));
  CHECK(sibling_value(K(65, 23, 82, 29)) == Rational(82, 29));
  CHECK(key_value(K(1, 1, 2, 1)) == Rational(BigInt(1)));
  CHECK(throws_errc(errc::not_a_node, [] { key_value(root_key()); }));
  CHECK(throws_errc(errc::not_a_node, [] { sibling_value(root_key()); }));
}

TEST_CASE("checked narrowing to 64 bits") {
  NodeKey64 narrow = narrow_key(K(65, 23, 82, 29));
  CHECK(narrow == NodeKey64{65, 23, 82, 29});

  TreePath chain(100, BigInt(1));
  NodeKey deep = encode_path(chain);
  CHECK(bit_length(deep.nv) > 64);
  CHECK(throws_errc(errc::overflow, [&] { narrow_key(deep); }));
}

}  // TEST_SUITE("key")
