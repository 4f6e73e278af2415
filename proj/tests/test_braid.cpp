#include <doctest.h>

#include "braidinv/braid.hpp"
#include "braidinv/errors.hpp"

using namespace braidinv;

TEST_CASE("parse accepts signed indices with mixed separators") {
  const BraidWord w = parse_word(" 1, -2\t1 \n");
  CHECK(w.strands() == 3);
  REQUIRE(w.letters().size() == 3);
  CHECK(w.letters()[0] == Letter{1, +1});
  CHECK(w.letters()[1] == Letter{2, -1});
  CHECK(w.letters()[2] == Letter{1, +1});
}

TEST_CASE("parse infers the strand count from the largest index") {
  CHECK(parse_word("1").strands() == 2);
  CHECK(parse_word("3 -1").strands() == 4);
  CHECK(parse_word("").strands() == 2);
  CHECK(parse_word("").letters().empty());
}

TEST_CASE("parse respects an explicit strand count") {
  CHECK(parse_word("1", 5).strands() == 5);
  CHECK(parse_word("", 1).strands() == 1);
  CHECK_THROWS_AS(parse_word("3", 3), ParseError);
}

TEST_CASE("parse rejects malformed tokens") {
  CHECK_THROWS_AS(parse_word("0"), ParseError);
  CHECK_THROWS_AS(parse_word("1 x"), ParseError);
  CHECK_THROWS_AS(parse_word("1.5"), ParseError);
  CHECK_THROWS_AS(parse_word("- 1"), ParseError);
  CHECK_THROWS_AS(parse_word("2", 2), ParseError);
}

TEST_CASE("render is the inverse of parse") {
  const std::string text = "1 -2 1 -2";
  CHECK(render_word(parse_word(text)) == text);
  CHECK(render_word(BraidWord(4)) == "");
}

TEST_CASE("word constructor validates letters") {
  CHECK_THROWS_AS(BraidWord(0), InvalidArgument);
  CHECK_THROWS_AS(BraidWord(2, {Letter{2, +1}}), InvalidArgument);
  CHECK_THROWS_AS(BraidWord(3, {Letter{1, 0}}), InvalidArgument);
  CHECK_NOTHROW(BraidWord(1));
}

TEST_CASE("group operations on words") {
  const BraidWord w = parse_word("1 -2", 3);
  CHECK(render_word(inverse(w)) == "2 -1");
  CHECK(render_word(concat(w, inverse(w))) == "1 -2 2 -1");
  CHECK(render_word(power(w, 0)) == "");
  CHECK(render_word(power(w, 3)) == "1 -2 1 -2 1 -2");
  CHECK_THROWS_AS(power(w, -1), InvalidArgument);

  const BraidWord a = parse_word("2", 3);
  CHECK(render_word(conjugate(w, a)) == "-2 1 -2 2");
  CHECK_THROWS_AS(concat(w, parse_word("1", 2)), InvalidArgument);
}

TEST_CASE("stabilization appends the new top generator") {
  const BraidWord w = parse_word("1 -2", 3);
  const BraidWord up = stabilize(w, +1);
  CHECK(up.strands() == 4);
  CHECK(render_word(up) == "1 -2 3");
  CHECK(render_word(stabilize(w, -1)) == "1 -2 -3");
  CHECK_THROWS_AS(stabilize(w, 0), InvalidArgument);
}

TEST_CASE("direct sum shifts the second layer above the first") {
  const BraidWord sum = direct_sum(parse_word("1", 2), parse_word("1 -1", 2));
  CHECK(sum.strands() == 4);
  CHECK(render_word(sum) == "1 3 -3");
  for (const Letter& l : sum.letters()) CHECK(l.index != 2);
}

TEST_CASE("braid permutation golden values") {
  CHECK(permutation_of(parse_word("1", 3)).one_based() ==
        std::vector<int>{2, 1, 3});
  CHECK(permutation_of(parse_word("-2 1 2", 3)).one_based() ==
        std::vector<int>{3, 2, 1});
  CHECK(permutation_of(parse_word("-1 4 3", 5)).one_based() ==
        std::vector<int>{2, 1, 4, 5, 3});
}

TEST_CASE("permutation order golden values") {
  CHECK(perm_order(permutation_of(parse_word("", 4))) == 1);
  CHECK(perm_order(permutation_of(parse_word("1", 3))) == 2);
  CHECK(perm_order(permutation_of(parse_word("-1 4 3", 5))) == 6);
  CHECK_THROWS_AS(perm_order(permutation_of(parse_word("-1 4 3", 5)), 5),
                  OrderGuardError);
}

TEST_CASE("permutation algebra") {
  const Permutation p = permutation_of(parse_word("1 2", 3));
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(p.power(0).is_identity());
  CHECK(p.power(3).is_identity());
  CHECK(p.power(2) == p.inverse());
  CHECK(transposition(4, 2).one_based() == std::vector<int>{1, 3, 2, 4});
  CHECK_THROWS_AS(transposition(3, 3), InvalidArgument);
}

TEST_CASE("fundamental braid words") {
  CHECK(render_word(fundamental_braid(2)) == "1");
  CHECK(render_word(fundamental_braid(3)) == "1 2 1");
  CHECK(render_word(fundamental_braid(4)) == "1 2 1 3 2 1");
  CHECK(render_word(fundamental_braid(1)) == "");
  // the half twist reverses all strands
  CHECK(permutation_of(fundamental_braid(5)).one_based() ==
        std::vector<int>{5, 4, 3, 2, 1});
}

TEST_CASE("free cancellation move") {
  const BraidWord w = parse_word("1 -1 2", 3);
  const BraidWord reduced = apply_move(w, MoveSpec::free_cancel(1));
  CHECK(render_word(reduced) == "2");
  CHECK_THROWS_AS(apply_move(w, MoveSpec::free_cancel(2)), InvalidArgument);
}

TEST_CASE("free insertion move") {
  const BraidWord w = parse_word("2", 3);
  CHECK(render_word(apply_move(w, MoveSpec::free_insert(1, 1, -1))) ==
        "-1 1 2");
  CHECK(render_word(apply_move(w, MoveSpec::free_insert(2, 2, +1))) ==
        "2 2 -2");
  CHECK_THROWS_AS(apply_move(w, MoveSpec::free_insert(3, 1, +1)),
                  InvalidArgument);
}

TEST_CASE("far commutation move") {
  const BraidWord w = parse_word("1 3 2", 4);
  CHECK(render_word(apply_move(w, MoveSpec::far_commute(1))) == "3 1 2");
  // adjacent indices do not commute
  CHECK_THROWS_AS(apply_move(w, MoveSpec::far_commute(2)), InvalidArgument);
}

TEST_CASE("braid move rewrites a uniform triple") {
  const BraidWord w = parse_word("1 2 1", 3);
  CHECK(render_word(apply_move(w, MoveSpec::braid_move(1))) == "2 1 2");
  const BraidWord neg = parse_word("-2 -1 -2", 3);
  CHECK(render_word(apply_move(neg, MoveSpec::braid_move(1))) == "-1 -2 -1");
  CHECK_THROWS_AS(apply_move(parse_word("1 2 2", 3), MoveSpec::braid_move(1)),
                  InvalidArgument);
  CHECK_THROWS_AS(apply_move(parse_word("1 -2 1", 3), MoveSpec::braid_move(1)),
                  InvalidArgument);
}

TEST_CASE("random equivalent words are reproducible") {
  const BraidWord w = parse_word("1 -2 1", 3);
  const BraidWord a = random_equivalent(w, 25, 7);
  const BraidWord b = random_equivalent(w, 25, 7);
  CHECK(a == b);
  CHECK(a.strands() == 3);
  CHECK(random_equivalent(w, 0, 1) == w);
}
