#include <gtest/gtest.h>

#include "gran/element_set.hpp"
#include "gran/errors.hpp"
#include "gran/granule.hpp"
#include "gran/rational.hpp"
#include "gran/relation.hpp"
#include "gran/universe.hpp"
#include "helpers.hpp"

using namespace gran;
using testing_util::gr;
using testing_util::set;

TEST(ElementSet, BasicSetAlgebra) {
  auto a = ElementSet::of({0, 1});
  auto b = ElementSet::of({1, 2});
  EXPECT_EQ((a | b), ElementSet::of({0, 1, 2}));
  EXPECT_EQ((a & b), ElementSet::of({1}));
  EXPECT_EQ((a - b), ElementSet::of({0}));
  EXPECT_EQ(a.complement(4), ElementSet::of({2, 3}));
  EXPECT_TRUE(ElementSet::of({1}).subset_of(a));
  EXPECT_FALSE(a.subset_of(b));
  EXPECT_EQ(b.min(), 1u);
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ((std::vector<std::size_t>{1, 2}), b.indices());
}

TEST(ElementSet, CanonicalOrderUsesSmallestMember) {
  EXPECT_TRUE(ElementSet::of({0, 3}).canonical_less(ElementSet::of({1})));
  EXPECT_TRUE(ElementSet().canonical_less(ElementSet::of({0})));
  EXPECT_FALSE(ElementSet::of({2}).canonical_less(ElementSet::of({1, 2})));
}

TEST(Universe, RejectsDuplicatesAndEmpty) {
  EXPECT_THROW(Universe({"a", "a"}), Error);
  EXPECT_THROW(Universe(std::vector<std::string>{}), Error);
  std::vector<std::string> many(65);
  for (std::size_t i = 0; i < many.size(); ++i)
    many[i] = "x" + std::to_string(i);
  EXPECT_THROW(Universe{many}, Error);
}

TEST(Universe, NamesAndSets) {
  auto u = Universe::make({"a", "b", "c"});
  EXPECT_EQ(u->index_of("c"), 2u);
  EXPECT_THROW(u->index_of("z"), UnknownElementError);
  EXPECT_EQ(format_set(set("{c, a}", u), *u), "{a,c}");
  EXPECT_EQ(format_set(ElementSet(), *u), "{}");
  EXPECT_THROW(set("{a,a}", u), ParseError);
  EXPECT_THROW(set("{a,", u), ParseError);
}

TEST(Granule, ConstructionAndCarrier) {
  auto u = Universe::numbered(4);
  auto g = make_granule({{0, 1}, {2}}, u);
  EXPECT_EQ(g.carrier(), ElementSet::of({0, 1, 2}));
  EXPECT_FALSE(g.is_quotient());
  EXPECT_TRUE(make_granule({}, u).is_empty());
  EXPECT_THROW(make_granule({{0, 1}, {1, 2}}, u), OverlapError);
  EXPECT_THROW(Granule(u, {ElementSet()}), EmptyBlockError);
  EXPECT_THROW(make_granule({{7}}, u), IndexError);
}

TEST(Granule, CanonicalOrderMakesEqualityStructural) {
  auto u = Universe::numbered(4);
  EXPECT_EQ(gr("{{3,4},{1,2}}", u), gr("{{1,2},{3,4}}", u));
  EXPECT_EQ(to_string(gr("{{4},{2,1}}", u)), "{{1,2},{4}}");
  EXPECT_EQ(to_string(Granule::empty(u)), "{}");
  EXPECT_EQ(to_string(Granule::whole(u)), "{{1,2,3,4}}");
  EXPECT_EQ(Granule::discrete(u).block_count(), 4u);
  EXPECT_EQ(gr("{}", u), Granule::empty(u));
}

TEST(Granule, ParseErrorsCarryPosition) {
  auto u = Universe::numbered(3);
  try {
    gr("{{1,2}", u);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }
  EXPECT_THROW(gr("{{1,9}}", u), UnknownElementError);
  EXPECT_THROW(gr("{{1,2},{2}}", u), OverlapError);
}

TEST(Granule, BlockOf) {
  auto u = Universe::numbered(4);
  auto g = gr("{{1,2},{4}}", u);
  EXPECT_EQ(g.block_of(1), 0u);
  EXPECT_EQ(g.block_of(3), 1u);
  EXPECT_EQ(g.block_of(2), Granule::npos);
}

TEST(Relation, RelationOfGranule) {
  auto u = Universe::numbered(3);
  auto r = relation_of(gr("{{1,2}}", u));
  EXPECT_EQ(r.pairs(), (std::vector<std::pair<std::size_t, std::size_t>>{
                           {0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_TRUE(relation_of(Granule::empty(u)).empty());
  EXPECT_EQ(relation_of(gr("{{1},{2}}", u)).pairs(),
            (std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}}));
}

TEST(Relation, GranuleOfRelation) {
  auto u = Universe::numbered(3);
  EXPECT_EQ(granule_of(Relation(u, {{0, 0}, {1, 1}, {0, 1}, {1, 0}})), gr("{{1,2}}", u));
  EXPECT_EQ(granule_of(Relation(u, {{0, 0}, {1, 1}, {2, 2}})), Granule::discrete(u));
  EXPECT_THROW(granule_of(Relation(u, {{0, 1}})), NotEquivalenceError);
  EXPECT_THROW(Relation(u, {{0, 5}}), IndexError);
}

TEST(Relation, TransitiveClosure) {
  auto u = Universe::numbered(3);
  auto closed = transitive_closure(Relation(u, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(closed.contains(0, 2));
  EXPECT_EQ(closed.size(), 3u);
  auto eq = relation_of(gr("{{1,2},{3}}", u));
  EXPECT_EQ(transitive_closure(eq), eq);
  auto joined = relation_of(gr("{{1,2},{3}}", u)) | relation_of(gr("{{2,3},{1}}", u));
  EXPECT_FALSE(joined.is_transitive());
  EXPECT_EQ(transitive_closure(joined), relation_of(Granule::whole(u)));
}

TEST(Rational, FractionText) {
  EXPECT_EQ(to_fraction_string(Rational(3) / 4), "3/4");
  EXPECT_EQ(to_fraction_string(Rational(4) / 4), "1");
  EXPECT_DOUBLE_EQ(to_double(Rational(1) / 8), 0.125);
}
