#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace fdist;
using namespace fdist::testing;

namespace {

Mass fig_a() { return mass({{iv("1", "5"), "0.5"}, {iv("2", "4"), "0.5"}}); }
Mass fig_b() { return mass({{iv("6", "10"), "0.5"}, {iv("7", "9"), "0.5"}}); }
Mass small_a() { return mass({{iv("1", "4"), "0.5"}, {iv("2", "3"), "0.5"}}); }
Mass small_b() { return mass({{iv("6", "9"), "0.5"}, {iv("7", "8"), "0.5"}}); }

PiecewiseShape<Q> tri_a() { return triangle(q(1), q(3), q(5)); }
PiecewiseShape<Q> tri_b() { return triangle(q(6), q(8), q(10)); }

DistanceResult<Q> run(const FuzzyInput<Q>& a, const FuzzyInput<Q>& b, Strategy s, bool directional = false,
                      std::size_t slices = kDefaultSlices) {
  DistanceOptions o;
  o.strategy = s;
  o.directional = directional;
  o.slices = slices;
  return distance(a, b, o);
}

}  // namespace

TEST(CellOperators, Directional) {
  EXPECT_EQ(cell_directional(iv("1", "5"), iv("6", "10")), iv("1", "9"));
  EXPECT_EQ(cell_directional(iv("6", "10"), iv("1", "5")), iv("-9", "-1"));
  EXPECT_EQ(cell_directional(iu({{"1", "2"}, {"4", "5"}}), iv("6", "9")), iv("1", "8"));
  EXPECT_EQ(cell_directional(iu({{"1", "2"}, {"4", "5"}}), iv("7", "8")), iu({{"2", "4"}, {"5", "7"}}));
  EXPECT_EQ(cell_directional(IU{}, iv("1", "2")), IU{});
}

TEST(CellOperators, NondirectionalFoldsAtZero) {
  EXPECT_EQ(cell_nondirectional(iv("6", "10"), iv("1", "5")), iv("1", "9"));
  EXPECT_EQ(cell_nondirectional(iv("1", "5"), iv("2", "3")), iv("0", "3"));
  EXPECT_EQ(cell_nondirectional(iv("0", "1"), iv("3", "4")), iv("2", "4"));
  EXPECT_EQ(cell_nondirectional(iu({{"0", "1"}, {"5", "6"}}), iv("3", "3")), iv("2", "3"));
  EXPECT_EQ(cell_nondirectional(iv("1", "2"), IU{}), IU{});
}

TEST(Distance, ProductFromMasses) {
  auto d = run(fig_a(), fig_b(), Strategy::Product);
  EXPECT_EQ(d.mass, mass({{iv("1", "9"), "0.25"}, {iv("2", "8"), "0.5"}, {iv("3", "7"), "0.25"}}));
}

TEST(Distance, ProductFromShapes) {
  auto d = run(tri_a(), tri_b(), Strategy::Product, false, 2);
  EXPECT_EQ(d.mass, mass({{iv("1", "9"), "0.25"}, {iv("2", "8"), "0.5"}, {iv("3", "7"), "0.25"}}));
}

TEST(Distance, ProductFourSlices) {
  auto d = run(tri_a(), tri_b(), Strategy::Product, false, 4);
  EXPECT_EQ(d.mass, mass({{iv("1", "9"), "0.0625"},
                          {iv("1.5", "8.5"), "0.125"},
                          {iv("2", "8"), "0.1875"},
                          {iv("2.5", "7.5"), "0.25"},
                          {iv("3", "7"), "0.1875"},
                          {iv("3.5", "6.5"), "0.125"},
                          {iv("4", "6"), "0.0625"}}));
}

TEST(Distance, Diagonal) {
  auto d = run(fig_a(), fig_b(), Strategy::Diagonal);
  EXPECT_EQ(d.mass, mass({{iv("1", "9"), "0.5"}, {iv("3", "7"), "0.5"}}));
  EXPECT_EQ(d.fuzzy.to_string(), "{0.5|[1,3), 1|[3,7], 0.5|(7,9]}");
  auto d4 = run(tri_a(), tri_b(), Strategy::Diagonal, false, 4);
  EXPECT_EQ(d4.mass, mass({{iv("1", "9"), "0.25"}, {iv("2", "8"), "0.25"}, {iv("3", "7"), "0.25"}, {iv("4", "6"), "0.25"}}));
}

TEST(Distance, AntiDiagonal) {
  EXPECT_EQ(run(fig_a(), fig_b(), Strategy::AntiDiagonal).mass, Mass::certain(iv("2", "8")));
  EXPECT_EQ(run(tri_a(), tri_b(), Strategy::AntiDiagonal, false, 4).mass, Mass::certain(iv("2.5", "7.5")));
}

TEST(Distance, AntiDiagonalMirrorsUnevenLevels) {
  SlicedAssignment<Q> a({{q(0), q(1, 4), iv("0", "8")}, {q(1, 4), q(1), iv("2", "4")}});
  SlicedAssignment<Q> b({{q(0), q(1, 2), iv("10", "20")}, {q(1, 2), q(1), iv("12", "14")}});
  auto d = assign_antidiagonal(a, b, DirectionalCell{});
  EXPECT_EQ(d.mass, mass({{iv("4", "14"), "0.25"}, {iv("6", "18"), "0.5"}, {iv("8", "12"), "0.25"}}));
}

TEST(Distance, DirectionalBothWays) {
  auto ab = run(small_a(), small_b(), Strategy::Diagonal, true);
  EXPECT_EQ(ab.mass, mass({{iv("2", "8"), "0.5"}, {iv("4", "6"), "0.5"}}));
  EXPECT_EQ(ab.fuzzy.to_string(), "{0.5|[2,4), 1|[4,6], 0.5|(6,8]}");
  auto ba = run(small_b(), small_a(), Strategy::Diagonal, true);
  EXPECT_EQ(ba.mass, mass({{iv("-8", "-2"), "0.5"}, {iv("-6", "-4"), "0.5"}}));
  EXPECT_EQ(ba.fuzzy.to_string(), "{0.5|[-8,-6), 1|[-6,-4], 0.5|(-4,-2]}");
}

TEST(Distance, NonNormalProduct) {
  Mass an = mass({{iv("1", "4"), "0.5"}, {IU{}, "0.5"}});
  FuzzyInput<Q> a = an, b = small_b();
  EXPECT_EQ(default_strategy(a, b), Strategy::Product);
  auto d = run(an, small_b(), Strategy::Product);
  EXPECT_EQ(d.mass, mass({{iv("2", "8"), "0.25"}, {iv("3", "7"), "0.25"}, {IU{}, "0.5"}}));
  EXPECT_EQ(d.fuzzy.height(), q(1, 2));
  EXPECT_EQ(d.fuzzy.to_string(), "{0.25|[2,3), 0.5|[3,7], 0.25|(7,8]}");
}

TEST(Distance, Multimodal) {
  Mass am = mass({{iv("1", "4"), "0.5"}, {iu({{"1", "2"}, {"3", "4"}}), "0.5"}});
  EXPECT_EQ(run(am, small_b(), Strategy::Diagonal).mass, mass({{iv("2", "8"), "0.5"}, {iv("3", "7"), "0.5"}}));

  Mass ae = mass({{iv("1", "5"), "0.5"}, {iu({{"1", "2"}, {"4", "5"}}), "0.5"}});
  EXPECT_EQ(run(ae, small_b(), Strategy::Diagonal).mass,
            mass({{iv("1", "8"), "0.5"}, {iu({{"2", "4"}, {"5", "7"}}), "0.5"}}));

  Mass aen = mass({{iv("1", "5"), "0.5"}, {iu({{"1", "2"}, {"4", "5"}}), "0.25"}, {iv("1", "2"), "0.25"}});
  auto d = run(aen, small_b(), Strategy::Diagonal, true);
  EXPECT_EQ(d.mass, mass({{iv("1", "8"), "0.5"}, {iu({{"2", "4"}, {"5", "7"}}), "0.25"}, {iv("5", "7"), "0.25"}}));
  EXPECT_EQ(d.fuzzy.to_string(), "{0.5|[1,2), 0.75|[2,4], 0.5|(4,5), 1|[5,7], 0.5|(7,8]}");
}

TEST(Distance, DefaultStrategy) {
  FuzzyInput<Q> a = fig_a(), b = tri_b();
  EXPECT_EQ(default_strategy(a, b), Strategy::Diagonal);
  EXPECT_EQ(parse_strategy("antidiagonal"), Strategy::AntiDiagonal);
  EXPECT_FALSE(parse_strategy("sideways").has_value());
  EXPECT_EQ(to_string(Strategy::Product), "product");
}

TEST(DistanceProperties, DirectionalAntisymmetry) {
  std::mt19937 rng(31);
  auto negated = [](const Mass& m) {
    std::vector<Mass::Entry> out;
    for (const auto& e : m.entries()) out.push_back({negate(e.focal), e.mass});
    return Mass::make(out);
  };
  for (int i = 0; i < 200; ++i) {
    Mass a = random_nested_mass(rng, 3, -10, 10);
    Mass b = random_nested_mass(rng, 4, -10, 10);
    for (Strategy s : {Strategy::Product, Strategy::Diagonal}) {
      auto ab = run(a, b, s, true);
      auto ba = run(b, a, s, true);
      EXPECT_EQ(ba.mass, negated(ab.mass)) << a << " | " << b;
    }
  }
}

TEST(DistanceProperties, NondirectionalIsSymmetric) {
  std::mt19937 rng(32);
  for (int i = 0; i < 200; ++i) {
    Mass a = random_nested_mass(rng, 3, -10, 10);
    Mass b = random_nested_mass(rng, 3, -10, 10);
    for (Strategy s : {Strategy::Product, Strategy::Diagonal}) EXPECT_EQ(run(a, b, s).mass, run(b, a, s).mass);
  }
}

TEST(DistanceProperties, ResultsAreValidMasses) {
  std::mt19937 rng(33);
  for (int i = 0; i < 200; ++i) {
    Mass a = random_nested_mass(rng, 3, -10, 10);
    Mass b = random_nested_mass(rng, 3, -10, 10);
    for (Strategy s : {Strategy::Product, Strategy::Diagonal, Strategy::AntiDiagonal}) {
      auto d = run(a, b, s);
      EXPECT_EQ(d.mass.total(), q(1));
      for (const auto& e : d.mass.entries())
        if (!e.focal.empty()) {
          EXPECT_LE(q(0), e.focal.parts().front().lo);
        }
    }
  }
}

TEST(CellOracle, DirectionalMatchesGrid) {
  std::mt19937 rng(34);
  for (int i = 0; i < 300; ++i) {
    IU a = random_union(rng, 3, -5, 5, 10);
    IU b = random_union(rng, 3, -5, 5, 10);
    EXPECT_EQ(grid_points(raw_parts(cell_directional(a, b)), 20), grid_differences(a, b, 20, false)) << a << " | " << b;
  }
}

TEST(CellOracle, NondirectionalMatchesGrid) {
  std::mt19937 rng(35);
  for (int i = 0; i < 300; ++i) {
    IU a = random_union(rng, 3, -5, 5, 10);
    IU b = random_union(rng, 3, -5, 5, 10);
    EXPECT_EQ(grid_points(raw_parts(cell_nondirectional(a, b)), 20), grid_differences(a, b, 20, true)) << a << " | " << b;
  }
}
