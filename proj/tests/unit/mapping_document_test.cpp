#include <gtest/gtest.h>

#include <bit>
#include <cstring>
#include <random>

#include "pools.hpp"
#include "polyharm/polyharm.hpp"

namespace polyharm {
namespace {

constexpr const char* kF1 = R"({
  "name": "F1",
  "p": 2,
  "layers": [
    {"k": 1, "analytic": [[1, 1.0, 0.0]], "anti_analytic": [[1, 0.3333333333333333, 0.0]]},
    {"k": 2, "anti_analytic": [[1, 0.16666666666666666, 0.0]]}
  ]
})";

std::string error_of(std::string_view text) {
  try {
    (void)parse_mapping_document(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "";
}

bool bit_equal(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

void expect_bit_equal(const LayeredSeries& a, const LayeredSeries& b) {
  ASSERT_EQ(a.degree(), b.degree());
  ASSERT_EQ(a.order(), b.order());
  for (std::size_t k = 1; k <= a.degree(); ++k)
    for (std::size_t j = 1; j <= a.order(); ++j) {
      EXPECT_TRUE(bit_equal(a.a(k, j).real(), b.a(k, j).real()));
      EXPECT_TRUE(bit_equal(a.a(k, j).imag(), b.a(k, j).imag()));
      EXPECT_TRUE(bit_equal(a.b(k, j).real(), b.b(k, j).real()));
      EXPECT_TRUE(bit_equal(a.b(k, j).imag(), b.b(k, j).imag()));
    }
}

TEST(MappingDocument, ParsesF1) {
  const auto doc = parse_mapping_document(kF1);
  EXPECT_EQ(doc.name, "F1");
  EXPECT_EQ(doc.map.degree(), 2u);
  EXPECT_EQ(doc.map.order(), kDefaultTruncation);
  EXPECT_EQ(doc.map.b(1, 1), Complex(1.0 / 3.0));
  EXPECT_EQ(doc.map.b(2, 1), Complex(1.0 / 6.0));
  EXPECT_EQ(doc.map, catalog::f1());
}

TEST(MappingDocument, DefaultsUnitCoefficient) {
  const auto f = parse_spec(R"({"p": 1, "truncation": 4, "layers": [{"k": 1, "analytic": [[3, 0.25, 0]]}]})");
  EXPECT_EQ(f.a(1, 1), Complex(1.0));
  EXPECT_EQ(f.a(1, 3), Complex(0.25));
  EXPECT_EQ(parse_spec(R"({"p": 1, "layers": []})"), PolyharmonicMap::identity());
}

TEST(MappingDocument, RejectsUnitAntiAnalyticCoefficient) {
  const auto msg = error_of(R"({"p": 1, "layers": [{"k": 1, "anti_analytic": [[1, 1.0, 0.0]]}]})");
  EXPECT_NE(msg.find("anti-analytic unit coefficient out of range"), std::string::npos) << msg;
}

TEST(MappingDocument, ErrorsNameTheField) {
  EXPECT_NE(error_of(R"({"p": 1, "layers": [], "extra": 1})").find("/extra"), std::string::npos);
  EXPECT_NE(error_of(R"({"layers": []})").find("/p"), std::string::npos);
  EXPECT_NE(error_of(R"({"p": 0, "layers": []})").find("/p"), std::string::npos);
  EXPECT_NE(error_of(R"({"p": 1, "layers": [{"k": 2}]})").find("/layers/0/k"), std::string::npos);
  EXPECT_NE(error_of(R"({"p": 2, "layers": [{"k": 1}, {"k": 1}]})").find("/layers/1/k"), std::string::npos);
  EXPECT_NE(error_of(R"({"p": 1, "layers": [{"k": 1, "kind": 3}]})").find("/layers/0/kind"), std::string::npos);
  EXPECT_NE(error_of(R"({"p": 1, "truncation": 3, "layers": [{"k": 1, "analytic": [[4, 1, 0]]}]})")
                .find("/layers/0/analytic/0/0"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"p": 1, "layers": [{"k": 1, "analytic": [[2, 1, 0], [2, 1, 0]]}]})")
                .find("/layers/0/analytic/1"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"p": 1, "layers": [{"k": 1, "analytic": [[2, "x", 0]]}]})")
                .find("/layers/0/analytic/0/1"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"p": 1, "layers": [{"k": 1, "analytic": [[1, 2.0, 0.0]]}]})").find("a_{1,1}"),
            std::string::npos);
}

TEST(MappingDocument, SyntaxErrorReportsPosition) {
  const auto msg = error_of(R"({"p": 1, "layers": [})");
  EXPECT_NE(msg.find("byte"), std::string::npos) << msg;
  EXPECT_NE(error_of("[]").find("top level"), std::string::npos);
}

TEST(MappingDocument, RoundTripIsBitExact) {
  for (auto kind : {ClassKind::starlike, ClassKind::convex})
    for (const auto& f : pools::class_members(kind, 100, 21)) {
      const auto text = serialize_mapping(f, std::string("sample"));
      const auto back = parse_mapping_document(text);
      EXPECT_EQ(back.name, "sample");
      expect_bit_equal(back.map, f);
      EXPECT_EQ(serialize_mapping(back.map, back.name), text);
    }
}

TEST(MappingDocument, RoundTripKeepsAwkwardDoubles) {
  std::mt19937_64 rng(1);
  PowerSeries h(6), g(6);
  h.set(1, 1.0);
  h.set(2, Complex{-0.0, 0.0});
  h.set(3, Complex{5e-324, -1.7976931348623157e308});
  h.set(4, Complex{0.1, 1.0 / 3.0});
  g.set(1, Complex{0.0, -0.0});
  g.set(2, Complex{std::bit_cast<double>(rng() >> 2), 2.2250738585072014e-308});
  const PolyharmonicMap f({HarmonicLayer{h, g}});
  const auto back = parse_spec(serialize_mapping(f));
  expect_bit_equal(back, f);
  EXPECT_TRUE(std::signbit(back.a(1, 2).real()));
  EXPECT_TRUE(std::signbit(back.b(1, 1).imag()));
}

TEST(MappingDocument, CatalogRoundTrips) {
  for (const auto& f : {catalog::f1(), catalog::f2(3, 0.5235987755982988), catalog::f3(4, 1.0), catalog::f4()})
    EXPECT_EQ(parse_spec(serialize_mapping(f)), f);
}

}  // namespace
}  // namespace polyharm
