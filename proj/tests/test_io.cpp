#include <gtest/gtest.h>

#include "hardy/io.hpp"
#include "hardy/pick.hpp"

using namespace hardy;
using io::json;

namespace {

AnalyticFn nested() {
  const auto g = peak_pow(BoundaryPoint(std::polar(1.0, 0.1234567890123)), 17);
  const auto k = cauchy_kernel(InteriorPoint(cplx(0.1 / 3.0, -0.7)));
  const auto b = blaschke_factor(InteriorPoint(cplx(-0.2, std::sqrt(0.1))));
  const auto s = schur_chain(0.7071067811865476, {cplx(0.1), cplx(0.0, -0.3)}, {cplx(0.3, 1e-17), cplx(-0.25)});
  return sum({{cplx(1.0 / 7.0, -2.0), g * k}, {cplx(0.5), power(b + s, 3)}, {cplx(1.0), constant(cplx(1e-300, 3e300))}});
}

}  // namespace

TEST(Io, FunctionRoundTripIsExact) {
  const auto f = nested();
  const json j = io::fn_to_json(f);
  const auto back = io::fn_from_json(json::parse(j.dump()));
  EXPECT_EQ(back, f);
  EXPECT_EQ(io::fn_to_json(back), j);
  EXPECT_EQ(j["type"], "sum");
}

TEST(Io, FunctionParseErrorsCarryPointers) {
  json j = io::fn_to_json(nested());
  j["terms"][1]["f"]["base"]["terms"][0]["f"]["b"] = json::array({2.0, 0.0});
  try {
    io::fn_from_json(j);
    FAIL();
  } catch (const io::InputError& e) {
    EXPECT_EQ(e.pointer(), "/terms/1/f/base/terms/0/f/b");
  }
  EXPECT_THROW(io::fn_from_json(json{{"type", "mystery"}}), io::InputError);
  EXPECT_THROW(io::fn_from_json(json{{"type", "peak_pow"}, {"a", {1.0, 0.0}}}), io::InputError);
}

TEST(Io, ScalarReaders) {
  EXPECT_EQ(io::read_number(json("inf"), ""), kInfinity);
  EXPECT_EQ(io::read_integer(json(3.0), ""), 3);
  EXPECT_THROW(io::read_integer(json(3.5), "/x"), io::InputError);
  EXPECT_EQ(io::read_complex(json(0.5), ""), cplx(0.5));
  EXPECT_EQ(io::read_complex(json::array({0.5, -1.0}), ""), cplx(0.5, -1.0));
  EXPECT_THROW(io::read_complex(json::array({0.5}), "/z"), io::InputError);
  try {
    io::read_complex_list(json::array({json::array({0.1, 0.2}), "x"}), "/nodes");
    FAIL();
  } catch (const io::InputError& e) {
    EXPECT_EQ(e.pointer(), "/nodes/1");
  }
  EXPECT_EQ(io::number_json(kInfinity), "inf");
}

TEST(Io, PointerEscaping) {
  EXPECT_EQ(io::child("/a", "b/c~d"), "/a/b~1c~0d");
  EXPECT_EQ(io::child("", 3), "/3");
}

TEST(Io, SystemRoundTrip) {
  FiniteSystem s = riesz_example(3, 1.5);
  const auto back = io::system_from_json(json::parse(io::system_json(s).dump()));
  EXPECT_EQ(back.p, s.p);
  EXPECT_EQ(back.vectors, s.vectors);
  ASSERT_TRUE(back.duals.has_value());
  EXPECT_EQ(*back.duals, *s.duals);
  s.p = kInfinity;
  s.duals.reset();
  const auto inf = io::system_from_json(io::system_json(s));
  EXPECT_EQ(inf.p, kInfinity);
  EXPECT_FALSE(inf.duals.has_value());
}

TEST(Io, ArcSystemRoundTripAndValidation) {
  ArcSystem s;
  s.arcs = {make_arc(0.0, 1.0), make_arc(2.0, 3.0)};
  s.points = {0.5, 2.5};
  s.budgets = {0.01, 0.02};
  s.epsilon = 0.1;
  const auto back = io::arc_system_from_json(io::arc_system_json(s));
  EXPECT_EQ(back.points, s.points);
  EXPECT_EQ(back.budgets, s.budgets);
  EXPECT_EQ(back.arcs[1].hi, 3.0);
  json bad = io::arc_system_json(s);
  bad["budgets"] = json::array({0.2, 0.2});
  EXPECT_THROW(io::arc_system_from_json(bad), io::InputError);
}

TEST(Io, BoundJson) {
  CertifiedBound b{1.5, 0.25, "adaptive"};
  const json j = io::bound_json(b, "sup");
  EXPECT_EQ(j["lower"], 1.25);
  EXPECT_EQ(j["upper"], 1.75);
  EXPECT_EQ(j["tag"], "sup");
  EXPECT_EQ(j["method"], "adaptive");
}

TEST(Io, AtConvertsDomainErrors) {
  try {
    io::at("/nodes", [] { return NodeSequence({cplx(0.1), cplx(0.1)}); });
    FAIL();
  } catch (const io::InputError& e) {
    EXPECT_EQ(e.pointer(), "/nodes");
  }
}
