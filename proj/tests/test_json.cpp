#include <gtest/gtest.h>

#include "rackiso/json.hpp"
#include "rackiso/sampling.hpp"

using namespace rackiso;
using nlohmann::json;

TEST(Json, Schema) {
  const RackIsoElem r{2, GroupWord{neg(Letter::gen(1))}};
  EXPECT_EQ(to_json(r), json::parse(R"({"theory":"rack","z":2,"word":[["y1",-1]]})"));
  EXPECT_EQ(to_json(QuandleIsoElem{}), json::parse(R"({"theory":"quandle","word":[]})"));
}

TEST(Json, RoundTrip) {
  const auto words = enumerate_reduced_words(generator_alphabet(2), 3);
  for (const auto& w : words) {
    const IsoElem q = QuandleIsoElem{w};
    ASSERT_EQ(elem_from_json(json::parse(to_json(q).dump()), 2), q);
    for (long z = -2; z <= 2; ++z) {
      const IsoElem r = RackIsoElem{z, w};
      ASSERT_EQ(elem_from_json(json::parse(to_json(r).dump()), 2), r);
    }
  }
}

TEST(Json, ReducesInput) {
  const auto e = elem_from_json(
      json::parse(R"({"theory":"quandle","word":[["y1",1],["y2",1],["y2",-1]]})"), 2);
  EXPECT_EQ(e, IsoElem{QuandleIsoElem{GroupWord{pos(Letter::gen(1))}}});
}

TEST(Json, Errors) {
  auto parse = [](const char* s, std::uint32_t n = 2) { return elem_from_json(json::parse(s), n); };
  EXPECT_THROW(parse(R"([])"), SchemaError);
  EXPECT_THROW(parse(R"({"theory":"group","word":[]})"), SchemaError);
  EXPECT_THROW(parse(R"({"theory":"rack","word":[]})"), SchemaError);
  EXPECT_THROW(parse(R"({"theory":"quandle","z":1,"word":[]})"), SchemaError);
  EXPECT_THROW(parse(R"({"theory":"quandle","word":[["y1",2]]})"), SchemaError);
  EXPECT_THROW(parse(R"({"theory":"quandle","word":[["x",1]]})"), SchemaError);
  EXPECT_THROW(parse(R"({"theory":"quandle","word":[["y3",1]]})"), UnknownGenerator);
  EXPECT_THROW(parse(R"({"theory":"quandle","word":"y1"})"), SchemaError);
}
