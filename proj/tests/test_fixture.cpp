#include <catch2/catch_amalgamated.hpp>

#include <hilbcat/fixture.hpp>

using namespace hilbcat;

namespace {

const char* kSample = R"(# weighted plane and a shear
object V
ring rat
dim 2
gram
1 0
0 2
end

object W
ring rat
dim 2
gram
1 0
0 1
end

morphism f
dom V
cod W
mat
1 1
0 1
end
)";

}  // namespace

TEST_CASE("parse a small fixture") {
  Fixture fx = parse_fixture(kSample);
  REQUIRE(fx.objects.size() == 2);
  REQUIRE(fx.morphisms.size() == 1);
  const HObject* v = fx.find_object("V");
  REQUIRE(v);
  CHECK(v->dim() == 2);
  CHECK(v->gram().at(1, 1) == Scalar::from_int(rat_ring(), 2));
  const HMorphism* f = fx.find_morphism("f");
  REQUIRE(f);
  CHECK(f->dom() == *v);
  CHECK(f->mat().at(0, 1) == Scalar::one(rat_ring()));
  CHECK_FALSE(fx.find_object("X"));
  CHECK_FALSE(fx.find_morphism("g"));
}

TEST_CASE("serialization round-trips exactly") {
  Fixture fx = parse_fixture(kSample);
  std::string text = serialize_fixture(fx);
  Fixture fx2 = parse_fixture(text);
  REQUIRE(fx2.objects.size() == fx.objects.size());
  REQUIRE(fx2.morphisms.size() == fx.morphisms.size());
  CHECK(*fx2.find_object("V") == *fx.find_object("V"));
  CHECK(*fx2.find_morphism("f") == *fx.find_morphism("f"));
  CHECK(serialize_fixture(fx2) == text);
}

TEST_CASE("gauss entries round-trip") {
  const char* text = R"(object X
ring gauss
dim 2
gram
2 0+1*i
0-1*i 1
end
)";
  Fixture fx = parse_fixture(text);
  const HObject* x = fx.find_object("X");
  REQUIRE(x);
  CHECK(x->gram().at(0, 1) == Scalar(gauss_ring(), 0, 1));
  Fixture fx2 = parse_fixture(serialize_fixture(fx));
  CHECK(*fx2.find_object("X") == *x);
}

TEST_CASE("parse errors carry line positions") {
  auto expect_error_at = [](const char* text, const char* fragment) {
    try {
      parse_fixture(text);
      FAIL("expected a parse error");
    } catch (const error& e) {
      INFO(e.what());
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  expect_error_at("object V\nring pseudoreal\n", "line 2");
  expect_error_at("object V\nring rat\ndim 1\ngram\n1 2\nend\n", "line 5");
  expect_error_at("object V\nring rat\ndim 1\ngram\nbogus\nend\n", "line 5");
  expect_error_at("object V\nring rat\ndim 1\ngram\n1\n", "line 5");  // missing end
  expect_error_at("morphism f\ndom A\ncod B\n", "unknown object 'A'");
  expect_error_at("widget V\n", "line 1");
  expect_error_at("object V\nring rat\ndim 2\ngram\n1 0\n0 0\nend\n",
                  "positive-definite");
}

TEST_CASE("duplicate names are rejected") {
  const char* text = R"(object V
ring rat
dim 1
gram
1
end
object V
ring rat
dim 1
gram
1
end
)";
  CHECK_THROWS_AS(parse_fixture(text), error);
}

TEST_CASE("morphisms must match their objects") {
  const char* text = R"(object V
ring rat
dim 1
gram
1
end
morphism f
dom V
cod V
mat
1 2
end
)";
  CHECK_THROWS_AS(parse_fixture(text), error);
}
