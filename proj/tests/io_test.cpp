#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "freelp/error.hpp"
#include "freelp/io.hpp"
#include "freelp/random.hpp"

using namespace freelp;

namespace {

ErrorKind kind_of(const Json& j) {
  try {
    tensor_from_json(j);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << j.dump();
  return ErrorKind::invalid_argument;
}

Json base() {
  return Json::parse(R"({"n": 2, "d": 2, "m": 1, "alphabet": "generators",
                          "entries": [{"index": [1, 2], "re": [[1.5]]}]})");
}

}  // namespace

TEST(TensorJsonTest, ParsesOneBasedIndices) {
  const CoeffTensor t = tensor_from_json(base());
  EXPECT_EQ(t.nnz(), 1u);
  EXPECT_EQ(t.at({0, 1})(0, 0), Complex(1.5, 0.0));
}

TEST(TensorJsonTest, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CoeffTensor t = random_tensor(2, 2, 2, Alphabet::signed_letters, seed, 0.7);
    EXPECT_EQ(tensor_from_json(Json::parse(tensor_to_json(t).dump())), t);
  }
}

TEST(TensorJsonTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "freelp_io_test.json";
  const CoeffTensor t = random_tensor(3, 1, 2, Alphabet::generators, 4);
  save_tensor(t, path);
  EXPECT_EQ(load_tensor(path), t);
  std::filesystem::remove(path);
}

TEST(TensorJsonTest, EmptyEntries) {
  Json j = base();
  j["entries"] = Json::array();
  const CoeffTensor t = tensor_from_json(j);
  EXPECT_EQ(t.nnz(), 0u);
  EXPECT_EQ(t.n(), 2);
  EXPECT_EQ(t.d(), 2);
}

TEST(TensorJsonTest, SchemaErrors) {
  Json j = base();
  j["entries"][0]["index"] = {1};
  EXPECT_EQ(kind_of(j), ErrorKind::schema);

  j = base();
  j["entries"][0]["index"] = {1, 3};
  EXPECT_EQ(kind_of(j), ErrorKind::schema);

  j = base();
  j["entries"][0]["index"] = {0, 1};
  EXPECT_EQ(kind_of(j), ErrorKind::schema);

  j = base();
  j["entries"].push_back(j["entries"][0]);
  EXPECT_EQ(kind_of(j), ErrorKind::schema);

  j = base();
  j["entries"][0]["re"] = {{1.0, 2.0}};
  EXPECT_EQ(kind_of(j), ErrorKind::schema);

  j = base();
  j["entries"][0]["re"] = {{"x"}};
  EXPECT_EQ(kind_of(j), ErrorKind::schema);

  j = base();
  j.erase("m");
  EXPECT_EQ(kind_of(j), ErrorKind::schema);

  j = base();
  j["alphabet"] = "letters";
  EXPECT_EQ(kind_of(j), ErrorKind::schema);
}

TEST(TensorJsonTest, MissingFileIsSchemaError) {
  try {
    load_tensor("/nonexistent/freelp.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::schema);
  }
}
