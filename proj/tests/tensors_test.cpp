#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "freelp/error.hpp"
#include "freelp/random.hpp"
#include "freelp/schatten.hpp"
#include "freelp/tensors.hpp"

using namespace freelp;

namespace {

Matrix scalar(double v) { return Matrix::Constant(1, 1, Complex(v, 0.0)); }

// a_ij = e_ji built directly, independent of the library helper.
CoeffTensor counterexample(int n) {
  CoeffTensor t(n, 2, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(j, i) = 1.0;
      t.set({i, j}, e);
    }
  }
  return t;
}

}  // namespace

TEST(CoeffTensorTest, SetValidates) {
  CoeffTensor t(2, 2, 2);
  EXPECT_THROW(t.set({0}, Matrix::Identity(2, 2)), Error);
  EXPECT_THROW(t.set({0, 2}, Matrix::Identity(2, 2)), Error);
  EXPECT_THROW(t.set({0, 1}, Matrix::Identity(3, 3)), Error);
  t.set({0, 1}, Matrix::Identity(2, 2));
  EXPECT_EQ(t.nnz(), 1u);
  t.set({0, 1}, Matrix::Zero(2, 2));
  EXPECT_EQ(t.nnz(), 0u);
  EXPECT_EQ(t.at({1, 1}), Matrix::Zero(2, 2));
}

TEST(CoeffTensorTest, Arithmetic) {
  const CoeffTensor a = random_tensor(2, 2, 2, Alphabet::generators, 1);
  const CoeffTensor b = random_tensor(2, 2, 2, Alphabet::generators, 2);
  const CoeffTensor sum = a + b;
  for (const auto& [index, value] : sum.entries()) {
    EXPECT_TRUE(value.isApprox(a.at(index) + b.at(index)));
  }
  EXPECT_EQ((a - a).nnz(), 0u);
  EXPECT_THROW(a + CoeffTensor(2, 2, 1), Error);
}

TEST(FlattenTest, Examples) {
  EXPECT_EQ(flatten_index({2, 0}, PartitionSplit::from_alpha(2, {1}), 3), std::make_pair(Eigen::Index{2}, Eigen::Index{0}));
  EXPECT_EQ(flatten_index({1, 2}, PartitionSplit::from_alpha(2, {1, 2}), 3), std::make_pair(Eigen::Index{5}, Eigen::Index{0}));
  EXPECT_EQ(flatten_index({1, 2}, PartitionSplit::from_alpha(2, {}), 3), std::make_pair(Eigen::Index{0}, Eigen::Index{5}));
  EXPECT_EQ(flatten_index({1, 2}, PartitionSplit::from_alpha(2, {2}), 3), std::make_pair(Eigen::Index{2}, Eigen::Index{1}));
}

TEST(FlattenTest, BijectiveOnSmallShapes) {
  for (int a = 1; a <= 3; ++a) {
    for (int d = 0; d <= 3; ++d) {
      for (const auto& split : enumerate_partitions(d)) {
        std::set<std::pair<Eigen::Index, Eigen::Index>> seen;
        for (const auto& index : all_indices(a, d)) {
          const auto [row, col] = flatten_index(index, split, a);
          EXPECT_EQ(unflatten_index(row, col, split, a), index);
          seen.insert({row, col});
        }
        std::size_t total = 1;
        for (int i = 0; i < d; ++i) total *= a;
        EXPECT_EQ(seen.size(), total);
      }
    }
  }
}

TEST(ReshapeTest, SingleIdentityBlock) {
  CoeffTensor t(2, 2, 3);
  t.set({1, 0}, Matrix::Identity(3, 3));
  const Matrix r = reshape(t, PartitionSplit::consecutive(2, 1));
  ASSERT_EQ(r.rows(), 6);
  ASSERT_EQ(r.cols(), 6);
  EXPECT_TRUE(r.block(3, 0, 3, 3).isIdentity());
  EXPECT_DOUBLE_EQ(r.cwiseAbs().sum(), 3.0);
}

TEST(ReshapeTest, ZeroTensorAndShape) {
  const CoeffTensor t(3, 2, 2);
  const Matrix r = reshape(t, PartitionSplit::consecutive(2, 0));
  EXPECT_EQ(r.rows(), 2);
  EXPECT_EQ(r.cols(), 18);
  EXPECT_TRUE(r.isZero());
}

TEST(ReshapeTest, CounterexampleSingularValues) {
  for (int n = 2; n <= 4; ++n) {
    const CoeffTensor t = counterexample(n);
    Eigen::BDCSVD<Matrix> middle(reshape(t, PartitionSplit::from_alpha(2, {1})));
    EXPECT_EQ(middle.singularValues().size(), n * n);
    for (Eigen::Index i = 0; i < middle.singularValues().size(); ++i) {
      EXPECT_NEAR(middle.singularValues()(i), 1.0, 1e-12);
    }
    // alpha = {1,2}: a column of blocks with n singular values sqrt(n).
    Eigen::BDCSVD<Matrix> column(reshape(t, PartitionSplit::from_alpha(2, {1, 2})));
    EXPECT_EQ(column.singularValues().size(), n);
    for (Eigen::Index i = 0; i < n; ++i) {
      EXPECT_NEAR(column.singularValues()(i), std::sqrt(n), 1e-12);
    }
  }
}

TEST(ReshapeTest, CapRaisesTooLarge) {
  const CoeffTensor t(4, 3, 2);
  try {
    reshape(t, PartitionSplit::consecutive(3, 0), 64);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::too_large);
  }
}

TEST(PartitionTest, Enumeration) {
  EXPECT_EQ(enumerate_partitions(0).size(), 1u);
  EXPECT_EQ(enumerate_partitions(2).size(), 4u);
  EXPECT_EQ(enumerate_partitions(3).size(), 8u);
  for (const auto& s : enumerate_partitions(3)) {
    std::vector<int> all = s.alpha;
    all.insert(all.end(), s.beta.begin(), s.beta.end());
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, (std::vector<int>{1, 2, 3}));
  }
  EXPECT_THROW(PartitionSplit::from_alpha(2, {3}), Error);
}

TEST(TranspositionNumberTest, Examples) {
  EXPECT_EQ(transposition_number(PartitionSplit::from_alpha(2, {1})), -1);
  EXPECT_EQ(transposition_number(PartitionSplit::from_alpha(2, {2})), 1);
  EXPECT_EQ(transposition_number(PartitionSplit::from_alpha(2, {})), -1);
  EXPECT_EQ(transposition_number(PartitionSplit::from_alpha(2, {1, 2})), -1);
  EXPECT_FALSE(is_transposed(PartitionSplit::from_alpha(2, {1})));
  EXPECT_TRUE(is_transposed(PartitionSplit::from_alpha(2, {2})));
  // Only consecutive splits are non-transposed.
  for (int d = 0; d <= 4; ++d) {
    int non_transposed = 0;
    for (const auto& s : enumerate_partitions(d)) non_transposed += !is_transposed(s);
    EXPECT_EQ(non_transposed, d + 1);
  }
}

TEST(WordMapTest, Plain) {
  EXPECT_EQ(word_map_plain({0, 1}, 2).letters(), (std::vector<Letter>{1, 2}));
  EXPECT_EQ(word_map_plain({0, 0}, 2).letters(), (std::vector<Letter>{1, 1}));
  EXPECT_TRUE(word_map_plain({}, 2).empty());
}

TEST(WordMapTest, Separated) {
  const ReducedWord w = word_map_separated({0, 1}, 2);
  EXPECT_EQ(w.letters(), (std::vector<Letter>{1, 4}));
  EXPECT_EQ(w.rank(), 4);
  EXPECT_EQ(word_map_separated({1, 1, 1}, 2).letters(), (std::vector<Letter>{2, 4, 6}));
  EXPECT_EQ(word_map_separated({2}, 3).letters(), word_map_plain({2}, 3).letters());
}

TEST(WordMapTest, Signed) {
  EXPECT_TRUE(word_map_signed({0, 2}, 2).empty());
  EXPECT_EQ(word_map_signed({0, 1}, 2).letters(), (std::vector<Letter>{1, 2}));
  EXPECT_EQ(word_map_signed({2, 3}, 2).letters(), (std::vector<Letter>{-1, -2}));
}

TEST(CancellationTest, Examples) {
  EXPECT_FALSE(validate_cancellation({0, 2}, 2));
  EXPECT_TRUE(validate_cancellation({0, 1}, 2));
  EXPECT_FALSE(validate_cancellation({2, 0}, 2));
}

TEST(CancellationTest, ExhaustiveAgainstReducedLength) {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 3; ++d) {
      for (const auto& index : all_indices(2 * n, d)) {
        // Independent rule on 1-based values.
        bool valid = true;
        for (int s = 0; s + 1 < d; ++s) {
          const int a = index[s] + 1;
          const int b = index[s + 1] + 1;
          if ((a - (n + b)) % (2 * n) == 0) valid = false;
        }
        EXPECT_EQ(validate_cancellation(index, n), valid);
        const std::size_t length = word_map_signed(index, n).length();
        if (valid) {
          EXPECT_EQ(length, static_cast<std::size_t>(d));
        } else {
          EXPECT_LT(length, static_cast<std::size_t>(d));
        }
      }
    }
  }
}

TEST(ProjectionTest, Examples) {
  CoeffTensor t(2, 2, 1, Alphabet::signed_letters);
  t.set({0, 1}, scalar(1.0));
  EXPECT_EQ(apply_projection_Q(t), t);
  CoeffTensor bad(2, 2, 1, Alphabet::signed_letters);
  bad.set({0, 2}, scalar(1.0));
  EXPECT_EQ(apply_projection_Q(bad).nnz(), 0u);
  EXPECT_THROW(apply_projection_Q(CoeffTensor(2, 2, 1)), Error);
}

TEST(ProjectionTest, IdempotentLinearAndOrderFree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CoeffTensor raw(2, 3, 2, Alphabet::signed_letters);
    const CoeffTensor g = random_tensor(4, 3, 2, Alphabet::generators, seed);
    for (const auto& [index, value] : g.entries()) raw.set(index, value);
    CoeffTensor other(2, 3, 2, Alphabet::signed_letters);
    const CoeffTensor h = random_tensor(4, 3, 2, Alphabet::generators, seed + 100);
    for (const auto& [index, value] : h.entries()) other.set(index, value);

    const CoeffTensor q = apply_projection_Q(raw);
    EXPECT_EQ(apply_projection_Q(q), q);
    EXPECT_EQ(mask_adjacent_pair(mask_adjacent_pair(raw, 1), 2),
              mask_adjacent_pair(mask_adjacent_pair(raw, 2), 1));
    EXPECT_EQ(mask_adjacent_pair(mask_adjacent_pair(raw, 1), 2), q);
    for (const auto& [index, value] : q.entries()) EXPECT_TRUE(validate_cancellation(index, 2));

    const Complex s(0.5, -1.25);
    const CoeffTensor lhs = apply_projection_Q(s * raw + other);
    const CoeffTensor rhs = s * q + apply_projection_Q(other);
    for (const auto& index : all_indices(4, 3)) {
      EXPECT_TRUE(lhs.at(index).isApprox(rhs.at(index), 1e-14) ||
                  (lhs.at(index).isZero() && rhs.at(index).isZero()));
    }
  }
}

TEST(ProjectToDegreeTest, Examples) {
  WordCoefficients f;
  f[ReducedWord(2)] = scalar(2.0);
  f[ReducedWord::reduce(std::vector<Letter>{1, 2}, 2)] = scalar(3.0);
  const CoeffTensor t = project_to_degree(f, 2, Alphabet::generators, 2, 1);
  EXPECT_EQ(t.nnz(), 1u);
  EXPECT_EQ(t.at({0, 1}), scalar(3.0));

  EXPECT_EQ(project_to_degree({}, 2, Alphabet::generators, 2, 1).nnz(), 0u);

  WordCoefficients g;
  g[ReducedWord::reduce(std::vector<Letter>{1, -2}, 2)] = scalar(1.0);
  EXPECT_EQ(project_to_degree(g, 2, Alphabet::generators, 2, 1).nnz(), 0u);
  EXPECT_EQ(project_to_degree(g, 2, Alphabet::signed_letters, 2, 1).at({0, 3}), scalar(1.0));
}

TEST(ProjectToDegreeTest, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CoeffTensor a = random_tensor(3, 2, 2, Alphabet::generators, seed);
    EXPECT_EQ(project_to_degree(word_coefficients(a), 2, Alphabet::generators, 3, 2), a);
    const CoeffTensor b = random_tensor(2, 3, 1, Alphabet::signed_letters, seed);
    EXPECT_EQ(project_to_degree(word_coefficients(b), 3, Alphabet::signed_letters, 2, 1), b);
  }
}
