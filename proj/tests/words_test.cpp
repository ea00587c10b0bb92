#include <gtest/gtest.h>

#include <random>
#include <set>

#include "freelp/error.hpp"
#include "freelp/words.hpp"

using namespace freelp;

namespace {

ReducedWord W(std::initializer_list<Letter> letters, int rank = 3) {
  return ReducedWord::reduce(std::vector<Letter>(letters), rank);
}

std::vector<Letter> random_letters(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution sign;
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = sign(rng) ? gen(rng) : -gen(rng);
  return out;
}

}  // namespace

TEST(ReduceTest, Examples) {
  EXPECT_EQ(W({1, 2, -2, 3}).letters(), (std::vector<Letter>{1, 3}));
  EXPECT_TRUE(W({1, -1}).empty());
  EXPECT_TRUE(W({2, 3, -3, -2}).empty());
}

TEST(ReduceTest, RejectsInvalidLetters) {
  EXPECT_THROW(W({0}), Error);
  EXPECT_THROW(W({4}), Error);
  EXPECT_THROW(W({-4}), Error);
}

TEST(MultiplyTest, Examples) {
  EXPECT_EQ(multiply(W({1, 2}), W({-2, 3})).letters(), (std::vector<Letter>{1, 3}));
  EXPECT_EQ(multiply(W({1}), W({1})).letters(), (std::vector<Letter>{1, 1}));
  const ReducedWord w = W({1, -2, 3});
  EXPECT_TRUE(is_identity(multiply(w, inverse(w))));
}

TEST(MultiplyTest, RankMismatch) {
  EXPECT_THROW(multiply(W({1}, 2), W({1}, 3)), Error);
}

TEST(InverseTest, Examples) {
  EXPECT_EQ(inverse(W({1, 2})).letters(), (std::vector<Letter>{-2, -1}));
  EXPECT_TRUE(inverse(W({})).empty());
  EXPECT_EQ(inverse(W({-3})).letters(), (std::vector<Letter>{3}));
}

TEST(IdentityTest, ProductWords) {
  EXPECT_TRUE(is_identity(W({})));
  EXPECT_FALSE(is_identity(W({1, -2})));
  EXPECT_TRUE(is_identity(ProductWord({W({}), W({1, -1})})));
  EXPECT_FALSE(is_identity(ProductWord({W({}), W({1})})));
}

TEST(HLetterTest, Examples) {
  EXPECT_EQ(h_letter(2, 3), 2);
  EXPECT_EQ(h_letter(5, 3), -2);
  EXPECT_EQ(h_letter(3, 3), 3);
  EXPECT_EQ(h_letter(6, 3), -3);
  EXPECT_THROW(h_letter(0, 3), Error);
  EXPECT_THROW(h_letter(7, 3), Error);
}

TEST(WordPropertyTest, ReduceIsIdempotent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto raw = random_letters(rng, 3, 12);
    const ReducedWord once = ReducedWord::reduce(raw, 3);
    EXPECT_EQ(ReducedWord::reduce(once.letters(), 3), once);
    EXPECT_LE(once.length(), raw.size());
    EXPECT_EQ((raw.size() - once.length()) % 2, 0u);
    for (std::size_t i = 1; i < once.length(); ++i) {
      EXPECT_NE(once.letters()[i], -once.letters()[i - 1]);
    }
  }
}

TEST(WordPropertyTest, GroupLaws) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const ReducedWord a = ReducedWord::reduce(random_letters(rng, 2, 8), 2);
    const ReducedWord b = ReducedWord::reduce(random_letters(rng, 2, 8), 2);
    const ReducedWord c = ReducedWord::reduce(random_letters(rng, 2, 8), 2);
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    EXPECT_EQ(inverse(multiply(a, b)), multiply(inverse(b), inverse(a)));
    EXPECT_EQ(inverse(inverse(a)), a);
    EXPECT_TRUE(is_identity(multiply(inverse(a), a)));
  }
}

TEST(ProductWordTest, ComponentwiseProduct) {
  const ProductWord a({W({1}, 2), W({2}, 3)});
  const ProductWord b({W({-1}, 2), W({3}, 3)});
  const ProductWord ab = multiply(a, b);
  EXPECT_TRUE(ab[0].empty());
  EXPECT_EQ(ab[1].letters(), (std::vector<Letter>{2, 3}));
  EXPECT_EQ(ab.ranks(), (std::vector<int>{2, 3}));
  EXPECT_TRUE(is_identity(multiply(ab, inverse(ab))));
  EXPECT_THROW(multiply(a, ProductWord({W({1}, 2)})), Error);
}

TEST(BallTest, Examples) {
  const auto b = enumerate_ball(1, 2);
  ASSERT_EQ(b.size(), 5u);
  EXPECT_TRUE(b[0].empty());
  EXPECT_EQ(b[1].letters(), (std::vector<Letter>{1}));
  EXPECT_EQ(b[2].letters(), (std::vector<Letter>{-1}));
  EXPECT_EQ(b[3].letters(), (std::vector<Letter>{1, 1}));
  EXPECT_EQ(b[4].letters(), (std::vector<Letter>{-1, -1}));
  EXPECT_EQ(enumerate_ball(2, 1).size(), 5u);
  EXPECT_EQ(enumerate_ball(2, 2).size(), 17u);
}

TEST(BallTest, MatchesBruteForceAndCountFormula) {
  for (int n = 1; n <= 3; ++n) {
    for (int radius = 0; radius <= 4; ++radius) {
      // Every raw letter string of length <= radius, reduced and deduplicated.
      std::set<ReducedWord> brute;
      std::vector<Letter> alphabet;
      for (int k = 1; k <= n; ++k) {
        alphabet.push_back(k);
        alphabet.push_back(-k);
      }
      std::vector<std::vector<Letter>> level{{}};
      for (int len = 0; len <= radius; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& raw : level) {
          brute.insert(ReducedWord::reduce(raw, n));
          if (len == radius) continue;
          for (Letter l : alphabet) {
            auto ext = raw;
            ext.push_back(l);
            next.push_back(ext);
          }
        }
        level = std::move(next);
      }
      const auto ball = enumerate_ball(n, radius);
      EXPECT_EQ(std::set<ReducedWord>(ball.begin(), ball.end()), brute);
      EXPECT_EQ(ball.size(), ball_size(n, radius));
      std::uint64_t formula = 1;
      if (radius >= 1) {
        if (n == 1) {
          formula = 1 + 2 * radius;
        } else {
          std::uint64_t power = 1;
          for (int i = 0; i < radius; ++i) power *= 2 * n - 1;
          formula = 1 + 2 * n * (power - 1) / (2 * n - 2);
        }
      }
      EXPECT_EQ(ball.size(), formula) << "n=" << n << " L=" << radius;
    }
  }
}

TEST(BallTest, LengthLexOrder) {
  const auto ball = enumerate_ball(2, 3);
  for (std::size_t i = 1; i < ball.size(); ++i) {
    const auto& a = ball[i - 1].letters();
    const auto& b = ball[i].letters();
    ASSERT_LE(a.size(), b.size());
    if (a.size() == b.size()) {
      std::vector<int> ka, kb;
      for (Letter l : a) ka.push_back(letter_key(l));
      for (Letter l : b) kb.push_back(letter_key(l));
      EXPECT_LT(ka, kb);
    }
  }
}

TEST(WordTextTest, RoundTrip) {
  EXPECT_EQ(to_string(W({1, -2, 3})), "1,-2,3");
  EXPECT_EQ(to_string(W({})), "");
  EXPECT_EQ(parse_word("1,-2,3", 3), W({1, -2, 3}));
  EXPECT_TRUE(parse_word("", 3).empty());
  EXPECT_THROW(parse_word("1,x", 3), Error);
}
