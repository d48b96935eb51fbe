#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "wavparity/features.hpp"
#include "wavparity/signal_codec.hpp"

namespace wavparity {
namespace {

TEST(Statistics, Energy) {
  EXPECT_EQ(energy(std::vector<double>{0, 0, 0}), 0.0);
  EXPECT_EQ(energy(std::vector<double>{3, 4}), 25.0);
  const auto d = wavedec(encode(5, 8).samples, haar_filter(), 1);
  EXPECT_NEAR(energy(d.details[0]), 1.0, 1e-15);
}

TEST(Statistics, L2Norm) {
  EXPECT_EQ(l2_norm(std::vector<double>{0, 0}), 0.0);
  EXPECT_EQ(l2_norm(std::vector<double>{3, 4}), 5.0);
  EXPECT_EQ(l2_norm(std::vector<double>{-2}), 2.0);
}

TEST(Statistics, Mav) {
  EXPECT_EQ(mav(std::vector<double>{0, 0, 0, 0}), 0.0);
  EXPECT_EQ(mav(std::vector<double>{-1, 2, -3, 4}), 2.5);
  EXPECT_EQ(mav(std::vector<double>{-7.5}), 7.5);
}

TEST(Statistics, EmptyVector) {
  const std::vector<double> empty;
  for (auto fn : {&energy, &l2_norm, &mav}) {
    try {
      fn(empty);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::empty_vector);
    }
  }
}

TEST(Statistics, SignAndPermutationInvariance) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> dist;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> c(1 + trial % 9);
    for (auto& v : c) v = dist(rng);
    auto flipped = c;
    for (auto& v : flipped) v = -v;
    auto shuffled = c;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (const auto& other : {flipped, shuffled}) {
      EXPECT_NEAR(energy(other), energy(c), 1e-12);
      EXPECT_NEAR(l2_norm(other), l2_norm(c), 1e-12);
      EXPECT_NEAR(mav(other), mav(c), 1e-12);
    }
  }
}

TEST(FeatureTensor, SingleZeroSignal) {
  const std::vector<Decomposition> d{wavedec(encode(0, 16).samples, haar_filter(), 3)};
  const auto t = build_feature_tensor(d);
  ASSERT_EQ(t.num_integers(), 1u);
  ASSERT_EQ(t.num_levels(), 3u);
  for (double v : t.values()) EXPECT_EQ(v, 0.0);
}

TEST(FeatureTensor, FiveAtLengthEight) {
  const std::vector<Decomposition> d{wavedec(encode(5, 8).samples, haar_filter(), 1)};
  const auto t = build_feature_tensor(d);
  EXPECT_NEAR(t.at(0, 0, Feature::energy), 1.0, 1e-12);
  EXPECT_NEAR(t.at(0, 0, Feature::l2_norm), 1.0, 1e-12);
  EXPECT_NEAR(t.at(0, 0, Feature::mav), 0.35355339059327373, 1e-12);
}

TEST(FeatureTensor, InvariantsOverRange) {
  for (const auto& f : {haar_filter(), db4_filter()}) {
    std::vector<Decomposition> decomps;
    for (std::uint64_t n = 0; n <= 2000; ++n) decomps.push_back(wavedec(encode(n, 16).samples, f, 3));
    for (bool approx : {false, true}) {
      const auto t = build_feature_tensor(decomps, approx);
      ASSERT_EQ(t.num_levels(), approx ? 4u : 3u);
      for (std::size_t n = 0; n < t.num_integers(); ++n) {
        for (std::size_t j = 0; j < t.num_levels(); ++j) {
          for (std::size_t k = 0; k < kNumFeatures; ++k) ASSERT_GE(t.at(n, j, k), 0.0);
          const double e = t.at(n, j, 0);
          const double l2 = t.at(n, j, 1);
          ASSERT_NEAR(l2 * l2, e, 1e-9 * std::max(1.0, e));
        }
      }
    }
  }
}

TEST(FeatureTensor, ApproxLevelUsesFinalApproximation) {
  const auto d = wavedec(encode(7, 8).samples, haar_filter(), 2);
  const auto t = build_feature_tensor(std::vector<Decomposition>{d}, true);
  EXPECT_NEAR(t.at(0, 2, Feature::energy), energy(d.final_approx), 1e-15);
  EXPECT_NEAR(t.at(0, 1, Feature::mav), mav(d.details[1]), 1e-15);
}

TEST(FeatureTensor, InconsistentShapes) {
  const std::vector<Decomposition> d{wavedec(encode(1, 16).samples, haar_filter(), 3),
                                     wavedec(encode(1, 16).samples, haar_filter(), 2)};
  try {
    build_feature_tensor(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::inconsistent_shapes);
  }
}

}  // namespace
}  // namespace wavparity
