#include <gtest/gtest.h>

#include <vector>

#include "wavparity/evaluation.hpp"

namespace wavparity {
namespace {

using P = Parity;

TEST(MakeDataset, Examples) {
  EXPECT_EQ(make_dataset(0, 10000).integers.size(), 10001u);
  const auto d = make_dataset(0, 3);
  EXPECT_EQ(d.integers, (std::vector<std::uint64_t>{0, 1, 2, 3}));
  EXPECT_EQ(d.labels, (std::vector<P>{P::even, P::odd, P::even, P::odd}));
  const auto one = make_dataset(7, 7);
  ASSERT_EQ(one.integers.size(), 1u);
  EXPECT_EQ(one.labels[0], P::odd);
  try {
    make_dataset(3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_range);
  }
}

TEST(Accuracy, Examples) {
  const std::vector<P> labels{P::odd, P::even, P::even};
  EXPECT_EQ(accuracy(labels, labels), 1.0);
  EXPECT_EQ(accuracy(std::vector<P>{P::even, P::odd}, std::vector<P>{P::odd, P::even}), 0.0);
  try {
    accuracy(std::vector<P>{P::odd}, labels);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::length_mismatch);
  }
  try {
    accuracy(std::vector<P>{}, std::vector<P>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::empty_input);
  }
}

TEST(Accuracy, LsbOracleIsPerfect) {
  const auto d = make_dataset(0, 10000);
  std::vector<P> lsb;
  for (auto n : d.integers) lsb.push_back((n & 1U) ? P::odd : P::even);
  EXPECT_EQ(accuracy(lsb, d.labels), 1.0);
}

TEST(Confusion, CountsMatchAccuracy) {
  const std::vector<P> labels{P::odd, P::odd, P::even, P::even, P::odd};
  const std::vector<P> preds{P::odd, P::even, P::odd, P::even, P::odd};
  const auto c = confusion(preds, labels);
  EXPECT_EQ(c.odd_as_odd, 2u);
  EXPECT_EQ(c.odd_as_even, 1u);
  EXPECT_EQ(c.even_as_odd, 1u);
  EXPECT_EQ(c.even_as_even, 1u);
  EXPECT_EQ(c.total(), labels.size());
  EXPECT_EQ(static_cast<double>(c.correct()) / c.total(), accuracy(preds, labels));
}

TEST(MagnitudeBuckets, Examples) {
  const auto d = make_dataset(0, 10000);
  auto buckets = magnitude_buckets(d.integers, d.labels, d.labels, 1000);
  ASSERT_EQ(buckets.size(), 11u);
  for (const auto& b : buckets) EXPECT_EQ(b.accuracy, 1.0);
  EXPECT_EQ(buckets.back().count, 1u);
  EXPECT_EQ(buckets.back().lo, 10000u);
  for (std::size_t i = 1; i < buckets.size(); ++i) EXPECT_LT(buckets[i - 1].hi, buckets[i].lo);

  // Gaps leave no empty buckets behind.
  const std::vector<std::uint64_t> sparse{3, 25, 26};
  const std::vector<P> l{P::odd, P::odd, P::even};
  const std::vector<P> p{P::odd, P::even, P::even};
  buckets = magnitude_buckets(sparse, p, l, 10);
  ASSERT_EQ(buckets.size(), 2u);
  EXPECT_EQ(buckets[0].lo, 0u);
  EXPECT_EQ(buckets[1].lo, 20u);
  EXPECT_EQ(buckets[1].hi, 29u);
  EXPECT_EQ(buckets[1].accuracy, 0.5);
}

TEST(BoundaryReport, Examples) {
  const std::vector<P> labels{P::odd, P::even, P::odd, P::even};
  auto preds = classify(std::vector<double>{1, 0, 0, 1});
  auto b = boundary_report(std::vector<double>{1, 0, 0, 1}, preds, labels, 0.05);
  EXPECT_EQ(b.inside_count, 0u);
  EXPECT_EQ(b.outside_count, 4u);
  EXPECT_EQ(b.outside_error_rate, 0.5);

  const std::vector<double> half(4, 0.5);
  b = boundary_report(half, classify(half), labels, 0.05);
  EXPECT_EQ(b.inside_count, 4u);
  EXPECT_EQ(b.inside_error_rate, 0.5);

  for (double bad : {0.0, 0.5, -0.1}) {
    try {
      boundary_report(half, classify(half), labels, bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::invalid_band);
    }
  }
}

TEST(ScatterData, Examples) {
  RunConfig c;
  c.range_end = 1200;
  const auto r = run_pipeline(c);
  const auto pts = scatter_data(r.dataset.integers, r.scores.scores, r.dataset.labels, 0, 1000);
  ASSERT_EQ(pts.size(), 1001u);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(pts[i].n, i);
    EXPECT_EQ(static_cast<std::uint64_t>(pts[i].parity), i % 2);
    EXPECT_EQ(pts[i].score, r.scores.scores[i]);
  }
}

TEST(Evaluate, ReportConsistency) {
  RunConfig c;
  c.range_end = 4095;
  c.include_approx = true;
  const auto r = run_pipeline(c);
  const auto rep = evaluate(r, c);
  EXPECT_EQ(rep.num_integers, 4096u);
  EXPECT_EQ(rep.confusion_counts.total(), 4096u);
  EXPECT_EQ(static_cast<double>(rep.confusion_counts.correct()) / 4096.0, rep.overall_accuracy);
  EXPECT_EQ(rep.per_cell_accuracy.size(), 4u * kNumFeatures);
  for (double a : rep.per_cell_accuracy) EXPECT_GE(a, 0.5);
  EXPECT_EQ(rep.buckets.size(), 5u);
  EXPECT_EQ(rep.boundary.inside_count + rep.boundary.outside_count, 4096u);
  EXPECT_DOUBLE_EQ(rep.delta_to_reference(), rep.overall_accuracy - 0.6967);
}

TEST(Sweep, SingleConfigAndDuplicates) {
  RunConfig base;
  base.range_end = 1023;
  auto entries = sweep(base, SweepGrid{});
  ASSERT_EQ(entries.size(), 1u);
  ASSERT_TRUE(entries[0].ok());

  SweepGrid dup;
  dup.wavelets = {"db4", "db4"};
  entries = sweep(base, dup);
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].report->overall_accuracy, entries[1].report->overall_accuracy);
  EXPECT_EQ(entries[0].report->per_cell_accuracy, entries[1].report->per_cell_accuracy);
}

TEST(Sweep, FailuresRecordedAndSortedLast) {
  RunConfig base;
  base.range_end = 511;
  SweepGrid grid;
  grid.wavelets = {"haar", "bogus", "db4"};
  const auto entries = sweep(base, grid);
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_TRUE(entries[0].ok());
  EXPECT_TRUE(entries[1].ok());
  EXPECT_FALSE(entries[2].ok());
  EXPECT_NE(entries[2].error.find("UnknownWavelet"), std::string::npos);
  EXPECT_GE(entries[0].report->overall_accuracy, entries[1].report->overall_accuracy);
}

TEST(Sweep, DeterministicOrdering) {
  RunConfig base;
  base.range_end = 2047;
  const auto grid = default_sweep_grid(base);
  const auto a = sweep(base, grid);
  const auto b = sweep(base, grid);
  ASSERT_EQ(a.size(), 16u);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(config_key(a[i].config), config_key(b[i].config));
    EXPECT_EQ(a[i].report->overall_accuracy, b[i].report->overall_accuracy);
    if (i > 0) {
      EXPECT_GE(a[i - 1].report->overall_accuracy, a[i].report->overall_accuracy);
    }
  }
}

}  // namespace
}  // namespace wavparity
