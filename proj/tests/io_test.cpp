#include <gtest/gtest.h>

#include <regex>
#include <string>

#include "wavparity/wavparity.hpp"

namespace wavparity {
namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

TEST(Config, ParsesFlatKeyValues) {
  const auto c = parse_run_config(R"(
# experiment
range = 10:500
wavelet = db4   # trailing comment
levels = 2
bit-order = msb_first
weights = 1, 2
threshold = 0.4
include_approx = true
init = random:17
bucket_size = 50
band = 0.1
)");
  EXPECT_EQ(c.range_start, 10u);
  EXPECT_EQ(c.range_end, 500u);
  EXPECT_EQ(c.wavelet, "db4");
  EXPECT_EQ(c.num_levels, 2u);
  EXPECT_EQ(c.bit_order, BitOrder::msb_first);
  EXPECT_EQ(c.weights, (std::vector<double>{1, 2}));
  EXPECT_EQ(c.effective_weights(), (std::vector<double>{1, 2, 2}));
  EXPECT_EQ(c.threshold, 0.4);
  EXPECT_TRUE(c.include_approx);
  EXPECT_EQ(c.kmeans.init, InitMethod::random);
  EXPECT_EQ(c.kmeans.seed, 17u);
  EXPECT_EQ(c.bucket_size, 50u);
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, Defaults) {
  const RunConfig c;
  EXPECT_EQ(c.range_end, 10000u);
  EXPECT_EQ(c.signal_length(), 16u);
  EXPECT_EQ(c.effective_weights(), (std::vector<double>{1.0, 1.1, 1.2}));
  EXPECT_EQ(c.kmeans.tolerance, 1e-9);
  EXPECT_EQ(c.kmeans.max_iterations, 300u);
}

TEST(Config, Errors) {
  for (const char* text : {"range = 5", "levels = x", "nonsense = 1", "just a line", "weights = 1,,2",
                           "include_approx = maybe", "init = kmeans++"}) {
    try {
      parse_run_config(text);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::invalid_config) << text;
    }
  }
}

TEST(ScoresCsv, WriteParseRoundTrip) {
  RunConfig c;
  c.range_end = 300;
  const auto r = run_pipeline(c);
  const auto text = scores_csv(r);
  EXPECT_EQ(text.substr(0, text.find('\n')), "n,label,score,prediction");
  const auto rows = parse_scores_csv(text);
  ASSERT_EQ(rows.size(), 301u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].n, r.dataset.integers[i]);
    EXPECT_EQ(rows[i].label, r.dataset.labels[i]);
    EXPECT_EQ(rows[i].score, r.scores.scores[i]);  // 17 digits round-trip exactly
    EXPECT_EQ(rows[i].prediction, r.scores.predictions[i]);
  }
}

TEST(ScoresCsv, Malformed) {
  for (const char* text : {"", "n,score\n1,0.5\n", "n,label,score,prediction\n1,odd,0.5\n",
                           "n,label,score,prediction\n1,odd,abc,even\n",
                           "n,label,score,prediction\n1,maybe,0.5,even\n"}) {
    try {
      parse_scores_csv(text);
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::malformed_csv) << text;
    }
  }
  EXPECT_TRUE(parse_scores_csv("n,label,score,prediction\n").empty());
}

TEST(CoefficientsCsv, Layout) {
  const auto d = wavedec(encode(5, 8).samples, haar_filter(), 1);
  const auto csv = coefficients_csv(d);
  EXPECT_EQ(csv,
            "level,kind,index,value\n"
            "1,detail,0,0.70710678118654746\n"
            "1,detail,1,0.70710678118654746\n"
            "1,detail,2,0\n"
            "1,detail,3,0\n"
            "1,approx,0,0.70710678118654746\n"
            "1,approx,1,0.70710678118654746\n"
            "1,approx,2,0\n"
            "1,approx,3,0\n");
}

TEST(FeaturesCsv, Layout) {
  const std::vector<Decomposition> d{wavedec(encode(5, 8).samples, haar_filter(), 1)};
  const std::vector<std::uint64_t> ns{5};
  EXPECT_EQ(features_csv(ns, build_feature_tensor(d)),
            "n,level,feature,value\n"
            "5,1,energy,0.99999999999999978\n"
            "5,1,l2_norm,0.99999999999999989\n"
            "5,1,mav,0.35355339059327373\n");
}

TEST(ScatterSvg, PointsColorsAndThreshold) {
  std::vector<ScoreRow> rows;
  for (std::uint64_t n = 0; n <= 1000; ++n) {
    rows.push_back({n, parity_of(n), (n % 2) ? 0.7 : 0.3, parity_of(n)});
  }
  const auto svg = scatter_svg(rows);
  EXPECT_EQ(count_of(svg, "<circle"), 1001u);
  EXPECT_EQ(count_of(svg, "class=\"point odd\""), 500u);
  EXPECT_EQ(count_of(svg, "class=\"point even\""), 501u);
  EXPECT_EQ(count_of(svg, "id=\"threshold-line\""), 1u);

  // Every odd point is red, every even point blue.
  const std::regex odd_red("class=\"point odd\"[^>]*fill=\"red\"");
  const std::regex even_blue("class=\"point even\"[^>]*fill=\"blue\"");
  EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), odd_red), std::sregex_iterator()), 500);
  EXPECT_EQ(std::distance(std::sregex_iterator(svg.begin(), svg.end(), even_blue), std::sregex_iterator()), 501);
  EXPECT_NE(svg.find("Integer n"), std::string::npos);
  EXPECT_NE(svg.find("id=\"legend\""), std::string::npos);
}

TEST(ScatterSvg, EmptyInputStillHasAxes) {
  const auto svg = scatter_svg(std::vector<ScoreRow>{});
  EXPECT_EQ(count_of(svg, "<circle"), 0u);
  EXPECT_EQ(count_of(svg, "id=\"threshold-line\""), 1u);
  EXPECT_NE(svg.find("id=\"axes\""), std::string::npos);
}

TEST(ReportJson, StableKeyOrder) {
  RunConfig c;
  c.range_end = 200;
  const auto rep = run_and_evaluate(c);
  const auto j = to_json(rep);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"config", "num_integers", "signal_length", "accuracy",
                                            "reference_accuracy", "delta_to_reference", "confusion",
                                            "per_cell_accuracy", "magnitude_buckets", "boundary"}));
  EXPECT_EQ(j.dump(), to_json(run_and_evaluate(c)).dump());
}

}  // namespace
}  // namespace wavparity
