#include <doctest.h>

#include "freecert/harness.hpp"

using namespace freecert;

TEST_CASE("corpus statistics are consistent") {
  CorpusConfig config;
  config.rank = 2;
  config.length = 7;
  config.count = 400;
  config.seed = 3;
  const CorpusStats s = run_corpus(config);
  CHECK(s.words == 400);
  CHECK(s.simple + s.non_simple + s.undecided == s.words);
  CHECK(s.certified_any <= s.non_simple);
  CHECK(s.certified_any >= s.certified_squares);
  CHECK(s.violations == 0);
  CHECK(s.squares_pattern_simple == 0);
  CHECK(s.certified_squares == s.squares_pattern);
  CHECK_FALSE(s.exhaustive);

  config.count.reset();
  config.length = 6;
  const CorpusStats all = run_corpus(config);
  CHECK(all.exhaustive);
  CHECK(all.words == 732);

  config.rank = 4;
  config.length = 30;
  CHECK_THROWS_AS(run_corpus(config), InputError);
}

TEST_CASE("corpus is reproducible and independent of the job count") {
  CorpusConfig config;
  config.rank = 3;
  config.length = 6;
  config.count = 200;
  config.seed = 17;
  const std::string one = to_json(run_corpus(config)).dump();
  config.jobs = 4;
  CHECK(to_json(run_corpus(config)).dump() == one);
  config.seed = 18;
  CHECK(to_json(run_corpus(config)).dump() != one);
}

TEST_CASE("regression suite passes at several ranks") {
  for (int rank : {2, 3, 4}) {
    PaperConfig config;
    config.rank = rank;
    config.samples = 300;
    const Report r = verify_paper(config);
    CHECK_MESSAGE(r.ok(), "rank " << rank);
    std::size_t passed = 0;
    for (const Check& c : r.checks) passed += c.status == CheckStatus::kPass;
    CHECK(passed >= 12);
  }
  PaperConfig bad;
  bad.rank = 1;
  CHECK_THROWS_AS(verify_paper(bad), InputError);
}
