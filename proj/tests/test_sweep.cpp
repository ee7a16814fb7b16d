#include <catch2/catch_amalgamated.hpp>

#include "agfuzz/sweep.hpp"

using namespace agfuzz;

TEST_CASE("the full sweep over orders 1..3 is clean") {
  sweep_options opt;
  opt.max_order = 3;
  opt.cross_max_order = 3;
  report rep = population_sweep(opt);
  for (const check_record& r : rep.records) {
    INFO(r.theorem << " " << r.instance << " " << r.detail);
    CHECK(r.pass);
  }
  CHECK(rep.all_pass());
}

TEST_CASE("suite selection narrows the checks that run") {
  sweep_options opt;
  opt.max_order = 3;
  opt.suite = {"coset-equality"};
  report rep = population_sweep(opt);
  CHECK(!rep.records.empty());
  for (const check_record& r : rep.records) CHECK(r.theorem == "coset-equality");
  CHECK(rep.all_pass());
}

TEST_CASE("commutation is exercised on non-normal instances") {
  sweep_options opt;
  opt.max_order = 4;
  opt.cross_max_order = 1;  // keep the cross products out of this run
  opt.suite = {"elementary-lemmas", "quotient-ag-group"};
  report rep = population_sweep(opt);
  CHECK(rep.all_pass());

  int commutation = 0, nonnormal = 0;
  for (const check_record& r : rep.records) {
    if (r.theorem == "commutation") ++commutation;
    if (r.theorem == "quotient-nonnormal-well-defined") ++nonnormal;
  }
  CHECK(commutation > 0);
  CHECK(nonnormal > 0);  // the population genuinely contains non-normal mu
}

TEST_CASE("unknown suite entries are rejected") {
  sweep_options opt;
  opt.suite = {"no-such-check"};
  CHECK_THROWS_AS(population_sweep(opt), error);
}

TEST_CASE("sweep reports carry the non-normal quotient statistics") {
  sweep_options opt;
  opt.max_order = 4;
  opt.cross_max_order = 1;
  opt.suite = {"quotient-ag-group"};
  report rep = population_sweep(opt);
  bool found = false;
  for (const check_record& r : rep.records)
    if (r.theorem == "quotient-nonnormal-stats") {
      found = true;
      CHECK(!r.detail.empty());
    }
  CHECK(found);
}
