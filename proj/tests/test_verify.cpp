#include <atomic>
#include <cstdlib>
#include <set>
#include <thread>

#include "doctest.h"
#include "helpers.hpp"
#include "species/errors.hpp"
#include "species/json_io.hpp"
#include "species/verify.hpp"

using namespace species;
using testing::comp;
using testing::H;
using testing::Q;

TEST_CASE("json roundtrip of scalars, compositions and elements") {
  for (const Scalar& s : {Scalar(0), Scalar(-7), Scalar::fraction(3, 4), Scalar(Rational(1, 2), Rational(-5, 3))}) {
    CHECK(scalar_from_json(to_json(s)) == s);
  }
  CHECK(scalar_from_json(Json(3)) == Scalar(3));
  CHECK(scalar_from_json(Json("2/6")) == Scalar::fraction(1, 3));
  CHECK(composition_from_json(to_json(comp("13,2"))) == comp("13,2"));
  CHECK(to_json(comp("13,2")).dump() == "[[1,3],[2]]");

  const SigmaElem x = H("12,3", Scalar::fraction(2, 3)) + H("3,12", Scalar(0, 1)) - H("123");
  CHECK(sigma_from_json(to_json(x)) == x);
  const SigmaElem q = Q("2,1") + Q("12", 5);
  CHECK(sigma_from_json(to_json(q)) == q);
  CHECK(sigma_from_json(to_json(SigmaElem::unit())) == SigmaElem::unit());
}

TEST_CASE("json roundtrip of cells, series and models") {
  for (const auto& c : enumerate_cells(LabelSet::range(4))) CHECK(cell_from_json(to_json(c)) == c);

  TruncSeries t(3);
  t.add(0, 0, word_unit());
  t.add(1, 2, word_of({"s", "a", "a"}, Laurent::monomial(-3, Scalar::fraction(1, 6))));
  t.add(2, 0, word_of({"s"}, Laurent::inverse_i_hbar()));
  CHECK(trunc_series_from_json(to_json(t)) == t);

  const Model m({{"a", 0}, {"s", Rational(3, 2)}}, "s");
  const Json j = to_json(m);
  CHECK(j.at("observables")[1].at("time") == "3/2");
  const Model back = model_from_json(j);
  CHECK(back.interaction() == "s");
  CHECK(back.observables() == m.observables());
  CHECK(model_from_json(Json::parse(R"({"observables": [{"id": "a", "time": 2}]})")).get("a").time == 2);
}

TEST_CASE("json decoding errors") {
  CHECK_THROWS_AS(sigma_from_json(Json::parse(R"({"ground": [1], "terms": []})")), DomainError);
  CHECK_THROWS_AS(sigma_from_json(Json::parse(R"({"ground": [1], "basis": "M", "terms": []})")), DomainError);
  CHECK_THROWS_AS(label_set_from_json(Json("x")), DomainError);
  CHECK_THROWS_AS(model_from_json(Json::parse(R"({"obs": []})")), DomainError);
  CHECK_THROWS_AS(scalar_from_json(Json("1/0")), std::exception);
}

TEST_CASE("run report counters and status") {
  RunReport r("demo", {{"n", 2}});
  r.payload()["count"] = 5;
  r.check("a", true);
  r.check("a", true);
  CHECK(r.passed());
  r.check("b", false);
  CHECK_FALSE(r.passed());
  CHECK(r.checked() == 3);
  CHECK(r.failures_of("b") == 1);
  CHECK(r.failures_of("zzz") == 0);

  const Json j = r.to_json();
  CHECK(j.at("count") == 5);
  CHECK(j.at("status") == "fail");
  CHECK(j.at("command") == "demo");
  CHECK(j.at("parameters").at("n") == 2);
  CHECK(j.at("counters").at("failures") == 1);
  CHECK(j.at("checks").at("a").at("checked") == 2);

  RunReport total("total");
  total.absorb(r);
  total.absorb(r);
  CHECK(total.checked() == 6);
  CHECK(total.failures_of("b") == 2);
  CHECK(total.to_json().at("status") == "fail");
}

TEST_CASE("parallel_for visits every index once") {
  setenv("SPECIES_HOPF_THREADS", "4", 1);
  CHECK(thread_count() == 4);
  std::vector<std::atomic<int>> hits(1000);
  std::set<std::thread::id> seen;
  std::mutex m;
  parallel_for(hits.size(), [&](std::size_t i) {
    ++hits[i];
    std::lock_guard<std::mutex> lock(m);
    seen.insert(std::this_thread::get_id());
  });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK(seen.size() >= 1);
  CHECK_THROWS_AS(parallel_for(10, [](std::size_t i) {
                    if (i == 7) throw DomainError("seven");
                  }),
                  DomainError);
  setenv("SPECIES_HOPF_THREADS", "junk", 1);
  CHECK(thread_count() >= 1);
  unsetenv("SPECIES_HOPF_THREADS");
}

TEST_CASE("reports are independent of the thread count") {
  setenv("SPECIES_HOPF_THREADS", "1", 1);
  const std::string serial = dynkin_report(4).to_json().dump();
  setenv("SPECIES_HOPF_THREADS", "3", 1);
  CHECK(dynkin_report(4).to_json().dump() == serial);
  unsetenv("SPECIES_HOPF_THREADS");
}

TEST_CASE("known cell counts") {
  CHECK(known_cell_count(0) == 1);
  CHECK(known_cell_count(5) == 370);
  CHECK(known_cell_count(6) == 11292);
  CHECK_THROWS_AS(known_cell_count(7), DomainError);
  for (int n = 0; n <= 4; ++n) CHECK(cells_count_report(n).passed());
}

TEST_CASE("toy commands") {
  const Model m({{"a", 0}, {"b", 2}, {"s", 1}}, "s");
  const RunReport demo = toy_demo(m, 2);
  CHECK(demo.passed());
  CHECK(demo.payload().at("results").contains("a"));
  CHECK_FALSE(demo.payload().at("results").contains("s"));
  CHECK(toy_bogoliubov(m, 2).passed());
  CHECK_THROWS_AS(toy_bogoliubov(Model({{"a", 0}}), 2), DomainError);
  CHECK(toy_demo(Model({{"a", 0}}), 2).passed());
}
