#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "loglab/constants.hpp"
#include "loglab/identities.hpp"
#include "loglab/specfun.hpp"
#include "reference_values.hpp"

using namespace loglab;

namespace {
constexpr double kPi = constants::pi;
constexpr double kGamma = constants::euler_gamma;
}  // namespace

TEST_CASE("registry shape") {
  const auto& ids = list_identities();
  CHECK(ids.size() == 13);
  CHECK(ids.front().id == "GR-4.229.7");
  const char* expected[] = {"GR-4.229.7",  "GR-4.325.1", "GR-4.325.2",  "GR-4.325.3",
                            "GR-4.325.4",  "GR-4.325.5", "GR-4.325.6",  "GR-4.325.7",
                            "GR-4.325.8",  "GR-4.325.10", "GR-4.325.11", "KUMMER-EQ6",
                            "SAWTOOTH-EQ7"};
  std::set<std::string> seen;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    CHECK(ids[i].id == expected[i]);
    CHECK(seen.insert(ids[i].id).second);  // unique
  }
  // stable across calls
  CHECK(&list_identities() == &ids);
  CHECK_THROWS_AS(identity("GR-0.0.0"), DomainError);

  CHECK(identity("GR-4.325.2").value_kind == ValueKind::complex);
  CHECK(identity("GR-4.325.8").value_kind == ValueKind::complex);
  CHECK(identity("GR-4.325.4").value_kind == ValueKind::real);
  CHECK(!identity("KUMMER-EQ6").integration_domain.has_value());
  CHECK(identity("GR-4.229.7").integration_domain->lo == doctest::Approx(kPi / 4.0));
  CHECK(identity("GR-4.325.7").has_series_form);
  CHECK(identity("GR-4.325.10").has_series_form);
  CHECK(!identity("GR-4.325.8").has_series_form);
}

TEST_CASE("param validation") {
  CHECK_NOTHROW(validate_params("GR-4.325.7", {{"t", Complex(3.1)}}));
  CHECK_THROWS_AS(validate_params("GR-4.325.7", {{"t", Complex(4.0)}}), DomainError);
  CHECK_THROWS_AS(validate_params("GR-4.325.7", {{"t", Complex(kPi)}}), DomainError);
  CHECK_THROWS_AS(validate_params("GR-4.325.7", {{"t", Complex(0.5, 0.1)}}), DomainError);
  CHECK_THROWS_AS(validate_params("GR-4.325.7", {}), DomainError);
  CHECK_THROWS_AS(validate_params("GR-4.325.7", {{"tau", Complex(1.0)}}), DomainError);
  CHECK_THROWS_AS(validate_params("GR-4.325.4", {{"t", Complex(1.0)}}), DomainError);
  CHECK_NOTHROW(validate_params("GR-4.325.8", {{"mu", Complex(2.0, -3.0)}}));
  CHECK_THROWS_AS(validate_params("GR-4.325.8", {{"mu", Complex(0.0, 1.0)}}), DomainError);
  CHECK_THROWS_AS(validate_params("GR-4.325.2", {{"lambda", Complex(3.2)}}), DomainError);
  // the message quotes the valid interval
  try {
    validate_params("GR-4.325.7", {{"t", Complex(4.0)}});
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("(-pi, pi)") != std::string::npos);
  }
}

TEST_CASE("integrand point probes") {
  CHECK(integrand("GR-4.325.1", {}, 0.5, 0.5).real() ==
        doctest::Approx(refvals::kIntegrand43251At05).epsilon(1e-14));
  // at x = e^{-1} the double log vanishes
  const double x = std::exp(-1.0);
  CHECK(std::abs(integrand("GR-4.325.8", {{"mu", Complex(1.0)}}, x, 1.0 - x)) <= 1e-14);
  CHECK(integrand("GR-4.325.7", {{"t", Complex(kPi / 2.0)}}, 0.5, 0.5).real() ==
        doctest::Approx(refvals::kIntegrand43257PiHalfAt05).epsilon(1e-14));
  CHECK_THROWS_AS(integrand("KUMMER-EQ6", {{"x", Complex(0.5)}}, 0.5, 0.5), DomainError);
  // finite at a point extremely close to the right endpoint
  const Complex near_end = integrand("GR-4.325.10", {}, 1.0 - 1e-200, 1e-200);
  CHECK(std::isfinite(near_end.real()));
}

TEST_CASE("closed forms against the oracle") {
  CHECK(closed_form("GR-4.229.7", {}).real() ==
        doctest::Approx(refvals::kV42297).epsilon(1e-13));
  CHECK(closed_form("GR-4.325.1", {}).real() ==
        doctest::Approx(refvals::kV43251).epsilon(1e-14));
  CHECK(closed_form("GR-4.325.3", {}).real() ==
        doctest::Approx(refvals::kV43253).epsilon(1e-13));
  CHECK(closed_form("GR-4.325.4", {}).real() ==
        doctest::Approx(refvals::kV42297).epsilon(1e-13));
  CHECK(closed_form("GR-4.325.5", {}).real() ==
        doctest::Approx(refvals::kV43255).epsilon(1e-13));
  CHECK(closed_form("GR-4.325.6", {}).real() ==
        doctest::Approx(refvals::kV43256).epsilon(1e-13));
  CHECK(closed_form("GR-4.325.10", {}).real() ==
        doctest::Approx(refvals::kV432510).epsilon(1e-11));

  CHECK(std::abs(closed_form("GR-4.325.8", {{"mu", Complex(1.0)}}) - Complex(-kGamma)) <= 1e-14);
  CHECK(std::abs(closed_form("GR-4.325.8", {{"mu", Complex(0.5)}}) -
                 Complex(refvals::kV43258MuHalf)) <= 1e-13);
  CHECK(std::abs(closed_form("GR-4.325.8", {{"mu", Complex(2.0)}}) -
                 Complex(refvals::kV43258Mu2)) <= 1e-13);
  CHECK(std::abs(closed_form("GR-4.325.8", {{"mu", Complex(5.0)}}) -
                 Complex(refvals::kV43258Mu5)) <= 1e-13);
  CHECK(std::abs(closed_form("GR-4.325.8", {{"mu", Complex(1.0, 1.0)}}) -
                 refvals::kV43258Mu1p1i) <= 1e-13);
  CHECK(std::abs(closed_form("GR-4.325.8", {{"mu", Complex(3.0, 2.0)}}) -
                 refvals::kV43258Mu3p2i) <= 1e-13);

  CHECK(std::abs(closed_form("GR-4.325.11", {{"mu", Complex(0.5)}}) -
                 Complex(refvals::kV432511MuHalf)) <= 1e-12);
  CHECK(std::abs(closed_form("GR-4.325.11", {{"mu", Complex(1.0)}}) -
                 Complex(refvals::kV432511Mu1)) <= 1e-12);
  CHECK(std::abs(closed_form("GR-4.325.11", {{"mu", Complex(2.0)}}) -
                 Complex(refvals::kV432511Mu2)) <= 1e-12);
  CHECK(std::abs(closed_form("GR-4.325.11", {{"mu", Complex(1.0, 1.0)}}) -
                 refvals::kV432511Mu1p1i) <= 1e-12);

  for (auto [t, want] : {std::pair{0.1, refvals::kV43257T01},
                         std::pair{kPi / 3.0, refvals::kV43257TPiThird},
                         std::pair{kPi / 2.0, refvals::kV43257TPiHalf},
                         std::pair{2.0 * kPi / 3.0, refvals::kV43257TTwoPiThird},
                         std::pair{3.0, refvals::kV43257T30}}) {
    CHECK(closed_form("GR-4.325.7", {{"t", Complex(t)}}).real() ==
          doctest::Approx(want).epsilon(1e-12));
  }

  CHECK(closed_form("KUMMER-EQ6", {{"x", Complex(0.25)}}).real() ==
        doctest::Approx(refvals::kLogGamma025).epsilon(1e-13));
  CHECK(closed_form("SAWTOOTH-EQ7", {{"x", Complex(0.9)}}).real() ==
        doctest::Approx(-0.4).epsilon(1e-15));
}

TEST_CASE("GR-4.325.2 closed form delegates to the series") {
  const Complex v = closed_form("GR-4.325.2", {{"lambda", Complex(1.0)}});
  CHECK(std::abs(v - refvals::kSeries43252Lam10) <= 1e-9);
}

TEST_CASE("GR-4.325.7 near t = 0") {
  const double c0 = closed_form("GR-4.325.3", {}).real();
  // exact limit point
  CHECK(closed_form("GR-4.325.7", {{"t", Complex(0.0)}}).real() ==
        doctest::Approx(c0).epsilon(1e-15));
  // the limit branch carries the even quadratic correction
  CHECK(std::fabs(closed_form("GR-4.325.7", {{"t", Complex(1e-4)}}).real() - c0) < 1e-8);
  CHECK(std::fabs(closed_form("GR-4.325.7", {{"t", Complex(1e-4)}}).real() - c0) > 1e-13);
  // each branch tracks the true value at the seam
  CHECK(std::fabs(closed_form("GR-4.325.7", {{"t", Complex(0.999e-3)}}).real() -
                  refvals::kV43257TBelowSeam) <= 1e-12);
  CHECK(std::fabs(closed_form("GR-4.325.7", {{"t", Complex(1.001e-3)}}).real() -
                  refvals::kV43257TAboveSeam) <= 1e-12);
}

TEST_CASE("evenness of GR-4.325.7 in t") {
  for (double t : {0.5, 1.5, 2.5}) {
    CHECK(std::fabs(closed_form("GR-4.325.7", {{"t", Complex(t)}}).real() -
                    closed_form("GR-4.325.7", {{"t", Complex(-t)}}).real()) <= 1e-10);
  }
}

TEST_CASE("complex-mu identities are real for real mu") {
  for (double mu : {0.5, 1.0, 2.0, 5.0}) {
    CHECK(closed_form("GR-4.325.8", {{"mu", Complex(mu)}}).imag() == 0.0);
    CHECK(closed_form("GR-4.325.11", {{"mu", Complex(mu)}}).imag() == 0.0);
  }
}

TEST_CASE("reflection compression of GR-4.325.6") {
  // route through G(5/6) vs the G(1/6)-only form after G(1/6)G(5/6) = 2pi
  const double via_56 = kPi / std::sqrt(3.0) *
                        std::log(std::pow(2.0 * kPi, 2.0 / 3.0) * gamma_fn(5.0 / 6.0) /
                                 gamma_fn(1.0 / 6.0));
  CHECK(std::fabs(closed_form("GR-4.325.6", {}).real() - via_56) <= 1e-12);
}

TEST_CASE("consistency pairs") {
  auto p = consistency_pair("GR-4.325.4");
  REQUIRE(p.has_value());
  CHECK(p->other_id == "GR-4.325.7");
  CHECK(p->params.at("t").real() == doctest::Approx(kPi / 2.0));

  p = consistency_pair("GR-4.325.5");
  REQUIRE(p.has_value());
  CHECK(p->other_id == "GR-4.325.7");
  CHECK(p->params.at("t").real() == doctest::Approx(kPi / 3.0));

  p = consistency_pair("GR-4.325.6");
  REQUIRE(p.has_value());
  CHECK(p->params.at("t").real() == doctest::Approx(2.0 * kPi / 3.0));

  p = consistency_pair("GR-4.325.3");
  REQUIRE(p.has_value());
  CHECK(p->other_id == "GR-4.325.7");
  CHECK(p->params.at("t").real() == 0.0);

  p = consistency_pair("GR-4.229.7");
  REQUIRE(p.has_value());
  CHECK(p->other_id == "GR-4.325.4");
  CHECK(p->params.empty());

  p = consistency_pair("GR-4.325.1");
  REQUIRE(p.has_value());
  CHECK(p->other_id == "GR-4.325.2");
  CHECK(p->params.at("lambda") == Complex(0.0));

  CHECK(!consistency_pair("GR-4.325.8").has_value());
  CHECK(!consistency_pair("GR-4.325.10").has_value());
}

TEST_CASE("specialization coherence") {
  for (const auto& spec : list_identities()) {
    const auto p = consistency_pair(spec.id);
    if (!p) continue;
    CAPTURE(spec.id);
    const Complex own = closed_form(spec.id, {});
    const Complex other = closed_form(p->other_id, p->params);
    CHECK(std::abs(own - other) <= 1e-10);
  }
}

TEST_CASE("every identity's documented example params validate") {
  for (const auto& spec : list_identities()) {
    Params p;
    for (const auto& ps : spec.param_schema) {
      p[ps.name] = ps.kind == ParamKind::real_open_interval
                       ? Complex(0.5 * (ps.lo + ps.hi) + 0.1)
                       : Complex(1.0, 1.0);
    }
    CHECK_NOTHROW(validate_params(spec.id, p));
    CHECK_NOTHROW(closed_form(spec.id, p));
  }
}

TEST_CASE("series forms exist exactly where declared") {
  for (const auto& spec : list_identities()) {
    Params p;
    for (const auto& ps : spec.param_schema) {
      p[ps.name] = ps.kind == ParamKind::real_open_interval ? Complex(0.6) : Complex(1.0);
    }
    if (spec.has_series_form) {
      CHECK_NOTHROW(series_form(spec.id, p, 1e-8));
    } else {
      CHECK_THROWS_AS(series_form(spec.id, p, 1e-8), DomainError);
    }
  }
}
