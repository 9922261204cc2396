#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plic/catalog.hpp"
#include "plic/enumerate.hpp"

using namespace plic;

TEST_CASE("catalog builds and self-verifies") {
  const auto& entries = catalog();
  CHECK(entries.size() >= 10);
  for (const auto& e : entries) {
    CAPTURE(e.key);
    CHECK(signature_of(e.data.inc) == e.expected_signature);
    CHECK(e.data.inc.num_incidences() == e.expected_incidences);
    CHECK(is_connected(e.data.inc));
    if (e.has_coords)
      CHECK(check_faithful(e.data.inc, e.data.coords).faithful());
  }
  CHECK_THROWS_AS(catalog_entry("nope"), Error);
  CHECK(catalog_has("13_34"));
}

TEST_CASE("13 entry: expected counts and self-polarity") {
  const auto& e = catalog_entry("13_34");
  CHECK(e.data.inc.num_points() == 13);
  CHECK(e.data.inc.num_incidences() == 48);
  CHECK(signature_of(e.data.inc).str() == "4*x^3+9*x^4|4*y^3+9*y^4");
  // the coordinate lists of points and lines coincide under polarity
  Realized dual{dual_structure(e.data.inc), dual_realization(e.data.coords)};
  CHECK(check_faithful(dual.inc, dual.coords).faithful());
}

TEST_CASE("deletion-derived entries reach the documented incidence counts") {
  CHECK(catalog_entry("12_34").data.inc.num_incidences() == 42);
  CHECK(catalog_entry("11_34").data.inc.num_incidences() == 37);
  CHECK(catalog_entry("10_34a").data.inc.num_incidences() == 33);
  CHECK(catalog_entry("10_34b").data.inc.num_incidences() == 33);
  CHECK(catalog_entry("9_34").data.inc.num_incidences() == 28);
  for (const char* key : {"12_34", "11_34", "10_34a", "10_34b"})
    CHECK(catalog_entry(key).has_coords);
}

TEST_CASE("deletion pattern census of the 13 entry") {
  CHECK(deletion_patterns_from_13(1, 42, DeletionVariant::Any, 0).size() == 16);
  CHECK(deletion_patterns_from_13(2, 37, DeletionVariant::Any, 0).size() == 24);
  CHECK(deletion_patterns_from_13(3, 33, DeletionVariant::Any, 0).size() == 14);
  // both dual restricted families are nonempty
  CHECK_FALSE(deletion_patterns_from_13(3, 33, DeletionVariant::PointsLowValent, 0).empty());
  CHECK_FALSE(deletion_patterns_from_13(3, 33, DeletionVariant::LinesLowValent, 0).empty());
  // no deletion reaches nine elements with 28 incidences: the optimal
  // nine-element entry cannot come from the 13 entry
  CHECK(deletion_patterns_from_13(4, 28, DeletionVariant::Any, 0).empty());
}

TEST_CASE("the two 10-element variants are dual choices") {
  const auto& a = catalog_entry("10_34a").data.inc;
  const auto& b = catalog_entry("10_34b").data.inc;
  CHECK(signature_of(a) == signature_of(b));
  // variant a removed 3-valent points; variant b removed 3-valent lines
  CHECK_FALSE(a == b);
}

TEST_CASE("nine-element entry is the unique optimal type and unrealizable here") {
  const auto& e = catalog_entry("9_34");
  CHECK_FALSE(e.has_coords);
  CHECK(signature_of(e.data.inc).str() == "8*x^3+1*x^4|8*y^3+1*y^4");
  // structure sanity: the 4-valent point misses the 4-valent line
  const auto& s = e.data.inc;
  int p4 = -1, l4 = -1;
  for (int p = 0; p < s.num_points(); ++p)
    if (s.lines_of_point(p).size() == 4) p4 = p;
  for (int l = 0; l < s.num_lines(); ++l)
    if (s.points_of_line(l).size() == 4) l4 = l;
  REQUIRE(p4 >= 0);
  REQUIRE(l4 >= 0);
  CHECK_FALSE(s.incident(p4, l4));
}

TEST_CASE("transcription stand-ins carry the documented invariants") {
  const auto& fig2 = catalog_entry("10_34_fig2");
  CHECK(fig2.transcription);
  CHECK(signature_of(fig2.data.inc).str() == "8*x^3+2*x^4|8*y^3+2*y^4");
  CHECK(is_n34_configuration(fig2.data.inc));

  const auto& fig8 = catalog_entry("12_34_fig8");
  CHECK(fig8.transcription);
  CHECK(signature_of(fig8.data.inc).str() == "6*x^3+6*x^4|6*y^3+6*y^4");
  CHECK(fig8.data.inc.num_incidences() == 42);
}

TEST_CASE("pappus entry is realized and classical") {
  const auto& e = catalog_entry("9_3");
  CHECK(e.has_coords);
  CHECK(is_k_configuration(e.data.inc, 3));
  CHECK(is_n34_configuration(e.data.inc));  // 3-regular is 3|4 as well
  CHECK(check_faithful(e.data.inc, e.data.coords).faithful());
}
