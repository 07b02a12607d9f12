#include <doctest.h>

#include <vector>

#include "filtforge/error.hpp"
#include "filtforge/subset.hpp"

using filtforge::Subset;

TEST_CASE("subset basics across word boundaries") {
  const std::vector<std::uint32_t> ids{0, 63, 64, 69};
  Subset s = Subset::of(70, ids);
  CHECK(s.count() == 4);
  CHECK(s.contains(63));
  CHECK_FALSE(s.contains(62));
  CHECK(s.ids() == ids);

  const Subset c = s.complement();
  CHECK(c.count() == 66);
  CHECK((c & s).empty());
  CHECK((c | s).full());
  CHECK((s - Subset::of(70, std::vector<std::uint32_t>{63})).count() == 3);
  CHECK(Subset::none(70).is_subset_of(s));
  CHECK(s.is_subset_of(Subset::all(70)));
  CHECK_FALSE(Subset::all(70).is_subset_of(s));
}

TEST_CASE("subset range and universe errors") {
  Subset s = Subset::none(10);
  CHECK_THROWS_AS(s.insert(10), filtforge::StructuralError);
  CHECK_THROWS_AS((void)s.contains(11), filtforge::StructuralError);
  CHECK_THROWS_AS((void)(s & Subset::none(11)), filtforge::StructuralError);
  const std::vector<std::uint32_t> bad{12};
  CHECK_THROWS_AS(Subset::of(10, bad), filtforge::StructuralError);
}

TEST_CASE("for_each visits ids in order") {
  const std::vector<std::uint32_t> ids{3, 5, 64, 127, 128};
  std::vector<std::uint32_t> seen;
  Subset::of(200, ids).for_each([&](std::uint32_t p) { seen.push_back(p); });
  CHECK(seen == ids);
}
