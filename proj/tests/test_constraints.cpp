#include <doctest.h>

#include "cperm/constraints.hpp"
#include "support/random_instances.hpp"

using namespace cperm;

namespace {

PositionConstraint allow(std::size_t pos, std::u32string_view syms) {
  return {pos, ConstraintKind::Allowed, SymbolSet(syms)};
}
PositionConstraint forbid(std::size_t pos, std::u32string_view syms) {
  return {pos, ConstraintKind::Forbidden, SymbolSet(syms)};
}
std::vector<Word> row_words(const PermittedMatrix& pm) {
  std::vector<Word> out;
  for (const auto& row : pm.rows()) out.push_back(row.to_word());
  return out;
}

}  // namespace

TEST_CASE("alphabet_of") {
  CHECK(alphabet_of(U"abcdae").symbols().to_word() == U"abcde");
  CHECK(alphabet_of(U"").empty());
  CHECK(alphabet_of(U"aaa").symbols().to_word() == U"a");
}

TEST_CASE("validate") {
  SUBCASE("allow and forbid on different positions is fine") {
    ConstraintSet cs{{allow(1, U"a"), forbid(3, U"c")}, 5};
    CHECK(validate(cs).ok());
  }
  SUBCASE("allow and forbid on one position conflicts") {
    ConstraintSet cs{{allow(2, U"a"), forbid(2, U"b")}, 5};
    auto report = validate(cs);
    CHECK_FALSE(report.ok());
    CHECK(report.conflicts == std::vector<std::size_t>{2});
    CHECK(report.out_of_bounds.empty());
  }
  SUBCASE("every conflicting position is listed once") {
    ConstraintSet cs{{forbid(4, U"a"), allow(2, U"a"), allow(4, U"b"),
                      forbid(2, U"b"), forbid(2, U"c"), allow(1, U"a")},
                     5};
    CHECK(validate(cs).conflicts == std::vector<std::size_t>{2, 4});
  }
  SUBCASE("positions outside [1, n]") {
    ConstraintSet cs{{allow(7, U"a"), allow(0, U"a")}, 5};
    auto report = validate(cs);
    CHECK(report.out_of_bounds == std::vector<std::size_t>{0, 7});
    CHECK(report.conflicts.empty());
  }
  SUBCASE("empty sets are reported") {
    ConstraintSet cs{{PositionConstraint{1, ConstraintKind::Allowed, {}}}, 2};
    CHECK(validate(cs).empty_sets == std::vector<std::size_t>{1});
  }
  SUBCASE("repeated clauses of one kind are allowed") {
    ConstraintSet cs{{allow(1, U"a"), allow(1, U"b")}, 2};
    CHECK(validate(cs).ok());
  }
}

TEST_CASE("normalize folds constraints into one matrix") {
  SUBCASE("worked example with allow, forbid and an empty-in-both row") {
    const Word s = U"abcdae";
    ConstraintSet cs{{allow(1, U"ac"), forbid(3, U"de"), allow(4, U"b")}, 6};
    const auto pm = normalize(cs, alphabet_of(s));
    CHECK(row_words(pm) == std::vector<Word>{U"ac", U"abcde", U"abc", U"b",
                                             U"abcde", U"abcde"});
  }
  SUBCASE("no constraints") {
    ConstraintSet cs{{}, 2};
    CHECK(row_words(normalize(cs, alphabet_of(U"ab"))) ==
          std::vector<Word>{U"ab", U"ab"});
  }
  SUBCASE("allowed symbols outside the alphabet are dropped") {
    ConstraintSet cs{{allow(1, U"z")}, 2};
    const auto alpha = alphabet_of(U"ab");
    CHECK(row_words(normalize(cs, alpha)) == std::vector<Word>{U"", U"ab"});
    CHECK(foreign_allowed_symbols(cs, alpha).to_word() == U"z");
  }
  SUBCASE("same-kind clauses union") {
    ConstraintSet cs{{allow(1, U"a"), allow(1, U"c"), forbid(2, U"a"),
                      forbid(2, U"b")},
                     3};
    CHECK(row_words(normalize(cs, alphabet_of(U"abc"))) ==
          std::vector<Word>{U"ac", U"c", U"abc"});
  }
  SUBCASE("invalid sets are refused") {
    ConstraintSet cs{{allow(1, U"a"), forbid(1, U"b")}, 2};
    CHECK_THROWS_AS(normalize(cs, alphabet_of(U"ab")), std::invalid_argument);
  }
}

TEST_CASE("normalize properties over random instances") {
  testing::InstanceGenerator gen(20261016);
  for (int iter = 0; iter < 500; ++iter) {
    const auto inst = gen.next();
    const auto alpha = alphabet_of(inst.s);
    REQUIRE(inst.pm.size() == inst.s.size());

    for (std::size_t pos = 1; pos <= inst.s.size(); ++pos) {
      const auto& row = inst.pm.at_position(pos);
      CHECK(row.is_subset_of(alpha.symbols()));

      bool any_allowed = false, any_forbidden = false;
      SymbolSet forbidden;
      for (const auto& c : inst.cs.constraints) {
        if (c.position != pos) continue;
        if (c.kind == ConstraintKind::Allowed) any_allowed = true;
        else {
          any_forbidden = true;
          forbidden.insert_all(c.symbols);
        }
      }
      if (!any_allowed && !any_forbidden) CHECK(row == alpha.symbols());
      if (any_forbidden) CHECK(row == alpha.symbols().minus(forbidden));
    }

    // Re-expressing each row as an Allowed clause is a fixed point.
    ConstraintSet again{{}, inst.s.size()};
    for (std::size_t pos = 1; pos <= inst.s.size(); ++pos) {
      const auto& row = inst.pm.at_position(pos);
      if (!row.empty()) again.constraints.push_back({pos, ConstraintKind::Allowed, row});
    }
    auto renormalized = normalize(again, alpha);
    for (std::size_t pos = 1; pos <= inst.s.size(); ++pos) {
      if (inst.pm.at_position(pos).empty()) continue;  // no clause could express it
      CHECK(renormalized.at_position(pos) == inst.pm.at_position(pos));
    }
  }
}

TEST_CASE("validate rejects exactly the mixed-kind positions") {
  testing::InstanceGenerator gen(7);
  for (int iter = 0; iter < 300; ++iter) {
    auto inst = gen.next();
    if (inst.s.empty()) continue;
    const std::size_t pos = gen.uniform(1, inst.s.size());
    bool has_allowed = false, has_forbidden = false;
    for (const auto& c : inst.cs.constraints) {
      if (c.position != pos) continue;
      (c.kind == ConstraintKind::Allowed ? has_allowed : has_forbidden) = true;
    }
    const auto added = has_allowed ? ConstraintKind::Forbidden : ConstraintKind::Allowed;
    inst.cs.constraints.push_back({pos, added, SymbolSet{U'a'}});
    const bool mixed = has_allowed || has_forbidden;
    const auto report = validate(inst.cs);
    CHECK(report.ok() == !mixed);
    if (mixed) CHECK(report.conflicts == std::vector<std::size_t>{pos});
  }
}
