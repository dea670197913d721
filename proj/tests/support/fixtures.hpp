#pragma once

#include <map>
#include <string>
#include <vector>

#include "builders.hpp"
#include "venuescope/metrics.hpp"

namespace fixture {

// Twelve papers, three countries, venue V.
//   accepted: A1 [US] -> C1,C2   A2 [GB] -> C3,C4   A3 [US,GB] -> C1
//   cited (W): C1 [US]  C2 [US]  C3 [GB,GB]  C4 [GB]
//   citing (X): S1 [US,US] -> A1  S2 [US] -> A2  S3 [GB,GB] -> A3  S4 [GB,JP] -> A1  S5 [JP,US] -> A2
// By hand: US cites 4 / cited 2 -> 2.0; GB 3 / 3 -> 1.0; JP 2 / 0 -> never cited.
inline venuescope::CorpusStore debit_store() {
  return StoreBuilder()
      .institution("inst-US", "US")
      .institution("inst-GB", "GB")
      .institution("inst-JP", "JP")
      .paper_at("A1", 2010, "V", {"inst-US"}, {"C1", "C2"})
      .paper_at("A2", 2011, "V", {"inst-GB"}, {"C3", "C4"})
      .paper_at("A3", 2012, "V", {"inst-US", "inst-GB"}, {"C1"})
      .paper_at("C1", 2000, "W", {"inst-US"})
      .paper_at("C2", 2001, "W", {"inst-US"})
      .paper_at("C3", 2002, "W", {"inst-GB", "inst-GB"})
      .paper_at("C4", 2003, "W", {"inst-GB"})
      .paper_at("S1", 2013, "X", {"inst-US", "inst-US"}, {"A1"})
      .paper_at("S2", 2013, "X", {"inst-US"}, {"A2"})
      .paper_at("S3", 2014, "X", {"inst-GB", "inst-GB"}, {"A3"})
      .paper_at("S4", 2014, "X", {"inst-GB", "inst-JP"}, {"A1"})
      .paper_at("S5", 2015, "X", {"inst-JP", "inst-US"}, {"A2"})
      .build();
}

// Accepted papers at V: US 6 solo, GB 5 solo, DE 4 solo, plus two US+GB
// papers, one US paper with an unaffiliated co-author and one paper with no
// authors; none of those last four is solo.
inline venuescope::CorpusStore solo_store() {
  StoreBuilder b;
  b.institution("inst-US", "US").institution("inst-GB", "GB").institution("inst-DE", "DE");
  int n = 0;
  auto add = [&](std::initializer_list<std::string> insts) { b.paper_at("P" + std::to_string(++n), 2005, "V", insts); };
  for (int i = 0; i < 6; ++i) add({"inst-US", "inst-US"});
  for (int i = 0; i < 5; ++i) add({"inst-GB"});
  for (int i = 0; i < 4; ++i) add({"inst-DE", "inst-DE", "inst-DE"});
  add({"inst-US", "inst-GB"});
  add({"inst-GB", "inst-US"});
  add({"inst-US", ""});
  add({});
  return b.build();
}

// Institutions X, Y, Z, W over three years.
//   2000: P (X first, Y second), Q (Y first, Z second) -> first {X,Y}, never-first {Z}: 1 of 3
//   2001: R (X, Y, W)                                   -> first {X}, never-first {Y,W}: 2 of 3
//   2002: S with no affiliations                         -> (0, 0, 0)
//   corpus-wide: first {X,Y}, never-first {Z,W}: 2 of 4
inline venuescope::CorpusStore first_author_store() {
  return StoreBuilder()
      .institution("X", "US")
      .institution("Y", "GB")
      .institution("Z", "DE")
      .institution("W", "FR")
      .paper_at("P", 2000, "V", {"X", "Y"})
      .paper_at("Q", 2000, "V", {"Y", "Z"})
      .paper_at("R", 2001, "V", {"X", "Y", "W"})
      .paper_at("S", 2002, "V", {"", ""})
      .build();
}

// Topic counts for the trend window 2009..2018.
inline venuescope::TopicYearCounts trend_counts() {
  return {
      {"user_interfaces", {{2009, 142}, {2012, 5}, {2018, 222}}},
      {"gamification", {{2018, 12}}},
      {"eye_tracking", {{2009, 10}, {2018, 10}}},
      {"smartphones", {{2009, 30}, {2018, 60}}},
      {"privacy", {{2009, 10}, {2018, 59}}},
      {"twitter", {{2009, 1}, {2018, 20}}},
      {"robotics", {{2009, 2}, {2018, 19}}},
      {"cryptography", {{2009, 9}, {2018, 5}}},
      {"databases", {{2009, 40}, {2018, 4}}},
      {"old_topic", {{2009, 40}}},
  };
}

}  // namespace fixture
