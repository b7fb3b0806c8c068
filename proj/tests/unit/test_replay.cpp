#include "dpq/quotient.hpp"

#include <doctest.h>

using namespace dpq;

TEST_CASE("every catalogue replay passes its assertions") {
  for (const auto& id : replay_ids()) {
    CAPTURE(id);
    const LemmaReport r = replay(id);
    CHECK(r.ok());
    CHECK(r.lemma_id == id);
  }
}

TEST_CASE("replay endpoints") {
  const LemmaReport a5 = replay("dp5-a5");
  CHECK(a5.K2_resolved == Json(8));
  CHECK(a5.descriptor == "F3");
  CHECK(replay("dp4-c2").K2_resolved == Json(8));
  CHECK(replay("dp4-i1234-2").K2_resolved == Json(9));
  CHECK(replay("dp8-a5-diag").K2_resolved == Json(2));
  CHECK(replay("dp8-a5-twisted").K2_resolved == Json(3));
  CHECK(replay("dp1-2a4").K2_resolved == Json(9));
}

TEST_CASE("unknown lemma lists the catalogue") {
  try {
    replay("dp9-nothing");
    FAIL("expected unknown_lemma");
  } catch (const Error& e) {
    CHECK(e.code() == "unknown_lemma");
    CHECK(e.detail()["available"].size() == replay_ids().size());
  }
}

TEST_CASE("replays serialize deterministically") {
  CHECK(replay("dp4-c3").to_json().dump() == replay("dp4-c3").to_json().dump());
}
