#include <doctest.h>

#include <random>

#include "cgedit/editor.hpp"
#include "cgedit/notation.hpp"

using namespace cgedit;

namespace {

const MediaId m{"m"};
const MediaId n{"n"};

CandidateInterval candidate(const MediaId& media, Frame start, Frame end) {
  return CandidateInterval{media, start, end, {}};
}

// Brute force over every candidate: least (distance, start) on the anchor media.
std::size_t closest_by_scan(const std::vector<CandidateInterval>& cands, const Span& anchor) {
  std::size_t best = cands.size();
  Frame best_d = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (cands[i].media != anchor.media) continue;
    Frame d = 0;
    if (cands[i].end <= anchor.in) d = anchor.in - cands[i].end;
    if (cands[i].start >= anchor.out) d = cands[i].start - anchor.out;
    if (best == cands.size() || d < best_d || (d == best_d && cands[i].start < cands[best].start)) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

struct Fixture {
  Store store;
  ScriptDb scripts;
  Ontology ont;

  Fixture() {
    store.insert({m, 0, 40, parse_graph("[arrive]<-(AGNT)<-[person]")});
    store.insert({m, 40, 100, parse_graph("[visit]<-(AGNT)<-[person]")});
    store.insert({m, 100, 120, parse_graph("[depart]<-(AGNT)<-[person]")});
    store.insert({m, 300, 320, parse_graph("[arrive]<-(AGNT)<-[person]")});
    // Another precondition candidate on a media that sorts first.
    store.insert({MediaId("a"), 0, 10, parse_graph("[arrive]<-(AGNT)<-[person]")});
    store.insert({n, 0, 50, parse_graph("[drink]<-(AGNT)<-[person]")});
    store.set_fps(m, 25);
    scripts.add(Script{"visiting",
                       {parse_graph("[arrive]<-(AGNT)<-[person]"), parse_graph("[visit]<-(AGNT)<-[person]"),
                        parse_graph("[depart]<-(AGNT)<-[person]")}});
  }

  PlanResult run(std::vector<const char*> events, Strategy s, bool rules = true, PlanConfig config = {}) const {
    Query q;
    for (auto e : events) q.events.push_back(parse_graph(e));
    q.strategy = s;
    q.rules_enabled = rules;
    return plan(q, store, scripts, ont, config);
  }
};

}  // namespace

TEST_CASE("span distance") {
  CHECK(span_distance({m, 100, 150}, {m, 40, 60}) == 40);
  CHECK(span_distance({m, 100, 150}, {m, 200, 220}) == 50);
  CHECK(span_distance({m, 0, 10}, {m, 10, 20}) == 0);
  CHECK(span_distance({m, 0, 10}, {m, 5, 20}) == 0);
}

TEST_CASE("select_cut: closest in sequence") {
  const std::vector cands = {candidate(m, 40, 60), candidate(m, 200, 220)};
  const Span anchor{m, 100, 150};
  CHECK(closest_by_scan(cands, anchor) == 0);
  const auto cut = select_cut(cands, anchor, {});
  CHECK(cut.media == m);
  CHECK(cut.in == 40);
  CHECK(cut.out == 60);
}

TEST_CASE("select_cut: tie-breaks") {
  CHECK(select_cut(std::vector{candidate(n, 5, 9)}, std::nullopt, {}).media == n);
  CHECK(select_cut(std::vector{candidate(n, 0, 9), candidate(m, 50, 60)}, std::nullopt, {}).media == m);
  // Equal distance: earlier start.
  CHECK(select_cut(std::vector{candidate(m, 160, 170), candidate(m, 80, 90)}, Span{m, 100, 150}, {}).in == 80);
  // No candidate on the anchor media falls back to (media, start).
  CHECK(select_cut(std::vector{candidate(n, 30, 40), candidate(n, 10, 20)}, Span{m, 0, 5}, {}).in == 10);
  CHECK_THROWS_AS(select_cut(std::vector<CandidateInterval>{}, std::nullopt, {}), std::invalid_argument);
}

TEST_CASE("select_cut agrees with a scan on random candidate sets") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<Frame> pos(0, 1000), len(1, 50);
  for (int round = 0; round < 300; ++round) {
    std::vector<CandidateInterval> cands;
    for (int i = 0; i < 6; ++i) {
      const Frame s = pos(rng);
      cands.push_back(candidate(i % 3 ? m : n, s, s + len(rng)));
    }
    const Frame a = pos(rng);
    const Span anchor{m, a, a + len(rng)};
    const auto expected = closest_by_scan(cands, anchor);
    if (expected == cands.size()) continue;
    const auto cut = select_cut(cands, anchor, {});
    CHECK(cut.media == m);
    CHECK(span_distance(cut.span(), anchor) == span_distance(Span{m, cands[expected].start, cands[expected].end}, anchor));
    CHECK(cut.in == cands[expected].start);
  }
}

TEST_CASE("select_cut: clipping keeps the end nearest the anchor") {
  PlanConfig config;
  config.max_shot_frames = 10;
  const auto before = select_cut(std::vector{candidate(m, 0, 50)}, Span{m, 100, 150}, config);
  CHECK(before.in == 40);
  CHECK(before.out == 50);
  const auto after = select_cut(std::vector{candidate(m, 200, 300)}, Span{m, 100, 150}, config);
  CHECK(after.in == 200);
  CHECK(after.out == 210);
  const auto free = select_cut(std::vector{candidate(m, 200, 300)}, std::nullopt, config);
  CHECK(free.out == 210);
}

TEST_CASE("plan: without rules") {
  const Fixture f;
  const auto r = f.run({"[visit]<-(AGNT)<-[person]"}, Strategy::PreAct, false);
  CHECK(r.outcome == Outcome::Complete);
  REQUIRE(r.edl.cuts.size() == 1);
  CHECK(r.edl.cuts[0].role == Role::Action);
  CHECK_FALSE(r.edl.cuts[0].script_id);
  CHECK(r.edl.strategy_name == "none");
}

TEST_CASE("plan: precondition shot is taken from the action's media") {
  const Fixture f;
  const auto r = f.run({"[visit]<-(AGNT)<-[person]"}, Strategy::PreAct);
  CHECK(r.outcome == Outcome::Complete);
  REQUIRE(r.edl.cuts.size() == 2);
  const auto& pre = r.edl.cuts[0];
  CHECK(pre.role == Role::Precondition);
  CHECK(pre.media == m);
  CHECK(pre.in == 0);
  CHECK(pre.out == 40);
  CHECK(*pre.script_id == "visiting");
  CHECK(pre.situation_index == 0);
  CHECK(r.edl.cuts[1].role == Role::Action);
  CHECK(r.edl.cuts[1].in == 40);
}

TEST_CASE("plan: PRE_POST shows no action") {
  const Fixture f;
  const auto r = f.run({"[visit]<-(AGNT)<-[person]"}, Strategy::PrePost);
  REQUIRE(r.edl.cuts.size() == 2);
  for (const auto& c : r.edl.cuts) CHECK(c.role != Role::Action);
  CHECK(r.edl.cuts[1].in == 100);
}

TEST_CASE("plan: rules keep the control run's action cuts") {
  const Fixture f;
  const auto control = f.run({"[visit]<-(AGNT)<-[person]", "[drink]<-(AGNT)<-[person]"}, Strategy::PreAct, false);
  for (auto s : {Strategy::PreActPost, Strategy::PreAct, Strategy::ActPost}) {
    const auto treated = f.run({"[visit]<-(AGNT)<-[person]", "[drink]<-(AGNT)<-[person]"}, s);
    std::vector<Span> actions;
    for (const auto& c : treated.edl.cuts)
      if (c.role == Role::Action) actions.push_back(c.span());
    REQUIRE(actions.size() == control.edl.cuts.size());
    for (std::size_t i = 0; i < actions.size(); ++i) CHECK(actions[i] == control.edl.cuts[i].span());
  }
}

TEST_CASE("plan: partial and empty outcomes") {
  const Fixture f;
  const auto partial = f.run({"[visit]<-(AGNT)<-[person]", "[teleport]"}, Strategy::PreAct);
  CHECK(partial.outcome == Outcome::Partial);
  CHECK(partial.edl.cuts.size() == 2);
  CHECK(partial.diagnostics.size() == 1);

  const auto none = f.run({"[teleport]"}, Strategy::PreAct);
  CHECK(none.outcome == Outcome::NoResult);
  CHECK(none.edl.cuts.empty());
}

TEST_CASE("plan: reused footage warns") {
  const Fixture f;
  const auto r = f.run({"[visit]<-(AGNT)<-[person]", "[visit]<-(AGNT)<-[person]"}, Strategy::PreAct, false);
  CHECK(r.outcome == Outcome::Complete);
  CHECK(r.edl.cuts.size() == 2);
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("plan: every cut frame matches its situation") {
  const Fixture f;
  for (auto s : kAllStrategies) {
    const auto r = f.run({"[visit]<-(AGNT)<-[person]", "[drink]<-(AGNT)<-[person]"}, s);
    for (const auto& c : r.edl.cuts)
      for (Frame t = c.in; t < c.out; ++t) {
        const auto cg = f.store.annotation_at(c.media, t);
        REQUIRE(cg);
        CHECK(project(c.situation, *cg, f.ont));
      }
  }
}

TEST_CASE("plan: max shot frames") {
  const Fixture f;
  PlanConfig config;
  config.max_shot_frames = 15;
  const auto r = f.run({"[visit]<-(AGNT)<-[person]"}, Strategy::PreAct, true, config);
  REQUIRE(r.edl.cuts.size() == 2);
  CHECK(r.edl.cuts[0].in == 25);
  CHECK(r.edl.cuts[0].out == 40);
  CHECK(r.edl.cuts[1].in == 40);
  CHECK(r.edl.cuts[1].out == 55);
}

TEST_CASE("emit") {
  EditDecisionList empty;
  CHECK(emit(empty, OutputFormat::Edl) == "# edl v1\n# query: \n# strategy: \n");
  CHECK(emit(empty, OutputFormat::Manifest).empty());

  const Fixture f;
  const auto r = f.run({"[visit]<-(AGNT)<-[person]"}, Strategy::PreAct);
  const auto text = emit(r.edl, OutputFormat::Edl);
  CHECK(text == emit(f.run({"[visit]<-(AGNT)<-[person]"}, Strategy::PreAct).edl, OutputFormat::Edl));
  CHECK(text.find("m\t0\t40\tprecondition\t0\tvisiting:0\nm\t40\t100\taction\t0\tvisiting:1\n") !=
        std::string::npos);
  CHECK(text.rfind("# edl v1\n# query: [visit]<-(AGNT)<-[person]\n# strategy: pre-act\n", 0) == 0);

  CHECK(emit(r.edl, OutputFormat::Manifest) == "m 0.000 1.600\nm 1.600 4.000\n");
  CHECK(parse_format("manifest") == OutputFormat::Manifest);
  CHECK_THROWS_AS(parse_format("xml"), UnknownFormat);
}
