// cgedit: ingest annotated footage, plan edits for conceptual-graph queries.
//
// Exit codes: 0 success, 1 usage or input error, 2 no result,
// 3 partial result, 4 oracle mismatch.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cgedit/bundle.hpp"
#include "cgedit/editor.hpp"
#include "cgedit/notation.hpp"
#include "cgedit/reference.hpp"
#include "cgedit/store_io.hpp"

namespace fs = std::filesystem;
using namespace cgedit;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNoResult = 2;
constexpr int kPartial = 3;
constexpr int kOracleMismatch = 4;

struct IngestArgs {
  std::vector<fs::path> annotations;
  fs::path ontology;
  fs::path scripts;
  fs::path out;
};

struct QueryArgs {
  fs::path bundle;
  std::string query;
  fs::path query_file;
  std::string strategy = "pre-act";
  bool no_rules = false;
  std::optional<Frame> max_shot_frames;
  std::string format = "edl";
  fs::path out;
};

struct InspectArgs {
  fs::path bundle;
  bool segments = false;
  bool scripts = false;
  bool ontology = false;
};

int run_ingest(const IngestArgs& args) {
  const Database db = ingest(args.annotations, args.ontology, args.scripts);
  write_bundle(db, args.out);

  std::map<MediaId, std::size_t> raw;
  for (const auto& iv : db.store.raw_log()) ++raw[iv.media];
  std::cout << "media\traw\tsegments\n";
  for (const auto& media : db.store.media())
    std::cout << media.str() << '\t' << raw[media] << '\t' << db.store.segment_count(media) << '\n';
  std::cout << "total\t" << db.store.raw_log().size() << '\t' << db.store.segment_count() << '\n';
  std::cout << "media count " << db.store.media().size() << ", scripts " << db.scripts.size() << '\n';
  return kOk;
}

int run_query(const QueryArgs& args) {
  const auto strategy = parse_strategy(args.strategy);
  if (!strategy) {
    std::cerr << "error: unknown strategy '" << args.strategy << "'\n";
    return kUsage;
  }
  const OutputFormat format = parse_format(args.format);
  if (args.max_shot_frames && *args.max_shot_frames < 1) {
    std::cerr << "error: --max-shot-frames must be positive\n";
    return kUsage;
  }

  const std::string text = args.query_file.empty() ? args.query : read_file(args.query_file);
  Query query;
  try {
    query.events = parse_events(text);
  } catch (const ParseError& e) {
    std::cerr << "error: query " << e.what() << '\n';
    return kUsage;
  }
  if (query.events.empty()) {
    std::cerr << "error: empty query\n";
    return kUsage;
  }
  query.strategy = *strategy;
  query.rules_enabled = !args.no_rules;

  const Database db = load_bundle(args.bundle);
  PlanConfig config;
  config.max_shot_frames = args.max_shot_frames;
  const PlanResult result = plan(query, db.store, db.scripts, db.ontology, config);
  const std::string rendered = emit(result.edl, format);

  std::ostream& summary = args.out.empty() ? std::cerr : std::cout;
  if (args.out.empty())
    std::cout << rendered;
  else
    write_file_atomic(args.out, rendered);

  for (std::size_t i = 0; i < result.edl.cuts.size(); ++i) {
    const Cut& cut = result.edl.cuts[i];
    summary << "cut " << i << ": event " << cut.event_index << ' ' << to_string(cut.role) << ' ' << cut.media.str()
            << " [" << cut.in << ", " << cut.out << ") " << to_flat(cut.situation) << '\n';
  }
  for (const auto& d : result.diagnostics) std::cerr << "warning: " << d << '\n';
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';

  switch (result.outcome) {
    case Outcome::Complete: return kOk;
    case Outcome::Partial: return kPartial;
    case Outcome::NoResult:
      std::cerr << "no result\n";
      return kNoResult;
  }
  return kNoResult;
}

int run_inspect(const InspectArgs& args) {
  const Database db = load_bundle(args.bundle);
  const bool all = !args.segments && !args.scripts && !args.ontology;
  if (all || args.segments) std::cout << "# segments\n" << format_segments(db.store);
  if (all || args.scripts) std::cout << "# scripts\n" << format_scripts(db.scripts);
  if (all || args.ontology) std::cout << "# ontology\n" << format_ontology(db.ontology);
  return kOk;
}

// Checks the bundle against the brute-force references.
int run_oracle(const fs::path& bundle) {
  const Database db = load_bundle(bundle);
  const Store& store = db.store;
  std::size_t failures = 0;

  const bool segments_ok = read_file(bundle / "segments.tsv") == format_segments(store);
  std::cout << (segments_ok ? "PASS" : "FAIL") << " segments.tsv matches the replayed log\n";
  failures += !segments_ok;

  std::size_t frames = 0, flatten_bad = 0;
  for (const auto& media : store.media()) {
    Frame lo = 0, hi = 0;
    for (const auto& iv : store.raw_log())
      if (iv.media == media) hi = std::max(hi, iv.end);
    for (Frame t = lo; t <= hi; ++t, ++frames)
      if (store.annotation_at(media, t) != reference::flatten_at(store.raw_log(), media, t)) ++flatten_bad;
  }
  std::cout << (flatten_bad ? "FAIL" : "PASS") << " flatten: " << frames << " frames, " << flatten_bad
            << " mismatches\n";
  failures += flatten_bad;

  constexpr std::uint64_t kEnumerationLimit = 1'000'000;
  std::size_t pairs = 0, skipped = 0, projection_bad = 0;
  for (const auto& [id, script] : db.scripts.scripts())
    for (const auto& situation : script.situations)
      for (const auto& media : store.media())
        for (const auto& seg : store.segments(media)) {
          if (reference::enumeration_size(situation, seg.cg) > kEnumerationLimit) {
            ++skipped;
            continue;
          }
          ++pairs;
          const auto fast = project(situation, seg.cg, db.ontology);
          const auto slow = reference::project_by_enumeration(situation, seg.cg, db.ontology);
          if (fast != slow || (fast && !is_valid_projection(situation, seg.cg, db.ontology, *fast)))
            ++projection_bad;
        }
  std::cout << (projection_bad ? "FAIL" : "PASS") << " projection: " << pairs << " pairs, " << skipped
            << " skipped, " << projection_bad << " disagreements\n";
  failures += projection_bad;

  return failures ? kOracleMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Query-driven video edit planner over conceptual-graph annotations"};
  app.require_subcommand(1);

  IngestArgs ingest_args;
  auto* ingest_cmd = app.add_subcommand("ingest", "Validate source files and write a database bundle");
  ingest_cmd->add_option("--annotations", ingest_args.annotations, "Annotation files")->required()->check(CLI::ExistingFile);
  ingest_cmd->add_option("--ontology", ingest_args.ontology, "Ontology file")->required()->check(CLI::ExistingFile);
  ingest_cmd->add_option("--scripts", ingest_args.scripts, "Script file")->required()->check(CLI::ExistingFile);
  ingest_cmd->add_option("--out", ingest_args.out, "Bundle directory")->required();

  QueryArgs query_args;
  auto* query_cmd = app.add_subcommand("query", "Plan an edit decision list for a query");
  query_cmd->add_option("bundle", query_args.bundle, "Bundle directory")->required()->check(CLI::ExistingDirectory);
  auto* inline_query = query_cmd->add_option("--query", query_args.query, "Query text; blank lines separate events");
  auto* file_query = query_cmd->add_option("--query-file", query_args.query_file, "Query file")->check(CLI::ExistingFile);
  inline_query->excludes(file_query);
  query_cmd->add_option("--strategy", query_args.strategy, "pre-act-post | pre-act | act-post | pre-post");
  query_cmd->add_flag("--no-rules", query_args.no_rules, "Retrieve events without context shots");
  query_cmd->add_option("--max-shot-frames", query_args.max_shot_frames, "Clip every cut to N frames");
  query_cmd->add_option("--format", query_args.format, "edl | manifest");
  query_cmd->add_option("--out", query_args.out, "Output path (default: standard output)");

  InspectArgs inspect_args;
  auto* inspect_cmd = app.add_subcommand("inspect", "Dump bundle contents");
  inspect_cmd->add_option("bundle", inspect_args.bundle, "Bundle directory")->required()->check(CLI::ExistingDirectory);
  inspect_cmd->add_flag("--segments", inspect_args.segments);
  inspect_cmd->add_flag("--scripts", inspect_args.scripts);
  inspect_cmd->add_flag("--ontology", inspect_args.ontology);

  fs::path oracle_bundle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Check a bundle against brute-force references");
  oracle_cmd->add_option("bundle", oracle_bundle, "Bundle directory")->required()->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*ingest_cmd) return run_ingest(ingest_args);
    if (*query_cmd) {
      if (query_args.query.empty() && query_args.query_file.empty()) {
        std::cerr << "error: one of --query or --query-file is required\n";
        return kUsage;
      }
      return run_query(query_args);
    }
    if (*inspect_cmd) return run_inspect(inspect_args);
    if (*oracle_cmd) return run_oracle(oracle_bundle);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
